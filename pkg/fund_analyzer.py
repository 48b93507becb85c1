"""
Fund Analyzer Module
Runs the pipeline end to end: price files -> monthly series -> decomposition
-> component summary -> dominance classification -> fund consistency report.
"""

import logging
import os
import sys
from dataclasses import dataclass
from typing import List, Optional, Tuple

from dotenv import load_dotenv
from tqdm import tqdm

from decomposition import DEFAULT_PERIOD, Decomposition, decompose, validate_period
from exceptions import AnalysisError, ConfigError, HoldingError
from ingest import FundSpec, load_series, parse_fund_spec
from stylecheck import (
    DEFAULT_THRESHOLD,
    ConsistencyReport,
    DominanceClassification,
    StyleRule,
    VerdictThresholds,
    check_fund,
    classify_dominant,
    default_style_rules,
    find_rule,
    load_style_rules,
)
from summary import ComponentSummary, summarize
from utils import env_float, env_int

load_dotenv()

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StockAnalysis:
    """Everything computed for one price file."""

    decomposition: Decomposition
    summary: ComponentSummary
    classification: DominanceClassification

    @property
    def ticker(self) -> str:
        return self.summary.ticker


@dataclass(frozen=True)
class FundAnalysis:
    """A fund's consistency report together with the per-holding summaries."""

    fund: FundSpec
    report: ConsistencyReport
    summaries: Tuple[ComponentSummary, ...]
    threshold: float
    period: int


class FundAnalyzer:
    """Checks declared fund styles against the decomposition of their holdings."""

    def __init__(
        self,
        threshold: Optional[float] = None,
        period: Optional[int] = None,
        rules_path: Optional[str] = None,
        verdict_thresholds: Optional[VerdictThresholds] = None,
        show_progress: bool = False,
    ):
        """
        Initialize the Fund Analyzer.

        Unset arguments fall back to DOMINANCE_THRESHOLD, DECOMPOSITION_PERIOD,
        STYLE_RULES_FILE, VERDICT_ZERO_BOUND and VERDICT_RATIO_BOUND.

        Args:
            threshold: Dominance threshold in percent
            period: Seasonal period in months (even)
            rules_path: Rules file; the bundled default table when None
            verdict_thresholds: Deviation bounds for the fund verdict
            show_progress: Show a per-holding progress bar on stderr
        """
        self.threshold = float(threshold) if threshold is not None else env_float("DOMINANCE_THRESHOLD", DEFAULT_THRESHOLD)
        if not self.threshold > 0:
            raise ConfigError(f"threshold must be positive, got {self.threshold}")

        self.period = validate_period(period if period is not None else env_int("DECOMPOSITION_PERIOD", DEFAULT_PERIOD))

        self.rules_path = rules_path or os.getenv("STYLE_RULES_FILE") or None
        self._rules: Optional[List[StyleRule]] = None

        self.verdict_thresholds = verdict_thresholds or VerdictThresholds(
            zero_bound=env_int("VERDICT_ZERO_BOUND", 0),
            ratio_bound=env_float("VERDICT_RATIO_BOUND", 0.30),
        )
        if self.verdict_thresholds.zero_bound < 0 or not 0 <= self.verdict_thresholds.ratio_bound <= 1:
            raise ConfigError(f"invalid verdict thresholds {tuple(self.verdict_thresholds)}")

        self.show_progress = show_progress

    @property
    def rules(self) -> List[StyleRule]:
        """Style rule table, loaded on first use."""
        if self._rules is None:
            self._rules = load_style_rules(self.rules_path) if self.rules_path else default_style_rules()
        return self._rules

    def decompose_file(self, price_file, ticker: Optional[str] = None) -> Decomposition:
        """
        Load a price file and decompose its monthly series.

        Args:
            price_file: Daily price CSV or monthly average text file
            ticker: Identifier for the stock (default: from the file)

        Returns:
            Decomposition
        """
        series = load_series(price_file, ticker=ticker)
        logger.info("📈 %s: %d months from %04d-%02d", series.ticker, len(series), *series.start)
        return decompose(series, self.period)

    def analyze_stock(self, price_file, ticker: Optional[str] = None) -> StockAnalysis:
        """
        Decompose, summarize and classify one stock.

        Args:
            price_file: Daily price CSV or monthly average text file
            ticker: Identifier for the stock (default: from the file)

        Returns:
            StockAnalysis
        """
        decomposition = self.decompose_file(price_file, ticker=ticker)
        stock_summary = summarize(decomposition)
        classification = classify_dominant(stock_summary, self.threshold)
        return StockAnalysis(decomposition, stock_summary, classification)

    def analyze_fund(self, fund_path) -> FundAnalysis:
        """
        Run the full consistency check for a fund definition file.

        Args:
            fund_path: Fund JSON file

        Returns:
            FundAnalysis

        Raises:
            HoldingError: a holding's price file could not be processed
        """
        fund = parse_fund_spec(fund_path)
        # fail on an unknown profile before touching any price file
        find_rule(self.rules, fund.style, fund.capitalization)

        analyses = []
        holdings = tqdm(
            fund.holdings,
            desc=fund.name,
            unit="stock",
            file=sys.stderr,
            disable=not self.show_progress,
        )
        for holding in holdings:
            try:
                analyses.append(self.analyze_stock(holding.price_file, ticker=holding.ticker))
            except AnalysisError as e:
                raise HoldingError(holding.ticker, e) from e

        report = check_fund(
            fund,
            [a.classification for a in analyses],
            self.rules,
            self.verdict_thresholds,
        )
        logger.info("📊 %s: %d deviation(s), verdict %s", fund.name, report.deviation_count, report.verdict.value)
        return FundAnalysis(
            fund=fund,
            report=report,
            summaries=tuple(a.summary for a in analyses),
            threshold=self.threshold,
            period=self.period,
        )
