"""
Report Renderer Module
Renders decomposition tables, component summaries and fund consistency
reports as fixed-width text, CSV or JSON.
"""

import io
import json
from enum import Enum
from typing import Dict, List, Optional, Sequence

import pandas as pd

from decomposition import Decomposition
from fund_analyzer import FundAnalysis
from stylecheck import DominanceClassification, StockAssessment
from summary import ComponentSummary
from utils import format_number, month_label, month_name, to_json_number

RULE_WIDTH = 64


class OutputKind(str, Enum):
    TEXT = "text"
    CSV = "csv"
    JSON = "json"


def _stats_dict(summary: ComponentSummary) -> Dict[str, Dict[str, float]]:
    return {
        "trend": {
            "max": summary.trend.max_pct,
            "min": summary.trend.min_pct,
            "mean": summary.trend.mean_pct,
        },
        "seasonal": {
            "max": summary.seasonal.max_pct,
            "min": summary.seasonal.min_pct,
            "mean_abs": summary.seasonal.mean_abs_pct,
        },
        "random": {
            "max": summary.random.max_pct,
            "min": summary.random.min_pct,
            "mean_abs": summary.random.mean_abs_pct,
        },
    }


def _stats_row(summary: ComponentSummary) -> List[float]:
    return [
        summary.trend.max_pct, summary.trend.min_pct, summary.trend.mean_pct,
        summary.seasonal.max_pct, summary.seasonal.min_pct, summary.seasonal.mean_abs_pct,
        summary.random.max_pct, summary.random.min_pct, summary.random.mean_abs_pct,
    ]


STAT_COLUMNS = [
    "trend_max", "trend_min", "trend_mean",
    "seasonal_max", "seasonal_min", "seasonal_mean_abs",
    "random_max", "random_min", "random_mean_abs",
]


class ReportRenderer:
    """Formats pipeline results for the terminal or for machine consumption."""

    def __init__(self, kind: str = "text", full_precision: bool = False):
        """
        Initialize the Report Renderer.

        Args:
            kind: Output format: text, csv or json
            full_precision: Text only; show decimals instead of rounded integers.
                CSV and JSON always carry full precision.
        """
        self.kind = OutputKind(kind)
        self.full_precision = full_precision

    # Helpers

    def _num(self, value: Optional[float]) -> str:
        return format_number(value, self.full_precision)

    @property
    def _width(self) -> int:
        return 12 if self.full_precision else 6

    @staticmethod
    def _to_csv(frame: pd.DataFrame) -> str:
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False, na_rep="", lineterminator="\n")
        return buffer.getvalue()

    @staticmethod
    def _to_json(data) -> str:
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"

    def _stats_cells(self, summary: ComponentSummary) -> str:
        w = self._width
        row = _stats_row(summary)
        groups = [row[0:3], row[3:6], row[6:9]]
        return " | ".join(" ".join(f"{self._num(v):>{w}}" for v in group) for group in groups)

    def _stats_header(self) -> List[str]:
        w = self._width
        group_width = 3 * w + 2
        titles = " | ".join(f"{t:^{group_width}}" for t in ("Trend (T)", "Seasonal (S)", "Random (R)"))
        sub = " | ".join(" ".join(f"{h:>{w}}" for h in ("Max", "Min", "Mean")) for _ in range(3))
        return [titles, sub]

    # Decomposition table

    def render_decomposition(self, d: Decomposition) -> str:
        """
        Render the month-by-month components of one stock.

        Args:
            d: Decomposition

        Returns:
            Rendered table; undefined trend / random cells are empty
        """
        months = d.month_labels()
        if self.kind == OutputKind.JSON:
            rows = [
                {
                    "month": month_label(ym),
                    "aggregate": to_json_number(d.aggregate[i]),
                    "trend": to_json_number(d.trend[i]),
                    "seasonal": to_json_number(d.seasonal[i]),
                    "random": to_json_number(d.random[i]),
                }
                for i, ym in enumerate(months)
            ]
            return self._to_json({
                "ticker": d.ticker,
                "period": d.period,
                "start": month_label(d.series.start),
                "seasonal_figures": [to_json_number(v) for v in d.seasonal_figures],
                "rows": rows,
            })

        if self.kind == OutputKind.CSV:
            frame = pd.DataFrame({
                "month": [month_label(ym) for ym in months],
                "aggregate": d.aggregate,
                "trend": d.trend,
                "seasonal": d.seasonal,
                "random": d.random,
            })
            return self._to_csv(frame)

        w = self._width + 4
        lines = [
            f"Components of {d.ticker or 'series'} (period {d.period})",
            f"{'Year':<6}{'Month':<11}{'Aggregate':>{w}}{'Trend':>{w}}{'Seasonal':>{w}}{'Random':>{w}}",
        ]
        for i, (year, month) in enumerate(months):
            cells = (d.aggregate[i], d.trend[i], d.seasonal[i], d.random[i])
            line = f"{year:<6}{month_name(month):<11}" + "".join(f"{self._num(v):>{w}}" for v in cells)
            lines.append(line.rstrip())
        return "\n".join(lines) + "\n"

    # Single-stock summary

    def render_summary(self, summary: ComponentSummary, classification: DominanceClassification,
                       threshold: float) -> str:
        """
        Render the nine percentage statistics and the dominance label.

        Args:
            summary: Component statistics
            classification: Dominant components
            threshold: Threshold used for the classification

        Returns:
            Rendered summary
        """
        dominant = [c.value for c in classification.ordered_label]

        if self.kind == OutputKind.JSON:
            data = {"ticker": summary.ticker, "threshold": threshold,
                    "observation_count": summary.observation_count}
            data.update(_stats_dict(summary))
            data["dominant"] = dominant
            data["label"] = classification.label
            return self._to_json(data)

        if self.kind == OutputKind.CSV:
            frame = pd.DataFrame([[summary.ticker] + _stats_row(summary) +
                                  [summary.observation_count, classification.label]],
                                 columns=["ticker"] + STAT_COLUMNS + ["observation_count", "dominant"])
            return self._to_csv(frame)

        name_width = max(len("Stock"), len(summary.ticker))
        header = self._stats_header()
        lines = [
            f"{'':<{name_width}}   {header[0]} | Dominant Comp (s)".rstrip(),
            f"{'Stock':<{name_width}}   {header[1]} |",
            f"{summary.ticker:<{name_width}}   {self._stats_cells(summary)} | {classification.label or '-'}",
            f"Observations: {summary.observation_count}   Threshold: {threshold:g}",
        ]
        return "\n".join(lines) + "\n"

    # Fund report

    def _assessment_json(self, assessment: StockAssessment, summary: ComponentSummary) -> dict:
        data = {"ticker": assessment.ticker}
        data.update(_stats_dict(summary))
        data["dominant"] = [c.value for c in assessment.classification.ordered_label]
        data["status"] = assessment.status.value
        data["sector"] = assessment.sector
        data["note"] = assessment.note
        return data

    def render_fund_report(self, analysis: FundAnalysis) -> str:
        """
        Render the per-holding summary table, statuses and fund verdict.

        Args:
            analysis: Result of FundAnalyzer.analyze_fund

        Returns:
            Rendered report
        """
        report = analysis.report
        pairs = list(zip(report.per_stock, analysis.summaries))

        if self.kind == OutputKind.JSON:
            return self._to_json({
                "fund": report.fund,
                "style": report.style.value,
                "capitalization": report.capitalization.value,
                "threshold": analysis.threshold,
                "period": analysis.period,
                "rule": {
                    "profile": report.rule.profile,
                    "required": _letters(report.rule.required),
                    "tolerated": _letters(report.rule.tolerated),
                    "flagged": _letters(report.rule.flagged),
                },
                "per_stock": [self._assessment_json(a, s) for a, s in pairs],
                "component_counts": report.component_counts,
                "deviation_count": report.deviation_count,
                "deviations": report.deviations,
                "verdict": report.verdict.value,
            })

        if self.kind == OutputKind.CSV:
            frame = pd.DataFrame(
                [[a.ticker] + _stats_row(s) + [a.classification.label, a.status.value, a.sector or "", a.note]
                 for a, s in pairs],
                columns=["ticker"] + STAT_COLUMNS + ["dominant", "status", "sector", "note"],
            )
            frame.insert(0, "fund", report.fund)
            frame["verdict"] = report.verdict.value
            return self._to_csv(frame)

        return self._fund_text(analysis, pairs)

    def _fund_text(self, analysis: FundAnalysis, pairs: Sequence) -> str:
        report = analysis.report
        rule = report.rule
        name_width = max([len("Stock")] + [len(a.ticker) for a, _ in pairs])
        header = self._stats_header()

        lines = [
            "=" * RULE_WIDTH,
            f"FUND CONSISTENCY REPORT: {report.fund}",
            "=" * RULE_WIDTH,
            f"Style: {report.style.value}   Capitalization: {report.capitalization.value}",
        ]
        if rule.profile:
            lines.append(f"Expected profile: {rule.profile}")
        lines.append(
            f"Rule: required {_joined(rule.required)} | tolerated {_joined(rule.tolerated)} | "
            f"flagged {_joined(rule.flagged)}"
        )
        lines.append(f"Threshold: {analysis.threshold:g}   Period: {analysis.period}")
        lines.append("")
        lines.append(f"{'':<{name_width}}   {header[0]} | Dominant Comp (s) | Status".rstrip())
        lines.append(f"{'Stock':<{name_width}}   {header[1]} |")
        for assessment, summary in pairs:
            line = (f"{assessment.ticker:<{name_width}}   {self._stats_cells(summary)} | "
                    f"{assessment.classification.label or '-':<17} | {assessment.status.value}")
            if assessment.note:
                line += f" ({assessment.note})"
            lines.append(line)

        counts = ", ".join(f"{k} {v}" for k, v in report.component_counts.items())
        lines.append("")
        lines.append("-" * RULE_WIDTH)
        lines.append(f"Holdings analyzed:   {len(pairs)}")
        lines.append(f"Dominant components: {counts}")
        deviations = f" ({', '.join(report.deviations)})" if report.deviations else ""
        lines.append(f"Deviations:          {report.deviation_count}{deviations}")
        if report.whitelisted:
            lines.append(f"Whitelisted:         {', '.join(report.whitelisted)}")
        lines.append(f"Verdict:             {report.verdict.value}")
        lines.append("=" * RULE_WIDTH)
        return "\n".join(line.rstrip() for line in lines) + "\n"


def _letters(components) -> List[str]:
    order = {"T": 0, "S": 1, "R": 2}
    return sorted((c.value for c in components), key=order.get)


def _joined(components) -> str:
    return ", ".join(_letters(components)) or "-"
