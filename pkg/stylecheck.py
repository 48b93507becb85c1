"""
Style Check Module
Classifies each stock's dominant components and checks a fund's declared
style and capitalization against the component profile of its holdings.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from exceptions import (
    ClassificationCountMismatchError,
    ConfigError,
    NoRuleForStyleError,
    RuleSchemaError,
    UnknownEnumValueError,
)
from ingest import Capitalization, FundSpec, FundStyle
from summary import ComponentSummary
from utils import load_json_file

logger = logging.getLogger(__name__)

DEFAULT_THRESHOLD = 15.0
DEFAULT_RULES_FILE = Path(__file__).parent / "style_rules.json"


class Component(str, Enum):
    TREND = "T"
    SEASONAL = "S"
    RANDOM = "R"


# tie-break order for labels
COMPONENT_ORDER = (Component.TREND, Component.SEASONAL, Component.RANDOM)
ALL_COMPONENTS = frozenset(COMPONENT_ORDER)


class StockStatus(str, Enum):
    CONSISTENT = "consistent"
    DEVIATION = "deviation"
    WHITELISTED = "whitelisted"


class Verdict(str, Enum):
    CONSISTENT = "consistent"
    CONSISTENT_WITH_DEVIATIONS = "consistent_with_deviations"
    INCONSISTENT = "inconsistent"


def format_components(components: Iterable[Component]) -> str:
    """'T + R' style label; empty string for no components."""
    return " + ".join(c.value for c in components)


@dataclass(frozen=True)
class DominanceClassification:
    """Components of one stock whose mean percentage exceeds the threshold."""

    ticker: str
    dominant: frozenset
    ordered_label: Tuple[Component, ...]
    means: Dict[str, float] = field(default_factory=dict, compare=False)

    @property
    def label(self) -> str:
        return format_components(self.ordered_label)


def classify_dominant(summary: ComponentSummary, threshold: float = DEFAULT_THRESHOLD) -> DominanceClassification:
    """
    Find the dominant components of a stock.

    A component is dominant when its mean percentage (trend mean, or mean of
    magnitudes for seasonal and random) is strictly greater than ``threshold``.

    Args:
        summary: Component statistics of one stock
        threshold: Dominance threshold in percent

    Returns:
        DominanceClassification with components ordered by descending mean
    """
    if not threshold > 0:
        raise ConfigError(f"threshold must be positive, got {threshold}")

    means = summary.means()
    dominant = [c for c in COMPONENT_ORDER if means[c.value] > threshold]
    # stable sort keeps T, S, R order on ties
    ordered = sorted(dominant, key=lambda c: -means[c.value])
    return DominanceClassification(
        ticker=summary.ticker,
        dominant=frozenset(dominant),
        ordered_label=tuple(ordered),
        means=means,
    )


@dataclass(frozen=True)
class StyleRule:
    """
    Expected component profile for one (style, capitalization) pair.

    ``required`` components must be dominant, ``flagged`` components must not
    be, ``tolerated`` ones may be either. The three sets partition {T, S, R}.
    """

    style: FundStyle
    capitalization: Capitalization
    required: frozenset
    tolerated: frozenset
    flagged: frozenset
    profile: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "style", FundStyle(self.style))
        object.__setattr__(self, "capitalization", Capitalization(self.capitalization))
        for name in ("required", "tolerated", "flagged"):
            object.__setattr__(self, name, frozenset(Component(c) for c in getattr(self, name)))
        sets = (self.required, self.tolerated, self.flagged)
        overlap = (self.required & self.tolerated) | (self.required & self.flagged) | (self.tolerated & self.flagged)
        if overlap:
            raise RuleSchemaError(f"{self.key_label}: {format_components(sorted(overlap, key=COMPONENT_ORDER.index))} listed twice")
        if frozenset().union(*sets) != ALL_COMPONENTS:
            missing = ALL_COMPONENTS.difference(*sets)
            raise RuleSchemaError(f"{self.key_label}: {format_components(sorted(missing, key=COMPONENT_ORDER.index))} not covered")

    @property
    def key(self) -> Tuple[FundStyle, Capitalization]:
        return self.style, self.capitalization

    @property
    def key_label(self) -> str:
        return f"({self.style.value}, {self.capitalization.value})"


def _parse_components(value, where: str) -> frozenset:
    if not isinstance(value, list):
        raise RuleSchemaError(f"{where} must be an array of component letters")
    try:
        return frozenset(Component(str(v).strip().upper()) for v in value)
    except ValueError:
        raise RuleSchemaError(f"{where} contains an unknown component in {value!r}")


def rule_from_dict(document: dict, index: int = 0) -> StyleRule:
    """Build a StyleRule from one rules-file entry."""
    where = f"rules[{index}]"
    if not isinstance(document, dict):
        raise RuleSchemaError(f"{where} must be an object")
    try:
        style = FundStyle(str(document.get("style", "")).strip().lower())
    except ValueError:
        raise UnknownEnumValueError(f"{where}.style", document.get("style"))
    try:
        capitalization = Capitalization(str(document.get("capitalization", "")).strip().lower())
    except ValueError:
        raise UnknownEnumValueError(f"{where}.capitalization", document.get("capitalization"))

    return StyleRule(
        style=style,
        capitalization=capitalization,
        required=_parse_components(document.get("required", []), f"{where}.required"),
        tolerated=_parse_components(document.get("tolerated", []), f"{where}.tolerated"),
        flagged=_parse_components(document.get("flagged", []), f"{where}.flagged"),
        profile=document.get("profile"),
    )


def load_style_rules(rules_path) -> List[StyleRule]:
    """
    Load a rule table from a JSON file.

    Args:
        rules_path: Path to a JSON array of rule objects

    Returns:
        Validated rules, one per (style, capitalization)
    """
    document = load_json_file(rules_path)
    if not isinstance(document, list) or not document:
        raise RuleSchemaError("rules file must be a non-empty JSON array")

    rules = [rule_from_dict(entry, i) for i, entry in enumerate(document)]
    seen = set()
    for rule in rules:
        if rule.key in seen:
            raise RuleSchemaError(f"{rule.key_label} defined more than once")
        seen.add(rule.key)

    logger.info("📋 Loaded %d style rules from %s", len(rules), rules_path)
    return rules


def default_style_rules() -> List[StyleRule]:
    """The bundled default rule table (style_rules.json)."""
    return load_style_rules(DEFAULT_RULES_FILE)


def find_rule(rules: Sequence[StyleRule], style: FundStyle, capitalization: Capitalization) -> StyleRule:
    for rule in rules:
        if rule.key == (style, capitalization):
            return rule
    raise NoRuleForStyleError(style.value, capitalization.value)


def rule_violations(classification: DominanceClassification, rule: StyleRule) -> Tuple[frozenset, frozenset]:
    """(required components that are absent, flagged components that are present)."""
    return rule.required - classification.dominant, rule.flagged & classification.dominant


def check_stock(classification: DominanceClassification, rule: StyleRule, whitelisted: bool = False) -> StockStatus:
    """
    Compare one stock's dominant components with the fund's rule.

    Only a flagged seasonal component can be excused by the whitelist.

    Args:
        classification: Dominant components of the stock
        rule: Rule for the fund's style and capitalization
        whitelisted: Whether the holding's seasonality is accepted

    Returns:
        StockStatus
    """
    missing, flagged = rule_violations(classification, rule)
    if missing:
        return StockStatus.DEVIATION
    if not flagged:
        return StockStatus.CONSISTENT
    if whitelisted and flagged == {Component.SEASONAL}:
        return StockStatus.WHITELISTED
    return StockStatus.DEVIATION


def describe_violations(classification: DominanceClassification, rule: StyleRule) -> str:
    missing, flagged = rule_violations(classification, rule)
    notes = []
    if missing:
        notes.append(f"missing {format_components(sorted(missing, key=COMPONENT_ORDER.index))}")
    if flagged:
        notes.append(f"unexpected {format_components(sorted(flagged, key=COMPONENT_ORDER.index))}")
    return "; ".join(notes)


class VerdictThresholds(NamedTuple):
    zero_bound: int = 0
    ratio_bound: float = 0.30


def decide_verdict(deviation_count: int, holdings: int, thresholds: VerdictThresholds = VerdictThresholds()) -> Verdict:
    if deviation_count <= thresholds.zero_bound:
        return Verdict.CONSISTENT
    if deviation_count / holdings <= thresholds.ratio_bound:
        return Verdict.CONSISTENT_WITH_DEVIATIONS
    return Verdict.INCONSISTENT


@dataclass(frozen=True)
class StockAssessment:
    ticker: str
    classification: DominanceClassification
    status: StockStatus
    sector: Optional[str] = None
    note: str = ""


@dataclass(frozen=True)
class ConsistencyReport:
    """Per-holding statuses and the fund-level verdict."""

    fund: str
    style: FundStyle
    capitalization: Capitalization
    rule: StyleRule
    per_stock: Tuple[StockAssessment, ...]
    deviation_count: int
    verdict: Verdict
    component_counts: Dict[str, int] = field(default_factory=dict)

    @property
    def deviations(self) -> List[str]:
        return [s.ticker for s in self.per_stock if s.status == StockStatus.DEVIATION]

    @property
    def whitelisted(self) -> List[str]:
        return [s.ticker for s in self.per_stock if s.status == StockStatus.WHITELISTED]


def check_fund(
    fund: FundSpec,
    classifications: Sequence[DominanceClassification],
    rules: Sequence[StyleRule],
    verdict_thresholds: VerdictThresholds = VerdictThresholds(),
) -> ConsistencyReport:
    """
    Evaluate a fund's holdings against the rule for its declared profile.

    Args:
        fund: Fund definition
        classifications: One classification per holding, in holding order
        rules: Rule table
        verdict_thresholds: Bounds mapping the deviation count to a verdict

    Returns:
        ConsistencyReport
    """
    rule = find_rule(rules, fund.style, fund.capitalization)
    if len(classifications) != len(fund.holdings):
        raise ClassificationCountMismatchError(
            f"{len(classifications)} classifications for {len(fund.holdings)} holdings"
        )

    assessments = []
    for holding, classification in zip(fund.holdings, classifications):
        if classification.ticker != holding.ticker:
            raise ClassificationCountMismatchError(
                f"classification for {classification.ticker!r} where {holding.ticker!r} was expected"
            )
        status = check_stock(classification, rule, holding.seasonal_whitelisted)
        if status == StockStatus.WHITELISTED:
            note = holding.whitelist_reason or "seasonal component accepted"
        else:
            note = describe_violations(classification, rule) if status == StockStatus.DEVIATION else ""
        assessments.append(StockAssessment(holding.ticker, classification, status, holding.sector, note))

    deviation_count = sum(1 for a in assessments if a.status == StockStatus.DEVIATION)
    counts = {c.value: sum(1 for a in assessments if c in a.classification.dominant) for c in COMPONENT_ORDER}
    verdict = decide_verdict(deviation_count, len(assessments), verdict_thresholds)

    for a in assessments:
        icon = "❌" if a.status == StockStatus.DEVIATION else "✅"
        logger.info("%s %s: %s -> %s", icon, a.ticker, a.classification.label or "-", a.status.value)

    return ConsistencyReport(
        fund=fund.name,
        style=fund.style,
        capitalization=fund.capitalization,
        rule=rule,
        per_stock=tuple(assessments),
        deviation_count=deviation_count,
        verdict=verdict,
        component_counts=counts,
    )
