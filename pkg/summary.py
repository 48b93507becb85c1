"""
Summary Module
Percentage contribution statistics of each component relative to the
aggregate price.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from decomposition import Decomposition


class TrendStats(NamedTuple):
    max_pct: float
    min_pct: float
    mean_pct: float


class OscillationStats(NamedTuple):
    """Seasonal / random statistics: signed extrema, mean of magnitudes."""

    max_pct: float
    min_pct: float
    mean_abs_pct: float


class ComponentPercentages(NamedTuple):
    """Percentage of the aggregate at every month where the trend is defined."""

    trend: np.ndarray
    seasonal: np.ndarray
    random: np.ndarray


@dataclass(frozen=True)
class ComponentSummary:
    """
    Max / min / mean percentage of each component for one stock.

    Attributes:
        ticker: Stock identifier
        trend: Signed max, min and arithmetic mean of the trend percentages
        seasonal: Signed max and min, mean of absolute seasonal percentages
        random: Signed max and min, mean of absolute random percentages
        observation_count: Months contributing (N - period)
    """

    ticker: str
    trend: TrendStats
    seasonal: OscillationStats
    random: OscillationStats
    observation_count: int

    def means(self) -> dict:
        """Mean used for dominance, keyed by component letter."""
        return {
            "T": self.trend.mean_pct,
            "S": self.seasonal.mean_abs_pct,
            "R": self.random.mean_abs_pct,
        }


def component_percentages(d: Decomposition) -> ComponentPercentages:
    """
    Express each component as a percentage of the aggregate.

    Only positions with a defined trend are kept, so all three series have
    N - period entries and t% + s% + r% = 100 at every entry.
    """
    defined = d.defined
    aggregate = d.aggregate[defined]
    return ComponentPercentages(
        trend=100.0 * d.trend[defined] / aggregate,
        seasonal=100.0 * d.seasonal[defined] / aggregate,
        random=100.0 * d.random[defined] / aggregate,
    )


def _oscillation(pct: np.ndarray) -> OscillationStats:
    return OscillationStats(float(pct.max()), float(pct.min()), float(np.abs(pct).mean()))


def summarize(d: Decomposition) -> ComponentSummary:
    """
    Summarize a decomposition into per-component percentage statistics.

    Args:
        d: Decomposition of one stock

    Returns:
        ComponentSummary
    """
    pct = component_percentages(d)
    return ComponentSummary(
        ticker=d.ticker,
        trend=TrendStats(float(pct.trend.max()), float(pct.trend.min()), float(pct.trend.mean())),
        seasonal=_oscillation(pct.seasonal),
        random=_oscillation(pct.random),
        observation_count=int(pct.trend.size),
    )
