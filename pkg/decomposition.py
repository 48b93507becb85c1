"""
Decomposition Module
Classical additive decomposition of a monthly series into trend, seasonal and
random components.
"""

import logging
from dataclasses import dataclass
from typing import List

import numpy as np
import pandas as pd
from statsmodels.tsa.filters.filtertools import convolution_filter
from statsmodels.tsa.seasonal import seasonal_decompose

from exceptions import ConfigError, InvariantError, NoDataForMonthError, SeriesTooShortError
from ingest import MonthlySeries
from utils import YearMonth, month_index

logger = logging.getLogger(__name__)

DEFAULT_PERIOD = 12


def validate_period(period: int) -> int:
    """Period must be an even number of months, at least 2."""
    if isinstance(period, bool) or not isinstance(period, (int, np.integer)):
        raise ConfigError(f"period must be an integer, got {period!r}")
    if period < 2 or period % 2:
        raise ConfigError(f"period must be even and >= 2, got {period}")
    return int(period)


def cycle_positions(series: MonthlySeries, period: int = DEFAULT_PERIOD) -> np.ndarray:
    """
    Seasonal column of every position.

    Keyed by the calendar month index modulo ``period``, so for a period of 12
    position i maps to its month-of-year (0 = January) whatever month the
    series starts in.
    """
    first = month_index(series.start)
    return (first + np.arange(len(series))) % period


def centered_ma_trend(series: MonthlySeries, period: int = DEFAULT_PERIOD) -> np.ndarray:
    """
    Centered moving average trend (2 x period MA for even periods).

    Args:
        series: Monthly series
        period: Even window length in months

    Returns:
        Array aligned with the series; NaN for the first and last period/2
        positions where the window does not fit
    """
    period = validate_period(period)
    values = series.array
    n = len(values)
    if n < period + 1:
        raise SeriesTooShortError(n, period)

    weights = np.ones(period + 1)
    weights[0] = weights[-1] = 0.5

    # same two-sided filter seasonal_decompose applies; NaN-padded at both ends
    return np.asarray(convolution_filter(values, weights, nsides=2), dtype=float) / period


def seasonal_figures(series: MonthlySeries, trend: np.ndarray, period: int = DEFAULT_PERIOD) -> np.ndarray:
    """
    Per-column seasonal figures from the detrended series, centered to sum to 0.

    Args:
        series: Monthly series
        trend: Output of centered_ma_trend for the same series
        period: Seasonal period in months

    Returns:
        ``period`` figures; for period 12 index 0 is January
    """
    period = validate_period(period)
    detrended = pd.Series(series.array - np.asarray(trend, dtype=float))
    raw = detrended.groupby(cycle_positions(series, period)).mean().reindex(range(period))

    empty = raw.index[raw.isna()]
    if len(empty) > 0:
        raise NoDataForMonthError(int(empty[0]) + 1)

    raw = raw.to_numpy(dtype=float)
    return raw - raw.mean()


@dataclass(frozen=True, eq=False)
class Decomposition:
    """
    Additive components of one monthly series.

    ``trend`` and ``random`` hold NaN where undefined (the first and last
    period/2 months); ``seasonal`` is ``seasonal_figures`` tiled over the
    series by calendar position.
    """

    series: MonthlySeries
    trend: np.ndarray
    seasonal_figures: np.ndarray
    seasonal: np.ndarray
    random: np.ndarray
    period: int = DEFAULT_PERIOD

    def __post_init__(self):
        for name in ("trend", "seasonal_figures", "seasonal", "random"):
            array = np.array(getattr(self, name), dtype=float)
            array.setflags(write=False)
            object.__setattr__(self, name, array)

    @property
    def ticker(self) -> str:
        return self.series.ticker

    @property
    def aggregate(self) -> np.ndarray:
        return self.series.array

    @property
    def defined(self) -> np.ndarray:
        """Mask of positions where trend (and therefore random) is defined."""
        return ~np.isnan(self.trend)

    def month_labels(self) -> List[YearMonth]:
        return self.series.months()

    def check_invariants(self, tolerance: float = 1e-9) -> None:
        """
        Verify the structural properties of the decomposition.

        Raises:
            InvariantError: if additivity, centering or head/tail layout fails
        """
        n = len(self.series)
        half = self.period // 2
        defined = self.defined

        if defined[:half].any() or defined[n - half:].any() or not defined[half:n - half].all():
            raise InvariantError("trend must be undefined exactly at the first and last period/2 months", self.ticker)
        if not np.array_equal(np.isnan(self.random), ~defined):
            raise InvariantError("random must be undefined exactly where trend is undefined", self.ticker)

        a = self.aggregate[defined]
        parts = (self.trend[defined], self.seasonal[defined], self.random[defined])
        rebuilt = parts[0] + parts[1] + parts[2]
        # round-off follows the largest term, not the aggregate
        magnitude = max([float(np.abs(a).max(initial=0.0))] + [float(np.abs(p).max(initial=0.0)) for p in parts])
        if not np.allclose(rebuilt, a, rtol=0.0, atol=tolerance * max(magnitude, 1.0)):
            raise InvariantError("aggregate != trend + seasonal + random", self.ticker)

        scale = max(1.0, float(np.abs(self.seasonal_figures).sum()))
        if abs(float(self.seasonal_figures.sum())) > tolerance * scale:
            raise InvariantError("seasonal figures do not sum to zero", self.ticker)


def decompose(series: MonthlySeries, period: int = DEFAULT_PERIOD) -> Decomposition:
    """
    Decompose a series as aggregate = trend + seasonal + random.

    Args:
        series: Monthly series
        period: Seasonal period in months (even)

    Returns:
        Decomposition with all invariants checked
    """
    period = validate_period(period)
    n = len(series)
    if n < period + 1:
        raise SeriesTooShortError(n, period)
    if n < 2 * period:
        # fewer defined detrended values than columns
        covered = set(cycle_positions(series, period)[period // 2:n - period // 2].tolist())
        raise NoDataForMonthError(min(set(range(period)) - covered) + 1)

    components = seasonal_decompose(
        pd.Series(series.array),
        model="additive",
        period=period,
        two_sided=True,
    )
    trend = components.trend.to_numpy(dtype=float)
    # statsmodels keys figures by offset from the first value; rotate to calendar columns
    figures = np.roll(components.seasonal.to_numpy(dtype=float)[:period], month_index(series.start) % period)
    seasonal = figures[cycle_positions(series, period)]
    random = series.array - trend - seasonal

    result = Decomposition(
        series=series,
        trend=trend,
        seasonal_figures=figures,
        seasonal=seasonal,
        random=random,
        period=period,
    )
    result.check_invariants()
    logger.debug("Decomposed %s: %d months, period %d", series.ticker or "<series>", len(series), period)
    return result
