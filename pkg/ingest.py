"""
Ingest Module
Parses daily price files, monthly average files and fund definitions, and
aggregates daily closes into validated monthly series.
"""

import io
import logging
import math
import re
from dataclasses import dataclass
from datetime import date
from enum import Enum
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from exceptions import (
    DuplicateTickerError,
    EmptyMonthError,
    MalformedRowError,
    NonMonotonicDatesError,
    NonPositivePriceError,
    SchemaError,
    TooShortError,
    UnknownEnumValueError,
)
from utils import YearMonth, load_json_file, parse_year_month, read_text_file, shift_month

logger = logging.getLogger(__name__)

MIN_SERIES_MONTHS = 24

_ISO_DATE = r"^\d{4}-\d{2}-\d{2}$"


class FundStyle(str, Enum):
    BLEND = "blend"
    GROWTH = "growth"


class Capitalization(str, Enum):
    SMALL = "small"
    MEDIUM = "medium"
    LARGE = "large"


@dataclass(frozen=True)
class DailyObservation:
    """One trading day's closing price."""

    date: date
    close: float

    def __post_init__(self):
        if not self.close > 0:
            raise NonPositivePriceError(None, f"{self.date.isoformat()},{self.close}")


@dataclass(frozen=True)
class MonthlySeries:
    """
    Contiguous monthly mean prices for one stock.

    Attributes:
        ticker: Stock identifier
        start: First month as (year, month)
        values: Monthly mean prices, one per month from ``start`` with no gaps
    """

    ticker: str
    start: YearMonth
    values: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        year, month = self.start
        if not 1 <= month <= 12:
            raise SchemaError("start", f"month {month} out of range")
        if len(self.values) < MIN_SERIES_MONTHS:
            raise TooShortError(len(self.values), MIN_SERIES_MONTHS)
        for position, value in enumerate(self.values):
            if not (math.isfinite(value) and value > 0):
                raise NonPositivePriceError(position + 1, f"monthly value {value}")

    def __len__(self) -> int:
        return len(self.values)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    @property
    def end(self) -> YearMonth:
        return shift_month(self.start, len(self.values) - 1)

    def month_at(self, position: int) -> YearMonth:
        """(year, month) of the value at ``position``."""
        return shift_month(self.start, position)

    def months(self) -> List[YearMonth]:
        return [self.month_at(i) for i in range(len(self.values))]


@dataclass(frozen=True)
class Holding:
    """A stock held by a fund, with the file its prices come from."""

    ticker: str
    price_file: Path
    sector: Optional[str] = None
    seasonal_whitelisted: bool = False
    whitelist_reason: Optional[str] = None


@dataclass(frozen=True)
class FundSpec:
    """A mutual fund's declared profile and the holdings to audit."""

    name: str
    style: FundStyle
    capitalization: Capitalization
    holdings: Tuple[Holding, ...]
    sectors: Tuple[str, ...] = ()
    description: Optional[str] = None

    def __post_init__(self):
        if not self.holdings:
            raise SchemaError("holdings", "at least one holding is required")
        seen = set()
        for holding in self.holdings:
            if holding.ticker in seen:
                raise DuplicateTickerError(holding.ticker)
            seen.add(holding.ticker)

    @property
    def tickers(self) -> List[str]:
        return [h.ticker for h in self.holdings]


def parse_daily_csv(path) -> List[DailyObservation]:
    """
    Parse a daily price CSV with ``date`` and ``close`` columns.

    Extra columns are ignored. Dates must be ISO ``YYYY-MM-DD`` and strictly
    increasing; closes must be positive numbers.

    Args:
        path: Path to the CSV file

    Returns:
        Observations in file (= date) order
    """
    path = Path(path)
    text = read_text_file(path)

    try:
        frame = pd.read_csv(
            io.StringIO(text),
            dtype=str,
            keep_default_na=False,
            skipinitialspace=True,
        )
    except pd.errors.EmptyDataError:
        raise MalformedRowError(1, "missing header")
    except pd.errors.ParserError as e:
        match = re.search(r"line (\d+)", str(e))
        raise MalformedRowError(int(match.group(1)) if match else 0, "wrong number of fields")

    columns = {str(c).strip().lower(): c for c in frame.columns}
    if "date" not in columns or "close" not in columns:
        raise MalformedRowError(1, "header must name 'date' and 'close' columns")

    raw_dates = frame[columns["date"]].fillna("").astype(str).str.strip()
    raw_close = frame[columns["close"]].fillna("").astype(str).str.strip()

    dates = pd.to_datetime(raw_dates.where(raw_dates.str.match(_ISO_DATE)), format="%Y-%m-%d", errors="coerce")
    closes = pd.to_numeric(raw_close, errors="coerce")

    # header is line 1
    line_numbers = np.arange(len(frame)) + 2
    malformed = dates.isna().to_numpy() | closes.isna().to_numpy() | ~np.isfinite(closes.fillna(0).to_numpy())
    non_positive = ~malformed & (closes.fillna(0).to_numpy() <= 0)
    ordinal = dates.to_numpy()
    non_monotonic = np.zeros(len(frame), dtype=bool)
    if len(frame) > 1:
        non_monotonic[1:] = ordinal[1:] <= ordinal[:-1]
        non_monotonic &= ~malformed
        non_monotonic[1:] &= ~malformed[:-1]

    problems = [
        (malformed, MalformedRowError),
        (non_positive, NonPositivePriceError),
        (non_monotonic, NonMonotonicDatesError),
    ]
    first_bad = None
    for mask, error in problems:
        if mask.any():
            row = int(np.argmax(mask))
            if first_bad is None or row < first_bad[0]:
                first_bad = (row, error)
    if first_bad is not None:
        row, error = first_bad
        raise error(int(line_numbers[row]), f"{raw_dates.iloc[row]},{raw_close.iloc[row]}")

    observations = [
        DailyObservation(ts.date(), float(close))
        for ts, close in zip(dates, closes)
    ]
    logger.debug("Parsed %d daily observations from %s", len(observations), path)
    return observations


def aggregate_monthly(observations: Sequence[DailyObservation], ticker: str = "") -> MonthlySeries:
    """
    Average daily closes into one value per calendar month.

    Args:
        observations: Daily closes; every month between the first and last
            observation must contain at least one
        ticker: Identifier stored on the resulting series

    Returns:
        MonthlySeries of plain arithmetic means, full precision
    """
    if not observations:
        raise TooShortError(0, MIN_SERIES_MONTHS)

    frame = pd.DataFrame(
        {
            "date": pd.to_datetime([o.date for o in observations]),
            "close": [o.close for o in observations],
        }
    )
    frame["month"] = frame["date"].dt.to_period("M")
    means = frame.groupby("month")["close"].mean()

    spanned = pd.period_range(means.index.min(), means.index.max(), freq="M")
    missing = spanned.difference(means.index)
    if len(missing) > 0:
        first_missing = missing.min()
        raise EmptyMonthError(first_missing.year, first_missing.month)

    means = means.reindex(spanned)
    if len(means) < MIN_SERIES_MONTHS:
        raise TooShortError(len(means), MIN_SERIES_MONTHS)

    start = (spanned[0].year, spanned[0].month)
    logger.debug("Aggregated %d observations into %d months", len(observations), len(means))
    return MonthlySeries(ticker=ticker, start=start, values=tuple(means.to_numpy(dtype=float)))


def read_monthly_text(path, ticker: Optional[str] = None) -> MonthlySeries:
    """
    Read a monthly average file: ``# key: value`` header lines followed by
    one value per line.

    Args:
        path: Path to the text file
        ticker: Overrides the ``ticker`` header (default: header, else file stem)

    Returns:
        MonthlySeries
    """
    path = Path(path)
    contents = read_text_file(path)

    metadata = {}
    values = []
    for line_number, line in enumerate(contents.split("\n"), start=1):
        text = line.strip()
        if not text:
            continue
        if text.startswith("#"):
            key, sep, value = text.lstrip("#").partition(":")
            if sep:
                metadata[key.strip().lower()] = value.strip()
            continue
        try:
            value = float(text)
        except ValueError:
            raise MalformedRowError(line_number, text)
        if not math.isfinite(value):
            raise MalformedRowError(line_number, text)
        if value <= 0:
            raise NonPositivePriceError(line_number, text)
        values.append(value)

    if "start" not in metadata:
        raise SchemaError("start", "missing '# start: YYYY-MM' header")
    start = parse_year_month(metadata["start"])
    if len(values) < MIN_SERIES_MONTHS:
        raise TooShortError(len(values), MIN_SERIES_MONTHS)

    name = ticker or metadata.get("ticker") or path.stem
    return MonthlySeries(ticker=name, start=start, values=tuple(values))


def write_monthly_text(series: MonthlySeries, path) -> None:
    """
    Write a series in the monthly average text format.

    Args:
        series: Series to store
        path: Output file path
    """
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_monthly_text(series))


def format_monthly_text(series: MonthlySeries) -> str:
    """Monthly average text content for ``series`` (values round-trip exactly)."""
    year, month = series.start
    lines = [f"# ticker: {series.ticker}", f"# start: {year:04d}-{month:02d}"]
    lines.extend(repr(v) for v in series.values)
    return "\n".join(lines) + "\n"


def load_series(path, ticker: Optional[str] = None) -> MonthlySeries:
    """
    Load a monthly series from either a monthly text file (``.txt``) or a
    daily price CSV.

    Args:
        path: Price file
        ticker: Identifier for the series (default: from the file)

    Returns:
        MonthlySeries
    """
    path = Path(path)
    if path.suffix.lower() == ".txt":
        return read_monthly_text(path, ticker=ticker)
    observations = parse_daily_csv(path)
    return aggregate_monthly(observations, ticker=ticker or path.stem)


def _require_text(document: dict, key: str, where: str = "") -> str:
    value = document.get(key)
    if not isinstance(value, str) or not value.strip():
        raise SchemaError(f"{where}{key}", "required non-empty string")
    return value.strip()


def _optional_text(document: dict, key: str, where: str = "") -> Optional[str]:
    value = document.get(key)
    if value is None:
        return None
    if not isinstance(value, str):
        raise SchemaError(f"{where}{key}", "must be a string")
    return value.strip() or None


def _parse_enum(enum_type, field_name: str, value: str):
    try:
        return enum_type(value.strip().lower())
    except ValueError:
        raise UnknownEnumValueError(field_name, value)


def parse_fund_spec(path) -> FundSpec:
    """
    Load and validate a fund definition JSON file.

    Relative ``price_file`` entries resolve against the fund file's directory.

    Args:
        path: Path to the fund JSON file

    Returns:
        Validated FundSpec
    """
    path = Path(path)
    document = load_json_file(path)
    if not isinstance(document, dict):
        raise SchemaError("document", "expected a JSON object")

    name = _require_text(document, "name")
    style = _parse_enum(FundStyle, "style", _require_text(document, "style"))
    capitalization = _parse_enum(Capitalization, "capitalization", _require_text(document, "capitalization"))

    sectors = document.get("sectors", [])
    if not isinstance(sectors, list) or not all(isinstance(s, str) for s in sectors):
        raise SchemaError("sectors", "must be an array of strings")

    raw_holdings = document.get("holdings")
    if not isinstance(raw_holdings, list) or not raw_holdings:
        raise SchemaError("holdings", "must be a non-empty array")

    base_dir = path.parent
    holdings = []
    for i, entry in enumerate(raw_holdings):
        where = f"holdings[{i}]."
        if not isinstance(entry, dict):
            raise SchemaError(f"holdings[{i}]", "must be an object")
        price_file = Path(_require_text(entry, "price_file", where))
        if not price_file.is_absolute():
            price_file = base_dir / price_file
        whitelisted = entry.get("seasonal_whitelisted", False)
        if not isinstance(whitelisted, bool):
            raise SchemaError(f"{where}seasonal_whitelisted", "must be true or false")
        holdings.append(
            Holding(
                ticker=_require_text(entry, "ticker", where),
                price_file=price_file,
                sector=_optional_text(entry, "sector", where),
                seasonal_whitelisted=whitelisted,
                whitelist_reason=_optional_text(entry, "whitelist_reason", where),
            )
        )

    fund = FundSpec(
        name=name,
        style=style,
        capitalization=capitalization,
        holdings=tuple(holdings),
        sectors=tuple(s.strip() for s in sectors),
        description=_optional_text(document, "description"),
    )
    logger.info("📋 Loaded fund: %s (%s, %s) with %d holdings",
                fund.name, fund.style.value, fund.capitalization.value, len(fund.holdings))
    return fund
