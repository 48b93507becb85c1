"""
Utility Functions
Helper functions shared by the ingestion, rendering and CLI modules.
"""

import calendar
import json
import math
import os
from pathlib import Path
from typing import Any, Optional, Tuple

from exceptions import ConfigError, MalformedRowError, MissingFileError, SchemaError

YearMonth = Tuple[int, int]


def round_half_away(value: float) -> int:
    """
    Round to the nearest integer, halves away from zero.

    Args:
        value: Number to round

    Returns:
        Rounded integer (2.5 -> 3, -2.5 -> -3)
    """
    rounded = math.floor(abs(value) + 0.5)
    return int(-rounded if value < 0 else rounded)


def format_number(value: Optional[float], full_precision: bool = False) -> str:
    """
    Format a number for text display.

    Args:
        value: Number, or None/NaN for an undefined cell
        full_precision: Show four decimals instead of rounding to an integer

    Returns:
        Display string; empty for undefined cells
    """
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return ""
    if full_precision:
        return f"{value:.4f}"
    return str(round_half_away(value))


def to_json_number(value: Optional[float]) -> Optional[float]:
    """Convert numpy scalars / NaN to plain JSON values."""
    if value is None:
        return None
    value = float(value)
    return None if math.isnan(value) else value


def shift_month(start: YearMonth, offset: int) -> YearMonth:
    """
    Move a (year, month) pair forward by a number of months.

    Args:
        start: Anchor month as (year, month)
        offset: Number of months to add (may be negative)

    Returns:
        Resulting (year, month)
    """
    index = month_index(start) + offset
    return index // 12, index % 12 + 1


def month_index(year_month: YearMonth) -> int:
    """Absolute month count since year 0, used for contiguity and cycle keys."""
    year, month = year_month
    return year * 12 + (month - 1)


def month_label(year_month: YearMonth) -> str:
    """'2008-01' style label for CSV/JSON output."""
    year, month = year_month
    return f"{year:04d}-{month:02d}"


def month_name(month: int) -> str:
    """Full English month name ('January')."""
    return calendar.month_name[month]


def parse_year_month(text: str, field: str = "start") -> YearMonth:
    """
    Parse a 'YYYY-MM' string.

    Args:
        text: Month text
        field: Field name used in the error message

    Returns:
        (year, month) pair
    """
    try:
        year_text, month_text = text.strip().split("-")
        year, month = int(year_text), int(month_text)
    except ValueError:
        raise SchemaError(field, f"expected YYYY-MM, got {text!r}")
    if not 1 <= month <= 12:
        raise SchemaError(field, f"month out of range in {text!r}")
    return year, month


def read_text_file(filepath) -> str:
    """
    Read a UTF-8 text file.

    Args:
        filepath: Path to the file

    Returns:
        Decoded contents

    Raises:
        MalformedRowError: naming the line that holds the first invalid byte
    """
    path = Path(filepath)
    if not path.is_file():
        raise MissingFileError(path)
    raw = path.read_bytes()
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise MalformedRowError(raw.count(b"\n", 0, e.start) + 1, "invalid UTF-8")


def load_json_file(filepath) -> Any:
    """
    Load and parse a JSON file.

    Args:
        filepath: Path to the JSON file

    Returns:
        Parsed JSON data
    """
    try:
        text = read_text_file(filepath)
    except MalformedRowError as e:
        raise SchemaError("document", f"invalid UTF-8 at line {e.line}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError("document", f"invalid JSON at line {e.lineno}")


def env_float(name: str, default: float) -> float:
    """Read a float setting from the environment."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return float(default)
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(f"{name}={raw!r} is not a number")


def env_int(name: str, default: int) -> int:
    """Read an integer setting from the environment."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return int(default)
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{name}={raw!r} is not an integer")
