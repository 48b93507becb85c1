"""
Exceptions Module
Error hierarchy shared by ingestion, decomposition and style checking.
"""

from typing import Optional


class AnalysisError(ValueError):
    """Base class for every input error the pipeline can report."""

    label = "AnalysisError"

    def __init__(self, detail: str = ""):
        self.detail = detail
        super().__init__(f"{self.label} {detail}".strip())


class ConfigError(AnalysisError):
    label = "ConfigError"


# Ingestion

class MissingFileError(AnalysisError):
    label = "MissingFile"

    def __init__(self, path):
        self.path = str(path)
        super().__init__(self.path)


class _LineError(AnalysisError):
    """Error tied to a line number in an input file (None when built in code)."""

    def __init__(self, line: Optional[int], reason: str = ""):
        self.line = line
        parts = [f"line {line}"] if line is not None else []
        if reason:
            parts.append(reason)
        super().__init__(": ".join(parts))


class MalformedRowError(_LineError):
    label = "MalformedRow"


class NonMonotonicDatesError(_LineError):
    label = "NonMonotonicDates"


class NonPositivePriceError(_LineError):
    label = "NonPositivePrice"


class EmptyMonthError(AnalysisError):
    label = "EmptyMonth"

    def __init__(self, year: int, month: int):
        self.year = year
        self.month = month
        super().__init__(f"{year:04d}-{month:02d}")


class TooShortError(AnalysisError):
    label = "TooShort"

    def __init__(self, months: int, minimum: int):
        self.months = months
        self.minimum = minimum
        super().__init__(f"{months} months, need at least {minimum}")


class SchemaError(AnalysisError):
    label = "SchemaError"

    def __init__(self, field: str, reason: str = ""):
        self.field = field
        super().__init__(f"{field}: {reason}" if reason else field)


class UnknownEnumValueError(AnalysisError):
    label = "UnknownEnumValue"

    def __init__(self, field: str, value):
        self.field = field
        self.value = value
        super().__init__(f"{field}={value!r}")


class DuplicateTickerError(AnalysisError):
    label = "DuplicateTicker"

    def __init__(self, ticker: str):
        self.ticker = ticker
        super().__init__(ticker)


# Decomposition

class SeriesTooShortError(AnalysisError):
    label = "SeriesTooShort"

    def __init__(self, length: int, period: int):
        self.length = length
        self.period = period
        super().__init__(f"{length} values for period {period}, need at least {period + 1}")


class NoDataForMonthError(AnalysisError):
    label = "NoDataForMonth"

    def __init__(self, month: int):
        self.month = month
        super().__init__(str(month))


# Style checking

class RuleSchemaError(AnalysisError):
    label = "RuleSchemaError"


class NoRuleForStyleError(AnalysisError):
    label = "NoRuleForStyle"

    def __init__(self, style: str, capitalization: str):
        self.style = style
        self.capitalization = capitalization
        super().__init__(f"({style}, {capitalization})")


class ClassificationCountMismatchError(AnalysisError):
    label = "ClassificationCountMismatch"


class HoldingError(AnalysisError):
    """Wraps an error raised while processing one holding of a fund."""

    label = "HoldingError"

    def __init__(self, ticker: str, cause: Exception):
        self.ticker = ticker
        self.cause = cause
        super().__init__(f"{ticker}: {cause}")


class InvariantError(RuntimeError):
    """An internal consistency check failed; not caused by user input."""

    def __init__(self, message: str, ticker: Optional[str] = None):
        self.ticker = ticker
        prefix = f"{ticker}: " if ticker else ""
        super().__init__(f"{prefix}{message}")
