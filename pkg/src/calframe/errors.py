"""Exception hierarchy shared by every calframe module."""

from __future__ import annotations


class CalframeError(Exception):
    """Base class for all calframe errors."""


class InvalidArgumentError(CalframeError, ValueError):
    pass


class DateRangeError(CalframeError, ValueError):
    """A date falls outside the supported 1583-9999 window."""


class ParseError(CalframeError, ValueError):
    """Raised for malformed input text. ``row`` is the 1-based data row (or file line)."""

    def __init__(self, message: str, row: int | None = None) -> None:
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)
        self.row = row


class SchemaError(CalframeError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class CapacityError(CalframeError, ValueError):
    """The month grid has fewer slots than months to lay out."""


class EmptyInputError(CalframeError, ValueError):
    pass


class EmptyDomainError(CalframeError, ValueError):
    """Rescaling was asked to work on a group with no non-missing values."""


class UnknownLocaleError(CalframeError, LookupError):
    pass
