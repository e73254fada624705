"""
Proleptic Gregorian date arithmetic.

Everything here is self-contained integer arithmetic; no ``datetime`` or
``calendar`` facility is used so the day-of-week logic can be checked against
independent oracles in the test-suite.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import DateRangeError, InvalidArgumentError, ParseError

MIN_YEAR = 1583
MAX_YEAR = 9999

_MONTH_DAYS = (31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)
_ISO_DATE = re.compile(r"(\d{4})-(\d{2})-(\d{2})")


class WeekStart(enum.Enum):
    MONDAY = "monday"
    SUNDAY = "sunday"

    @classmethod
    def from_flag(cls, sunday: bool) -> "WeekStart":
        return cls.SUNDAY if sunday else cls.MONDAY


def is_leap_year(year: int) -> bool:
    return year % 4 == 0 and (year % 100 != 0 or year % 400 == 0)


def days_in_month(year: int, month: int) -> int:
    if not 1 <= month <= 12:
        raise InvalidArgumentError(f"month must be in 1..12, got {month}")
    if month == 2 and is_leap_year(year):
        return 29
    return _MONTH_DAYS[month - 1]


@dataclass(frozen=True, order=True)
class Date:
    """A validated calendar date. Field order gives chronological ordering."""

    year: int
    month: int
    day: int

    def __post_init__(self) -> None:
        if not MIN_YEAR <= self.year <= MAX_YEAR:
            raise DateRangeError(
                f"year {self.year} outside supported range {MIN_YEAR}..{MAX_YEAR}"
            )
        if not 1 <= self.month <= 12:
            raise InvalidArgumentError(f"invalid month {self.month}")
        if not 1 <= self.day <= days_in_month(self.year, self.month):
            raise InvalidArgumentError(
                f"invalid day {self.day} for {self.year:04d}-{self.month:02d}"
            )

    def __str__(self) -> str:
        return f"{self.year:04d}-{self.month:02d}-{self.day:02d}"

    def ordinal(self) -> int:
        return days_from_civil(self.year, self.month, self.day)

    @classmethod
    def from_ordinal(cls, n: int) -> "Date":
        return cls(*civil_from_days(n))


def days_from_civil(year: int, month: int, day: int) -> int:
    """Days since 1970-01-01 (negative before), using March-based eras of 400 years."""
    y = year - 1 if month <= 2 else year
    era = y // 400
    yoe = y - era * 400
    mp = (month + 9) % 12  # March=0 ... February=11
    doy = (153 * mp + 2) // 5 + day - 1
    doe = yoe * 365 + yoe // 4 - yoe // 100 + doy
    return era * 146097 + doe - 719468


def civil_from_days(n: int) -> tuple[int, int, int]:
    n += 719468
    era = n // 146097
    doe = n - era * 146097
    yoe = (doe - doe // 1460 + doe // 36524 - doe // 146096) // 365
    doy = doe - (365 * yoe + yoe // 4 - yoe // 100)
    mp = (5 * doy + 2) // 153
    day = doy - (153 * mp + 2) // 5 + 1
    month = mp + 3 if mp < 10 else mp - 9
    year = yoe + era * 400 + (1 if month <= 2 else 0)
    return year, month, day


def day_of_week(d: Date, week_start: WeekStart = WeekStart.MONDAY) -> int:
    """Weekday number 1..7 counted from ``week_start``."""
    # 1970-01-01 was a Thursday: Monday-based index 3 (0-based).
    monday_based = (d.ordinal() + 3) % 7
    if week_start is WeekStart.SUNDAY:
        return (monday_based + 1) % 7 + 1
    return monday_based + 1


def next_day(d: Date) -> Date:
    if d.day < days_in_month(d.year, d.month):
        return Date(d.year, d.month, d.day + 1)
    if d.month < 12:
        return Date(d.year, d.month + 1, 1)
    if d.year >= MAX_YEAR:
        raise DateRangeError(f"no successor for {d} within supported range")
    return Date(d.year + 1, 1, 1)


def month_after(year: int, month: int) -> tuple[int, int]:
    return (year + 1, 1) if month == 12 else (year, month + 1)


def parse_date(text: str, row: int | None = None) -> Date:
    """Parse a strict ISO-8601 ``YYYY-MM-DD`` string."""
    m = _ISO_DATE.fullmatch(text.strip())
    if m is None:
        raise ParseError(f"malformed date {text!r} (expected YYYY-MM-DD)", row)
    try:
        return Date(int(m[1]), int(m[2]), int(m[3]))
    except (InvalidArgumentError, DateRangeError) as exc:
        raise ParseError(f"invalid date {text!r}: {exc}", row) from None
