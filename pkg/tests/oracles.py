"""
Independent reference implementations used as test oracles.

None of these import calframe's arithmetic; they work from first principles
(Zeller's congruence, walking a calendar one day at a time, literal formula
transcription) so agreement is meaningful.
"""

from __future__ import annotations

import math

MONTH_LENGTHS = (31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)


def leap(y: int) -> bool:
    return (y % 4 == 0 and y % 100 != 0) or y % 400 == 0


def month_length(y: int, m: int) -> int:
    return 29 if (m == 2 and leap(y)) else MONTH_LENGTHS[m - 1]


def zeller_iso_weekday(y: int, m: int, d: int) -> int:
    """Monday=1 ... Sunday=7 via Zeller's congruence."""
    if m < 3:
        m += 12
        y -= 1
    K, J = y % 100, y // 100
    h = (d + (13 * (m + 1)) // 5 + K + K // 4 + J // 4 + 5 * J) % 7  # 0=Saturday
    return (h + 5) % 7 + 1


def walk_month(y: int, m: int, sunday: bool = False) -> dict[int, tuple[int, int]]:
    """Day-of-month -> (week row, weekday column), filled one day at a time."""
    first = zeller_iso_weekday(y, m, 1)
    col = first % 7 + 1 if sunday else first
    row = 1
    out = {}
    for day in range(1, month_length(y, m) + 1):
        out[day] = (row, col)
        col += 1
        if col > 7:
            col = 1
            row += 1
            if row == 6:
                row = 1  # sixth week wraps to the top row
    return out


def walk_weeks(days: list[tuple[int, int, int]], sunday: bool = False) -> dict:
    """Consecutive days -> (week row, weekday column): new row on each week-start day."""
    out = {}
    row = 1
    for k, (y, m, d) in enumerate(days):
        wd = zeller_iso_weekday(y, m, d)
        col = wd % 7 + 1 if sunday else wd
        if k > 0 and col == 1:
            row += 1
        out[(y, m, d)] = (row, col)
    return out


def days_between(start: tuple[int, int, int], end: tuple[int, int, int]) -> list[tuple[int, int, int]]:
    y, m, d = start
    out = [start]
    while (y, m, d) != end:
        d += 1
        if d > month_length(y, m):
            d = 1
            m += 1
            if m > 12:
                m = 1
                y += 1
        out.append((y, m, d))
    return out


def eq2_point(m, n, i, j, h, c, b, width, height, direction="h"):
    """Literal transcription of the projection, with rows counted downwards."""
    if direction == "h":
        x = j + (n - 1) * 7 + (n - 1) * b + h * width
        y = -i - (m - 1) * 5 - (m - 1) * b + c * height
    else:
        x = i + (n - 1) * 5 + (n - 1) * b + h * width
        y = -j - (m - 1) * 7 - (m - 1) * b + c * height
    return x, y


def groupwise_minmax(values, keys):
    """Brute-force per-key min-max scaling; None for missing, 0.5 for flat groups."""
    lo, hi = {}, {}
    for v, k in zip(values, keys):
        if v is None or (isinstance(v, float) and math.isnan(v)):
            continue
        lo[k] = min(lo.get(k, v), v)
        hi[k] = max(hi.get(k, v), v)
    out = []
    for v, k in zip(values, keys):
        if v is None or (isinstance(v, float) and math.isnan(v)):
            out.append(None)
        elif hi[k] == lo[k]:
            out.append(0.5)
        else:
            out.append((v - lo[k]) / (hi[k] - lo[k]))
    return out
