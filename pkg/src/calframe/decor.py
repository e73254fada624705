"""Reference lines, label anchors and localized label text."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from pathlib import Path

from .civil import WeekStart
from .errors import InvalidArgumentError, ParseError, UnknownLocaleError
from .layout import Geometry


class Weight(str, enum.Enum):
    MAJOR = "major"
    MINOR = "minor"


@dataclass(frozen=True)
class Segment:
    x1: float
    y1: float
    x2: float
    y2: float
    weight: Weight


@dataclass(frozen=True)
class LabelAnchor:
    x: float
    y: float
    text: str
    kind: str  # "month" or "weekday"


@dataclass(frozen=True)
class Locale:
    id: str
    month_names: tuple[str, ...]
    weekday_names: tuple[str, ...]  # Monday first

    def __post_init__(self) -> None:
        if len(self.month_names) != 12 or len(self.weekday_names) != 7:
            raise InvalidArgumentError("a locale needs 12 month and 7 weekday names")
        if not all(self.month_names) or not all(self.weekday_names):
            raise InvalidArgumentError("locale names must be non-empty")

    def weekdays(self, week_start: WeekStart) -> tuple[str, ...]:
        if week_start is WeekStart.SUNDAY:
            return self.weekday_names[6:] + self.weekday_names[:6]
        return self.weekday_names


BUILTIN_LOCALES = {
    "en": Locale(
        "en",
        ("Jan", "Feb", "Mar", "Apr", "May", "Jun",
         "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"),
        ("Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"),
    ),
    "zh-Hans": Locale(
        "zh-Hans",
        ("一月", "二月", "三月", "四月", "五月", "六月",
         "七月", "八月", "九月", "十月", "十一月", "十二月"),
        ("星期一", "星期二", "星期三", "星期四", "星期五", "星期六", "星期日"),
    ),
}


def load_locale(id_or_path: str | Path) -> Locale:
    """
    Return a built-in locale by id, or read one from a UTF-8 text file.

    The file holds 19 non-empty lines: twelve month names, then seven
    weekday names starting from Monday. Trailing blank lines are ignored.
    """
    key = str(id_or_path)
    if key in BUILTIN_LOCALES:
        return BUILTIN_LOCALES[key]
    path = Path(id_or_path)
    if not path.is_file():
        raise UnknownLocaleError(
            f"unknown locale {key!r} (built-in: {', '.join(BUILTIN_LOCALES)})"
        )
    lines = path.read_text(encoding="utf-8-sig").splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            raise ParseError(f"{path}: line {lineno} is empty")
        if lineno > 19:
            raise ParseError(f"{path}: line {lineno}: expected 19 lines, found {len(lines)}")
    if len(lines) != 19:
        raise ParseError(f"{path}: line {len(lines) + 1}: expected 19 lines, found {len(lines)}")
    names = [line.strip() for line in lines]
    return Locale(path.stem, tuple(names[:12]), tuple(names[12:]))


def reference_lines(geometry: Geometry) -> list[Segment]:
    """
    Minor lines on the left and bottom edge of every cell of every block,
    then four major lines around each block.
    """
    minor: list[Segment] = []
    major: list[Segment] = []
    for m, n in geometry.blocks:
        for cell in geometry.cells(m, n):
            x0, y0 = geometry.origin(cell.m, cell.n, cell.i, cell.j)
            minor.append(Segment(x0, y0, x0, y0 + 1, Weight.MINOR))
            minor.append(Segment(x0, y0, x0 + 1, y0, Weight.MINOR))
        e = geometry.block_extent(m, n)
        major.extend([
            Segment(e.xmin, e.ymin, e.xmin, e.ymax, Weight.MAJOR),
            Segment(e.xmax, e.ymin, e.xmax, e.ymax, Weight.MAJOR),
            Segment(e.xmin, e.ymin, e.xmax, e.ymin, Weight.MAJOR),
            Segment(e.xmin, e.ymax, e.xmax, e.ymax, Weight.MAJOR),
        ])
    return minor + major


def label_positions(geometry: Geometry, locale: Locale) -> list[LabelAnchor]:
    """
    One month label per laid-out month, then the weekday labels.

    Month labels sit at the top-left of their block (monthly) or of the row
    or column where the month begins (weekly, daily). Weekday labels run
    along the bottom of the canvas, centred on the columns of the first
    block; with ``dir="v"`` they run down the left edge instead. The daily
    calendar has no weekday columns and gets no weekday labels.
    """
    if not geometry.blocks:
        return []
    whole = geometry.extent
    vertical = geometry.direction == "v"
    labels: list[LabelAnchor] = []
    for (_, month), addr in geometry.month_cells:
        text = locale.month_names[month - 1]
        block = geometry.block_extent(addr.m, addr.n)
        if geometry.calendar == "monthly":
            x, y = block.xmin, block.ymax
        else:
            x0, y0 = geometry.origin(addr.m, addr.n, addr.i, addr.j)
            x, y = (x0, block.ymax) if vertical else (block.xmin, y0 + 1)
        labels.append(LabelAnchor(x, y, text, "month"))

    if geometry.calendar == "daily":
        return labels
    for j, name in enumerate(locale.weekdays(geometry.week_start), start=1):
        x0, y0 = geometry.origin(1, 1, 1, j)
        if vertical:
            labels.append(LabelAnchor(whole.xmin, y0 + 0.5, name, "weekday"))
        else:
            labels.append(LabelAnchor(x0 + 0.5, whole.ymin, name, "weekday"))
    return labels
