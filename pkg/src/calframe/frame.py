"""
``frame_calendar``: restructure a tidy table into calendar coordinates.

The pipeline is: rescale x and y into the unit cell, address each date's
cell in the chosen calendar, optionally bend the glyph onto a clock face,
then translate into the cell. Decorations are computed from the same
geometry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .civil import Date, WeekStart, month_after
from .decor import LabelAnchor, Locale, Segment, label_positions, load_locale, reference_lines
from .errors import EmptyInputError, InvalidArgumentError
from .layout import (
    DAYS_PER_WEEK,
    DEFAULT_MARGIN,
    MONTH_BLOCK,
    CellAddress,
    Direction,
    Extent,
    Geometry,
    GridDims,
    MonthFrame,
    cell_position,
    daily_cell,
    month_slot,
    polar_project,
    resolve_grid,
    weekly_cell,
)
from .scaling import ScaleMode, apply_scale
from .tidy import TidyTable

Calendar = Literal["monthly", "weekly", "daily"]
CALENDARS = ("monthly", "weekly", "daily")


@dataclass(frozen=True)
class CalendarSpec:
    """Layout options; defaults follow the R ``frame_calendar`` signature."""

    calendar: Calendar = "monthly"
    dir: Direction = "h"
    sunday: bool = False
    nrow: int | None = None
    ncol: int | None = None
    polar: bool = False
    scale: ScaleMode = ScaleMode.FIXED
    width: float = 0.95
    height: float = 0.95
    margin: float | None = None

    def __post_init__(self) -> None:
        if self.calendar not in CALENDARS:
            raise InvalidArgumentError(f"unknown calendar {self.calendar!r}")
        if self.dir not in ("h", "v"):
            raise InvalidArgumentError(f"dir must be 'h' or 'v', got {self.dir!r}")
        object.__setattr__(self, "scale", ScaleMode(self.scale))
        for name in ("nrow", "ncol"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise InvalidArgumentError(f"{name} must be a positive integer")
        for name in ("width", "height"):
            value = getattr(self, name)
            if not 0 < value <= 1:
                raise InvalidArgumentError(f"{name} must be in (0, 1], got {value}")
        if self.margin is not None and not self.margin >= 0:
            raise InvalidArgumentError("margin must be non-negative")

    @property
    def week_start(self) -> WeekStart:
        return WeekStart.from_flag(self.sunday)

    @property
    def effective_margin(self) -> float:
        return DEFAULT_MARGIN if self.margin is None else float(self.margin)


@dataclass
class LayoutFrame:
    """The input table with calendar coordinates, cell addresses and decorations."""

    table: TidyTable
    spec: CalendarSpec
    geometry: Geometry
    months: list[tuple[int, int]]
    h: np.ndarray = field(repr=False)
    c: np.ndarray = field(repr=False)
    m: np.ndarray = field(repr=False)
    n: np.ndarray = field(repr=False)
    i: np.ndarray = field(repr=False)
    j: np.ndarray = field(repr=False)
    x_cal: np.ndarray = field(repr=False)
    y_cal: np.ndarray = field(repr=False)
    segments: list[Segment] = field(repr=False)
    labels: list[LabelAnchor] = field(repr=False)

    def __len__(self) -> int:
        return len(self.table)

    @property
    def extent(self) -> Extent:
        return self.geometry.extent

    @property
    def n_cells(self) -> int:
        """Number of distinct cells holding at least one row."""
        return len(set(zip(self.m.tolist(), self.n.tolist(), self.i.tolist(), self.j.tolist())))

    def cell_of(self, row: int) -> CellAddress:
        return CellAddress(int(self.m[row]), int(self.n[row]), int(self.i[row]), int(self.j[row]))

    def cell_origin(self, row: int) -> tuple[float, float]:
        return self.geometry.origin(self.m[row], self.n[row], self.i[row], self.j[row])

    def relabel(self, locale: Locale) -> list[LabelAnchor]:
        return label_positions(self.geometry, locale)


def span_months(dates: list[Date]) -> list[tuple[int, int]]:
    """Every (year, month) from the earliest to the latest date, gaps included."""
    if not dates:
        return []
    lo, hi = min(dates), max(dates)
    out = [(lo.year, lo.month)]
    while out[-1] != (hi.year, hi.month):
        out.append(month_after(*out[-1]))
    return out


def _monthly(table: TidyTable, spec: CalendarSpec, months: list[tuple[int, int]]):
    nrow, ncol = resolve_grid(len(months), spec.nrow, spec.ncol)
    dims = GridDims(nrow, ncol, spec.effective_margin)
    ws = spec.week_start
    slots = {ym: month_slot(seq, dims, spec.dir) for seq, ym in enumerate(months, start=1)}
    frames = {ym: MonthFrame.of(*ym, ws) for ym in months}

    n_rows = len(table)
    m = np.empty(n_rows, dtype=np.int64)
    n = np.empty(n_rows, dtype=np.int64)
    g = np.empty(n_rows, dtype=np.int64)
    for idx, d in enumerate(table.dates):
        ym = (d.year, d.month)
        m[idx], n[idx] = slots[ym]
        g[idx] = frames[ym].slot(d.day)
    i, j = cell_position(g)
    geometry = Geometry(
        "monthly", dims, spec.dir, MONTH_BLOCK, ws,
        blocks=tuple(slots[ym] for ym in months),
        month_cells=tuple((ym, CellAddress(*slots[ym], 1, 1)) for ym in months),
    )
    return geometry, m, n, np.asarray(i), np.asarray(j)


def _single_block(table: TidyTable, spec: CalendarSpec, months: list[tuple[int, int]]):
    ws = spec.week_start
    start = min(table.dates)
    if spec.calendar == "weekly":
        def locate(d: Date) -> tuple[int, int]:
            return weekly_cell(d, ws, start)
    else:
        def locate(d: Date) -> tuple[int, int]:
            return daily_cell(d, start)

    cache: dict[Date, tuple[int, int]] = {}
    n_rows = len(table)
    i = np.empty(n_rows, dtype=np.int64)
    j = np.empty(n_rows, dtype=np.int64)
    for idx, d in enumerate(table.dates):
        cell = cache.get(d)
        if cell is None:
            cell = cache[d] = locate(d)
        i[idx], j[idx] = cell

    firsts = [start if ym == (start.year, start.month) else Date(*ym, 1) for ym in months]
    if spec.calendar == "weekly":
        shape = (locate(max(table.dates))[0], DAYS_PER_WEEK)
    else:
        shape = (len(months), 31)
    geometry = Geometry(
        spec.calendar, GridDims(1, 1, spec.effective_margin), spec.dir, shape, ws,
        blocks=((1, 1),),
        month_cells=tuple((ym, CellAddress(1, 1, *locate(first)))
                          for ym, first in zip(months, firsts)),
    )
    ones = np.ones(n_rows, dtype=np.int64)
    return geometry, ones, ones.copy(), i, j


def frame_calendar(table: TidyTable, spec: CalendarSpec | None = None,
                   locale: Locale | str = "en", **options) -> LayoutFrame:
    """
    Compute calendar coordinates ``x_cal`` / ``y_cal`` for every row of ``table``.

    Options may be given as a ``CalendarSpec`` or as keyword arguments
    (``calendar="weekly", polar=True``...). Rows keep their input order; a
    missing y gives a missing ``y_cal`` (and ``x_cal`` too under ``polar``).
    """
    if spec is None:
        spec = CalendarSpec(**options)
    elif options:
        raise TypeError("pass either a CalendarSpec or keyword options, not both")
    if isinstance(locale, str):
        locale = load_locale(locale)
    if len(table) == 0:
        raise EmptyInputError("input table has no rows")

    months = span_months(table.dates)
    if spec.calendar == "monthly":
        geometry, m, n, i, j = _monthly(table, spec, months)
    else:
        geometry, m, n, i, j = _single_block(table, spec, months)

    h, c = apply_scale(table, spec.scale)
    u, v = polar_project(h, c) if spec.polar else (h, c)
    x0, y0 = geometry.origin(m, n, i, j)
    x_cal = x0 + u * spec.width
    y_cal = y0 + v * spec.height

    return LayoutFrame(
        table=table, spec=spec, geometry=geometry, months=months,
        h=h, c=c, m=m, n=n, i=i, j=j, x_cal=x_cal, y_cal=y_cal,
        segments=reference_lines(geometry),
        labels=label_positions(geometry, locale),
    )

