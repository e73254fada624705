"""
Calendar grid algebra.

A day occupies a unit cell. Cells are grouped into blocks (a 5 x 7 month in
the monthly calendar, a single tall block for the weekly and daily calendars)
and blocks are arranged in an ``nrow`` x ``ncol`` macro grid separated by a
margin ``b``. Coordinates are y-up: later weeks and later block rows sit lower
on the canvas, so y is negative below the top edge.

Functions taking integer cell indices also accept numpy integer arrays; the
arithmetic is written once and shared by the projection, the inversion and the
decoration geometry so that cell edges agree exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .civil import Date, WeekStart, day_of_week, days_in_month
from .errors import CapacityError, InvalidArgumentError

Direction = Literal["h", "v"]

WEEKS_PER_MONTH = 5
DAYS_PER_WEEK = 7
MONTH_CELLS = WEEKS_PER_MONTH * DAYS_PER_WEEK
MONTH_BLOCK = (WEEKS_PER_MONTH, DAYS_PER_WEEK)

DEFAULT_MARGIN = 0.3


@dataclass(frozen=True)
class MonthFrame:
    k: int  # weekday of the 1st under the active week start
    d: int  # number of days

    @classmethod
    def of(cls, year: int, month: int, week_start: WeekStart) -> "MonthFrame":
        return cls(day_of_week(Date(year, month, 1), week_start), days_in_month(year, month))

    def slot(self, day: int) -> int:
        if not 1 <= day <= self.d:
            raise InvalidArgumentError(f"day {day} outside month of {self.d} days")
        return self.k + day - 1


@dataclass(frozen=True)
class CellAddress:
    m: int
    n: int
    i: int
    j: int


@dataclass(frozen=True)
class GridDims:
    nrow: int
    ncol: int
    margin: float = DEFAULT_MARGIN

    def __post_init__(self) -> None:
        if self.nrow < 1 or self.ncol < 1:
            raise InvalidArgumentError("grid dimensions must be positive")
        if not self.margin >= 0:
            raise InvalidArgumentError("margin must be non-negative")

    @property
    def capacity(self) -> int:
        return self.nrow * self.ncol


@dataclass(frozen=True)
class ScaledPoint:
    h: float
    c: float


def _mod_star(value, modulus: int):
    r = value % modulus
    return np.where(r == 0, modulus, r) if isinstance(r, np.ndarray) else (r or modulus)


def cell_position(g):
    """
    Week row ``i`` and weekday column ``j`` for month slot ``g``.

    A zero residue maps to the modulus itself, so ``g = 35`` is (5, 7). Slots
    36 and 37 (sixth-week days) wrap to the top row.
    """
    r = _mod_star(g, MONTH_CELLS)
    i = -(-r // DAYS_PER_WEEK)  # ceiling division
    j = _mod_star(g, DAYS_PER_WEEK)
    return i, j


def month_slot(seq: int, dims: GridDims, direction: Direction = "h") -> tuple[int, int]:
    """(m, n) of the ``seq``-th month (1-based): row-major for "h", column-major for "v"."""
    if not 1 <= seq <= dims.capacity:
        raise CapacityError(
            f"month {seq} does not fit a {dims.nrow} x {dims.ncol} grid"
        )
    q, r = divmod(seq - 1, dims.ncol if direction == "h" else dims.nrow)
    if direction == "h":
        return q + 1, r + 1
    return r + 1, q + 1


def auto_grid(n_months: int) -> tuple[int, int]:
    if n_months < 1:
        raise InvalidArgumentError("need at least one month")
    ncol = math.isqrt(n_months - 1) + 1
    return -(-n_months // ncol), ncol


def resolve_grid(
    n_months: int, nrow: int | None = None, ncol: int | None = None
) -> tuple[int, int]:
    """Fill in whichever of nrow/ncol is missing and check capacity."""
    if nrow is None and ncol is None:
        return auto_grid(n_months)
    if nrow is None:
        nrow = -(-n_months // ncol)
    elif ncol is None:
        ncol = -(-n_months // nrow)
    if nrow * ncol < n_months:
        raise CapacityError(
            f"{nrow} x {ncol} grid cannot hold {n_months} months"
        )
    return nrow, ncol


def cell_origin(m, n, i, j, dims: GridDims, direction: Direction = "h",
                block_shape: tuple[int, int] = MONTH_BLOCK):
    """Bottom-left corner of cell (i, j) in block (m, n)."""
    rows, cols = block_shape
    b = dims.margin
    if direction == "h":
        x0 = j + (n - 1) * cols + (n - 1) * b
        y0 = -(i + (m - 1) * rows + (m - 1) * b)
    else:
        x0 = i + (n - 1) * rows + (n - 1) * b
        y0 = -(j + (m - 1) * cols + (m - 1) * b)
    return x0, y0


def project_point(addr: CellAddress, p: ScaledPoint, dims: GridDims,
                  direction: Direction = "h", width: float = 0.95,
                  height: float = 0.95,
                  block_shape: tuple[int, int] = MONTH_BLOCK) -> tuple[float, float]:
    x0, y0 = cell_origin(addr.m, addr.n, addr.i, addr.j, dims, direction, block_shape)
    return x0 + p.h * width, y0 + p.c * height


def unproject(x: float, y: float, dims: GridDims, direction: Direction = "h",
              width: float = 0.95, height: float = 0.95,
              block_shape: tuple[int, int] = MONTH_BLOCK,
              eps: float = 1e-9) -> tuple[CellAddress, ScaledPoint]:
    """
    Recover the cell address and scaled point behind a projected coordinate.

    Exact for ``width, height < 1``. At 1 a point on the far cell edge is
    shared with the neighbouring cell and the answer is ambiguous.
    """
    rows, cols = block_shape
    b = dims.margin
    across, down = (cols, rows) if direction == "h" else (rows, cols)

    def split_across(t: float, span: int) -> tuple[int, int]:
        # t - 1 lies in [block*(span+b) + cell, ... + cell + width]
        block = math.floor((t - 1) / (span + b) + eps)
        local = (t - 1) - block * (span + b)
        return block + 1, min(max(math.floor(local + eps), 0), span - 1) + 1

    def split_down(t: float, span: int) -> tuple[int, int]:
        # t = -y lies in (block*(span+b) + cell - 1, block*(span+b) + cell]
        block = math.floor((t - eps) / (span + b))
        local = t - block * (span + b)
        return block + 1, min(max(math.ceil(local - eps), 1), span)

    n, col = split_across(x, across)
    m, row = split_down(-y, down)
    if direction == "h":
        i, j = row, col
    else:
        i, j = col, row
    addr = CellAddress(m, n, i, j)
    x0, y0 = cell_origin(m, n, i, j, dims, direction, block_shape)
    return addr, ScaledPoint((x - x0) / width, (y - y0) / height)


def polar_project(h, c):
    """
    Map a scaled point onto a clock face inside the unit cell.

    Time of day runs clockwise from 12 o'clock; the value is the radius,
    reaching the cell edge (0.5) at ``c = 1``.
    """
    theta = np.pi / 2 - 2 * np.pi * np.asarray(h, dtype=float)
    r = np.asarray(c, dtype=float) / 2
    u = 0.5 + r * np.cos(theta)
    v = 0.5 + r * np.sin(theta)
    if np.ndim(u) == 0:
        return float(u), float(v)
    return u, v


def weekly_cell(date: Date, week_start: WeekStart, span_start: Date) -> tuple[int, int]:
    """(row, col): one row per week counted from the span start, one column per weekday."""
    if date < span_start:
        raise InvalidArgumentError(f"{date} precedes span start {span_start}")
    k0 = day_of_week(span_start, week_start)
    row = 1 + (date.ordinal() - span_start.ordinal() + k0 - 1) // DAYS_PER_WEEK
    return row, day_of_week(date, week_start)


def daily_cell(date: Date, span_start: Date) -> tuple[int, int]:
    """(row, col): one row per month since the span start, one column per day of month."""
    row = (date.year - span_start.year) * 12 + date.month - span_start.month + 1
    if row < 1:
        raise InvalidArgumentError(f"{date} precedes span start {span_start}")
    return row, date.day


@dataclass(frozen=True)
class Extent:
    xmin: float
    xmax: float
    ymin: float
    ymax: float

    @property
    def width(self) -> float:
        return self.xmax - self.xmin

    @property
    def height(self) -> float:
        return self.ymax - self.ymin

    def union(self, other: "Extent") -> "Extent":
        return Extent(min(self.xmin, other.xmin), max(self.xmax, other.xmax),
                      min(self.ymin, other.ymin), max(self.ymax, other.ymax))


@dataclass(frozen=True)
class Geometry:
    """
    Everything needed to place cells and decorations for one layout run.

    ``blocks`` lists the (m, n) of every allocated block. ``month_cells``
    pairs each (year, month) in the span with an address: for the monthly
    calendar the month's block (i = j = 1), otherwise the cell of the month's
    first day in the span.
    """

    calendar: str
    dims: GridDims
    direction: Direction
    block_shape: tuple[int, int]
    week_start: WeekStart
    blocks: tuple[tuple[int, int], ...]
    month_cells: tuple[tuple[tuple[int, int], CellAddress], ...]

    def origin(self, m, n, i, j):
        return cell_origin(m, n, i, j, self.dims, self.direction, self.block_shape)

    def cells(self, m: int, n: int):
        rows, cols = self.block_shape
        for i in range(1, rows + 1):
            for j in range(1, cols + 1):
                yield CellAddress(m, n, i, j)

    def block_extent(self, m: int, n: int) -> Extent:
        rows, cols = self.block_shape
        x0, y0 = self.origin(m, n, 1, 1)
        x1, y1 = self.origin(m, n, rows, cols)
        return Extent(min(x0, x1), max(x0, x1) + 1, min(y0, y1), max(y0, y1) + 1)

    @property
    def extent(self) -> Extent:
        out = None
        for m, n in self.blocks:
            e = self.block_extent(m, n)
            out = e if out is None else out.union(e)
        if out is None:
            return Extent(0.0, 0.0, 0.0, 0.0)
        return out
