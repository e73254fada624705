"""Min-max rescaling of glyph data into the unit cell, globally or per calendar cohort."""

from __future__ import annotations

import enum
from typing import Sequence

import numpy as np

from .civil import WeekStart, day_of_week
from .errors import EmptyDomainError
from .tidy import TidyTable


class ScaleMode(str, enum.Enum):
    FIXED = "fixed"
    FREE = "free"
    FREE_WDAY = "free_wday"
    FREE_MDAY = "free_mday"


def rescale01(values: Sequence[float | None]) -> np.ndarray:
    """
    Map values onto [0, 1] by their min and max.

    Missing values (None or NaN) stay NaN. A constant input maps to 0.5.
    """
    arr = np.array([np.nan if v is None else v for v in values], dtype=float)
    present = ~np.isnan(arr)
    if not present.any():
        raise EmptyDomainError("cannot rescale: no non-missing values")
    lo = arr[present].min()
    hi = arr[present].max()
    out = np.full_like(arr, np.nan)
    if hi == lo:
        out[present] = 0.5
    else:
        out[present] = (arr[present] - lo) / (hi - lo)
    return out


def scale_keys(table: TidyTable, mode: ScaleMode | str) -> np.ndarray:
    """Integer cohort key per row for the given mode (before facet partitioning)."""
    mode = ScaleMode(mode)
    if mode is ScaleMode.FIXED:
        return np.zeros(len(table), dtype=np.int64)
    if mode is ScaleMode.FREE:
        return np.array([d.ordinal() for d in table.dates], dtype=np.int64)
    if mode is ScaleMode.FREE_WDAY:
        return np.array([day_of_week(d, WeekStart.MONDAY) for d in table.dates], dtype=np.int64)
    return np.array([d.day for d in table.dates], dtype=np.int64)


def _partition(keys: np.ndarray) -> list[np.ndarray]:
    _, inverse = np.unique(keys, return_inverse=True)
    order = np.argsort(inverse, kind="stable")
    bounds = np.flatnonzero(np.diff(inverse[order])) + 1
    return np.split(order, bounds)


def _rescale_groups(values: np.ndarray, keys: np.ndarray) -> np.ndarray:
    out = np.full(len(values), np.nan)
    for idx in _partition(keys):
        chunk = values[idx]
        if np.isnan(chunk).all():
            continue
        out[idx] = rescale01(chunk)
    return out


def apply_scale(table: TidyTable, mode: ScaleMode | str = ScaleMode.FIXED) -> tuple[np.ndarray, np.ndarray]:
    """
    Return ``(h, c)``: x scaled over the whole table, y scaled within cohorts.

    Cohorts are the whole table (fixed), one date (free), one weekday
    (free_wday) or one day of the month (free_mday). When the table has a
    facet column each facet is scaled on its own, as its own calendar.
    A cohort whose y values are all missing keeps missing c.
    """
    if len(table) == 0:
        raise EmptyDomainError("cannot rescale an empty table")
    if np.isnan(table.y).all():
        raise EmptyDomainError("y column has no non-missing values")
    if table.facet is None:
        facet_keys = np.zeros(len(table), dtype=np.int64)
    else:
        _, facet_keys = np.unique(np.array(table.facet, dtype=object), return_inverse=True)
    h = _rescale_groups(table.x, facet_keys)
    _, cohort = np.unique(scale_keys(table, mode), return_inverse=True)
    # combine facet and cohort into a single key without collisions
    c = _rescale_groups(table.y, facet_keys * (cohort.max() + 1) + cohort)
    return h, c
