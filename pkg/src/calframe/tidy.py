"""Tidy input tables: CSV ingestion with column-role mapping, and coordinate export."""

from __future__ import annotations

import csv
import io
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING, Any, Iterable, Mapping, Sequence

import numpy as np

from .civil import Date, parse_date
from .errors import ParseError, SchemaError

if TYPE_CHECKING:
    from .frame import LayoutFrame

ROLES = ("date", "x", "y", "group", "facet")
REQUIRED_ROLES = ("date", "x", "y")


def _is_missing(value: Any) -> bool:
    if value is None:
        return True
    if isinstance(value, str):
        return value.strip() == ""
    return isinstance(value, float) and math.isnan(value)


def _parse_number(value: Any, role: str, row: int) -> float:
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    try:
        out = float(value)
    except (TypeError, ValueError):
        raise ParseError(f"{role} value {value!r} is not a number", row) from None
    if math.isinf(out):
        raise ParseError(f"{role} value {value!r} is not finite", row)
    return out


def _as_text(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return "" if math.isnan(value) else repr(value)
    return str(value)


@dataclass
class TidyTable:
    """
    Column-oriented observations with the date / x / y (and optional group /
    facet) roles bound to column names.

    ``columns`` keeps every input column verbatim so it can be written back
    out unchanged; the typed role views live in ``dates``, ``x``, ``y``,
    ``group`` and ``facet``. Missing ``y`` is NaN.
    """

    columns: dict[str, list[Any]]
    roles: dict[str, str]
    dates: list[Date] = field(repr=False)
    x: np.ndarray = field(repr=False)
    y: np.ndarray = field(repr=False)
    group: list[str] | None = field(default=None, repr=False)
    facet: list[str] | None = field(default=None, repr=False)

    @classmethod
    def from_columns(cls, columns: Mapping[str, Sequence[Any]], *, date: str, x: str,
                     y: str, group: str | None = None,
                     facet: str | None = None) -> "TidyTable":
        cols = {name: list(values) for name, values in columns.items()}
        lengths = {len(v) for v in cols.values()}
        if len(lengths) > 1:
            raise SchemaError("columns have unequal lengths")
        roles = {"date": date, "x": x, "y": y}
        if group is not None:
            roles["group"] = group
        if facet is not None:
            roles["facet"] = facet
        for role, name in roles.items():
            if name not in cols:
                raise SchemaError(f"{role} column {name!r} not found")

        cache: dict[Any, Date] = {}
        dates = []
        xs = np.empty(len(cols[date]))
        ys = np.empty(len(cols[date]))
        for row, (dv, xv, yv) in enumerate(zip(cols[date], cols[x], cols[y]), start=1):
            if isinstance(dv, Date):
                d = dv
            else:
                d = cache.get(dv)
                if d is None:
                    if _is_missing(dv):
                        raise ParseError("missing date", row)
                    d = cache[dv] = parse_date(str(dv), row)
            dates.append(d)
            if _is_missing(xv):
                raise ParseError("missing x value", row)
            xs[row - 1] = _parse_number(xv, "x", row)
            ys[row - 1] = math.nan if _is_missing(yv) else _parse_number(yv, "y", row)

        def labels(name: str | None) -> list[str] | None:
            return None if name is None else [_as_text(v) for v in cols[name]]

        return cls(cols, roles, dates, xs, ys, labels(group), labels(facet))

    @classmethod
    def from_records(cls, records: Iterable[Mapping[str, Any]], **roles: str | None) -> "TidyTable":
        records = list(records)
        names: dict[str, None] = {}
        for rec in records:
            names.update(dict.fromkeys(rec))
        columns = {n: [rec.get(n) for rec in records] for n in names}
        if not records:
            columns = {name: [] for name in roles.values() if name is not None}
        return cls.from_columns(columns, **roles)

    def __len__(self) -> int:
        return len(self.dates)

    @property
    def column_names(self) -> list[str]:
        return list(self.columns)


def read_csv(path: str | Path, role_map: Mapping[str, str | None]) -> TidyTable:
    """
    Read a UTF-8 CSV with a header row and bind column roles.

    ``role_map`` maps role ("date", "x", "y", "group", "facet") to a column
    name. Empty fields are kept as empty strings; an empty ``y`` is missing.
    """
    unknown = set(role_map) - set(ROLES)
    if unknown:
        raise SchemaError(f"unknown role(s): {', '.join(sorted(unknown))}")
    for role in REQUIRED_ROLES:
        if not role_map.get(role):
            raise SchemaError(f"no column mapped to the {role} role")

    with open(path, newline="", encoding="utf-8-sig") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file, header row required") from None
        columns: dict[str, list[str]] = {name: [] for name in header}
        if len(columns) != len(header):
            raise SchemaError(f"{path}: duplicate column names in header")
        for row, record in enumerate(reader, start=1):
            if not record:
                continue
            if len(record) != len(header):
                raise ParseError(
                    f"expected {len(header)} fields, found {len(record)}", row
                )
            for name, value in zip(header, record):
                columns[name].append(value)

    return TidyTable.from_columns(
        columns,
        date=role_map["date"], x=role_map["x"], y=role_map["y"],
        group=role_map.get("group"), facet=role_map.get("facet"),
    )


def format_number(value: float) -> str:
    return "" if math.isnan(value) else f"{value:.12g}"


def write_coords_csv(frame: "LayoutFrame", path: str | Path) -> None:
    """Write the input columns plus ``x_cal`` and ``y_cal``; ``"-"`` writes to stdout."""
    table = frame.table
    names = table.column_names
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([*names, "x_cal", "y_cal"])
    cols = [table.columns[n] for n in names]
    for idx in range(len(table)):
        writer.writerow([
            *(_as_text(col[idx]) for col in cols),
            format_number(frame.x_cal[idx]),
            format_number(frame.y_cal[idx]),
        ])
    if str(path) == "-":
        sys.stdout.write(buf.getvalue())
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
