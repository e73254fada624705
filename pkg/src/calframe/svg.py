"""
Deterministic SVG rendering of a LayoutFrame.

Glyphs and grid lines are written in calendar units inside a group whose
``transform="matrix(s 0 0 -s tx ty)"`` maps them to pixels (and flips y);
labels are placed in pixel space so text is not mirrored. Element order per
panel is fixed: minor grid, major grid, labels, glyphs.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Literal
from xml.sax.saxutils import escape

import numpy as np

from .decor import Weight
from .frame import LayoutFrame
from .layout import Extent, auto_grid

DEFAULT_PALETTE = (
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a",
    "#66a61e", "#e6ab02", "#a6761d", "#666666",
)


@dataclass(frozen=True)
class RenderStyle:
    glyph: Literal["line", "point"] = "line"
    palette: tuple[str, ...] = DEFAULT_PALETTE
    stroke_width: float = 1.0
    point_radius: float = 1.2
    canvas_width: int = 1200
    canvas_height: int = 900
    background: str = "#ffffff"
    minor_color: str = "#d9d9d9"
    major_color: str = "#7f7f7f"
    text_color: str = "#333333"
    font_size: float = 11.0
    font_family: str = "sans-serif"

    def __post_init__(self) -> None:
        if self.glyph not in ("line", "point"):
            raise ValueError(f"glyph must be 'line' or 'point', got {self.glyph!r}")
        if not self.palette:
            raise ValueError("palette must hold at least one colour")
        if self.canvas_width <= 0 or self.canvas_height <= 0:
            raise ValueError("canvas size must be positive")


@dataclass(frozen=True)
class PanelTransform:
    """Affine map from calendar units to pixels: (tx + s*x, ty - s*y)."""

    s: float
    tx: float
    ty: float

    def apply(self, x: float, y: float) -> tuple[float, float]:
        return self.tx + self.s * x, self.ty - self.s * y

    def invert(self, px: float, py: float) -> tuple[float, float]:
        return (px - self.tx) / self.s, (self.ty - py) / self.s

    @property
    def attr(self) -> str:
        return f"matrix({num(self.s)} 0 0 {num(-self.s)} {num(self.tx)} {num(self.ty)})"


def num(v: float) -> str:
    """Calendar-unit number: 12 significant digits, matching the coords CSV."""
    out = f"{v:.12g}"
    return "0" if out == "-0" else out


def px(v: float) -> str:
    out = f"{v:.2f}".rstrip("0").rstrip(".")
    return "0" if out in ("-0", "") else out


def first_appearance(values: list[str]) -> list[str]:
    return list(dict.fromkeys(values))


def group_colours(frame: LayoutFrame, palette: tuple[str, ...]) -> dict[str | None, str]:
    groups = frame.table.group
    if groups is None:
        return {None: palette[0]}
    order = first_appearance(groups)
    if len(order) > len(palette):
        warnings.warn(
            f"{len(order)} groups but only {len(palette)} palette colours; cycling",
            stacklevel=3,
        )
    return {g: palette[k % len(palette)] for k, g in enumerate(order)}


def _panel_transform(extent: Extent, box: tuple[float, float, float, float]) -> PanelTransform:
    left, top, width, height = box
    ew = extent.width or 1.0
    eh = extent.height or 1.0
    s = min(width / ew, height / eh)
    ox = left + (width - s * ew) / 2
    oy = top + (height - s * eh) / 2
    return PanelTransform(s, ox - s * extent.xmin, oy + s * extent.ymax)


def line_runs(order: np.ndarray, x: np.ndarray, y: np.ndarray) -> list[np.ndarray]:
    """Split row indices (already ordered) into runs without missing coordinates."""
    ok = ~(np.isnan(x[order]) | np.isnan(y[order]))
    runs = []
    start = None
    for pos, good in enumerate(ok):
        if good and start is None:
            start = pos
        elif not good and start is not None:
            runs.append(order[start:pos])
            start = None
    if start is not None:
        runs.append(order[start:])
    return runs


def _glyph_elements(frame: LayoutFrame, rows: np.ndarray, style: RenderStyle,
                    colours: dict[str | None, str], s: float) -> list[str]:
    table = frame.table
    groups = table.group
    xs, ys = frame.x_cal, frame.y_cal
    out: list[str] = []
    if style.glyph == "point":
        r = num(style.point_radius / s)
        for idx in rows:
            if math.isnan(xs[idx]) or math.isnan(ys[idx]):
                continue
            colour = colours[None if groups is None else groups[idx]]
            out.append(f'<circle cx="{num(xs[idx])}" cy="{num(ys[idx])}" r="{r}" fill="{colour}"/>')
        return out

    series: dict[tuple, list[int]] = {}
    for idx in rows.tolist():
        key = (None if groups is None else groups[idx], table.dates[idx])
        series.setdefault(key, []).append(idx)
    group_rank = {g: k for k, g in enumerate(colours)}
    for key in sorted(series, key=lambda k: (group_rank[k[0]], k[1])):
        idx = np.array(series[key])
        order = idx[np.argsort(table.x[idx], kind="stable")]
        for run in line_runs(order, xs, ys):
            points = " ".join(f"{num(xs[k])},{num(ys[k])}" for k in run)
            out.append(f'<polyline points="{points}" stroke="{colours[key[0]]}"/>')
    return out


def render_document(frame: LayoutFrame, style: RenderStyle | None = None) -> str:
    """Return the SVG document as a string."""
    style = style or RenderStyle()
    table = frame.table
    facets = [None] if table.facet is None else first_appearance(table.facet)
    colours = group_colours(frame, style.palette)
    prows, pcols = auto_grid(len(facets))
    pw = style.canvas_width / pcols
    ph = style.canvas_height / prows
    fs = style.font_size
    side_labels = frame.spec.dir == "v" or frame.spec.calendar != "monthly"
    pad_left = 8 + (fs * 4.5 if side_labels else 0)
    pad_top = fs * 1.8 + (fs * 1.6 if table.facet is not None else 0)
    pad_bottom = fs * 2.0
    extent = frame.extent

    facet_arr = None if table.facet is None else np.array(table.facet, dtype=object)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{style.canvas_width}" height="{style.canvas_height}" '
        f'viewBox="0 0 {style.canvas_width} {style.canvas_height}">',
        f'<rect x="0" y="0" width="{style.canvas_width}" height="{style.canvas_height}" '
        f'fill="{style.background}"/>',
    ]
    for k, facet in enumerate(facets):
        r, c = divmod(k, pcols)
        left, top = c * pw, r * ph
        box = (left + pad_left, top + pad_top, pw - pad_left - 8, ph - pad_top - pad_bottom)
        t = _panel_transform(extent, box)
        rows = (np.arange(len(table)) if facet_arr is None
                else np.flatnonzero(facet_arr == facet))

        lines.append(f'<g class="panel" id="panel-{k + 1}">')
        if facet is not None:
            lines.append(
                f'<text class="facet" x="{px(left + pw / 2)}" y="{px(top + fs * 1.3)}" '
                f'text-anchor="middle" font-family="{style.font_family}" '
                f'font-size="{px(fs * 1.1)}" fill="{style.text_color}">{escape(facet)}</text>'
            )
        for weight, colour, factor in ((Weight.MINOR, style.minor_color, 0.5),
                                       (Weight.MAJOR, style.major_color, 1.2)):
            lines.append(
                f'<g class="grid-{weight.value}" transform="{t.attr}" stroke="{colour}" '
                f'stroke-width="{num(factor / t.s)}" fill="none">'
            )
            for seg in frame.segments:
                if seg.weight is weight:
                    lines.append(
                        f'<line x1="{num(seg.x1)}" y1="{num(seg.y1)}" '
                        f'x2="{num(seg.x2)}" y2="{num(seg.y2)}"/>'
                    )
            lines.append("</g>")

        lines.append(
            f'<g class="labels" font-family="{style.font_family}" '
            f'font-size="{px(fs)}" fill="{style.text_color}">'
        )
        for label in frame.labels:
            lx, ly = t.apply(label.x, label.y)
            if label.kind == "month" and side_labels and frame.spec.dir == "h":
                attrs = f'x="{px(lx - 4)}" y="{px(ly + fs)}" text-anchor="end"'
            elif label.kind == "month":
                attrs = f'x="{px(lx)}" y="{px(ly - 4)}" text-anchor="start"'
            elif frame.spec.dir == "v":
                attrs = f'x="{px(lx - 4)}" y="{px(ly + fs / 3)}" text-anchor="end"'
            else:
                attrs = f'x="{px(lx)}" y="{px(ly + fs * 1.2)}" text-anchor="middle"'
            lines.append(f'<text class="{label.kind}" {attrs}>{escape(label.text)}</text>')
        lines.append("</g>")

        glyph_attrs = ('fill="none" stroke-linejoin="round" '
                       f'stroke-width="{num(style.stroke_width / t.s)}"'
                       if style.glyph == "line" else 'stroke="none"')
        lines.append(f'<g class="glyphs" transform="{t.attr}" {glyph_attrs}>')
        lines.extend(_glyph_elements(frame, rows, style, colours, t.s))
        lines.append("</g>")
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_svg(frame: LayoutFrame, style: RenderStyle | None = None,
               path: str | Path = "calendar.svg") -> Path:
    path = Path(path)
    path.write_text(render_document(frame, style), encoding="utf-8")
    return path
