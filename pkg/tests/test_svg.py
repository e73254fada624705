import os
import re
import warnings
import xml.etree.ElementTree as ET
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from calframe import Date, RenderStyle, TidyTable, frame_calendar, render_document, render_svg
from calframe.svg import line_runs
from calframe.synthetic import hourly_counts

NS = {"svg": "http://www.w3.org/2000/svg"}
MATRIX = re.compile(r"matrix\(([^ ]+) 0 0 ([^ ]+) ([^ ]+) ([^ )]+)\)")


def parse(doc: str):
    return ET.fromstring(doc.encode("utf-8"))


def panels(root):
    return root.findall("svg:g[@class='panel']", NS)


def polylines(el):
    return el.findall(".//svg:polyline", NS)


def texts(el, cls):
    return [t.text for t in el.findall(f".//svg:text[@class='{cls}']", NS)]


def test_single_sensor_counts(table_2016):
    root = parse(render_document(frame_calendar(table_2016)))
    assert root.get("version") == "1.1"
    assert len(panels(root)) == 1
    assert len(polylines(root)) == 366
    assert len(texts(root, "month")) == 12
    assert len(texts(root, "weekday")) == 7


def test_element_order(table_2016):
    panel = panels(parse(render_document(frame_calendar(table_2016))))[0]
    assert [g.get("class") for g in panel.findall("svg:g", NS)] == ["grid-minor", "grid-major", "labels", "glyphs"]


def test_point_glyph(table_2016):
    root = parse(render_document(frame_calendar(table_2016), RenderStyle(glyph="point")))
    assert len(root.findall(".//svg:circle", NS)) == len(table_2016)
    assert not polylines(root)


def test_glyph_coordinates_follow_transform(table_2016):
    frame = frame_calendar(table_2016)
    root = parse(render_document(frame))
    glyphs = root.find(".//svg:g[@class='glyphs']", NS)
    s, neg_s, tx, ty = map(float, MATRIX.fullmatch(glyphs.get("transform")).groups())
    assert neg_s == -s
    # rows are emitted day by day in hour order, so they line up with the input
    pts = [tuple(map(float, p.split(","))) for pl in polylines(glyphs) for p in pl.get("points").split()]
    assert len(pts) == len(frame)
    for (x, y), ex, ey in zip(pts, frame.x_cal, frame.y_cal):
        assert abs((tx + s * x) - (tx + s * ex)) < 1e-6
        assert abs((ty - s * y) - (ty - s * ey)) < 1e-6


def test_month_label_pixel_position(table_2016):
    frame = frame_calendar(table_2016)
    root = parse(render_document(frame))
    glyphs = root.find(".//svg:g[@class='glyphs']", NS)
    s, _, tx, ty = map(float, MATRIX.fullmatch(glyphs.get("transform")).groups())
    jan = root.find(".//svg:text[@class='month']", NS)
    e = frame.geometry.block_extent(1, 1)
    assert float(jan.get("x")) == pytest.approx(tx + s * e.xmin, abs=0.01)


def test_line_runs():
    x = np.zeros(6)
    y = np.array([1, np.nan, 2, 3, np.nan, np.nan])
    assert [r.tolist() for r in line_runs(np.arange(6), x, y)] == [[0], [2, 3]]
    assert [r.tolist() for r in line_runs(np.array([5, 4, 3, 2, 1, 0]), x, y)] == [[3, 2], [0]]


def test_unsorted_input_rendered_in_x_order():
    table = TidyTable.from_columns(
        {"d": ["2016-01-01"] * 3, "x": [2, 0, 1], "y": [3, 1, 2]}, date="d", x="x", y="y",
    )
    frame = frame_calendar(table)
    root = parse(render_document(frame))
    (pl,) = polylines(root)
    xs = [float(p.split(",")[0]) for p in pl.get("points").split()]
    assert xs == sorted(xs)


def test_palette_cycles_with_warning():
    recs = hourly_counts(Date(2016, 1, 1), Date(2016, 1, 1), sensors=("a", "b", "c"))
    table = TidyTable.from_records(recs, date="Date", x="Time", y="Count", group="Sensor")
    with pytest.warns(UserWarning, match="cycling"):
        doc = render_document(frame_calendar(table), RenderStyle(palette=("#000000", "#ffffff")))
    colours = [pl.get("stroke") for pl in polylines(parse(doc))]
    assert colours == ["#000000", "#ffffff", "#000000"]


def test_colours_first_appearance(records_3sensors):
    table = TidyTable.from_records(records_3sensors, date="Date", x="Time", y="Count", group="Sensor")
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        root = parse(render_document(frame_calendar(table)))
    strokes = [pl.get("stroke") for pl in polylines(root)]
    assert strokes[0] == RenderStyle().palette[0]
    assert len(set(strokes)) == 3


def test_text_is_escaped():
    table = TidyTable.from_columns(
        {"d": ["2016-01-01"], "x": [0], "y": [1], "f": ["<A&B>"]}, date="d", x="x", y="y", facet="f",
    )
    root = parse(render_document(frame_calendar(table)))
    assert texts(root, "facet") == ["<A&B>"]


def test_render_svg_writes_file(table_2016, tmp_path):
    path = render_svg(frame_calendar(table_2016), RenderStyle(), tmp_path / "cal.svg")
    assert path.read_text(encoding="utf-8").startswith("<?xml")


@pytest.mark.parametrize("calendar", ["monthly", "weekly", "daily"])
@pytest.mark.parametrize("direction", ["h", "v"])
def test_every_layout_renders(table_2016, calendar, direction):
    root = parse(render_document(frame_calendar(table_2016, calendar=calendar, dir=direction, polar=True)))
    assert len(polylines(root)) == 366


@given(st.lists(st.booleans(), min_size=1, max_size=24).filter(any))
def test_polyline_count_follows_internal_gaps(present):
    ys = [float(k) if ok else "" for k, ok in enumerate(present)]
    table = TidyTable.from_columns(
        {"d": ["2016-01-01"] * len(ys), "x": list(range(len(ys))), "y": ys}, date="d", x="x", y="y",
    )
    root = parse(render_document(frame_calendar(table)))
    first = present.index(True)
    last = len(present) - 1 - present[::-1].index(True)
    inner = present[first:last + 1]
    gaps = sum(1 for a, b in zip(inner, inner[1:]) if a and not b)
    assert len(polylines(root)) == 1 + gaps


GOLDEN = Path(__file__).parent / "golden" / "three_days_overlay.svg"


def test_golden_svg():
    recs = [
        {"Sensor": sensor, "Date": day, "Time": hour,
         "Count": "" if (sensor, day, hour) in {("a", "2016-02-29", 3), ("a", "2016-02-29", 4)}
         else (hour * 37 + k * 11 + len(sensor) * 5) % 97}
        for sensor in ("a", "bb")
        for k, day in enumerate(["2016-02-28", "2016-02-29", "2016-03-01"])
        for hour in range(0, 24, 2)
    ]
    table = TidyTable.from_records(recs, date="Date", x="Time", y="Count", group="Sensor")
    doc = render_document(frame_calendar(table), RenderStyle(canvas_width=600, canvas_height=300))
    if os.environ.get("CALFRAME_UPDATE_GOLDEN"):
        GOLDEN.parent.mkdir(exist_ok=True)
        GOLDEN.write_text(doc, encoding="utf-8")
    assert doc == GOLDEN.read_text(encoding="utf-8")
