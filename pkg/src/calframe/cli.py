"""Command-line front end: ``calframe coords`` and ``calframe render``."""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence

from .errors import CalframeError
from .frame import CALENDARS, CalendarSpec, LayoutFrame, frame_calendar
from .scaling import ScaleMode
from .svg import RenderStyle, render_svg
from .tidy import read_csv, write_coords_csv

log = logging.getLogger("calframe")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid positive integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"invalid positive integer: {text!r}")
    return value


def _fraction(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number: {text!r}") from None
    if not 0 < value <= 1:
        raise argparse.ArgumentTypeError(f"{text!r} is not in (0, 1]")
    return value


def _nonnegative(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number: {text!r}") from None
    if not value >= 0:
        raise argparse.ArgumentTypeError(f"{text!r} is negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="calframe",
        description="Lay out sub-daily tidy data on a calendar grid.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="{coords,render}")

    common = argparse.ArgumentParser(add_help=False)
    io = common.add_argument_group("input/output")
    io.add_argument("--input", "-i", required=True, help="input CSV with a header row")
    io.add_argument("--output", "-o", required=True,
                    help="output path (coords: '-' writes CSV to stdout)")
    roles = common.add_argument_group("column roles")
    roles.add_argument("--date", required=True, help="date column (YYYY-MM-DD)")
    roles.add_argument("--x", required=True, help="within-cell horizontal variable, e.g. hour")
    roles.add_argument("--y", required=True, help="within-cell vertical variable, e.g. count")
    roles.add_argument("--group", help="column whose values are overlaid in colour")
    roles.add_argument("--facet", help="column whose values get separate panels")
    layout = common.add_argument_group("layout")
    layout.add_argument("--calendar", choices=CALENDARS, default="monthly")
    layout.add_argument("--dir", choices=("h", "v"), default="h")
    layout.add_argument("--sunday", action="store_true", help="weeks start on Sunday")
    layout.add_argument("--nrow", type=_positive_int)
    layout.add_argument("--ncol", type=_positive_int)
    layout.add_argument("--polar", action="store_true", help="draw glyphs as star plots")
    layout.add_argument("--scale", choices=[m.value for m in ScaleMode], default="fixed")
    layout.add_argument("--width", type=_fraction, default=0.95)
    layout.add_argument("--height", type=_fraction, default=0.95)
    layout.add_argument("--margin", type=_nonnegative,
                        help="gap between month blocks in cell units (default 0.3)")
    common.add_argument("--locale", default="en",
                        help="label language: 'en', 'zh-Hans' or a locale file path")
    common.add_argument("--quiet", "-q", action="store_true", help="suppress the summary line")

    sub.add_parser("coords", parents=[common], help="write input columns plus x_cal, y_cal")
    render = sub.add_parser("render", parents=[common], help="write an SVG calendar plot")
    style = render.add_argument_group("style")
    style.add_argument("--glyph", choices=("line", "point"), default="line")
    style.add_argument("--canvas-width", type=_positive_int, default=1200)
    style.add_argument("--canvas-height", type=_positive_int, default=900)
    return parser


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def spec_from_args(args: argparse.Namespace) -> CalendarSpec:
    return CalendarSpec(
        calendar=args.calendar, dir=args.dir, sunday=args.sunday,
        nrow=args.nrow, ncol=args.ncol, polar=args.polar, scale=args.scale,
        width=args.width, height=args.height, margin=args.margin,
    )


def _summary(frame: LayoutFrame, output: str) -> str:
    return (f"rows={len(frame)} months={len(frame.months)} "
            f"cells={frame.n_cells} output={output}")


def run(args: argparse.Namespace) -> int:
    try:
        table = read_csv(args.input, {
            "date": args.date, "x": args.x, "y": args.y,
            "group": args.group, "facet": args.facet,
        })
        frame = frame_calendar(table, spec_from_args(args), locale=args.locale)
        if args.command == "coords":
            write_coords_csv(frame, args.output)
        else:
            style = RenderStyle(glyph=args.glyph, canvas_width=args.canvas_width,
                                canvas_height=args.canvas_height)
            render_svg(frame, style, args.output)
    except (CalframeError, OSError) as exc:
        print(f"calframe: error: {exc}", file=sys.stderr)
        return 1
    if not args.quiet:
        print(_summary(frame, args.output), file=sys.stderr)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    return run(parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
