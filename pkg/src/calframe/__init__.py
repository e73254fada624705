"""Calendar-based layouts for sub-daily temporal data."""

from .civil import Date, WeekStart, day_of_week, days_in_month, is_leap_year, next_day, parse_date
from .decor import BUILTIN_LOCALES, LabelAnchor, Locale, Segment, label_positions, load_locale, reference_lines
from .errors import (
    CalframeError,
    CapacityError,
    DateRangeError,
    EmptyDomainError,
    EmptyInputError,
    InvalidArgumentError,
    ParseError,
    SchemaError,
    UnknownLocaleError,
)
from .frame import CalendarSpec, LayoutFrame, frame_calendar, span_months
from .layout import (
    CellAddress,
    GridDims,
    ScaledPoint,
    auto_grid,
    cell_position,
    daily_cell,
    month_slot,
    polar_project,
    project_point,
    unproject,
    weekly_cell,
)
from .scaling import ScaleMode, apply_scale, rescale01
from .svg import RenderStyle, render_document, render_svg
from .tidy import TidyTable, read_csv, write_coords_csv

__version__ = "0.1.0"
