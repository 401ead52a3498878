"""Figures from eonsim results CSVs.

Consumes only the simulator's published CSV interface: a fixed 15-column
header with one row per (metric, merge, alpha, load, seed). Three figure
types are supported, each plotting one series per metric (or per merge
function) against offered load, with seeds aggregated as mean plus min-max
whiskers. Blocking figures use a log y-axis. Rendering never modifies the
input file.
"""

from .render import (
    EXPECTED_HEADER,
    FIGURES,
    EmptyFilterError,
    FigureSpec,
    PlotInputError,
    SchemaError,
    SeriesPoint,
    aggregate,
    read_rows,
    render,
)

__all__ = [
    "EXPECTED_HEADER",
    "FIGURES",
    "EmptyFilterError",
    "FigureSpec",
    "PlotInputError",
    "SchemaError",
    "SeriesPoint",
    "aggregate",
    "read_rows",
    "render",
]
