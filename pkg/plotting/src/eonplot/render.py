from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

EXPECTED_HEADER = [
    "topology", "metric", "merge", "alpha", "lambda", "mu", "load_erlang", "seed",
    "num_demands", "served", "blocked_total", "blocked_distance", "blocked_spectrum",
    "blocking_probability", "transceivers_per_served",
]

# figure name -> (series column, value column, log y, y label)
FIGURES = {
    "blocking_by_metric": ("metric", "blocking_probability", True, "blocking probability"),
    "transceivers_by_metric": ("metric", "transceivers_per_served", False, "transceivers per served demand"),
    "blocking_by_merge": ("merge", "blocking_probability", True, "blocking probability"),
}

_SERIES_ORDER = ["LL", "U", "LLU", "LLP", "linear", "quadratic", "sqrt"]


class PlotInputError(Exception):
    """Unusable input; message is the user-facing diagnostic."""


class SchemaError(PlotInputError):
    pass


class EmptyFilterError(PlotInputError):
    pass


@dataclass(frozen=True)
class FigureSpec:
    input_csv: Path
    figure: str
    topology_filter: str
    output_image: Path

    def __post_init__(self) -> None:
        if self.figure not in FIGURES:
            raise PlotInputError(
                f"unknown figure {self.figure!r}; choose from {', '.join(sorted(FIGURES))}"
            )


@dataclass(frozen=True)
class SeriesPoint:
    load_erlang: float
    mean: float
    low: float   # min over seeds
    high: float  # max over seeds
    n_seeds: int


def read_rows(path: Path) -> list[dict[str, str]]:
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header != EXPECTED_HEADER:
                raise SchemaError(
                    f"{path}: header does not match the simulator's results schema "
                    f"(got {header})"
                )
            return [dict(zip(EXPECTED_HEADER, row)) for row in reader]
    except OSError as exc:
        raise PlotInputError(f"cannot read {path}: {exc}") from exc


def aggregate(rows: list[dict[str, str]], series_col: str, value_col: str) -> dict[str, list[SeriesPoint]]:
    """Mean/min/max over seeds for every (series, load); exact arithmetic mean."""
    cells: dict[tuple[str, float], list[float]] = {}
    for row in rows:
        key = (row[series_col], float(row["load_erlang"]))
        cells.setdefault(key, []).append(float(row[value_col]))

    series: dict[str, list[SeriesPoint]] = {}
    for (name, load), values in sorted(cells.items()):
        series.setdefault(name, []).append(
            SeriesPoint(
                load_erlang=load,
                mean=sum(values) / len(values),
                low=min(values),
                high=max(values),
                n_seeds=len(values),
            )
        )
    return series


def _series_sort_key(name: str):
    try:
        return (0, _SERIES_ORDER.index(name))
    except ValueError:
        return (1, name)


def render(spec: FigureSpec) -> dict[str, list[SeriesPoint]]:
    """Render one figure to spec.output_image; returns the plotted series."""
    series_col, value_col, log_y, y_label = FIGURES[spec.figure]
    rows = read_rows(spec.input_csv)
    rows = [r for r in rows if r["topology"] == spec.topology_filter]
    if not rows:
        raise EmptyFilterError(
            f"{spec.input_csv}: no rows for topology {spec.topology_filter!r}"
        )
    series = aggregate(rows, series_col, value_col)

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for name in sorted(series, key=_series_sort_key):
        points = series[name]
        loads = [p.load_erlang for p in points]
        means = [p.mean for p in points]
        yerr = [
            [p.mean - p.low for p in points],
            [p.high - p.mean for p in points],
        ]
        ax.errorbar(loads, means, yerr=yerr, marker="o", capsize=3, label=name)
    if log_y:
        ax.set_yscale("log")
    ax.set_xlabel("offered load (Erlang)")
    ax.set_ylabel(y_label)
    ax.set_title(f"{spec.topology_filter}: {y_label} vs load")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    spec.output_image.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(spec.output_image, dpi=150)
    plt.close(fig)
    return series
