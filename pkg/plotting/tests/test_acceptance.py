"""Acceptance criterion for the plotting package: each of the three figure
types renders from real simulator sweep CSVs with the right series and point
counts, plus the exact-aggregation unit check (in test_render.py).

Sweep CSVs written by the simulator's own acceptance run (results/acceptance/)
are reused when present; otherwise equivalent sweeps are regenerated through
the `eonsim` CLI with a reduced demand count (the grid of series and load
points, which is what this criterion checks, does not depend on it).
"""

import subprocess
import sys
from pathlib import Path

import pytest

from eonplot import FigureSpec, render

REPO_ROOT = Path(__file__).resolve().parent.parent.parent
ACCEPTANCE_DIR = REPO_ROOT / "results" / "acceptance"

SWEEPS = {
    # name -> (shipped config, topology, series column values expected)
    "nsfnet_metrics.csv": ("nsfnet_metrics.toml", "nsfnet", {"LL", "U", "LLU", "LLP"}),
    "usbackbone_metrics.csv": ("usbackbone_metrics.toml", "usbackbone", {"LL", "U", "LLU", "LLP"}),
    "usbackbone_merges.csv": ("usbackbone_merges.toml", "usbackbone", {"linear", "quadratic", "sqrt"}),
}
N_LOADS = 5
N_SEEDS = 5


def check(criterion: str, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {criterion}: {detail}"


@pytest.fixture(scope="session")
def sweep_csvs(tmp_path_factory):
    """Paths of the three criterion-grade sweep CSVs, regenerating if needed."""
    out_dir = tmp_path_factory.mktemp("sweeps")
    paths = {}
    for csv_name, (config_name, _, _) in SWEEPS.items():
        existing = ACCEPTANCE_DIR / csv_name
        if existing.is_file():
            paths[csv_name] = existing
            continue
        config = REPO_ROOT / "configs" / config_name
        quick = out_dir / config_name
        quick.write_text(
            config.read_text().replace("num_demands = 10000", "num_demands = 300")
        )
        out = out_dir / csv_name
        subprocess.run(
            [sys.executable, "-m", "eonsim.cli", "run",
             "--config", str(quick), "--out", str(out), "--jobs", "2"],
            check=True, capture_output=True,
        )
        paths[csv_name] = out
    return paths


def test_criterion_11_figures_from_sweep_csvs(sweep_csvs, tmp_path):
    figure_for = {
        "nsfnet_metrics.csv": ("blocking_by_metric", "transceivers_by_metric"),
        "usbackbone_metrics.csv": ("blocking_by_metric", "transceivers_by_metric"),
        "usbackbone_merges.csv": ("blocking_by_merge",),
    }
    rendered = []
    ok = True
    for csv_name, (_, topology, expected_series) in SWEEPS.items():
        for figure in figure_for[csv_name]:
            spec = FigureSpec(
                input_csv=sweep_csvs[csv_name],
                figure=figure,
                topology_filter=topology,
                output_image=tmp_path / f"{csv_name}.{figure}.png",
            )
            series = render(spec)
            good = (
                set(series) == expected_series
                and all(len(points) == N_LOADS for points in series.values())
                and all(
                    p.n_seeds == N_SEEDS for points in series.values() for p in points
                )
                and spec.output_image.is_file()
            )
            ok = ok and good
            rendered.append(f"{figure}({csv_name}): {len(series)} series x {N_LOADS} points")
    check("11", ok, "; ".join(rendered))
