#!/usr/bin/env python3
"""Run every shipped experiment config and, if the plotting package is
installed, render the comparison figures from the resulting CSVs.

    python scripts/run_experiments.py [--jobs N] [--quick]

--quick cuts the demand count to 1000 for a fast smoke pass (results land in
results/quick/ to keep full-scale CSVs intact).
"""

import argparse
import shutil
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
CONFIGS = [
    "nsfnet_metrics.toml",
    "usbackbone_metrics.toml",
    "usbackbone_merges.toml",
    "nsfnet_audit.toml",
]
FIGURES = [
    ("nsfnet_metrics.csv", "blocking_by_metric", "nsfnet", "nsfnet_blocking.png"),
    ("nsfnet_metrics.csv", "transceivers_by_metric", "nsfnet", "nsfnet_transceivers.png"),
    ("usbackbone_metrics.csv", "blocking_by_metric", "usbackbone", "usbackbone_blocking.png"),
    ("usbackbone_metrics.csv", "transceivers_by_metric", "usbackbone", "usbackbone_transceivers.png"),
    ("usbackbone_merges.csv", "blocking_by_merge", "usbackbone", "usbackbone_merges.png"),
]


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--jobs", type=int, default=2)
    parser.add_argument("--quick", action="store_true", help="1000 demands per run")
    args = parser.parse_args()

    results_dir = ROOT / "results" / ("quick" if args.quick else "")
    for name in CONFIGS:
        config = ROOT / "configs" / name
        extra = []
        if args.quick:
            text = config.read_text().replace("num_demands = 10000", "num_demands = 1000")
            config = results_dir / name
            config.parent.mkdir(parents=True, exist_ok=True)
            config.write_text(text)
            extra = ["--out", str(results_dir / name.replace(".toml", ".csv"))]
        print(f"== eonsim run --config {config.name}")
        subprocess.run(
            [sys.executable, "-m", "eonsim.cli", "run", "--config", str(config),
             "--jobs", str(args.jobs), *extra],
            check=True, cwd=ROOT,
        )

    if shutil.which("plot_results") is None:
        print("plot_results not installed; skipping figures (pip install ./plotting)")
        return 0
    for csv_name, figure, topo, image in FIGURES:
        csv_path = results_dir / csv_name if args.quick else ROOT / "results" / csv_name
        out = csv_path.parent / "figures" / image
        print(f"== plot_results {csv_path.name} --figure {figure}")
        subprocess.run(
            ["plot_results", str(csv_path), "--figure", figure,
             "--topology", topo, "--out", str(out)],
            check=True,
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
