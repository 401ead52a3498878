import csv
import io

import pytest

from eonplot import EXPECTED_HEADER


def results_csv(rows: list[dict]) -> str:
    """Synthetic results CSV in the simulator's published schema."""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=EXPECTED_HEADER, lineterminator="\n")
    writer.writeheader()
    defaults = {
        "topology": "nsfnet", "metric": "LL", "merge": "linear", "alpha": "1.0",
        "lambda": "10.0", "mu": "0.05", "load_erlang": "200.0", "seed": "1",
        "num_demands": "1000", "served": "990", "blocked_total": "10",
        "blocked_distance": "0", "blocked_spectrum": "10",
        "blocking_probability": "0.01", "transceivers_per_served": "1.7",
    }
    for row in rows:
        writer.writerow({**defaults, **{k: str(v) for k, v in row.items()}})
    return buf.getvalue()


@pytest.fixture
def write_results(tmp_path):
    def _write(rows, name="results.csv"):
        path = tmp_path / name
        path.write_text(results_csv(rows))
        return path

    return _write
