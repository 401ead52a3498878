"""Command-line entry point: run sweeps, export traces, validate configs.

Exit codes: 0 success, 1 config error, 2 topology error, 3 runtime error.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
import tempfile
from pathlib import Path

from .config import ConfigError, RunConfig, load_config
from .simengine import OUTCOME_HEADER, OutcomeRow, SimResult, run_sweep
from .topology import TopologyError, load_topology
from .traffic import TrafficConfig, generate_trace, write_trace_csv

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_TOPOLOGY = 2
EXIT_RUNTIME = 3

RESULTS_HEADER = [
    "topology", "metric", "merge", "alpha", "lambda", "mu", "load_erlang", "seed",
    "num_demands", "served", "blocked_total", "blocked_distance", "blocked_spectrum",
    "blocking_probability", "transceivers_per_served",
]


def result_csv_row(r: SimResult) -> list[str]:
    return [
        r.topology_name, r.metric, r.merge, repr(r.alpha), repr(r.lam), repr(r.mu),
        repr(r.load_erlang), str(r.seed), str(r.num_demands), str(r.served),
        str(r.blocked_total), str(r.blocked_distance), str(r.blocked_spectrum),
        repr(r.blocking_probability), repr(r.transceivers_per_served),
    ]


def results_csv_text(results: list[SimResult]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(RESULTS_HEADER)
    for r in results:
        writer.writerow(result_csv_row(r))
    return buf.getvalue()


def write_atomic(path: Path, text: str) -> None:
    """Write via a temp file and rename, so readers never see a truncated file."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _outcome_log_path(out_csv: Path, r: SimResult) -> Path:
    tag = f"{r.metric}-{r.merge}-a{r.alpha:g}-load{r.load_erlang:g}-seed{r.seed}"
    return out_csv.parent / f"{out_csv.stem}.outcomes.{tag}.csv"


def _summary_line(r: SimResult) -> str:
    return (
        f"{r.topology_name} {r.metric}/{r.merge} alpha={r.alpha:g} "
        f"load={r.load_erlang:g} seed={r.seed}: blocking={r.blocking_probability:.5f} "
        f"(distance={r.blocked_distance} spectrum={r.blocked_spectrum}) "
        f"tx/served={r.transceivers_per_served:.3f}"
    )


def _apply_overrides(cfg: RunConfig, args: argparse.Namespace) -> RunConfig:
    if args.seed is not None:
        cfg.seeds = [args.seed]
    if getattr(args, "out", None):
        cfg.output_path = Path(args.out).resolve()
    return cfg


def _cmd_run(args: argparse.Namespace) -> int:
    cfg = _apply_overrides(load_config(args.config), args)
    topology = load_topology(cfg.topology_path)

    sinks: list[tuple[Path, str]] = []

    def sink(r: SimResult, log: list[OutcomeRow]) -> None:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(OUTCOME_HEADER)
        writer.writerows(log)
        sinks.append((_outcome_log_path(cfg.output_path, r), buf.getvalue()))

    results = run_sweep(
        topology,
        cfg.metrics,
        cfg.loads,
        cfg.seeds,
        num_demands=cfg.num_demands,
        total_slots=cfg.slots,
        warmup_demands=cfg.warmup_demands,
        audit=args.audit,
        jobs=args.jobs,
        log_sink=sink if cfg.emit_outcome_log else None,
    )
    write_atomic(cfg.output_path, results_csv_text(results))
    for path, text in sinks:
        write_atomic(path, text)
    for r in results:
        print(_summary_line(r))
    print(f"wrote {len(results)} results to {cfg.output_path}")
    return EXIT_OK


def _cmd_trace(args: argparse.Namespace) -> int:
    cfg = _apply_overrides(load_config(args.config), args)
    topology = load_topology(cfg.topology_path)
    lam, mu = cfg.loads[0]
    traffic = TrafficConfig(lam=lam, mu=mu, num_demands=cfg.num_demands, seed=cfg.seeds[0])
    trace = generate_trace(traffic, topology)
    out = Path(args.out).resolve()
    out.parent.mkdir(parents=True, exist_ok=True)
    write_trace_csv(out, trace)
    print(
        f"wrote {len(trace)} demands (load={traffic.load_erlang:g} Erlang, "
        f"seed={traffic.seed}) to {out}"
    )
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace) -> int:
    cfg = load_config(args.config)
    print(
        f"OK: {len(cfg.metrics)} metrics x {len(cfg.loads)} loads x {len(cfg.seeds)} seeds, "
        f"{cfg.num_demands} demands, topology {cfg.topology_path.name}, slots {cfg.slots}"
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eonsim",
        description="Shortest-path RMSA simulator for elastic optical networks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run the configured sweep and write the results CSV")
    run_p.add_argument("--config", required=True, help="TOML run configuration")
    run_p.add_argument("--out", help="override the configured results CSV path")
    run_p.add_argument("--seed", type=int, help="replace the seed list with this single seed")
    run_p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    run_p.add_argument("--audit", action="store_true", help="recheck grid invariants every event")
    run_p.set_defaults(func=_cmd_run)

    trace_p = sub.add_parser("trace", help="export the demand trace of the first load/seed")
    trace_p.add_argument("--config", required=True)
    trace_p.add_argument("--out", required=True, help="trace CSV path")
    trace_p.add_argument("--seed", type=int, help="replace the seed list with this single seed")
    trace_p.set_defaults(func=_cmd_trace)

    val_p = sub.add_parser("validate", help="check a config file and report every violation")
    val_p.add_argument("--config", required=True)
    val_p.set_defaults(func=_cmd_validate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        for diag in exc.diagnostics:
            print(f"config error: {diag}", file=sys.stderr)
        return EXIT_CONFIG
    except TopologyError as exc:
        print(f"topology error: {exc}", file=sys.stderr)
        return EXIT_TOPOLOGY
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
