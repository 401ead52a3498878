"""Run configuration: TOML parsing and whole-file validation.

A config is one TOML file; see configs/ for complete examples. Schema:

    topology = "nsfnet"          # bundled name, or a path relative to the config
    slots = 180                  # optional
    num_demands = 10000          # optional
    warmup_demands = 0           # optional
    seeds = [11, 12, 13]
    output = "results/out.csv"   # relative to the config file
    emit_outcome_log = false     # optional

    [[metrics]]                  # one table per cost spec
    metric = "LLU"               # LL | U | LLU | LLP
    merge = "linear"             # optional: linear | quadratic | sqrt
    alpha = 1.0                  # optional, >= 0
    llp_literal = false          # optional

    [[loads]]                    # one table per offered-load point
    lambda = 10.0
    mu = 0.025

Validation reports every violation at once, not just the first.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .cost import CostSpec, Merge, Metric
from .topology import BUNDLED_TOPOLOGIES, bundled_topology_path


class ConfigError(Exception):
    """Invalid run configuration; `diagnostics` lists every violation."""

    def __init__(self, diagnostics: list[str]):
        self.diagnostics = diagnostics
        super().__init__("; ".join(diagnostics))


@dataclass
class RunConfig:
    topology_path: Path
    metrics: list[CostSpec]
    loads: list[tuple[float, float]]
    seeds: list[int]
    output_path: Path
    slots: int = 180
    num_demands: int = 10000
    warmup_demands: int = 0
    emit_outcome_log: bool = False


def _parse_metric(entry: object, idx: int, errors: list[str]) -> CostSpec | None:
    if not isinstance(entry, dict):
        errors.append(f"metrics[{idx}]: expected a table")
        return None
    ok = True
    name = entry.get("metric")
    if name not in {m.value for m in Metric}:
        errors.append(f"metrics[{idx}]: metric must be one of LL, U, LLU, LLP (got {name!r})")
        ok = False
    merge = entry.get("merge", "linear")
    if merge not in {m.value for m in Merge}:
        errors.append(f"metrics[{idx}]: merge must be linear, quadratic or sqrt (got {merge!r})")
        ok = False
    alpha = entry.get("alpha", 1.0)
    if not isinstance(alpha, (int, float)) or isinstance(alpha, bool) or not alpha >= 0:
        errors.append(f"metrics[{idx}]: alpha must be >= 0 (got {alpha!r})")
        ok = False
    literal = entry.get("llp_literal", False)
    if not isinstance(literal, bool):
        errors.append(f"metrics[{idx}]: llp_literal must be a boolean")
        ok = False
    unknown = set(entry) - {"metric", "merge", "alpha", "llp_literal"}
    if unknown:
        errors.append(f"metrics[{idx}]: unknown keys {sorted(unknown)}")
        ok = False
    if not ok:
        return None
    return CostSpec(metric=Metric(name), merge=Merge(merge), alpha=float(alpha), llp_literal=literal)


def _parse_load(entry: object, idx: int, errors: list[str]) -> tuple[float, float] | None:
    if not isinstance(entry, dict):
        errors.append(f"loads[{idx}]: expected a table with lambda and mu")
        return None
    lam = entry.get("lambda")
    mu = entry.get("mu")
    ok = True
    for key, value in (("lambda", lam), ("mu", mu)):
        if not isinstance(value, (int, float)) or isinstance(value, bool) or not value > 0:
            errors.append(f"loads[{idx}]: {key} must be a positive number (got {value!r})")
            ok = False
    unknown = set(entry) - {"lambda", "mu"}
    if unknown:
        errors.append(f"loads[{idx}]: unknown keys {sorted(unknown)}")
        ok = False
    return (float(lam), float(mu)) if ok else None


def _resolve_topology(value: str, base_dir: Path, errors: list[str]) -> Path | None:
    candidate = (base_dir / value).resolve() if not Path(value).is_absolute() else Path(value)
    if candidate.is_file():
        return candidate
    stem = value.removesuffix(".topo")
    if stem in BUNDLED_TOPOLOGIES:
        return bundled_topology_path(stem)
    errors.append(f"topology: no such file {candidate} and no bundled topology named {value!r}")
    return None


def validate_config(text: str, base_dir: str | Path = ".") -> RunConfig:
    """Parse and validate config text; raise ConfigError listing ALL violations."""
    base = Path(base_dir)
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError([f"TOML parse error: {exc}"]) from exc

    errors: list[str] = []

    def positive_int(key: str, default: int, minimum: int = 1) -> int:
        value = doc.get(key, default)
        if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
            errors.append(f"{key} must be an integer >= {minimum} (got {value!r})")
            return default
        return value

    topology_value = doc.get("topology")
    topology_path: Path | None = None
    if not isinstance(topology_value, str) or not topology_value:
        errors.append("topology is required (bundled name or file path)")
    else:
        topology_path = _resolve_topology(topology_value, base, errors)

    slots = positive_int("slots", 180)
    num_demands = positive_int("num_demands", 10000)
    warmup = positive_int("warmup_demands", 0, minimum=0)
    if warmup >= num_demands:
        errors.append(f"warmup_demands ({warmup}) must be below num_demands ({num_demands})")

    seeds_value = doc.get("seeds")
    seeds: list[int] = []
    if not isinstance(seeds_value, list) or not seeds_value:
        errors.append("seeds must be a nonempty array of integers")
    else:
        for i, s in enumerate(seeds_value):
            if not isinstance(s, int) or isinstance(s, bool):
                errors.append(f"seeds[{i}] must be an integer (got {s!r})")
            else:
                seeds.append(s)

    metrics_value = doc.get("metrics")
    metrics: list[CostSpec] = []
    if not isinstance(metrics_value, list) or not metrics_value:
        errors.append("metrics must be a nonempty array of [[metrics]] tables")
    else:
        for i, entry in enumerate(metrics_value):
            spec = _parse_metric(entry, i, errors)
            if spec is not None:
                metrics.append(spec)

    loads_value = doc.get("loads")
    loads: list[tuple[float, float]] = []
    if not isinstance(loads_value, list) or not loads_value:
        errors.append("loads must be a nonempty array of [[loads]] tables")
    else:
        for i, entry in enumerate(loads_value):
            load = _parse_load(entry, i, errors)
            if load is not None:
                loads.append(load)

    output_value = doc.get("output")
    if not isinstance(output_value, str) or not output_value:
        errors.append("output is required (results CSV path)")
        output_path = base / "results.csv"
    else:
        output_path = base / output_value if not Path(output_value).is_absolute() else Path(output_value)

    emit_log = doc.get("emit_outcome_log", False)
    if not isinstance(emit_log, bool):
        errors.append("emit_outcome_log must be a boolean")
        emit_log = False

    known = {
        "topology", "slots", "num_demands", "warmup_demands",
        "seeds", "metrics", "loads", "output", "emit_outcome_log",
    }
    unknown = set(doc) - known
    if unknown:
        errors.append(f"unknown top-level keys: {sorted(unknown)}")

    if errors:
        raise ConfigError(errors)
    assert topology_path is not None
    return RunConfig(
        topology_path=topology_path,
        metrics=metrics,
        loads=loads,
        seeds=seeds,
        output_path=output_path,
        slots=slots,
        num_demands=num_demands,
        warmup_demands=warmup,
        emit_outcome_log=emit_log,
    )


def load_config(path: str | Path) -> RunConfig:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError([f"cannot read config file {p}: {exc}"]) from exc
    return validate_config(text, base_dir=p.parent)
