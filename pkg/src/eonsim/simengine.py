"""Discrete-event loop over one demand trace, plus the sweep harness.

Events are processed in (time, kind, id) order with departures before
arrivals at equal timestamps, so capacity freed at an instant is available
to a demand arriving at that same instant. All counters are exact and the
outcome of a run is a pure function of (topology, cost spec, trace).
"""

from __future__ import annotations

import heapq
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .cost import CostSpec
from .rmsa import BlockReason, Connection, NetworkState, try_admit
from .spectrum import DEFAULT_TOTAL_SLOTS
from .topology import Topology
from .traffic import Demand, TrafficConfig, generate_trace

_DEPARTURE = 0  # sorts before arrivals at equal time
_ARRIVAL = 1


class SimulationError(RuntimeError):
    """Internal consistency failure; never a modeled blocking outcome."""


@dataclass(frozen=True)
class SimResult:
    topology_name: str
    metric: str
    merge: str
    alpha: float
    lam: float
    mu: float
    load_erlang: float
    seed: int
    num_demands: int
    served: int
    blocked_total: int
    blocked_distance: int
    blocked_spectrum: int
    blocking_probability: float
    transceivers_total: int
    transceivers_per_served: float


OUTCOME_HEADER = [
    "demand_id",
    "outcome",
    "block_reason",
    "path_nodes",
    "modulation",
    "slot_start",
    "slot_count",
    "path_length_km",
]

# outcome log row: (demand_id, outcome, block_reason, path_nodes, modulation,
#                   slot_start, slot_count, path_length_km) as CSV-ready strings
OutcomeRow = tuple


def _outcome_row(demand: Demand, result: Connection | BlockReason) -> OutcomeRow:
    if isinstance(result, Connection):
        return (
            demand.id,
            "served",
            "",
            "-".join(map(str, result.path.nodes)),
            result.modulation.name,
            result.slots.start,
            result.slots.count,
            repr(result.path.total_length_km),
        )
    return (demand.id, "blocked", result.value, "", "", "", "", "")


def _audit_state(state: NetworkState, active: dict[int, Connection]) -> None:
    """Recompute occupancy from active connections and compare with the grids."""
    num_links = len(state.grids)
    total = state.grids[0].total_slots
    expected = np.zeros((num_links, total), dtype=bool)
    for conn in active.values():
        sl = slice(conn.slots.start, conn.slots.stop)
        for ln in conn.path.links:
            window = expected[ln.id, sl]
            if window.any():
                raise SimulationError(
                    f"double booking on link {ln.id} slots {conn.slots} (demand {conn.demand_id})"
                )
            window[:] = True
    actual = np.stack([g.occupied for g in state.grids])
    if not np.array_equal(actual, expected):
        raise SimulationError("grid occupancy diverged from active connections")
    for lid, g in enumerate(state.grids):
        if g.used_count != int(expected[lid].sum()):
            raise SimulationError(f"cached used count wrong on link {lid}")


def run(
    topology: Topology,
    spec: CostSpec,
    trace: Sequence[Demand],
    traffic: TrafficConfig,
    *,
    total_slots: int = DEFAULT_TOTAL_SLOTS,
    warmup_demands: int = 0,
    audit: bool = False,
) -> tuple[SimResult, list[OutcomeRow]]:
    """Simulate one trace under one cost spec.

    Returns the aggregate result and the per-demand outcome log. Demands with
    id < warmup_demands are simulated but excluded from the counters (and
    from num_demands, so served + blocked == num_demands stays exact).
    """
    if not trace:
        raise ValueError("trace is empty")
    state = NetworkState(topology, total_slots)
    active: dict[int, Connection] = {}
    outcomes: list[OutcomeRow] = []

    served = blocked_distance = blocked_spectrum = transceivers = 0
    heap: list[tuple[float, int, int]] = [
        (d.arrival_time, _ARRIVAL, d.id) for d in trace
    ]
    heapq.heapify(heap)
    last_time = 0.0
    while heap:
        time, kind, ident = heapq.heappop(heap)
        if time < last_time or time < 0:
            raise SimulationError(f"event time went backwards: {time} after {last_time}")
        last_time = time
        if kind == _DEPARTURE:
            state.release(active.pop(ident))
        else:
            demand = trace[ident]
            result = try_admit(state, spec, demand)
            counted = demand.id >= warmup_demands
            if isinstance(result, Connection):
                active[ident] = result
                heapq.heappush(heap, (result.departure_time, _DEPARTURE, ident))
                if counted:
                    served += 1
                    transceivers += result.data_slots
            elif counted:
                if result is BlockReason.DISTANCE:
                    blocked_distance += 1
                else:
                    blocked_spectrum += 1
            outcomes.append(_outcome_row(demand, result))
        if audit:
            _audit_state(state, active)

    if active:
        raise SimulationError(f"{len(active)} connections still active after final event")
    for lid, grid in enumerate(state.grids):
        if grid.used_count != 0 or grid.occupied.any():
            raise SimulationError(f"link {lid} grid not empty after shutdown")

    counted_total = len(trace) - min(warmup_demands, len(trace))
    blocked_total = blocked_distance + blocked_spectrum
    if served + blocked_total != counted_total:
        raise SimulationError("served + blocked does not match the demand count")
    result = SimResult(
        topology_name=topology.name,
        metric=spec.metric.value,
        merge=spec.merge.value,
        alpha=spec.alpha,
        lam=traffic.lam,
        mu=traffic.mu,
        load_erlang=traffic.load_erlang,
        seed=traffic.seed,
        num_demands=counted_total,
        served=served,
        blocked_total=blocked_total,
        blocked_distance=blocked_distance,
        blocked_spectrum=blocked_spectrum,
        blocking_probability=blocked_total / counted_total if counted_total else 0.0,
        transceivers_total=transceivers,
        transceivers_per_served=transceivers / served if served else 0.0,
    )
    return result, outcomes


def _sweep_cell(args) -> tuple[int, SimResult, list[OutcomeRow] | None]:
    (index, topology, spec, lam, mu, seed, num_demands, total_slots, warmup, audit, want_log) = args
    traffic = TrafficConfig(lam=lam, mu=mu, num_demands=num_demands, seed=seed)
    trace = generate_trace(traffic, topology)
    result, log = run(
        topology, spec, trace, traffic,
        total_slots=total_slots, warmup_demands=warmup, audit=audit,
    )
    return index, result, (log if want_log else None)


def run_sweep(
    topology: Topology,
    specs: Sequence[CostSpec],
    loads: Sequence[tuple[float, float]],
    seeds: Sequence[int],
    *,
    num_demands: int = 10000,
    total_slots: int = DEFAULT_TOTAL_SLOTS,
    warmup_demands: int = 0,
    audit: bool = False,
    jobs: int = 1,
    log_sink: Callable[[SimResult, list[OutcomeRow]], None] | None = None,
) -> list[SimResult]:
    """One run per (spec, load, seed), in that nesting order.

    Every spec sees the identical trace for a given (load, seed): traces are a
    pure function of (seed, load, num_demands, topology), so workers rebuild
    them bit-identically. Output order is deterministic regardless of jobs.
    `log_sink`, when given, receives each run's outcome log in output order.
    """
    if not specs or not loads or not seeds:
        raise ValueError("specs, loads and seeds must all be nonempty")
    want_log = log_sink is not None
    cells = []
    index = 0
    for spec in specs:
        for lam, mu in loads:
            for seed in seeds:
                cells.append(
                    (index, topology, spec, lam, mu, seed,
                     num_demands, total_slots, warmup_demands, audit, want_log)
                )
                index += 1

    out: list[tuple[SimResult, list[OutcomeRow] | None]] = [None] * len(cells)  # type: ignore[list-item]
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for idx, result, log in pool.map(_sweep_cell, cells, chunksize=1):
                out[idx] = (result, log)
    else:
        for cell in cells:
            idx, result, log = _sweep_cell(cell)
            out[idx] = (result, log)

    results = []
    for result, log in out:
        results.append(result)
        if want_log:
            log_sink(result, log or [])
    return results
