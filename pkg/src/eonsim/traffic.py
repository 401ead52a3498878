"""Reproducible random demand traces: Poisson arrivals, exponential holding.

All randomness comes from numpy's PCG64 generator seeded through
SeedSequence(seed). Three substreams are spawned from the master seed, in
this order: arrivals, holding times, demand attributes. Draw order is fixed:

    arrivals stream:   num_demands exponential inter-arrival gaps (mean 1/lambda)
    holding stream:    num_demands exponential holding times (mean 1/mu)
    attributes stream: num_demands uniform ints in [0, N*(N-1)) (endpoint pair),
                       then num_demands uniform ints in [1, 50] (bitrate)

so a field added later draws after these blocks and perturbs nothing. The
pair index k maps to (src=k//(N-1), dst=offset skipping src), uniform over
ordered distinct pairs. The whole trace is a pure function of
(seed, lambda, mu, num_demands, N) and never depends on routing state.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np

from .topology import Topology


@dataclass(frozen=True)
class Demand:
    id: int
    arrival_time: float
    source: int
    destination: int
    bitrate_gbps: int
    holding_time: float


@dataclass(frozen=True)
class TrafficConfig:
    lam: float = 10.0
    mu: float = 1.0
    num_demands: int = 10000
    seed: int = 0

    def __post_init__(self) -> None:
        if not self.lam > 0 or not self.mu > 0:
            raise ValueError("lambda and mu must be positive")
        if self.num_demands < 1:
            raise ValueError("num_demands must be >= 1")

    @property
    def load_erlang(self) -> float:
        return self.lam / self.mu


def generate_trace(config: TrafficConfig, topology: Topology) -> list[Demand]:
    """The demand sequence for one (seed, load) point; same inputs, same trace."""
    n_nodes = topology.num_nodes
    if n_nodes < 2:
        raise ValueError("topology needs at least 2 nodes")
    n = config.num_demands

    arrivals_ss, holding_ss, attrs_ss = np.random.SeedSequence(config.seed).spawn(3)
    gaps = np.random.Generator(np.random.PCG64(arrivals_ss)).exponential(1.0 / config.lam, size=n)
    arrival_times = np.cumsum(gaps)
    holding = np.random.Generator(np.random.PCG64(holding_ss)).exponential(1.0 / config.mu, size=n)
    attrs = np.random.Generator(np.random.PCG64(attrs_ss))
    pair_idx = attrs.integers(0, n_nodes * (n_nodes - 1), size=n)
    bitrates = attrs.integers(1, 51, size=n)

    sources = pair_idx // (n_nodes - 1)
    offsets = pair_idx % (n_nodes - 1)
    dests = offsets + (offsets >= sources)

    return [
        Demand(
            id=i,
            arrival_time=float(arrival_times[i]),
            source=int(sources[i]),
            destination=int(dests[i]),
            bitrate_gbps=int(bitrates[i]),
            holding_time=float(holding[i]),
        )
        for i in range(n)
    ]


TRACE_HEADER = ["id", "arrival_time", "source", "destination", "bitrate_gbps", "holding_time"]


def write_trace_csv(path: str | Path, trace: Iterable[Demand]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(TRACE_HEADER)
        for d in trace:
            writer.writerow(
                [d.id, repr(d.arrival_time), d.source, d.destination, d.bitrate_gbps, repr(d.holding_time)]
            )


def read_trace_csv(path: str | Path) -> list[Demand]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != TRACE_HEADER:
            raise ValueError(f"unexpected trace header {header}")
        return [
            Demand(
                id=int(row[0]),
                arrival_time=float(row[1]),
                source=int(row[2]),
                destination=int(row[3]),
                bitrate_gbps=int(row[4]),
                holding_time=float(row[5]),
            )
            for row in reader
        ]
