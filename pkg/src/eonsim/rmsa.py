"""Per-demand admission: route, pick modulation from path length, fit spectrum.

The modulation table (rate per 12.5 GHz slot, transparent reach):

    BPSK   12.5 Gb/s   5000 km
    QPSK   25   Gb/s   2500 km
    8QAM   37.5 Gb/s   1250 km
    16QAM  50   Gb/s    625 km

A demand needs ceil(bitrate/rate) data slots plus one guard-band slot, all
contiguous and on the same indices along the whole path (no conversion).
Admission is a single attempt: one shortest path under the configured cost,
the most efficient modulation whose reach covers the path (boundary
inclusive), one first-fit try; any failure blocks the demand.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .cost import CostSpec, Merge, Metric, link_cost, merge_term
from .routing import Path, shortest_path
from .spectrum import DEFAULT_TOTAL_SLOTS, SlotRange, SpectrumGrid, first_fit
from .topology import Topology
from .traffic import Demand


@dataclass(frozen=True)
class ModulationFormat:
    name: str
    max_rate_per_slot_gbps: float
    max_reach_km: float


# Ordered by spectral efficiency, best first; reach grows as rate drops.
MODULATIONS = (
    ModulationFormat("16QAM", 50.0, 625.0),
    ModulationFormat("8QAM", 37.5, 1250.0),
    ModulationFormat("QPSK", 25.0, 2500.0),
    ModulationFormat("BPSK", 12.5, 5000.0),
)
MAX_REACH_KM = MODULATIONS[-1].max_reach_km


class BlockReason(enum.Enum):
    DISTANCE = "distance"
    SPECTRUM = "spectrum"


@dataclass(frozen=True)
class Connection:
    demand_id: int
    path: Path
    modulation: ModulationFormat
    slots: SlotRange
    departure_time: float

    @property
    def data_slots(self) -> int:
        return self.slots.count - 1


def select_modulation(path_length_km: float) -> ModulationFormat | None:
    """Most spectrally efficient format whose reach covers the path, or None."""
    if not path_length_km > 0:
        raise ValueError(f"path length must be positive, got {path_length_km}")
    for fmt in MODULATIONS:
        if path_length_km <= fmt.max_reach_km:
            return fmt
    return None


def required_slots(bitrate_gbps: float, modulation: ModulationFormat) -> int:
    """Data slots for the bitrate plus the guard-band slot."""
    if not 0 < bitrate_gbps <= 50:
        raise ValueError(f"bitrate must be in (0, 50], got {bitrate_gbps}")
    return math.ceil(bitrate_gbps / modulation.max_rate_per_slot_gbps) + 1


class NetworkState:
    """One spectrum grid per link plus cached static data for weight building."""

    def __init__(self, topology: Topology, total_slots: int = DEFAULT_TOTAL_SLOTS):
        self.topology = topology
        self.grids = [SpectrumGrid(total_slots) for _ in topology.links]
        self.adjacency = topology.adjacency()
        self.norm_lengths = np.array(
            [topology.normalized_length(ln) for ln in topology.links], dtype=float
        )
        self.unit_weights = np.ones(len(topology.links), dtype=float)

    def usage_vector(self) -> np.ndarray:
        counts = np.fromiter((g.used_count for g in self.grids), dtype=float, count=len(self.grids))
        return counts / self.grids[0].total_slots

    def accommodation_vector(self, needed_slots: int) -> np.ndarray:
        return np.fromiter(
            (g.accommodation_probability(needed_slots) for g in self.grids),
            dtype=float,
            count=len(self.grids),
        )

    def weights_for(self, spec: CostSpec, needed_slots: int | None = None) -> np.ndarray:
        """Per-link weight vector; the vectorized twin of cost.link_cost."""
        if spec.metric is Metric.LL:
            return self.norm_lengths
        if spec.metric is Metric.U:
            return self.unit_weights
        if spec.metric is Metric.LLU:
            return self.norm_lengths + spec.alpha * merge_term(spec.merge, self.usage_vector())
        if needed_slots is None:
            raise ValueError("LLP weights need the provisional slot count")
        p = self.accommodation_vector(needed_slots)
        if spec.llp_literal:
            raw = p + spec.alpha * merge_term(spec.merge, self.usage_vector())
            return np.maximum(raw, 1e-12)
        return self.norm_lengths + spec.alpha * merge_term(spec.merge, 1.0 - p)

    def release(self, conn: Connection) -> None:
        for ln in conn.path.links:
            self.grids[ln.id].release(conn.slots)


def try_admit(state: NetworkState, spec: CostSpec, demand: Demand) -> Connection | BlockReason:
    """Admit the demand (allocating spectrum on every path link) or block it.

    Blocking leaves every grid untouched: the spectrum search is read-only
    and allocation only starts once a jointly free range is known.
    """
    topology = state.topology

    if spec.metric is Metric.LLP:
        # p depends on the slot count, which depends on the modulation, which
        # depends on the path. Phase 1 estimates the slot count from the
        # min-length path; phase 2 routes on LLP weights built with it.
        base = shortest_path(
            topology, state.norm_lengths, demand.source, demand.destination, state.adjacency
        )
        provisional_fmt = select_modulation(base.total_length_km)
        if provisional_fmt is None:
            # the min-length path is already beyond every reach; so is any other
            return BlockReason.DISTANCE
        provisional_slots = required_slots(demand.bitrate_gbps, provisional_fmt)
        weights = state.weights_for(spec, needed_slots=provisional_slots)
    else:
        weights = state.weights_for(spec)

    path = shortest_path(topology, weights, demand.source, demand.destination, state.adjacency)
    modulation = select_modulation(path.total_length_km)
    if modulation is None:
        return BlockReason.DISTANCE
    slots_needed = required_slots(demand.bitrate_gbps, modulation)

    rng = first_fit([state.grids[ln.id] for ln in path.links], slots_needed)
    if rng is None:
        return BlockReason.SPECTRUM

    for ln in path.links:
        state.grids[ln.id].allocate(rng)
    return Connection(
        demand_id=demand.id,
        path=path,
        modulation=modulation,
        slots=rng,
        departure_time=demand.arrival_time + demand.holding_time,
    )


def scalar_weights(state: NetworkState, spec: CostSpec, needed_slots: int | None = None) -> list[float]:
    """Reference weight computation through cost.link_cost, one link at a time.

    Exists so tests can pin the vectorized weights_for to the scalar contract.
    """
    out = []
    for ln in state.topology.links:
        grid = state.grids[ln.id]
        p = grid.accommodation_probability(needed_slots) if needed_slots is not None else 1.0
        out.append(link_cost(spec, state.topology.normalized_length(ln), grid.usage(), p))
    return out
