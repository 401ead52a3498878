"""Discrete-event RMSA simulator for elastic optical networks."""

from .cost import CostSpec, Merge, Metric, link_cost
from .rmsa import (
    MODULATIONS,
    BlockReason,
    Connection,
    ModulationFormat,
    NetworkState,
    required_slots,
    select_modulation,
    try_admit,
)
from .routing import Path, shortest_path
from .simengine import SimResult, SimulationError, run, run_sweep
from .spectrum import AllocationError, SlotRange, SpectrumGrid, first_fit
from .topology import Link, Topology, TopologyError, bundled_topology_path, load_topology
from .traffic import Demand, TrafficConfig, generate_trace, read_trace_csv, write_trace_csv

__all__ = [
    "AllocationError",
    "BlockReason",
    "Connection",
    "CostSpec",
    "Demand",
    "Link",
    "MODULATIONS",
    "Merge",
    "Metric",
    "ModulationFormat",
    "NetworkState",
    "Path",
    "SimResult",
    "SimulationError",
    "SlotRange",
    "SpectrumGrid",
    "Topology",
    "TopologyError",
    "TrafficConfig",
    "bundled_topology_path",
    "first_fit",
    "generate_trace",
    "link_cost",
    "load_topology",
    "read_trace_csv",
    "required_slots",
    "run",
    "run_sweep",
    "select_modulation",
    "shortest_path",
    "try_admit",
    "write_trace_csv",
]
