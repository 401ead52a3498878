"""Per-link frequency-slot occupancy and the queries feeding the dynamic costs.

A grid is a bitmap over `total_slots` frequency slices (default 180 at
12.5 GHz spacing). `usage` and `accommodation_probability` are the u and p
inputs of the usage/probability link costs; `first_fit` implements the
spectrum-assignment policy (lowest feasible start index, jointly free on
every grid of a path).
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

DEFAULT_TOTAL_SLOTS = 180


class AllocationError(RuntimeError):
    """Double allocation or release of a free slot: a simulator bug, not blocking."""


class SlotRange(NamedTuple):
    start: int
    count: int

    @property
    def stop(self) -> int:
        return self.start + self.count


class SpectrumGrid:
    """Occupancy bitmap of one link."""

    __slots__ = ("total_slots", "occupied", "_used", "_runs")

    def __init__(self, total_slots: int = DEFAULT_TOTAL_SLOTS):
        if total_slots < 1:
            raise ValueError(f"total_slots must be >= 1, got {total_slots}")
        self.total_slots = total_slots
        self.occupied = np.zeros(total_slots, dtype=bool)
        self._used = 0
        self._runs: list[tuple[int, int]] | None = [(0, total_slots)]

    @property
    def used_count(self) -> int:
        return self._used

    def usage(self) -> float:
        """Fraction of occupied slots, in [0, 1]."""
        return self._used / self.total_slots

    def free_runs(self) -> list[tuple[int, int]]:
        """Maximal runs of free slots as (start, length), in start order."""
        if self._runs is None:
            padded = np.empty(self.total_slots + 2, dtype=np.int8)
            padded[0] = padded[-1] = 1
            padded[1:-1] = self.occupied
            edges = np.diff(padded)
            starts = np.flatnonzero(edges == -1)
            stops = np.flatnonzero(edges == 1)
            self._runs = list(zip(starts.tolist(), (stops - starts).tolist()))
        return self._runs

    def accommodation_probability(self, needed_slots: int) -> float:
        """Fraction of slots that are free and inside a free run of length >= needed_slots.

        A free slot walled in by occupied neighbours cannot host a multi-slot
        signal, so it only counts when its whole run is long enough.
        """
        if needed_slots < 1:
            raise ValueError(f"needed_slots must be >= 1, got {needed_slots}")
        usable = sum(length for _, length in self.free_runs() if length >= needed_slots)
        # phrased as a complement so p(1) == 1 - usage() holds bit-exactly
        return 1.0 - (self.total_slots - usable) / self.total_slots

    def _check_range(self, rng: SlotRange) -> None:
        if rng.count < 1 or rng.start < 0 or rng.stop > self.total_slots:
            raise ValueError(f"slot range {rng} outside grid of {self.total_slots} slots")

    def allocate(self, rng: SlotRange) -> None:
        self._check_range(rng)
        window = self.occupied[rng.start:rng.stop]
        if window.any():
            raise AllocationError(f"allocate {rng}: slots already in use")
        window[:] = True
        self._used += rng.count
        self._runs = None

    def release(self, rng: SlotRange) -> None:
        self._check_range(rng)
        window = self.occupied[rng.start:rng.stop]
        if not window.all():
            raise AllocationError(f"release {rng}: slots not all in use")
        window[:] = False
        self._used -= rng.count
        self._runs = None

    def copy(self) -> "SpectrumGrid":
        dup = SpectrumGrid(self.total_slots)
        dup.occupied[:] = self.occupied
        dup._used = self._used
        dup._runs = None
        return dup

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpectrumGrid):
            return NotImplemented
        return self.total_slots == other.total_slots and bool(
            np.array_equal(self.occupied, other.occupied)
        )


def first_fit(grids: Sequence[SpectrumGrid], needed_slots: int) -> SlotRange | None:
    """Lowest-start contiguous range of `needed_slots` slots free on every grid.

    Returns None when no such range exists (spectrum blocking).
    """
    if not grids:
        raise ValueError("first_fit needs at least one grid")
    if needed_slots < 1:
        raise ValueError(f"needed_slots must be >= 1, got {needed_slots}")
    total = grids[0].total_slots
    if any(g.total_slots != total for g in grids):
        raise ValueError("all grids must have the same total_slots")
    if needed_slots > total:
        return None

    if len(grids) == 1:
        for start, length in grids[0].free_runs():
            if length >= needed_slots:
                return SlotRange(start, needed_slots)
        return None

    free = ~grids[0].occupied
    for g in grids[1:]:
        free &= ~g.occupied
    run_start = -1
    for idx in np.flatnonzero(free).tolist():
        if run_start < 0 or idx != prev + 1:
            run_start = idx
        prev = idx
        if idx - run_start + 1 == needed_slots:
            return SlotRange(run_start, needed_slots)
    return None
