"""Independent brute-force oracles. Deliberately naive: these recompute the
answers the library produces by a different route (exhaustive enumeration,
linear scans, exact rationals) and must never import the implementations
they check beyond plain data types."""

from __future__ import annotations

from fractions import Fraction


def enumerate_simple_paths(num_nodes, edges, src, dst):
    """Yield every simple path src->dst as a list of edge indices.

    edges: list of (a, b) node pairs; graphs are small (<= ~9 nodes).
    """
    adj = [[] for _ in range(num_nodes)]
    for idx, (a, b) in enumerate(edges):
        adj[a].append((b, idx))
        adj[b].append((a, idx))

    stack = [(src, [], {src})]
    while stack:
        node, path_edges, seen = stack.pop()
        if node == dst:
            yield path_edges
            continue
        for nxt, edge_idx in adj[node]:
            if nxt not in seen:
                stack.append((nxt, path_edges + [edge_idx], seen | {nxt}))


def brute_force_min_cost(num_nodes, edges, weights, src, dst):
    """Exhaustive minimum path cost over all simple paths, or None."""
    best = None
    for path_edges in enumerate_simple_paths(num_nodes, edges, src, dst):
        cost = sum(weights[i] for i in path_edges)
        if best is None or cost < best:
            best = cost
    return best


def brute_force_accommodation(occupied, needed):
    """Exact p as a Fraction: usable free slots over total slots.

    A free slot is usable iff the maximal free run containing it has length
    >= needed. Plain O(n^2)-ish scan, no clever run bookkeeping.
    """
    total = len(occupied)
    usable = 0
    for i in range(total):
        if occupied[i]:
            continue
        lo = i
        while lo > 0 and not occupied[lo - 1]:
            lo -= 1
        hi = i
        while hi < total - 1 and not occupied[hi + 1]:
            hi += 1
        if hi - lo + 1 >= needed:
            usable += 1
    return Fraction(usable, total)


def brute_force_first_fit(occupied_lists, needed):
    """Smallest start s.t. [start, start+needed) is free on every list, or None."""
    total = len(occupied_lists[0])
    for start in range(total - needed + 1):
        if all(
            not occ[slot]
            for occ in occupied_lists
            for slot in range(start, start + needed)
        ):
            return start
    return None


def min_data_slots(bitrate_gbps, rate_per_slot):
    """Smallest k with k * rate >= bitrate, by counting up (no ceil())."""
    k = 1
    while k * rate_per_slot < bitrate_gbps:
        k += 1
    return k
