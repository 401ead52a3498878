"""Minimum-total-cost path search over dynamically weighted edges."""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Sequence

from .topology import Link, Topology


@dataclass(frozen=True)
class Path:
    nodes: tuple[int, ...]
    links: tuple[Link, ...]
    total_length_km: float
    total_cost: float

    def __len__(self) -> int:
        return len(self.links)


def shortest_path(
    topology: Topology,
    weights: Sequence[float],
    src: int,
    dst: int,
    adjacency: list[list[tuple[int, int]]] | None = None,
) -> Path | None:
    """Dijkstra with deterministic tie-breaking.

    `weights` maps link id -> strictly positive edge weight. Ties on
    tentative cost are broken by lower node index (heap key) and, for
    equal-cost relaxations of the same node, by lower predecessor index, so
    identical inputs always yield the identical node sequence.
    """
    if src == dst:
        raise ValueError("src and dst must differ")
    if len(weights) != len(topology.links):
        raise ValueError(f"need {len(topology.links)} weights, got {len(weights)}")
    for lid, w in enumerate(weights):
        if not w > 0:
            raise ValueError(f"weight of link {lid} must be > 0, got {w}")

    adj = adjacency if adjacency is not None else topology.adjacency()
    n = topology.num_nodes
    dist = [math.inf] * n
    pred_node = [-1] * n
    pred_link = [-1] * n
    done = [False] * n
    dist[src] = 0.0
    heap: list[tuple[float, int]] = [(0.0, src)]
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        if u == dst:
            break
        for v, lid in adj[u]:
            if done[v]:
                continue
            nd = d + weights[lid]
            if nd < dist[v]:
                dist[v] = nd
                pred_node[v] = u
                pred_link[v] = lid
                heapq.heappush(heap, (nd, v))
            elif nd == dist[v] and u < pred_node[v]:
                pred_node[v] = u
                pred_link[v] = lid

    if not done[dst]:
        return None  # unreachable; cannot happen on a validated topology

    rev_nodes = [dst]
    rev_links: list[Link] = []
    node = dst
    while node != src:
        rev_links.append(topology.links[pred_link[node]])
        node = pred_node[node]
        rev_nodes.append(node)
    nodes = tuple(reversed(rev_nodes))
    links = tuple(reversed(rev_links))
    return Path(
        nodes=nodes,
        links=links,
        total_length_km=sum(ln.length_km for ln in links),
        total_cost=dist[dst],
    )
