"""Network graph: nodes, bidirectional fiber links, and the .topo file format.

File format (UTF-8, line oriented, '#' comments):

    NODES <N>
    LINK <id> <nodeA> <nodeB> <length_km>

Node ids must be dense 0..N-1, link ids dense 0..L-1, lengths positive,
one link per node pair, and the graph must be connected.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass
from pathlib import Path


class TopologyError(Exception):
    """Malformed topology file or invalid graph."""


@dataclass(frozen=True)
class Link:
    id: int
    a: int
    b: int
    length_km: float

    def other(self, node: int) -> int:
        if node == self.a:
            return self.b
        if node == self.b:
            return self.a
        raise ValueError(f"node {node} is not an endpoint of link {self.id}")


@dataclass(frozen=True)
class Topology:
    name: str
    num_nodes: int
    links: tuple[Link, ...]
    max_link_length_km: float

    @property
    def nodes(self) -> range:
        return range(self.num_nodes)

    def normalized_length(self, link: Link) -> float:
        """Link length divided by the longest link; in (0, 1]."""
        return link.length_km / self.max_link_length_km

    def incident_links(self, node: int) -> list[Link]:
        """Links having `node` as an endpoint, ordered by link id."""
        if not 0 <= node < self.num_nodes:
            raise ValueError(f"node {node} not in topology (N={self.num_nodes})")
        return [ln for ln in self.links if node in (ln.a, ln.b)]

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-node list of (neighbor, link id), sorted by neighbor index."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.num_nodes)]
        for ln in self.links:
            adj[ln.a].append((ln.b, ln.id))
            adj[ln.b].append((ln.a, ln.id))
        for entry in adj:
            entry.sort()
        return adj


def _build(name: str, num_nodes: int, raw_links: list[tuple[int, int, int, float]]) -> Topology:
    if num_nodes < 2:
        raise TopologyError(f"need at least 2 nodes, got {num_nodes}")
    links: list[Link] = []
    seen_pairs: set[tuple[int, int]] = set()
    for lid, a, b, length in raw_links:
        if lid != len(links):
            raise TopologyError(f"link ids must be dense and ordered; expected {len(links)}, got {lid}")
        for n in (a, b):
            if not 0 <= n < num_nodes:
                raise TopologyError(f"link {lid}: node {n} out of range 0..{num_nodes - 1}")
        if a == b:
            raise TopologyError(f"link {lid}: self-loop at node {a}")
        pair = (min(a, b), max(a, b))
        if pair in seen_pairs:
            raise TopologyError(f"link {lid}: duplicate link between {pair[0]} and {pair[1]}")
        seen_pairs.add(pair)
        if not length > 0:
            raise TopologyError(f"link {lid}: non-positive length {length}")
        links.append(Link(lid, pair[0], pair[1], float(length)))
    if not links:
        raise TopologyError("topology has no links")

    # connectivity via BFS from node 0
    neigh: list[list[int]] = [[] for _ in range(num_nodes)]
    for ln in links:
        neigh[ln.a].append(ln.b)
        neigh[ln.b].append(ln.a)
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            for v in neigh[u]:
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    if len(seen) != num_nodes:
        missing = sorted(set(range(num_nodes)) - seen)
        raise TopologyError(f"graph is disconnected; unreachable nodes: {missing}")

    return Topology(
        name=name,
        num_nodes=num_nodes,
        links=tuple(links),
        max_link_length_km=max(ln.length_km for ln in links),
    )


def load_topology(file_path: str | Path) -> Topology:
    """Parse and validate a .topo file."""
    path = Path(file_path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise TopologyError(f"cannot read topology file {path}: {exc}") from exc

    num_nodes: int | None = None
    raw_links: list[tuple[int, int, int, float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            if fields[0] == "NODES":
                if num_nodes is not None:
                    raise TopologyError(f"{path}:{lineno}: duplicate NODES line")
                num_nodes = int(fields[1])
            elif fields[0] == "LINK":
                if len(fields) != 5:
                    raise TopologyError(f"{path}:{lineno}: LINK needs 4 fields")
                raw_links.append((int(fields[1]), int(fields[2]), int(fields[3]), float(fields[4])))
            else:
                raise TopologyError(f"{path}:{lineno}: unknown directive {fields[0]!r}")
        except (ValueError, IndexError) as exc:
            raise TopologyError(f"{path}:{lineno}: malformed line {line!r}") from exc
    if num_nodes is None:
        raise TopologyError(f"{path}: missing NODES line")

    try:
        return _build(path.stem, num_nodes, raw_links)
    except TopologyError as exc:
        raise TopologyError(f"{path}: {exc}") from None


BUNDLED_TOPOLOGIES = ("nsfnet", "usbackbone")


def bundled_topology_path(name: str) -> Path:
    """Path of a topology data file shipped with the package."""
    stem = name.removesuffix(".topo")
    if stem not in BUNDLED_TOPOLOGIES:
        raise TopologyError(f"no bundled topology {name!r}; available: {', '.join(BUNDLED_TOPOLOGIES)}")
    return Path(str(importlib.resources.files("eonsim").joinpath(f"data/{stem}.topo")))
