"""Higher-dimensional connectivity and message-diffusion probes.

Two simplexes of dimension >= q are q-near when they share a q-face; the
q-components are the classes of the transitive closure. Diffusion floods a
message from a source in synchronous rounds over the 1-skeleton (or over
group channels of a chosen minimum dimension).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .complex import Simplex, SimplicialComplex


@dataclass(frozen=True)
class QComponents:
    q: int
    classes: tuple[tuple[Simplex, ...], ...]

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self, s: Simplex) -> int:
        for i, cls in enumerate(self.classes):
            if s in cls:
                return i
        raise KeyError(s)


@dataclass(frozen=True)
class DiffusionReport:
    source: int
    target: int
    hop_count: int | None
    rounds: tuple[int, ...]

    @property
    def reachable(self) -> bool:
        return self.hop_count is not None


def q_components(c: SimplicialComplex, q: int) -> QComponents:
    if q < 0:
        raise ValueError("q must be non-negative")
    members = [s for d in range(q, c.dimension() + 1) for s in c.simplexes(d)]
    parent = {s: s for s in members}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in members:
        if len(s) == q + 1:
            continue
        rs = find(s)
        for f in combinations(s, q + 1):
            rf = find(f)
            if rf != rs:
                parent[rf] = rs
    groups: dict[Simplex, list[Simplex]] = {}
    for s in members:
        groups.setdefault(find(s), []).append(s)
    classes = sorted(
        (tuple(sorted(g, key=lambda s: (len(s), s))) for g in groups.values()),
        key=lambda g: min(g),
    )
    return QComponents(q, tuple(classes))


def channel_graph(c: SimplicialComplex, min_dim: int = 1) -> dict[int, set[int]]:
    """Vertices are linked when some simplex of dimension >= ``min_dim`` holds both."""
    if min_dim < 1:
        raise ValueError("min_dim must be >= 1")
    adj: dict[int, set[int]] = {v: set() for v in c.vertices}
    if min_dim == 1:
        for a, b in c.simplexes(1):
            adj[a].add(b)
            adj[b].add(a)
        return adj
    for s in c.maximal_simplexes():
        if len(s) - 1 >= min_dim:
            for a, b in combinations(s, 2):
                adj[a].add(b)
                adj[b].add(a)
    return adj


def _flood(adj: dict[int, set[int]], source: int) -> list[list[int]]:
    seen = {source}
    frontier = [source]
    layers = []
    while frontier:
        layers.append(frontier)
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = sorted(nxt)
    return layers


def _require_vertex(c: SimplicialComplex, v: int) -> None:
    if not c.contains((v,)):
        raise ValueError(f"vertex {v} is not in the complex")


def diffusion(
    c: SimplicialComplex, source: int, target: int, min_dim: int = 1
) -> DiffusionReport:
    """Flood from ``source``; round r informs every neighbour of round r-1.

    ``rounds[r]`` is the number of vertices first reached at round r
    (``rounds[0] == 1`` for the source). Flooding stops once a round reaches
    no one new.
    """
    _require_vertex(c, source)
    _require_vertex(c, target)
    layers = _flood(channel_graph(c, min_dim), source)
    hop = next((r for r, layer in enumerate(layers) if target in layer), None)
    return DiffusionReport(source, target, hop, tuple(len(layer) for layer in layers))


def probe_matrix(
    c: SimplicialComplex,
    entry_points: Sequence[int],
    exit_points: Sequence[int],
    min_dim: int = 1,
) -> list[list[int | None]]:
    """Hop counts from each entry point (rows) to each exit point (columns)."""
    for v in (*entry_points, *exit_points):
        _require_vertex(c, v)
    adj = channel_graph(c, min_dim)
    out = []
    for a in entry_points:
        dist = {v: r for r, layer in enumerate(_flood(adj, a)) for v in layer}
        out.append([dist.get(b) for b in exit_points])
    return out
