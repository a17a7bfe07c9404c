"""Hierarchical random complexes and simplicial leaders.

A :class:`ProbabilityTable` assigns an acceptance probability to each vertex
subset of size 2..N+1; subsets not listed fall back to ``default_p``.

A vertex V is a (k, t)-hub when, against every rival W, the k-subsets T
avoiding V and W with ``p[V + T] > p[W + T]`` number more than t percent of
all such subsets. The comparison is strict and the threshold is checked in
exact arithmetic (``wins * 100 > t * total``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, ceil
from typing import Iterable, Mapping

import numpy as np

from .complex import Simplex, SimplicialComplex
from .random_model import make_rng, sample_levels


@dataclass
class ProbabilityTable:
    entries: dict[Simplex, float]
    default_p: float = 0.0
    max_dim: int = 1

    def __post_init__(self) -> None:
        if self.max_dim < 1:
            raise ValueError("max_dim must be >= 1")
        if not 0 <= self.default_p <= 1:
            raise ValueError(f"default probability {self.default_p} outside [0, 1]")
        canon: dict[Simplex, float] = {}
        for key, p in self.entries.items():
            k = tuple(sorted(key))
            if len(set(k)) != len(k):
                raise ValueError(f"repeated vertex in table key {key}")
            if not 2 <= len(k) <= self.max_dim + 1:
                raise ValueError(f"table key {key} must have 2..{self.max_dim + 1} vertices")
            if k in canon:
                raise ValueError(f"duplicate table key {key}")
            if not 0 <= p <= 1:
                raise ValueError(f"probability {p} for {key} outside [0, 1]")
            canon[k] = p
        self.entries = canon

    def __getitem__(self, vertices: Iterable[int]) -> float:
        return self.entries.get(tuple(sorted(vertices)), self.default_p)

    @classmethod
    def from_function(cls, universe: Iterable[int], max_dim: int, fn, default_p: float = 0.0):
        """Tabulate ``fn(subset)`` over all subsets of size 2..max_dim+1."""
        vs = sorted(universe)
        entries = {
            s: fn(s) for size in range(2, max_dim + 2) for s in combinations(vs, size)
        }
        return cls(entries, default_p, max_dim)


@dataclass(frozen=True)
class HubQuery:
    vertex: int
    k: int
    t: float

    def validate(self, max_dim: int) -> None:
        if not 1 <= self.k <= max_dim:
            raise ValueError(f"hub dimension k={self.k} must lie in 1..{max_dim}")
        if not 0 <= self.t <= 100:
            raise ValueError(f"hub order t={self.t} must lie in [0, 100]")


@dataclass
class HubResult:
    is_hub: bool
    wins: dict[int, int]
    subsets_per_rival: int
    query: HubQuery | None = field(default=None, repr=False)


def generate_hierarchical(
    n: int,
    N: int,
    table: ProbabilityTable,
    seed: int = 0,
    rng: np.random.Generator | None = None,
) -> SimplicialComplex:
    """Level process on vertices 0..n-1 with per-subset acceptance probabilities."""
    if n < 0 or N < 0:
        raise ValueError("n and N must be non-negative")
    c = SimplicialComplex.from_vertices(range(n))
    sample_levels(c, N, lambda k, s: table[s], rng if rng is not None else make_rng(seed))
    return c


def rival_wins(
    table: ProbabilityTable, vertex: int, k: int, universe: Iterable[int]
) -> tuple[dict[int, int], int]:
    """For each rival W, how many k-subsets T favour ``vertex`` over W; and |T(V, W, k)|."""
    vs = sorted(set(universe))
    if vertex not in vs:
        raise ValueError(f"vertex {vertex} not in the universe")
    if len(vs) < k + 2:
        raise ValueError(f"universe of {len(vs)} vertices is too small for k={k}; need >= {k + 2}")
    total = comb(len(vs) - 2, k)
    wins = {}
    for w in vs:
        if w == vertex:
            continue
        rest = [x for x in vs if x != vertex and x != w]
        wins[w] = sum(
            1 for T in combinations(rest, k) if table[(vertex, *T)] > table[(w, *T)]
        )
    return wins, total


def is_hub(table: ProbabilityTable, q: HubQuery, universe: Iterable[int]) -> HubResult:
    q.validate(table.max_dim)
    wins, total = rival_wins(table, q.vertex, q.k, universe)
    t = Fraction(q.t)
    ok = all(w * 100 > t * total for w in wins.values())
    return HubResult(ok, wins, total, q)


def max_hub_order(wins: Mapping[int, int], total: int) -> int | None:
    """Largest integer t in [0, 100] with ``min(wins) * 100 > t * total``, or None."""
    worst = min(wins.values())
    if worst == 0:
        return None
    return min(100, ceil(Fraction(100 * worst, total)) - 1)


def hub_profile(
    table: ProbabilityTable, universe: Iterable[int], k: int
) -> list[tuple[int, int | None]]:
    """Every vertex with the highest integer order at which it is a (k, t)-hub.

    Sorted by that order, descending; vertices qualifying at no order come last
    with ``None``; ties go to the smaller id.
    """
    HubQuery(0, k, 0).validate(table.max_dim)
    vs = sorted(set(universe))
    rows = []
    for v in vs:
        wins, total = rival_wins(table, v, k, vs)
        rows.append((v, max_hub_order(wins, total)))
    rows.sort(key=lambda r: (r[1] is None, -(r[1] or 0), r[0]))
    return rows
