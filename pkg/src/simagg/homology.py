"""Simplicial homology: boundary matrices and Betti numbers.

Two coefficient modes are supported. ``"gf2"`` reduces boundary matrices by
XOR elimination on bit-packed columns and is the default. ``"integer"``
computes a Smith normal form with exact Python integers and also reports
torsion coefficients.

Betti numbers follow standard simplicial homology. In particular a filled
triangle is contractible (Betti vector 1 0 0) and two disjoint segments have
Betti vector 2 0. To tell two points from two segments use
:func:`dimension_census`, which reports each component's dimension and
f-vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .complex import Simplex, SimplicialComplex

Mode = Literal["gf2", "integer"]


@dataclass(frozen=True)
class BoundaryMatrix:
    rows: list[Simplex]
    cols: list[Simplex]
    matrix: np.ndarray
    mode: Mode = "integer"

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape


@dataclass(frozen=True)
class BettiVector:
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...] | None = None

    def __iter__(self):
        return iter(self.betti)

    def __len__(self) -> int:
        return len(self.betti)

    def __getitem__(self, k: int) -> int:
        return self.betti[k]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))


@dataclass(frozen=True)
class ComponentRecord:
    component: int
    vertices: tuple[int, ...]
    max_dim: int
    f_vector: tuple[int, ...] = field(default=())

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)


def _check_mode(mode: str) -> None:
    if mode not in ("gf2", "integer"):
        raise ValueError(f"unknown homology mode {mode!r}; use 'gf2' or 'integer'")


def boundary_matrix(c: SimplicialComplex, k: int, mode: Mode = "integer") -> BoundaryMatrix:
    """Matrix of the k-th boundary map, rows and columns in lexicographic order.

    The column of ``[v0 < ... < vk]`` carries ``(-1)**i`` at the face omitting
    ``vi`` (integer mode) or 1 at every face (GF(2) mode).
    """
    _check_mode(mode)
    if k < 1:
        raise ValueError("boundary dimension must be >= 1")
    rows = c.simplexes(k - 1)
    cols = c.simplexes(k)
    dtype = np.uint8 if mode == "gf2" else np.int64
    m = np.zeros((len(rows), len(cols)), dtype=dtype)
    index = {s: i for i, s in enumerate(rows)}
    for j, s in enumerate(cols):
        for i in range(len(s)):
            r = index[s[:i] + s[i + 1:]]
            m[r, j] = 1 if mode == "gf2" else (-1) ** i
    return BoundaryMatrix(rows, cols, m, mode)


def _gf2_columns(c: SimplicialComplex, k: int) -> list[int]:
    index = {s: i for i, s in enumerate(c.simplexes(k - 1))}
    cols = []
    for s in c.simplexes(k):
        bits = 0
        for i in range(len(s)):
            bits |= 1 << index[s[:i] + s[i + 1:]]
        cols.append(bits)
    return cols


def gf2_rank(columns: list[int]) -> int:
    """Rank over GF(2) of a matrix given as bit-packed columns."""
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        while col:
            low = col.bit_length() - 1
            other = pivots.get(low)
            if other is None:
                pivots[low] = col
                rank += 1
                break
            col ^= other
    return rank


def gf2_matrix_rank(m: np.ndarray) -> int:
    m = np.asarray(m) % 2
    cols = []
    for j in range(m.shape[1]):
        bits = 0
        for i in np.flatnonzero(m[:, j]):
            bits |= 1 << int(i)
        cols.append(bits)
    return gf2_rank(cols)


def smith_normal_form(matrix) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form of an integer matrix.

    Works on a copy held as Python ints, so entries never overflow. The pivot
    is always an entry of smallest nonzero magnitude in the remaining block.
    The returned invariant factors are positive and each divides the next.
    """
    a = [[int(x) for x in row] for row in np.asarray(matrix, dtype=object)]
    n_rows = len(a)
    n_cols = len(a[0]) if n_rows else 0
    diag: list[int] = []
    t = 0
    while t < n_rows and t < n_cols:
        best = None
        for i in range(t, n_rows):
            row = a[i]
            for j in range(t, n_cols):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, n_rows):
                q = a[i][t]
                if q:
                    f = q // p
                    if f:
                        ri, rt = a[i], a[t]
                        for j in range(t, n_cols):
                            ri[j] -= f * rt[j]
                    if a[i][t]:
                        dirty = True
            rt = a[t]
            for j in range(t + 1, n_cols):
                q = rt[j]
                if q:
                    f = q // p
                    if f:
                        for row in a[t:]:
                            row[j] -= f * row[t]
                    if rt[j]:
                        dirty = True
            if not dirty:
                # block is split off; enforce divisibility of the rest
                bad = None
                for i in range(t + 1, n_rows):
                    for j in range(t + 1, n_cols):
                        if a[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                rt, rb = a[t], a[bad]
                for j in range(t, n_cols):
                    rt[j] += rb[j]
                continue
            # a smaller remainder appeared in row/column t: move it to the pivot
            best = (abs(p), t, t)
            for i in range(t + 1, n_rows):
                v = a[i][t]
                if v and abs(v) < best[0]:
                    best = (abs(v), i, t)
            for j in range(t + 1, n_cols):
                v = a[t][j]
                if v and abs(v) < best[0]:
                    best = (abs(v), t, j)
            _, pi, pj = best
            a[t], a[pi] = a[pi], a[t]
            if pj != t:
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def betti_numbers(c: SimplicialComplex, mode: Mode = "gf2") -> BettiVector:
    """Betti numbers ``b_k = dim ker d_k - rank d_{k+1}`` for k = 0..dim(c).

    In integer mode ``torsion[k]`` lists the invariant factors > 1 of
    ``H_k`` over the integers.
    """
    _check_mode(mode)
    top = c.dimension()
    if top < 0:
        return BettiVector((), () if mode == "integer" else None)
    f = c.f_vector()
    ranks = [0] * (top + 2)
    factors: list[list[int]] = [[] for _ in range(top + 2)]
    for k in range(1, top + 1):
        if mode == "gf2":
            ranks[k] = gf2_rank(_gf2_columns(c, k))
        else:
            d = smith_normal_form(boundary_matrix(c, k, "integer").matrix)
            ranks[k] = len(d)
            factors[k] = [x for x in d if x > 1]
    betti = tuple(f[k] - ranks[k] - ranks[k + 1] for k in range(top + 1))
    if mode == "gf2":
        return BettiVector(betti)
    torsion = tuple(tuple(factors[k + 1]) for k in range(top + 1))
    return BettiVector(betti, torsion)


def connected_components(c: SimplicialComplex) -> list[list[int]]:
    """Vertex classes of the 1-skeleton, each sorted, ordered by smallest id."""
    parent = {v: v for v in c.vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in c.simplexes(1):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for v in c.vertices:
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values(), key=lambda g: g[0])


def dimension_census(c: SimplicialComplex) -> list[ComponentRecord]:
    """Per connected component: its vertices, top dimension and f-vector."""
    records = []
    comps = connected_components(c)
    owner = {v: i for i, comp in enumerate(comps) for v in comp}
    counts = [[0] * (c.dimension() + 1) for _ in comps]
    for s in c:
        counts[owner[s[0]]][len(s) - 1] += 1
    for i, comp in enumerate(comps):
        fv = counts[i]
        while fv and fv[-1] == 0:
            fv.pop()
        records.append(ComponentRecord(i, tuple(comp), len(fv) - 1, tuple(fv)))
    return records
