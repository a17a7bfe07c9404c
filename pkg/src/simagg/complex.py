"""Abstract simplicial complexes stored as full face-closed sets.

A simplex is a strictly ascending tuple of non-negative integer vertex ids.
Every mutation keeps the complex closed under taking faces: inserting a
simplex adds all of its faces, removing one removes everything built on it.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

Simplex = tuple[int, ...]

DEFAULT_MAX_DIM = 16
DEFAULT_MAX_VERTICES = 10**6


class SimplexError(ValueError):
    """Raised for malformed simplexes (unsorted, duplicated or negative ids)."""


class ComplexLimitError(ValueError):
    """Raised when a mutation would exceed the configured size caps."""


def as_simplex(vertices: Iterable[int]) -> Simplex:
    """Validate ``vertices`` as a canonical simplex and return it as a tuple.

    The vertices must already be strictly ascending; nothing is sorted here so
    that callers notice inconsistent input instead of silently aliasing it.
    """
    s = tuple(vertices)
    if not s:
        raise SimplexError("a simplex needs at least one vertex")
    for v in s:
        if isinstance(v, bool) or not isinstance(v, int):
            raise SimplexError(f"vertex ids must be integers, got {v!r}")
        if v < 0:
            raise SimplexError(f"vertex ids must be non-negative, got {v}")
    for a, b in zip(s, s[1:]):
        if a >= b:
            raise SimplexError(f"vertices must be strictly ascending: {list(s)}")
    return s


def dimension_of(s: Sequence[int]) -> int:
    return len(s) - 1


def faces(s: Simplex) -> list[Simplex]:
    """Codimension-one faces of ``s``; the i-th entry omits ``s[i]``."""
    if len(s) == 1:
        return []
    return [s[:i] + s[i + 1:] for i in range(len(s))]


def all_faces(s: Simplex) -> Iterator[Simplex]:
    """Every non-empty subset of ``s``, including ``s`` itself."""
    for size in range(1, len(s) + 1):
        yield from combinations(s, size)


class SimplicialComplex:
    """A finite, face-closed set of simplexes.

    Simplexes are kept per dimension, so ``self[k]`` style enumeration of the
    k-simplexes is cheap. ``max_dim`` and ``max_vertices`` are safety caps.
    """

    def __init__(
        self,
        simplexes: Iterable[Iterable[int]] = (),
        *,
        max_dim: int = DEFAULT_MAX_DIM,
        max_vertices: int = DEFAULT_MAX_VERTICES,
    ) -> None:
        self.max_dim = max_dim
        self.max_vertices = max_vertices
        self._levels: list[set[Simplex]] = []
        for s in simplexes:
            self.add(s)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_vertices(cls, vertices: Iterable[int], **kwargs) -> "SimplicialComplex":
        if isinstance(vertices, range) and vertices.start >= 0 and vertices.step == 1:
            new = cls(**kwargs)
            if len(vertices) > new.max_vertices:
                raise ComplexLimitError(f"vertex count would exceed cap {new.max_vertices}")
            if len(vertices):
                new._levels = [{(v,) for v in vertices}]
            return new
        return cls(((v,) for v in vertices), **kwargs)

    def copy(self) -> "SimplicialComplex":
        new = SimplicialComplex(max_dim=self.max_dim, max_vertices=self.max_vertices)
        new._levels = [set(level) for level in self._levels]
        return new

    # -- mutation -------------------------------------------------------------

    def add(self, s: Iterable[int]) -> None:
        """Insert ``s`` together with all of its faces (in place)."""
        s = as_simplex(s)
        d = dimension_of(s)
        if d > self.max_dim:
            raise ComplexLimitError(f"simplex dimension {d} exceeds cap {self.max_dim}")
        if self.contains(s):
            return
        new_vertices = sum(1 for v in s if not self.contains((v,)))
        if self.num_vertices + new_vertices > self.max_vertices:
            raise ComplexLimitError(f"vertex count would exceed cap {self.max_vertices}")
        self._add_closed(s)

    def _add_closed(self, s: Simplex) -> None:
        while len(self._levels) < len(s):
            self._levels.append(set())
        for size in range(len(s), 0, -1):
            level = self._levels[size - 1]
            for f in combinations(s, size):
                level.add(f)

    def _add_unchecked(self, s: Simplex) -> None:
        # caller guarantees s is canonical and its whole boundary is present
        while len(self._levels) < len(s):
            self._levels.append(set())
        self._levels[len(s) - 1].add(s)

    def discard(self, s: Iterable[int]) -> list[Simplex]:
        """Remove ``s`` and every simplex having it as a face (in place).

        Returns the removed simplexes in canonical order; absent ``s`` is a no-op.
        """
        s = as_simplex(s)
        if not self.contains(s):
            return []
        return self.discard_many([s])

    def discard_many(self, marked: Iterable[Simplex]) -> list[Simplex]:
        """Remove all ``marked`` simplexes and all their cofaces at once."""
        by_dim: dict[int, set[Simplex]] = {}
        for s in marked:
            if self.contains(s):
                by_dim.setdefault(len(s) - 1, set()).add(s)
        if not by_dim:
            return []
        removed: list[Simplex] = []
        below: set[Simplex] = set()
        for d in range(min(by_dim), len(self._levels)):
            level = self._levels[d]
            gone = set(by_dim.get(d, ()))
            if below:
                gone.update(t for t in level if any(f in below for f in faces(t)))
            level -= gone
            removed.extend(sorted(gone))
            below = gone
        self._trim()
        return removed

    def _trim(self) -> None:
        while self._levels and not self._levels[-1]:
            self._levels.pop()

    # -- queries ----------------------------------------------------------------

    def contains(self, s: Sequence[int]) -> bool:
        d = len(s) - 1
        return 0 <= d < len(self._levels) and tuple(s) in self._levels[d]

    __contains__ = contains

    def simplexes(self, k: int) -> list[Simplex]:
        """The k-simplexes in lexicographic order."""
        if 0 <= k < len(self._levels):
            return sorted(self._levels[k])
        return []

    def level(self, k: int) -> frozenset[Simplex]:
        if 0 <= k < len(self._levels):
            return frozenset(self._levels[k])
        return frozenset()

    @property
    def vertices(self) -> list[int]:
        return [s[0] for s in self.simplexes(0)]

    @property
    def num_vertices(self) -> int:
        return len(self._levels[0]) if self._levels else 0

    def dimension(self) -> int:
        return len(self._levels) - 1

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self._levels)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector()))

    def maximal_simplexes(self) -> list[Simplex]:
        """Simplexes that are not a face of any other simplex, sorted lexicographically."""
        covered: set[Simplex] = set()
        maximal = []
        for d in range(len(self._levels) - 1, -1, -1):
            for s in self._levels[d]:
                if s not in covered:
                    maximal.append(s)
            if d > 0:
                covered = {f for s in self._levels[d] for f in faces(s)}
        return sorted(maximal)

    def face_set(self, s: Sequence[int]) -> list[Simplex]:
        """All faces of ``s`` (proper or not) present in the complex."""
        s = as_simplex(s)
        return [f for f in all_faces(s) if self.contains(f)]

    def cofaces(self, s: Sequence[int]) -> list[Simplex]:
        """Simplexes of the complex having ``s`` as a (non-strict) face."""
        s = as_simplex(s)
        vs = set(s)
        out = []
        for d in range(len(s) - 1, len(self._levels)):
            out.extend(t for t in sorted(self._levels[d]) if vs.issubset(t))
        return out

    def skeleton(self, k: int) -> "SimplicialComplex":
        new = SimplicialComplex(max_dim=self.max_dim, max_vertices=self.max_vertices)
        new._levels = [set(level) for level in self._levels[: max(k, -1) + 1]]
        return new

    def candidates(self, k: int) -> list[Simplex]:
        """Absent k-simplexes whose every (k-1)-face is present, in lexicographic order."""
        if k < 1:
            raise ValueError("candidate dimension must be >= 1")
        if k - 1 >= len(self._levels):
            return []
        lower = self._levels[k - 1]
        present = self._levels[k] if k < len(self._levels) else set()
        if k == 1:
            vs = sorted(v for (v,) in lower)
            return [e for e in combinations(vs, 2) if e not in present]
        adjacency = self._adjacency()
        out = []
        for base in lower:
            last = base[-1]
            for v in adjacency.get(last, ()):
                if v <= last:
                    continue
                s = base + (v,)
                if s in present:
                    continue
                # s[-1] = v, so the faces omitting an entry of base must be checked
                if all(s[:i] + s[i + 1:] in lower for i in range(k)):
                    out.append(s)
        out.sort()
        return out

    def _adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {}
        if len(self._levels) > 1:
            for a, b in self._levels[1]:
                adj.setdefault(a, []).append(b)
                adj.setdefault(b, []).append(a)
        return adj

    def neighbors(self, v: int) -> list[int]:
        return sorted(self._adjacency().get(v, ()))

    def is_closed(self) -> bool:
        """Check the face-closure invariant from scratch."""
        for d in range(1, len(self._levels)):
            lower = self._levels[d - 1]
            if any(f not in lower for s in self._levels[d] for f in faces(s)):
                return False
        return not self._levels or bool(self._levels[-1])

    def relabel(self, mapping: dict[int, int]) -> "SimplicialComplex":
        """Image of the complex under an injective vertex relabelling."""
        new = SimplicialComplex(max_dim=self.max_dim, max_vertices=self.max_vertices)
        for s in self.maximal_simplexes():
            new.add(tuple(sorted(mapping[v] for v in s)))
        return new

    # -- dunder -----------------------------------------------------------------

    def __iter__(self) -> Iterator[Simplex]:
        for k in range(len(self._levels)):
            yield from self.simplexes(k)

    def __len__(self) -> int:
        return sum(self.f_vector())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._levels == other._levels

    def __hash__(self) -> int:
        return hash(frozenset(s for level in self._levels for s in level))

    def __repr__(self) -> str:
        return f"SimplicialComplex({self.maximal_simplexes()!r})"


def insert_with_closure(c: SimplicialComplex, s: Iterable[int]) -> SimplicialComplex:
    out = c.copy()
    out.add(s)
    return out


def remove_with_cofaces(c: SimplicialComplex, s: Iterable[int]) -> SimplicialComplex:
    out = c.copy()
    out.discard(s)
    return out


def k_skeleton(c: SimplicialComplex, k: int) -> SimplicialComplex:
    if k < 0:
        raise ValueError("skeleton dimension must be non-negative")
    return c.skeleton(k)


def candidate_simplexes(c: SimplicialComplex, k: int) -> set[Simplex]:
    return set(c.candidates(k))


def f_vector(c: SimplicialComplex) -> tuple[int, ...]:
    return c.f_vector()


def euler_characteristic(c: SimplicialComplex) -> int:
    return c.euler_characteristic()


def maximal_simplexes(c: SimplicialComplex) -> set[Simplex]:
    return set(c.maximal_simplexes())


def full_simplex(vertices: Sequence[int]) -> SimplicialComplex:
    """The closure of a single simplex."""
    return SimplicialComplex([vertices])


def boundary_complex(vertices: Sequence[int]) -> SimplicialComplex:
    """All proper faces of the simplex on ``vertices`` (a sphere of one lower dimension)."""
    s = as_simplex(vertices)
    return SimplicialComplex(faces(s)) if len(s) > 1 else SimplicialComplex()
