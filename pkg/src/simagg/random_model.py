"""Level-by-level random simplicial complexes S(n, N, p).

Start from n isolated vertices. For k = 1..N the candidates are the absent
k-simplexes whose whole boundary lies in the completed (k-1)-skeleton; each
is accepted independently with probability p. Candidates are visited in
lexicographic order and consume one uniform draw each, so a seed fixes the
realisation.

:func:`enumerate_distribution` is the exact counterpart: it walks every
branch of the same process with rational arithmetic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Callable

import numpy as np

from .complex import Simplex, SimplicialComplex

DEFAULT_CHOICE_CAP = 30


class CombinatorialExplosionError(RuntimeError):
    """The exact enumeration would need more binary choices than allowed."""

    def __init__(self, choices: int, cap: int) -> None:
        super().__init__(
            f"exact enumeration needs up to {choices} binary choices, cap is {cap}"
        )
        self.choices = choices
        self.cap = cap


@dataclass(frozen=True)
class RandomComplexConfig:
    n: int
    N: int
    p: float | Fraction
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count n must be >= 0")
        if self.N < 0:
            raise ValueError("max dimension N must be >= 0")
        if not 0 <= self.p <= 1:
            raise ValueError(f"probability must lie in [0, 1], got {self.p}")


@dataclass
class RealizationDistribution:
    entries: list[tuple[SimplicialComplex, Fraction]]

    @property
    def total(self) -> Fraction:
        return sum((p for _, p in self.entries), Fraction(0))

    def __len__(self) -> int:
        return len(self.entries)

    def probability_of(self, c: SimplicialComplex) -> Fraction:
        for other, p in self.entries:
            if other == c:
                return p
        return Fraction(0)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def trial_seed(seed: int, trial: int) -> list[int]:
    """Seed entropy for one trial of a batch; independent of batch scheduling."""
    return [seed, trial]


def keyed_uniforms(seed: int) -> Callable[[Simplex], float]:
    """One fixed uniform per potential simplex, derived from (seed, simplex).

    Sampling with these draws couples runs at different probabilities: a
    simplex accepted at p is accepted at every p' >= p.
    """
    cache: dict[Simplex, float] = {}

    def draw(s: Simplex) -> float:
        u = cache.get(s)
        if u is None:
            u = float(np.random.default_rng([seed, len(s), *s]).random())
            cache[s] = u
        return u

    return draw


def sample_levels(
    base: SimplicialComplex,
    max_dim: int,
    probability: Callable[[int, Simplex], float],
    rng: np.random.Generator | None = None,
    uniforms: Callable[[Simplex], float] | None = None,
) -> list[Simplex]:
    """Run the level process on ``base`` in place; return accepted simplexes.

    ``probability(k, s)`` gives the acceptance probability of candidate ``s``
    at level ``k``. Draws come from ``uniforms`` when given, else one
    ``rng.random()`` value per candidate in lexicographic order.
    """
    accepted: list[Simplex] = []
    for k in range(1, max_dim + 1):
        cands = base.candidates(k)
        if not cands:
            if k > base.dimension() + 1:
                break
            continue
        if uniforms is None:
            draws = rng.random(len(cands))
        else:
            draws = [uniforms(s) for s in cands]
        for s, u in zip(cands, draws):
            if u < probability(k, s):
                base._add_unchecked(s)
                accepted.append(s)
    return accepted


def generate(
    cfg: RandomComplexConfig,
    uniforms: Callable[[Simplex], float] | None = None,
    rng: np.random.Generator | None = None,
) -> SimplicialComplex:
    """Draw one realisation of S(n, N, p) on vertices 0..n-1."""
    c = SimplicialComplex.from_vertices(range(cfg.n))
    p = float(cfg.p)
    if rng is None and uniforms is None:
        rng = make_rng(cfg.seed)
    sample_levels(c, cfg.N, lambda k, s: p, rng, uniforms)
    return c


def _exact_probability(p) -> Fraction:
    if isinstance(p, float):
        raise TypeError("exact enumeration needs a rational probability, not a float")
    if isinstance(p, str):
        p = Fraction(p)
    if not isinstance(p, Rational):
        raise TypeError(f"unsupported probability type {type(p).__name__}")
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"probability must lie in [0, 1], got {p}")
    return p


def choice_count(n: int, N: int) -> int:
    """Upper bound on binary choices along any branch: all potential k-simplexes, k = 1..N."""
    return sum(comb(n, k + 1) for k in range(1, N + 1))


def enumerate_distribution(
    n: int,
    N: int,
    p,
    cap: int = DEFAULT_CHOICE_CAP,
    probability: Callable[[Simplex], Fraction] | None = None,
) -> RealizationDistribution:
    """Exact law of the level process over all realisations.

    ``probability`` overrides the constant ``p`` per candidate (used for
    hierarchical tables); it must return exact rationals.
    """
    if n < 0 or N < 0:
        raise ValueError("n and N must be non-negative")
    const = _exact_probability(p) if probability is None else None
    choices = choice_count(n, N)
    if choices > cap:
        raise CombinatorialExplosionError(choices, cap)

    def prob_of(s: Simplex) -> Fraction:
        return const if probability is None else _exact_probability(probability(s))

    results: dict[frozenset, tuple[SimplicialComplex, Fraction]] = {}

    def walk(c: SimplicialComplex, k: int, weight: Fraction) -> None:
        cands = c.candidates(k) if k <= N else []
        while k <= N and not cands:
            k += 1
            cands = c.candidates(k) if k <= N else []
        if k > N:
            key = frozenset(c)
            prev = results.get(key)
            results[key] = (c, weight + (prev[1] if prev else 0))
            return
        probs = [prob_of(s) for s in cands]
        for mask in range(1 << len(cands)):
            w = weight
            for i, q in enumerate(probs):
                w *= q if mask >> i & 1 else 1 - q
                if not w:
                    break
            if not w:
                continue
            nxt = c.copy()
            for i, s in enumerate(cands):
                if mask >> i & 1:
                    nxt._add_unchecked(s)
            walk(nxt, k + 1, w)

    walk(SimplicialComplex.from_vertices(range(n)), 1, Fraction(1))
    entries = sorted(results.values(), key=lambda e: (len(e[0]), sorted(e[0])))
    return RealizationDistribution(entries)


def empirical_distribution(cfg: RandomComplexConfig, trials: int) -> Counter:
    """Frequencies of realisations over ``trials`` independent seeded draws.

    Trial ``i`` draws from a generator seeded by ``(cfg.seed, i)``. Keys are
    canonical complex encodings (see :func:`simagg.serialize.encode_complex`).
    """
    from .serialize import encode_complex

    if trials < 1:
        raise ValueError("trials must be >= 1")
    raw: Counter = Counter()
    examples: dict[frozenset, SimplicialComplex] = {}
    for i in range(trials):
        rng = np.random.default_rng(trial_seed(cfg.seed, i))
        c = generate(cfg, rng=rng)
        key = frozenset(c)
        if key not in examples:
            examples[key] = c
        raw[key] += 1
    return Counter({encode_complex(examples[k]): n for k, n in raw.items()})


def edge_counts(cfg: RandomComplexConfig, trials: int) -> np.ndarray:
    """Edge count of each trial's realisation, trials seeded as in :func:`empirical_distribution`."""
    out = np.empty(trials, dtype=np.int64)
    for i in range(trials):
        rng = np.random.default_rng(trial_seed(cfg.seed, i))
        f = generate(cfg, rng=rng).f_vector()
        out[i] = f[1] if len(f) > 1 else 0
    return out
