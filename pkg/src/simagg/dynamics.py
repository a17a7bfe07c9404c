"""Evolving random simplicial complexes with creation and deletion.

Each step runs three phases in a fixed order:

1. add ``n(t)`` fresh vertices;
2. mark every simplex of dimension >= 1 independently with probability
   ``p_del(t, dim)``, then remove the marked simplexes and all their cofaces;
3. run the level process for k = 1..N over the candidates of the current
   complex, accepting each with ``p_add(t, k)``.

Candidates rejected at one step are offered again at later steps.
Vertices are never removed by the kernel; remove them between steps with
:meth:`SimplicialComplex.discard` if needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Union

import numpy as np

from .complex import Simplex, SimplicialComplex
from .random_model import sample_levels

PHASE_ORDER = "add-vertices,delete,add-simplexes"

CountSpec = Union[int, Mapping[int, int], Callable[[int], int]]
ProbSpec = Union[float, Mapping, Callable[[int, int], float]]


def _count_fn(spec: CountSpec) -> Callable[[int], int]:
    if callable(spec):
        return spec
    if isinstance(spec, Mapping):
        return lambda t: spec.get(t, 0)
    return lambda t: spec


def _prob_fn(spec: ProbSpec) -> Callable[[int, int], float]:
    """Probabilities given as a constant, a callable ``(t, dim)``, or a mapping.

    Mapping keys may be ``(t, dim)`` pairs or bare dimensions; missing keys mean 0.
    """
    if callable(spec):
        return spec
    if isinstance(spec, Mapping):
        return lambda t, d: spec.get((t, d), spec.get(d, 0.0))
    return lambda t, d: spec


@dataclass
class EvolutionSchedule:
    n_new: CountSpec
    p_add: ProbSpec
    max_dim: int
    horizon: int
    p_del: ProbSpec = 0.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.horizon < 0:
            raise ValueError("horizon must be >= 0")
        if self.max_dim < 0:
            raise ValueError("max_dim must be >= 0")
        self.count_at = _count_fn(self.n_new)
        self.add_prob = _prob_fn(self.p_add)
        self.del_prob = _prob_fn(self.p_del)

    def _check(self, t: int) -> None:
        n = self.count_at(t)
        if n < 0:
            raise ValueError(f"n({t}) = {n} is negative")
        for d in range(1, self.max_dim + 1):
            for name, fn in (("p_add", self.add_prob), ("p_del", self.del_prob)):
                q = fn(t, d)
                if not 0 <= q <= 1:
                    raise ValueError(f"{name}({t}, {d}) = {q} outside [0, 1]")


@dataclass
class StepEvents:
    t: int
    added_vertices: list[int] = field(default_factory=list)
    removed: list[Simplex] = field(default_factory=list)
    accepted: list[Simplex] = field(default_factory=list)


@dataclass
class EvolutionTrace:
    states: list[SimplicialComplex]
    events: list[StepEvents]
    seed: int | None = None
    phase_order: str = PHASE_ORDER

    @property
    def final(self) -> SimplicialComplex:
        return self.states[-1]


def step(
    c: SimplicialComplex,
    t: int,
    sched: EvolutionSchedule,
    rng: np.random.Generator,
) -> tuple[SimplicialComplex, StepEvents]:
    """Advance ``c`` by one time step; ``c`` itself is left untouched."""
    sched._check(t)
    out = c.copy()
    events = StepEvents(t)

    start = max(out.vertices, default=-1) + 1
    for v in range(start, start + sched.count_at(t)):
        out._add_unchecked((v,))
        events.added_vertices.append(v)

    marked: list[Simplex] = []
    for d in range(1, out.dimension() + 1):
        level = out.simplexes(d)
        if not level:
            continue
        draws = rng.random(len(level))
        q = sched.del_prob(t, d)
        marked.extend(s for s, u in zip(level, draws) if u < q)
    events.removed = out.discard_many(marked)

    events.accepted = sample_levels(out, sched.max_dim, lambda k, s: sched.add_prob(t, k), rng)
    return out, events


def run(sched: EvolutionSchedule) -> EvolutionTrace:
    """Evolve from the empty complex for t = 0..horizon.

    ``states[0]`` is the empty complex, or the result of a full step at t = 0
    when ``n(0) > 0``.
    """
    rng = np.random.default_rng(sched.seed)
    state = SimplicialComplex()
    ev0 = StepEvents(0)
    if sched.count_at(0) > 0:
        state, ev0 = step(state, 0, sched, rng)
    states, events = [state], [ev0]
    for t in range(1, sched.horizon + 1):
        state, ev = step(state, t, sched, rng)
        states.append(state)
        events.append(ev)
    return EvolutionTrace(states, events, seed=sched.seed)


def apply_events(c: SimplicialComplex, ev: StepEvents) -> SimplicialComplex:
    out = c.copy()
    for v in ev.added_vertices:
        out.add((v,))
    out.discard_many(ev.removed)
    for s in ev.accepted:
        out.add(s)
    return out


def replay(trace: EvolutionTrace) -> SimplicialComplex:
    """Rebuild the final state from the logged events alone."""
    state = SimplicialComplex()
    for ev in trace.events:
        state = apply_events(state, ev)
    return state
