"""Canonical JSON documents for complexes, probability tables, distributions and traces.

Complexes are stored as their vertex list plus sorted maximal simplexes, so
a document can never describe a complex that is not face-closed. Output is
compact, key-ordered and newline-terminated, hence byte-stable.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .complex import SimplicialComplex

FORMAT_VERSION = "1"


class DocumentError(ValueError):
    """Schema violation; ``path`` is a JSONPath-like pointer to the offending value."""

    def __init__(self, path: str, message: str) -> None:
        super().__init__(f"{path}: {message}")
        self.path = path


def dumps(doc: Any) -> str:
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False) + "\n"


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("$", f"invalid JSON ({exc})") from exc


def _expect(cond: bool, path: str, message: str) -> None:
    if not cond:
        raise DocumentError(path, message)


def _id_list(value: Any, path: str) -> tuple[int, ...]:
    _expect(isinstance(value, list), path, "expected a list of vertex ids")
    for i, v in enumerate(value):
        _expect(
            isinstance(v, int) and not isinstance(v, bool) and v >= 0,
            f"{path}[{i}]",
            "expected a non-negative integer",
        )
        if i:
            _expect(value[i - 1] < v, f"{path}[{i}]", "ids must be strictly ascending")
    return tuple(value)


def _fraction_text(p: Fraction) -> str:
    return str(Fraction(p))


# -- complexes ------------------------------------------------------------------


def complex_to_doc(c: SimplicialComplex) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "vertices": c.vertices,
        "maximal_simplexes": [list(s) for s in c.maximal_simplexes() if len(s) > 1],
    }


def complex_from_doc(doc: Any, path: str = "$") -> SimplicialComplex:
    _expect(isinstance(doc, dict), path, "expected an object")
    for key in ("vertices", "maximal_simplexes"):
        _expect(key in doc, path, f"missing key {key!r}")
    version = doc.get("format_version", FORMAT_VERSION)
    _expect(version == FORMAT_VERSION, f"{path}.format_version", f"unsupported version {version!r}")
    vertices = _id_list(doc["vertices"], f"{path}.vertices")
    maximal = doc["maximal_simplexes"]
    _expect(isinstance(maximal, list), f"{path}.maximal_simplexes", "expected a list")
    seen = set()
    c = SimplicialComplex.from_vertices(vertices)
    for i, raw in enumerate(maximal):
        p = f"{path}.maximal_simplexes[{i}]"
        s = _id_list(raw, p)
        _expect(len(s) > 0, p, "empty simplex")
        _expect(s not in seen, p, "duplicate maximal simplex")
        seen.add(s)
        missing = [v for v in s if not c.contains((v,))]
        _expect(not missing, p, f"vertices {missing} not listed in $.vertices")
        c.add(s)
    return c


def encode_complex(c: SimplicialComplex) -> str:
    """Canonical single-line encoding, used as a dictionary key."""
    return dumps(complex_to_doc(c)).rstrip("\n")


def write_complex(c: SimplicialComplex) -> str:
    return dumps(complex_to_doc(c))


def read_complex(text: str) -> SimplicialComplex:
    return complex_from_doc(_loads(text))


# -- probability tables -----------------------------------------------------------


def table_to_doc(table) -> dict:
    entries = [{"tuple": list(k), "p": v} for k, v in sorted(table.entries.items())]
    return {"default": table.default_p, "N": table.max_dim, "entries": entries}


def table_from_doc(doc: Any, path: str = "$"):
    from .leadership import ProbabilityTable

    _expect(isinstance(doc, dict), path, "expected an object")
    for key in ("default", "N", "entries"):
        _expect(key in doc, path, f"missing key {key!r}")
    default = doc["default"]
    _expect(_is_probability(default), f"{path}.default", "expected a number in [0, 1]")
    max_dim = doc["N"]
    _expect(isinstance(max_dim, int) and not isinstance(max_dim, bool) and max_dim >= 1,
            f"{path}.N", "expected an integer >= 1")
    raw_entries = doc["entries"]
    _expect(isinstance(raw_entries, list), f"{path}.entries", "expected a list")
    entries: dict[tuple[int, ...], float] = {}
    for i, item in enumerate(raw_entries):
        p = f"{path}.entries[{i}]"
        _expect(isinstance(item, dict) and "tuple" in item and "p" in item, p,
                "expected an object with 'tuple' and 'p'")
        ids = item["tuple"]
        _expect(isinstance(ids, list), f"{p}.tuple", "expected a list of vertex ids")
        key = _id_list(sorted(ids) if all(isinstance(v, int) for v in ids) else ids, f"{p}.tuple")
        _expect(2 <= len(key) <= max_dim + 1, f"{p}.tuple",
                f"tuple size must be between 2 and N+1 = {max_dim + 1}")
        _expect(key not in entries, f"{p}.tuple", "duplicate tuple")
        _expect(_is_probability(item["p"]), f"{p}.p", "expected a number in [0, 1]")
        entries[key] = item["p"]
    return ProbabilityTable(entries, default, max_dim)


def _is_probability(x: Any) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool) and 0 <= x <= 1


def write_table(table) -> str:
    return dumps(table_to_doc(table))


def read_table(text: str):
    return table_from_doc(_loads(text))


# -- exact distributions -------------------------------------------------------------


def distribution_to_doc(dist, n: int, N: int, p) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "n": n,
        "N": N,
        "p": _fraction_text(p) if not isinstance(p, str) else p,
        "total": _fraction_text(dist.total),
        "realizations": [
            {"complex": complex_to_doc(c), "probability": _fraction_text(q)}
            for c, q in dist.entries
        ],
    }


def distribution_from_doc(doc: Any, path: str = "$"):
    from .random_model import RealizationDistribution

    _expect(isinstance(doc, dict) and "realizations" in doc, path, "missing key 'realizations'")
    rows = doc["realizations"]
    _expect(isinstance(rows, list), f"{path}.realizations", "expected a list")
    entries = []
    for i, row in enumerate(rows):
        p = f"{path}.realizations[{i}]"
        _expect(isinstance(row, dict) and "complex" in row and "probability" in row, p,
                "expected an object with 'complex' and 'probability'")
        try:
            q = Fraction(row["probability"])
        except (TypeError, ValueError) as exc:
            raise DocumentError(f"{p}.probability", "expected a rational like '1/8'") from exc
        entries.append((complex_from_doc(row["complex"], f"{p}.complex"), q))
    return RealizationDistribution(entries)


# -- evolution traces -----------------------------------------------------------------


def _event_to_doc(ev) -> dict:
    return {
        "t": ev.t,
        "added_vertices": list(ev.added_vertices),
        "removed": [list(s) for s in ev.removed],
        "accepted": [list(s) for s in ev.accepted],
    }


def trace_to_doc(trace) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "phase_order": trace.phase_order,
        "seed": trace.seed,
        "states": [complex_to_doc(c) for c in trace.states],
        "events": [_event_to_doc(ev) for ev in trace.events],
    }


def trace_from_doc(doc: Any, path: str = "$"):
    from .dynamics import EvolutionTrace, StepEvents

    _expect(isinstance(doc, dict), path, "expected an object")
    for key in ("states", "events"):
        _expect(key in doc and isinstance(doc[key], list), path, f"missing list {key!r}")
    states = [complex_from_doc(s, f"{path}.states[{i}]") for i, s in enumerate(doc["states"])]
    events = []
    for i, ev in enumerate(doc["events"]):
        p = f"{path}.events[{i}]"
        _expect(isinstance(ev, dict), p, "expected an object")
        events.append(
            StepEvents(
                t=ev.get("t", i),
                added_vertices=list(_id_list(ev.get("added_vertices", []), f"{p}.added_vertices")),
                removed=[_id_list(s, f"{p}.removed[{j}]") for j, s in enumerate(ev.get("removed", []))],
                accepted=[_id_list(s, f"{p}.accepted[{j}]") for j, s in enumerate(ev.get("accepted", []))],
            )
        )
    return EvolutionTrace(states, events, seed=doc.get("seed"), phase_order=doc.get("phase_order", ""))


def write_trace(trace) -> str:
    return dumps(trace_to_doc(trace))


def read_trace(text: str):
    return trace_from_doc(_loads(text))
