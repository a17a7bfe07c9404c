"""Command-line front end.

Exit codes: 0 success, 1 validation or usage error, 2 enumeration cap exceeded.
With ``--out PATH`` the result goes to PATH and a run manifest (argv, seed,
sha256 of the output, tool version) to ``PATH.manifest.json``; ``replay``
re-runs a manifest and checks the checksum.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .analysis import diffusion, probe_matrix, q_components
from .complex import ComplexLimitError, SimplexError
from .dynamics import EvolutionSchedule, run
from .homology import betti_numbers, dimension_census
from .leadership import HubQuery, generate_hierarchical, hub_profile, is_hub
from .random_model import (
    DEFAULT_CHOICE_CAP,
    CombinatorialExplosionError,
    RandomComplexConfig,
    enumerate_distribution,
    generate,
)
from .serialize import (
    DocumentError,
    complex_to_doc,
    distribution_to_doc,
    dumps,
    read_complex,
    read_table,
    read_trace,
    trace_to_doc,
    write_complex,
)

STOCHASTIC = {"gen", "gen-hier", "evolve"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def probability(text: str) -> Fraction:
    """Parse '1/2', '0.3' or '1' into an exact rational in [0, 1]."""
    try:
        p = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a probability: {text!r}")
    if not 0 <= p <= 1:
        raise argparse.ArgumentTypeError(f"probability {text} outside [0, 1]")
    return p


def probability_list(text: str) -> list[Fraction]:
    return [probability(x) for x in text.split(",")]


def id_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated ids: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="RNG seed (default 0)")
    common.add_argument("--out", default=None, help="write output here instead of stdout")
    common.add_argument("--format", choices=["json", "tsv"], default=None)

    parser = _Parser(prog="simagg", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    p = sub.add_parser("gen", parents=[common], help="sample a random complex S(n, N, p)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-N", type=int, required=True)
    p.add_argument("-p", type=probability, required=True)

    p = sub.add_parser("gen-hier", parents=[common], help="sample a hierarchical complex")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-N", type=int, default=None, help="defaults to the table's N")
    p.add_argument("--table", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="exact distribution of S(n, N, p)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-N", type=int, required=True)
    p.add_argument("-p", type=probability, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CHOICE_CAP)

    p = sub.add_parser("evolve", parents=[common], help="evolving complex trace")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--horizon", type=int, required=True)
    p.add_argument("--n0", type=int, default=0, help="vertices at t=0")
    p.add_argument("--n-new", type=int, default=0, help="new vertices per step t>=1")
    p.add_argument("--p-add", type=probability_list, required=True,
                   help="one value, or comma list per dimension 1..N")
    p.add_argument("--p-del", type=probability_list, default=[Fraction(0)])

    p = sub.add_parser("betti", parents=[common], help="Betti numbers of a complex document")
    p.add_argument("complex")
    p.add_argument("--integer", action="store_true", help="integer coefficients with torsion")
    p.add_argument("--dims", type=int, default=None, help="pad with zeros to this many entries")

    p = sub.add_parser("census", parents=[common], help="per-component dimension census")
    p.add_argument("complex")

    p = sub.add_parser("qcomp", parents=[common], help="q-connected components")
    p.add_argument("complex")
    p.add_argument("-q", type=int, required=True)

    p = sub.add_parser("diffuse", parents=[common], help="flooding hop counts")
    p.add_argument("complex")
    p.add_argument("--source", type=int, default=None)
    p.add_argument("--target", type=int, default=None)
    p.add_argument("--entries", type=id_list, default=None)
    p.add_argument("--exits", type=id_list, default=None)
    p.add_argument("--min-dim", type=int, default=1)

    p = sub.add_parser("hubs", parents=[common], help="simplicial leaders of a table")
    p.add_argument("--table", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--universe", type=id_list, default=None,
                   help="vertex ids; defaults to all ids in the table")
    p.add_argument("-t", type=float, default=None, help="test this order for every vertex")

    p = sub.add_parser("emit-plot-data", parents=[common], help="TSV curves for plotting")
    p.add_argument("kind", choices=["rounds", "trace"])
    p.add_argument("input", help="complex document (rounds) or trace document (trace)")
    p.add_argument("--source", type=int, default=None)
    p.add_argument("--min-dim", type=int, default=1)

    p = sub.add_parser("replay", help="re-run a manifest and verify its checksum")
    p.add_argument("manifest")
    return parser


def _tsv(header: list[str], rows) -> str:
    lines = ["\t".join(header)]
    lines.extend("\t".join("" if x is None else str(x) for x in row) for row in rows)
    return "\n".join(lines) + "\n"


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _dims_prob(values: list[Fraction], N: int):
    if len(values) == 1:
        return float(values[0])
    if len(values) != N:
        raise ValueError(f"expected 1 or N={N} probabilities, got {len(values)}")
    return {d: float(v) for d, v in enumerate(values, start=1)}


def _cmd_gen(args) -> str:
    c = generate(RandomComplexConfig(args.n, args.N, args.p, args.seed))
    if args.format == "tsv":
        return _tsv(["simplex"], ([" ".join(map(str, s))] for s in c.maximal_simplexes()))
    return write_complex(c)


def _cmd_gen_hier(args) -> str:
    table = read_table(_read(args.table))
    N = table.max_dim if args.N is None else args.N
    c = generate_hierarchical(args.n, N, table, args.seed)
    if args.format == "tsv":
        return _tsv(["simplex"], ([" ".join(map(str, s))] for s in c.maximal_simplexes()))
    return write_complex(c)


def _cmd_enumerate(args) -> str:
    dist = enumerate_distribution(args.n, args.N, args.p, cap=args.cap)
    if args.format == "tsv":
        rows = (
            (i, c.f_vector(), json.dumps(complex_to_doc(c)["maximal_simplexes"]), q)
            for i, (c, q) in enumerate(dist.entries)
        )
        rows = ((i, " ".join(map(str, f)), m, q) for i, f, m, q in rows)
        return _tsv(["index", "f_vector", "maximal_simplexes", "probability"], rows)
    return dumps(distribution_to_doc(dist, args.n, args.N, args.p))


def _cmd_evolve(args) -> str:
    n0, n_new = args.n0, args.n_new
    sched = EvolutionSchedule(
        n_new=lambda t: n0 if t == 0 else n_new,
        p_add=_dims_prob(args.p_add, args.N),
        p_del=_dims_prob(args.p_del, args.N),
        max_dim=args.N,
        horizon=args.horizon,
        seed=args.seed,
    )
    trace = run(sched)
    if args.format == "tsv":
        return _trace_tsv(trace)
    return dumps(trace_to_doc(trace))


def _trace_tsv(trace) -> str:
    width = max((len(s.f_vector()) for s in trace.states), default=0)
    header = ["t"] + [f"f{k}" for k in range(width)] + ["b0", "b1"]
    rows = []
    for t, s in enumerate(trace.states):
        f = list(s.f_vector()) + [0] * (width - len(s.f_vector()))
        b = list(betti_numbers(s)) + [0, 0]
        rows.append([t, *f, b[0], b[1]])
    return _tsv(header, rows)


def _cmd_betti(args) -> str:
    c = read_complex(_read(args.complex))
    bv = betti_numbers(c, "integer" if args.integer else "gf2")
    betti = list(bv.betti)
    if args.dims is not None and args.dims > len(betti):
        betti += [0] * (args.dims - len(betti))
    if args.format == "json":
        doc = {"betti": betti}
        if bv.torsion is not None:
            doc["torsion"] = [list(t) for t in bv.torsion]
        return dumps(doc)
    if args.format == "tsv":
        return _tsv(["dim", "betti"], enumerate(betti))
    return " ".join(map(str, betti)) + "\n"


def _cmd_census(args) -> str:
    recs = dimension_census(read_complex(_read(args.complex)))
    if args.format == "tsv":
        return _tsv(
            ["component", "vertex_count", "max_dim", "f_vector"],
            ((r.component, r.vertex_count, r.max_dim, " ".join(map(str, r.f_vector))) for r in recs),
        )
    return dumps([
        {"component": r.component, "vertices": list(r.vertices), "vertex_count": r.vertex_count,
         "max_dim": r.max_dim, "f_vector": list(r.f_vector)}
        for r in recs
    ])


def _cmd_qcomp(args) -> str:
    qc = q_components(read_complex(_read(args.complex)), args.q)
    if args.format == "tsv":
        rows = ((i, " ".join(map(str, s))) for i, cls in enumerate(qc.classes) for s in cls)
        return _tsv(["class", "simplex"], rows)
    return dumps({"q": qc.q, "classes": [[list(s) for s in cls] for cls in qc.classes]})


def _cmd_diffuse(args) -> str:
    c = read_complex(_read(args.complex))
    if args.entries is not None or args.exits is not None:
        entries = args.entries or args.exits
        exits = args.exits or entries
        m = probe_matrix(c, entries, exits, args.min_dim)
        if args.format == "tsv":
            return _tsv(["entry"] + [str(x) for x in exits], ([a, *row] for a, row in zip(entries, m)))
        return dumps({"entries": entries, "exits": exits, "hops": m})
    if args.source is None or args.target is None:
        raise ValueError("diffuse needs --source and --target, or --entries/--exits")
    rep = diffusion(c, args.source, args.target, args.min_dim)
    if args.format == "tsv":
        return _tsv(["round", "new"], enumerate(rep.rounds))
    return dumps({"source": rep.source, "target": rep.target,
                  "hop_count": rep.hop_count, "rounds": list(rep.rounds)})


def _cmd_hubs(args) -> str:
    table = read_table(_read(args.table))
    universe = args.universe
    if universe is None:
        universe = sorted({v for key in table.entries for v in key})
    if args.t is not None:
        rows = []
        for v in universe:
            res = is_hub(table, HubQuery(v, args.k, args.t), universe)
            rows.append({"vertex": v, "is_hub": res.is_hub,
                         "wins": {str(w): n for w, n in res.wins.items()},
                         "subsets_per_rival": res.subsets_per_rival})
        if args.format == "tsv":
            return _tsv(["vertex", "is_hub", "min_wins", "subsets_per_rival"],
                        ((r["vertex"], int(r["is_hub"]), min(r["wins"].values()),
                          r["subsets_per_rival"]) for r in rows))
        return dumps({"k": args.k, "t": args.t, "vertices": rows})
    prof = hub_profile(table, universe, args.k)
    if args.format == "tsv":
        return _tsv(["rank", "vertex", "max_order"], ((i, v, t) for i, (v, t) in enumerate(prof, 1)))
    return dumps({"k": args.k, "profile": [{"vertex": v, "max_order": t} for v, t in prof]})


def _cmd_plot(args) -> str:
    if args.kind == "trace":
        return _trace_tsv(read_trace(_read(args.input)))
    c = read_complex(_read(args.input))
    if args.source is None:
        raise ValueError("emit-plot-data rounds needs --source")
    rep = diffusion(c, args.source, args.source, args.min_dim)
    rows, total = [], 0
    for r, n in enumerate(rep.rounds):
        total += n
        rows.append((r, n, total))
    return _tsv(["round", "new", "cumulative"], rows)


COMMANDS = {
    "gen": _cmd_gen,
    "gen-hier": _cmd_gen_hier,
    "enumerate": _cmd_enumerate,
    "evolve": _cmd_evolve,
    "betti": _cmd_betti,
    "census": _cmd_census,
    "qcomp": _cmd_qcomp,
    "diffuse": _cmd_diffuse,
    "hubs": _cmd_hubs,
    "emit-plot-data": _cmd_plot,
}


def _manifest(argv: list[str], args, text: str) -> dict:
    config = {k: (str(v) if isinstance(v, Fraction) else v)
              for k, v in sorted(vars(args).items()) if k not in ("out",)}
    config = json.loads(json.dumps(config, default=str))
    return {
        "command": args.command,
        "argv": argv,
        "config": config,
        "seed": args.seed,
        "checksums": {Path(args.out).name: hashlib.sha256(text.encode("utf-8")).hexdigest()},
        "tool_version": __version__,
    }


def _replay(path: str) -> int:
    manifest = json.loads(_read(path))
    argv = [a for a in manifest["argv"]]
    if "--out" in argv:
        i = argv.index("--out")
        del argv[i:i + 2]
    args = build_parser().parse_args(argv)
    if args.seed is None:
        args.seed = manifest.get("seed") or 0
    text = COMMANDS[args.command](args)
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    expected = list(manifest["checksums"].values())[0]
    if digest != expected:
        print(f"checksum mismatch: {digest} != {expected}", file=sys.stderr)
        return 1
    print("ok")
    return 0


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    try:
        if args.command == "replay":
            return _replay(args.manifest)
        if args.command in STOCHASTIC and args.seed is None:
            args.seed = 0
            print("seed: 0 (default)", file=sys.stderr)
        text = COMMANDS[args.command](args)
    except CombinatorialExplosionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DocumentError, SimplexError, ComplexLimitError, ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out is None:
        sys.stdout.write(text)
    else:
        out = Path(args.out)
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        manifest = dumps(_manifest(argv, args, text))
        with open(str(out) + ".manifest.json", "w", encoding="utf-8", newline="\n") as fh:
            fh.write(manifest)
    return 0


if __name__ == "__main__":
    sys.exit(main())
