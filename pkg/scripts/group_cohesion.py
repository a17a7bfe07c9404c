"""Evolve a group with arrivals, tie formation and tie loss; track size, holes and reach.

Probabilities grow with dimension, so larger groups form more readily once
their boundary is in place. Output is TSV, one row per time step.
"""

import argparse

from simagg.analysis import probe_matrix, q_components
from simagg.dynamics import EvolutionSchedule, run
from simagg.homology import betti_numbers


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--horizon", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--p-del", type=float, default=0.08)
    args = ap.parse_args()

    sched = EvolutionSchedule(
        n_new=lambda t: 6 if t == 0 else 1,
        p_add={1: 0.15, 2: 0.3, 3: 0.45},
        p_del=args.p_del,
        max_dim=3,
        horizon=args.horizon,
        seed=args.seed,
    )
    trace = run(sched)
    print("t\tvertices\tedges\tb0\tb1\tb2\tq1_classes\tmax_hops")
    for t, c in enumerate(trace.states):
        f = c.f_vector() + (0, 0)
        b = betti_numbers(c).betti + (0, 0, 0)
        vs = c.vertices
        hops = [h for row in probe_matrix(c, vs, vs) for h in row if h is not None]
        print(f"{t}\t{f[0]}\t{f[1]}\t{b[0]}\t{b[1]}\t{b[2]}\t{len(q_components(c, 1))}\t{max(hops, default=0)}")


if __name__ == "__main__":
    main()
