"""Mean edge count of S(n, 1, p) against p * n * (n - 1) / 2 over a grid of p."""

import argparse

import numpy as np

from simagg.random_model import RandomComplexConfig, edge_counts


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=20)
    ap.add_argument("--trials", type=int, default=20_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    pairs = args.n * (args.n - 1) / 2
    print("p\tmean_edges\texpected\tz")
    for p in np.linspace(0.1, 0.9, 9):
        counts = edge_counts(RandomComplexConfig(args.n, 1, float(p), args.seed), args.trials)
        se = counts.std(ddof=1) / np.sqrt(len(counts))
        print(f"{p:.1f}\t{counts.mean():.3f}\t{p * pairs:.3f}\t{(counts.mean() - p * pairs) / se:+.2f}")


if __name__ == "__main__":
    main()
