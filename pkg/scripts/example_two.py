"""Print the exact law of S(3, 2, 1/2) next to a Monte-Carlo estimate."""

import argparse
from fractions import Fraction

from simagg.random_model import RandomComplexConfig, empirical_distribution, enumerate_distribution
from simagg.serialize import encode_complex


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    dist = enumerate_distribution(3, 2, Fraction(1, 2))
    freq = empirical_distribution(RandomComplexConfig(3, 2, 0.5, args.seed), args.trials)
    print("f_vector\texact\tempirical")
    for c, q in dist.entries:
        est = freq[encode_complex(c)] / args.trials
        print(f"{' '.join(map(str, c.f_vector()))}\t{q}\t{est:.5f}")
    print(f"total\t{dist.total}\t{sum(freq.values()) / args.trials:.5f}")


if __name__ == "__main__":
    main()
