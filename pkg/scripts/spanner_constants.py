"""Measure the greedy spanner's size, degree, and cost constants.

The classical guarantees promise c1*n edges, max degree c2, and cost
c3 * ell(MST) for constants depending on the dilation bound; none of
them is known numerically for the greedy construction, so this
experiment reports measured values over seeded random instances.

Usage: python scripts/spanner_constants.py [--n 80] [--trials 20]
"""

import argparse
import statistics

from dtk.geom import float_instance
from dtk.spanner import greedy_spanner

import random


def run(n, trials, deltas):
    print(f"greedy spanner on {trials} x {n} uniform points")
    print(f"{'delta':>6} {'edges/n':>9} {'max deg':>8} {'cost/MST':>9}")
    for delta in deltas:
        edge_ratio = []
        degree = []
        ratio = []
        for seed in range(trials):
            rng = random.Random(seed)
            coords = [(rng.uniform(0, 100), rng.uniform(0, 100)) for _ in range(n)]
            rep = greedy_spanner(float_instance(coords, delta=delta))
            edge_ratio.append(rep.edge_count / n)
            degree.append(rep.max_degree)
            ratio.append(rep.cost_ratio)
        print(f"{delta:>6} {statistics.mean(edge_ratio):>9.2f} "
              f"{statistics.mean(degree):>8.1f} {statistics.mean(ratio):>9.3f}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=80)
    parser.add_argument("--trials", type=int, default=20)
    parser.add_argument("--deltas", type=float, nargs="+",
                        default=[1.1, 1.25, 1.5, 2.0, 3.0])
    args = parser.parse_args()
    run(args.n, args.trials, args.deltas)
