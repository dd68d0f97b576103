"""Measure the greedy heuristic against exhaustive search on random
node-interdiction instances.

Reports, per instance size and budget, the mean greedy/exact value ratio,
how often greedy is exactly optimal, and the evaluation counts.

Usage:
    python scripts/compare_solvers.py [--sizes 5 6 7] [--budgets 3] [--trials 20]
"""

import argparse
import pathlib
import sys
from dataclasses import replace

SRC = pathlib.Path(__file__).resolve().parents[1] / "src"
sys.path.insert(0, str(SRC))

from ume.generators import random_node_instance  # noqa: E402
from ume.interdiction import Budget  # noqa: E402
from ume.solvers import solve_exact, solve_greedy  # noqa: E402


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[5, 6, 7])
    parser.add_argument("--budgets", type=int, default=3)
    parser.add_argument("--trials", type=int, default=20)
    args = parser.parse_args()

    print(f"{'n':>3} {'B':>3} {'greedy/exact':>12} {'optimal':>8} "
          f"{'evals(g)':>9} {'evals(e)':>9}")
    for n in args.sizes:
        for b in range(1, args.budgets + 1):
            ratios, hits, eg, ee = [], 0, 0, 0
            for trial in range(args.trials):
                inst = replace(
                    random_node_instance(n, trial), budget=Budget(b, "nodes")
                )
                exact = solve_exact(inst)
                greedy = solve_greedy(inst)
                if exact.value > 0:
                    ratios.append(greedy.value / exact.value)
                else:
                    ratios.append(1.0)
                hits += greedy.value >= exact.value - 1e-12
                eg += greedy.evaluations
                ee += exact.evaluations
            mean_ratio = sum(ratios) / len(ratios)
            print(f"{n:>3} {b:>3} {mean_ratio:>12.6f} "
                  f"{hits:>4}/{args.trials:<3} {eg // args.trials:>9} {ee // args.trials:>9}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
