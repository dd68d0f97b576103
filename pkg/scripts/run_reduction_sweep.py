"""Sweep the cover-vs-interdiction equivalence over the committed suite.

For every planar fixture graph at or below --max-nodes, compare the exact
vertex-cover decision with the perfect-capture decision on the derived
2-evader instance, across the full budget range.

Usage:
    python scripts/run_reduction_sweep.py [--max-nodes 12] [--tol 1e-9]
"""

import argparse
import pathlib
import sys
import time

SRC = pathlib.Path(__file__).resolve().parents[1] / "src"
sys.path.insert(0, str(SRC))

from ume.graphs import load_graph  # noqa: E402
from ume.oracles import verify_reduction  # noqa: E402

FIXTURES = pathlib.Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "planar"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-nodes", type=int, default=12)
    parser.add_argument("--tol", type=float, default=1e-9)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    total_rows, start = 0, time.monotonic()
    all_pass = True
    print(f"{'graph':14s} {'n':>3} {'m':>3} {'cover':>5} {'budgets':>8} {'agree':>6} {'time':>7}")
    for path in sorted(FIXTURES.glob("*.txt")):
        g = load_graph(path)
        if g.node_count > args.max_nodes:
            continue
        report = verify_reduction(
            g, range(0, g.node_count + 1), tol=args.tol, seed=args.seed,
            graph_id=path.stem,
        )
        agree = sum(row.agree for row in report.rows)
        total_rows += len(report.rows)
        all_pass &= report.passes
        print(
            f"{path.stem:14s} {g.node_count:>3} {g.edge_count:>3} "
            f"{report.min_cover_size:>5} {len(report.rows):>8} "
            f"{agree}/{len(report.rows):>3} {report.elapsed:>6.2f}s"
        )
    print(f"\n{total_rows} rows in {time.monotonic() - start:.1f}s: "
          f"{'ALL AGREE' if all_pass else 'MISMATCHES FOUND'}")
    return 0 if all_pass else 1


if __name__ == "__main__":
    sys.exit(main())
