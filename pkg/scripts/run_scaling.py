#!/usr/bin/env python3
"""Scaling experiment: how total candidate evaluations grow with N.

Runs the seeded uniform-integer suite over doubling sizes, prints the
per-size medians and the fitted log-log slope, and optionally writes the
full per-run table.

    python scripts/run_scaling.py --kmin 8 --kmax 13 --reps 11 --out runs.csv
"""

import argparse
import sys

from eqpart.bench import GeneratorSpec, export_report, run_suite
from eqpart.core import InitStrategy, SolverConfig


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmin", type=int, default=8, help="smallest size is 2^kmin")
    ap.add_argument("--kmax", type=int, default=13, help="largest size is 2^kmax")
    ap.add_argument("--reps", type=int, default=11)
    ap.add_argument("--hi", type=int, default=10**9, help="values drawn from [1, hi]")
    ap.add_argument("--init", default="alternating",
                    choices=[s.value for s in InitStrategy])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--out", default=None, help="also write the per-run CSV here")
    args = ap.parse_args()

    specs = [
        GeneratorSpec.uniform_int(1, args.hi, 2**k, seed=args.seed + 1000 * k)
        for k in range(args.kmin, args.kmax + 1)
    ]
    cfg = SolverConfig(init_strategy=InitStrategy(args.init), seed=args.seed)
    report = run_suite(specs, cfg, repetitions=args.reps)

    print(f"{'n':>8} {'med evals':>12} {'med traverses':>14} {'med swaps':>10} {'med ms':>10}")
    for row in report.rows:
        print(
            f"{row.n:>8} {row.median_candidate_evals:>12.0f} "
            f"{row.median_traverses:>14.1f} {row.median_swaps:>10.1f} "
            f"{row.median_wall_time_ns / 1e6:>10.2f}"
        )
    print(f"\nlog-log slope of median candidate evaluations vs n: {report.slope:.4f}")

    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(export_report(report, "csv"))
        print(f"per-run table written to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
