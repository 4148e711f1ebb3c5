#!/usr/bin/env python3
"""Float-mode drift harness.

Measures how far the incrementally maintained sum difference wanders from an
exactly-rounded recomputation, both under the solver's own swap sequences
and under long random swap storms, to back the 1e-9 * sum(|x|) drift
contract.

    python scripts/drift_harness.py --n 10000 --instances 50
"""

import argparse
import math
import random
import sys

from eqpart.core import (
    InitStrategy,
    Instance,
    Mode,
    SolverConfig,
    apply_swap,
    init_partition,
    normalize_and_sort,
    recompute_sums,
    solve,
)


def random_swap_storm(n: int, swaps: int, rng: random.Random) -> float:
    """Relative drift after `swaps` arbitrary cross-side exchanges."""
    values = sorted(rng.random() for _ in range(n))
    inst = Instance(tuple(values), Mode.FLOAT64)
    state = init_partition(normalize_and_sort(inst), SolverConfig())
    for _ in range(swaps):
        a = rng.choice(state.set1_indices())
        b = rng.choice(state.set2_indices())
        apply_swap(state, a, b)
    maintained = state.d
    recompute_sums(state)
    return abs(maintained - state.d) / math.fsum(map(abs, values))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=10**4)
    ap.add_argument("--instances", type=int, default=50)
    ap.add_argument("--storm-swaps", type=int, default=10**4)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    solver_worst = 0.0
    for i in range(args.instances):
        values = [rng.random() for _ in range(args.n)]
        inst = Instance(tuple(values), Mode.FLOAT64)
        strategy = (InitStrategy.ALTERNATING, InitStrategy.GREEDY)[i % 2]
        report = solve(inst, SolverConfig(init_strategy=strategy))
        rel = report.maintained_drift / math.fsum(map(abs, values))
        solver_worst = max(solver_worst, rel)
    print(f"solver runs      : worst relative drift {solver_worst:.3e} "
          f"({args.instances} instances, n={args.n})")

    storm_worst = max(
        random_swap_storm(min(args.n, 1000), args.storm_swaps, rng)
        for _ in range(max(args.instances // 10, 3))
    )
    print(f"random swap storm: worst relative drift {storm_worst:.3e} "
          f"({args.storm_swaps} swaps per run)")

    budget = 1e-9
    ok = solver_worst <= budget and storm_worst <= budget
    print(f"budget 1e-9      : {'within' if ok else 'EXCEEDED'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
