"""Command-line front end: solve, solve-traditional, verify, oracle, bench.

Exit codes: 0 success, 1 malformed input, 2 constraint violation (odd N,
cardinality range, oracle cap, overflow guard), 3 internal invariant
failure.  Setting EQPART_VERIFY_WINDOW=1 turns on the debug cross-check of
every windowed partner scan against a full scan.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys

from .core import (
    ContractViolationError,
    Instance,
    InternalConsistencyError,
    InvalidCardinalityError,
    InitStrategy,
    Mode,
    OverflowGuardError,
    PartitionError,
    SolveReport,
    SolverConfig,
    SUM_GUARD,
    is_locally_optimal_pairswap,
    solve,
)
from . import bench as bench_mod
from .bench import BenchInvariantError, GeneratorSpec
from .oracle import OracleCapError, exact_min_diff_unconstrained, oracle_result
from .reductions import (
    is_locally_optimal_transfer,
    solve_traditional,
    solve_with_cardinality,
)


class InputFormatError(PartitionError):
    """Malformed input text; message carries line and column."""


_INT_TOKEN = re.compile(r"[+-]?\d+")
_FLOAT_TOKEN = re.compile(r"[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")


def parse_input(data: bytes, mode: Mode | None = None) -> Instance:
    """Parse whitespace/comma separated numbers; '#'-prefixed lines are comments.

    With mode=None, picks exact-integer when every token is an integer
    literal, float64 otherwise.  Integer mode rejects fractions and
    exponents outright.
    """
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputFormatError(f"input is not valid UTF-8: {exc}") from exc
    tokens = []
    for ln, line in enumerate(text.splitlines(), start=1):
        stripped = line.lstrip()
        if not stripped or stripped.startswith("#"):
            continue
        for m in re.finditer(r"[^\s,]+", line):
            tokens.append((m.group(), ln, m.start() + 1))
    if not tokens:
        raise InputFormatError("empty input: no numbers found")
    if mode is None:
        all_int = all(_INT_TOKEN.fullmatch(tok) for tok, _, _ in tokens)
        mode = Mode.EXACT_INT if all_int else Mode.FLOAT64
    values = []
    for tok, ln, col in tokens:
        if mode is Mode.EXACT_INT:
            if not _INT_TOKEN.fullmatch(tok):
                raise InputFormatError(
                    f"line {ln}, column {col}: {tok!r} is not an integer"
                )
            v = int(tok)
            if abs(v) >= SUM_GUARD:
                raise InputFormatError(
                    f"line {ln}, column {col}: {tok!r} exceeds the 2^62 integer guard"
                )
        else:
            if not _FLOAT_TOKEN.fullmatch(tok):
                raise InputFormatError(f"line {ln}, column {col}: {tok!r} is not a number")
            v = float(tok)
            if not math.isfinite(v):
                raise InputFormatError(f"line {ln}, column {col}: {tok!r} is not finite")
        values.append(v)
    return Instance(tuple(values), mode)


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc


def _config_from_args(args) -> SolverConfig:
    return SolverConfig(
        init_strategy=InitStrategy(args.init),
        seed=args.seed,
        verify_window=os.environ.get("EQPART_VERIFY_WINDOW") == "1",
    )


def _metrics_dict(report: SolveReport) -> dict:
    m = report.metrics
    return {
        "traverses": m.traverses,
        "swaps": m.swaps,
        "sign_changes": m.sign_changes,
        "candidate_evaluations": m.candidate_evaluations,
        "wall_time_ns": m.wall_time_ns,
    }


def _render_solution(args, instance, objective, idx1, idx2, report,
                     verified=None, exact_min=None) -> None:
    vals1 = [instance.values[i] for i in idx1]
    vals2 = [instance.values[i] for i in idx2]
    if args.format == "json":
        payload = {
            "objective": objective,
            "set1": vals1,
            "set2": vals2,
            "metrics": _metrics_dict(report),
        }
        if verified is not None:
            payload["verified"] = verified
        if exact_min is not None:
            payload["exact_min"] = exact_min
        print(json.dumps(payload))
        return
    print(f"objective: {objective}")
    print(f"set1: {' '.join(str(v) for v in vals1)}  (indices {' '.join(str(i) for i in idx1)})")
    print(f"set2: {' '.join(str(v) for v in vals2)}  (indices {' '.join(str(i) for i in idx2)})")
    if verified is not None:
        print(f"verified: {'PASS' if verified else 'FAIL'}")
    if exact_min is not None:
        status = "globally optimal" if objective == exact_min else "locally optimal only"
        print(f"exact_min: {exact_min} ({status})")
    if args.stats:
        m = report.metrics
        print(
            f"stats: traverses={m.traverses} swaps={m.swaps} "
            f"sign_changes={m.sign_changes} "
            f"candidate_evaluations={m.candidate_evaluations} "
            f"wall_time_ns={m.wall_time_ns}"
        )


def _cmd_solve(args) -> int:
    instance = parse_input(_read_input(args.input), _mode_from_args(args))
    cfg = _config_from_args(args)
    if args.cardinality is not None:
        report = solve_with_cardinality(instance, args.cardinality, cfg)
    else:
        report = solve(instance, cfg)
    verified = None
    if args.verify or args.command == "verify":
        verified = bool(is_locally_optimal_pairswap(report.partition))
    exact_min = None
    if args.oracle:
        exact_min = oracle_result(instance).exact_min
    _render_solution(
        args, instance, report.objective,
        report.original_set1, report.original_set2, report,
        verified, exact_min,
    )
    if verified is False:
        return 3
    return 0


def _cmd_solve_traditional(args) -> int:
    instance = parse_input(_read_input(args.input), _mode_from_args(args))
    cfg = _config_from_args(args)
    result = solve_traditional(instance, cfg)
    verified = None
    if args.verify:
        verified = bool(
            is_locally_optimal_pairswap(result.extended_report.partition)
        ) and is_locally_optimal_transfer(result)
    exact_min = None
    if args.oracle:
        exact_min = exact_min_diff_unconstrained(instance)
    _render_solution(
        args, instance, result.objective, result.part1, result.part2,
        result.extended_report, verified, exact_min,
    )
    if verified is False:
        return 3
    return 0


def _cmd_oracle(args) -> int:
    instance = parse_input(_read_input(args.input), _mode_from_args(args))
    res = oracle_result(instance)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "exact_min": res.exact_min,
                    "local_optima": list(res.local_optima),
                    "num_partitions_enumerated": res.num_partitions_enumerated,
                }
            )
        )
    else:
        print(f"exact_min: {res.exact_min}")
        print(f"local_optima: {' '.join(str(v) for v in res.local_optima)}")
        print(f"partitions_enumerated: {res.num_partitions_enumerated}")
    return 0


def _cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    family = args.family.replace("-", "_")
    # argparse delivers p1/p2 as floats; integral ones mean integer families
    p1 = int(args.p1) if float(args.p1).is_integer() else args.p1
    p2 = int(args.p2) if float(args.p2).is_integer() else args.p2
    specs = [
        GeneratorSpec(family=family, n=n, seed=args.seed, p1=p1, p2=p2)
        for n in sizes
    ]
    cfg = _config_from_args(args)
    report = bench_mod.run_suite(specs, cfg, repetitions=args.reps)
    data = bench_mod.export_report(report, args.format)
    if args.out:
        try:
            with open(args.out, "wb") as fh:
                fh.write(data)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 1
        print(f"wrote {args.out} (slope {report.slope:.3f})")
    else:
        sys.stdout.write(data.decode())
    return 0


def _mode_from_args(args) -> Mode | None:
    if args.mode == "int":
        return Mode.EXACT_INT
    if args.mode == "float":
        return Mode.FLOAT64
    return None


def _add_common(p: argparse.ArgumentParser, cardinality: bool = False) -> None:
    p.add_argument("--input", default="-", help="input file, or - for stdin")
    p.add_argument("--mode", choices=["int", "float"], default=None,
                   help="numeric mode (default: int when all tokens are integers)")
    p.add_argument("--init", choices=[s.value for s in InitStrategy],
                   default=InitStrategy.ALTERNATING.value)
    p.add_argument("--seed", type=int, default=None, help="seed for random init")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--verify", action="store_true",
                   help="check local optimality of the output and report PASS/FAIL")
    p.add_argument("--oracle", action="store_true",
                   help="compare against the exhaustive optimum (small N only)")
    p.add_argument("--stats", action="store_true", help="print run counters")
    if cardinality:
        p.add_argument("--cardinality", type=int, default=None, metavar="K",
                       help="pin side-1 cardinality to K instead of N/2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqpart",
        description="Locally optimal balanced number partitioning",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="equal (or pinned) cardinality solve")
    _add_common(p_solve, cardinality=True)
    p_solve.set_defaults(func=_cmd_solve)

    p_trad = sub.add_parser("solve-traditional",
                            help="free-cardinality solve via the dummy-zero reduction")
    _add_common(p_trad)
    p_trad.set_defaults(func=_cmd_solve_traditional)

    p_verify = sub.add_parser("verify", help="solve and verify local optimality")
    _add_common(p_verify, cardinality=True)
    p_verify.set_defaults(func=_cmd_solve)

    p_oracle = sub.add_parser("oracle", help="exhaustive enumeration (N <= 24)")
    _add_common(p_oracle)
    p_oracle.set_defaults(func=_cmd_oracle)

    p_bench = sub.add_parser("bench", help="complexity-scaling benchmark")
    p_bench.add_argument("--family",
                         choices=["uniform-int", "uniform-float", "near-equal", "geometric"],
                         default="uniform-int")
    p_bench.add_argument("--sizes", default="256,512,1024,2048",
                         help="comma-separated instance sizes")
    p_bench.add_argument("--reps", type=int, default=5, help="seeds per size")
    p_bench.add_argument("--seed", type=int, default=1, help="base seed")
    p_bench.add_argument("--p1", type=float, default=1,
                         help="family parameter: lo / base / ratio")
    p_bench.add_argument("--p2", type=float, default=10**6,
                         help="family parameter: hi / epsilon / scale")
    p_bench.add_argument("--init", choices=[s.value for s in InitStrategy],
                         default=InitStrategy.ALTERNATING.value)
    p_bench.add_argument("--format", choices=["csv", "json"], default="csv")
    p_bench.add_argument("--out", default=None, help="write the report here")
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InvalidCardinalityError, OracleCapError, OverflowGuardError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InternalConsistencyError, ContractViolationError, BenchInvariantError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
