"""Core types and the windowed pair-swap descent for balanced number partitioning.

Splits a multiset of N numbers into two subsets of fixed cardinality so that
the absolute difference of the subset sums is locally minimal under single
pair swaps: no exchange of one element from each side can strictly shrink
|S1 - S2|.  The solver sorts the input once, then sweeps a cursor over the
sorted indices; at each cursor in the larger-sum side it scans the maximal
run of opposing-side elements immediately below the cursor for the partner
whose swap most shrinks the difference.  A sign flip of S1 - S2 restarts the
sweep; a completed sweep (or an exact zero) terminates.

Two numeric modes: exact 64-bit-guarded integers (all comparisons exact) and
float64 (incrementally maintained difference, exactly-rounded recomputation
at every sweep start and at emission).
"""

from __future__ import annotations

import enum
import math
import random
import time
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

# Exact-integer guard: every |x| and sum(|x|) must stay below this so that
# d - 2a + 2b arithmetic stays inside machine-integer range everywhere.
SUM_GUARD = 1 << 62


class Mode(enum.Enum):
    EXACT_INT = "int"
    FLOAT64 = "float"


class InitStrategy(enum.Enum):
    ALTERNATING = "alternating"
    SPLIT_HALF = "split"
    RANDOM = "random"
    GREEDY = "greedy"


class SwapOutcome(enum.Enum):
    UNCHANGED = "unchanged"
    FLIPPED = "flipped"
    ZERO = "zero"


class TraverseOutcome(enum.Enum):
    COMPLETED = "completed"
    SIGN_FLIPPED = "sign_flipped"
    ZERO_REACHED = "zero_reached"


class PartitionError(Exception):
    """Base class for all solver errors."""


class InvalidCardinalityError(PartitionError):
    """N odd/too small in equal mode, or requested cardinality out of range."""


class OverflowGuardError(PartitionError):
    """Exact-integer inputs exceed the overflow guard."""


class ContractViolationError(PartitionError):
    """A swap primitive was called with both indices in the same side."""


class InternalConsistencyError(PartitionError):
    """An internal invariant broke: nontermination guard, sum mismatch,
    or a windowed scan that missed a better partner (debug mode)."""


@dataclass(frozen=True)
class Instance:
    """Input multiset with original positions preserved."""

    values: tuple
    mode: Mode

    def __post_init__(self):
        if self.mode is Mode.EXACT_INT:
            for x in self.values:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise OverflowGuardError(
                        f"exact-integer mode requires int values, got {x!r}"
                    )
                if abs(x) >= SUM_GUARD:
                    raise OverflowGuardError(f"|{x}| exceeds the 2^62 guard")
        else:
            vals = []
            for x in self.values:
                f = float(x)
                if not math.isfinite(f):
                    raise ValueError(f"non-finite value {x!r}")
                vals.append(f)
            object.__setattr__(self, "values", tuple(vals))

    @staticmethod
    def from_values(values, mode: Optional[Mode] = None) -> "Instance":
        """Build an instance, defaulting to exact mode when all values are ints."""
        values = tuple(values)
        if mode is None:
            all_int = all(isinstance(x, int) and not isinstance(x, bool) for x in values)
            mode = Mode.EXACT_INT if all_int else Mode.FLOAT64
        return Instance(values, mode)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class SortedInstance:
    """Ascending view of an instance plus the permutation back to input order.

    sorted_values[i] == instance.values[perm[i]]; ties keep input order.
    """

    sorted_values: tuple
    perm: tuple
    mode: Mode

    def __len__(self) -> int:
        return len(self.sorted_values)


@dataclass(frozen=True)
class SolverConfig:
    init_strategy: InitStrategy = InitStrategy.ALTERNATING
    seed: Optional[int] = None
    traverse_guard_factor: int = 1
    verify_window: bool = False
    float_tolerance: float = 0.0
    collect_trace: bool = False

    def __post_init__(self):
        if self.traverse_guard_factor < 1:
            raise ValueError("traverse_guard_factor must be a positive integer")
        if self.float_tolerance < 0:
            raise ValueError("float_tolerance must be non-negative")
        if self.init_strategy is InitStrategy.RANDOM and self.seed is None:
            raise ValueError("RANDOM initialization requires a seed")


@dataclass
class Metrics:
    """Per-run instrumentation counters.

    max_traverse_evaluations is the peak candidate_evaluations of any single
    traverse, kept so work-per-traverse bounds can be checked after the fact.
    """

    traverses: int = 0
    swaps: int = 0
    sign_changes: int = 0
    candidate_evaluations: int = 0
    wall_time_ns: int = 0
    max_traverse_evaluations: int = 0


@dataclass(frozen=True)
class SwapEvent:
    """One applied swap: cursor/partner are sorted indices."""

    cursor: int
    partner: int
    d_before: float | int
    d_after: float | int
    outcome: SwapOutcome


@dataclass
class PartitionState:
    """Membership of each sorted index plus maintained sums.

    in_set1[i] is True when sorted index i belongs to side 1.  d == s1 - s2
    is maintained incrementally; in exact mode it matches a from-scratch
    recomputation bit for bit at all times, in float mode at every traverse
    start (see recompute_sums).  zero_tolerance widens the d == 0 test in
    float mode; it is copied from SolverConfig.float_tolerance.
    """

    values: tuple
    in_set1: list
    s1: float | int
    s2: float | int
    d: float | int
    card1: int
    card2: int
    mode: Mode
    zero_tolerance: float = 0.0

    def set1_indices(self) -> tuple:
        return tuple(i for i, m in enumerate(self.in_set1) if m)

    def set2_indices(self) -> tuple:
        return tuple(i for i, m in enumerate(self.in_set1) if not m)

    def is_zero(self) -> bool:
        return abs(self.d) <= self.zero_tolerance if self.mode is Mode.FLOAT64 else self.d == 0

    def copy(self) -> "PartitionState":
        return replace(self, in_set1=list(self.in_set1))


@dataclass(frozen=True)
class SolveReport:
    """Final partition plus instrumentation.

    maintained_drift is |incrementally maintained d - recomputed d| at
    emission; always 0 in exact mode.
    """

    partition: PartitionState
    objective: float | int
    metrics: Metrics
    original_set1: tuple
    original_set2: tuple
    sorted_instance: SortedInstance
    trace: tuple = ()
    maintained_drift: float = 0.0


class LocalOptCheck:
    """Truthy verdict of a local-optimality check, with a witness on failure."""

    __slots__ = ("ok", "witness")

    def __init__(self, ok: bool, witness=None):
        self.ok = ok
        self.witness = witness

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        return f"LocalOptCheck(ok={self.ok}, witness={self.witness})"


def _sum_values(values, mode: Mode):
    """Exact sum: integer arithmetic in exact mode, fsum (exactly rounded)
    in float mode."""
    if mode is Mode.EXACT_INT:
        return sum(values)
    return math.fsum(values)


def normalize_and_sort(instance: Instance) -> SortedInstance:
    """Ascending stable sort; ties keep ascending original index."""
    if len(instance) == 0:
        raise ValueError("instance is empty")
    if instance.mode is Mode.EXACT_INT:
        total = sum(abs(x) for x in instance.values)
        if total >= SUM_GUARD:
            raise OverflowGuardError(
                f"sum of |values| = {total} exceeds the 2^62 guard"
            )
    order = sorted(range(len(instance)), key=instance.values.__getitem__)
    return SortedInstance(
        sorted_values=tuple(instance.values[i] for i in order),
        perm=tuple(order),
        mode=instance.mode,
    )


def _initial_membership(si: SortedInstance, cfg: SolverConfig, card1: int) -> list:
    n = len(si)
    xs = si.sorted_values
    in_set1 = [False] * n
    if cfg.init_strategy is InitStrategy.ALTERNATING:
        # Bresenham spread of card1 slots over n indices; reduces to
        # "odd sorted positions" (1-based) when card1 == n // 2.
        for i in range(n):
            if (i * card1) % n < card1:
                in_set1[i] = True
    elif cfg.init_strategy is InitStrategy.SPLIT_HALF:
        for i in range(card1):
            in_set1[i] = True
    elif cfg.init_strategy is InitStrategy.RANDOM:
        rng = random.Random(cfg.seed)
        for i in rng.sample(range(n), card1):
            in_set1[i] = True
    elif cfg.init_strategy is InitStrategy.GREEDY:
        # Largest first into the currently lighter side, capped at the
        # target cardinalities; ties go to side 1.  Balance comparisons use
        # min-shifted values so the start point is invariant under affine
        # input transforms (raw sums are not, once cardinalities diverge).
        lo = xs[0]
        s1 = s2 = 0
        c1 = c2 = 0
        for i in range(n - 1, -1, -1):
            to_set1 = (s1 <= s2 and c1 < card1) or c2 >= n - card1
            if to_set1:
                in_set1[i] = True
                s1 += xs[i] - lo
                c1 += 1
            else:
                s2 += xs[i] - lo
                c2 += 1
    else:  # pragma: no cover - enum is closed
        raise ValueError(f"unknown strategy {cfg.init_strategy}")
    return in_set1


def init_partition(
    si: SortedInstance, cfg: SolverConfig, card1: Optional[int] = None
) -> PartitionState:
    """Build the starting partition.

    card1 defaults to N/2 (N must be even); an explicit card1 in 1..N-1
    requests an unequal split with that side-1 cardinality.
    """
    n = len(si)
    if card1 is None:
        if n < 2 or n % 2 != 0:
            raise InvalidCardinalityError(
                f"equal-cardinality solving needs even N >= 2, got N={n}"
            )
        card1 = n // 2
    elif not 1 <= card1 <= n - 1:
        raise InvalidCardinalityError(f"cardinality {card1} out of range 1..{n - 1}")
    in_set1 = _initial_membership(si, cfg, card1)
    s1 = _sum_values((x for x, m in zip(si.sorted_values, in_set1) if m), si.mode)
    s2 = _sum_values((x for x, m in zip(si.sorted_values, in_set1) if not m), si.mode)
    return PartitionState(
        values=si.sorted_values,
        in_set1=in_set1,
        s1=s1,
        s2=s2,
        d=s1 - s2,
        card1=card1,
        card2=n - card1,
        mode=si.mode,
        zero_tolerance=cfg.float_tolerance if si.mode is Mode.FLOAT64 else 0.0,
    )


def swap_new_diff(state: PartitionState, a_idx: int, b_idx: int):
    """|d| after exchanging sorted indices a_idx and b_idx, without mutating.

    One index must be in each side; either argument order is accepted.
    """
    if state.in_set1[a_idx] == state.in_set1[b_idx]:
        raise ContractViolationError(
            f"indices {a_idx} and {b_idx} are in the same side"
        )
    if not state.in_set1[a_idx]:
        a_idx, b_idx = b_idx, a_idx
    return abs(state.d - 2 * state.values[a_idx] + 2 * state.values[b_idx])


def _pair_diff(state: PartitionState, cursor: int, partner: int):
    """Signed d after swapping cursor/partner (opposite sides, unchecked)."""
    if state.in_set1[cursor]:
        return state.d - 2 * state.values[cursor] + 2 * state.values[partner]
    return state.d - 2 * state.values[partner] + 2 * state.values[cursor]


def find_best_swap(
    state: PartitionState,
    n: int,
    metrics: Optional[Metrics] = None,
    verify_window: bool = False,
):
    """Best strictly improving partner for sorted index n, or None.

    Elements outside the larger-sum side (and any cursor when d is zero)
    cannot start an improving swap, so they are skipped in O(1); the skip
    costs one candidate evaluation.  Otherwise partners are scanned
    descending from n-1 through the run of opposing-side elements.  The
    first same-side element bounds the scan, but only once values drop
    strictly below it: opposing elements tied with the bound's value must
    still be evaluated, because a same-side tie proves nothing about them
    (swapping equal values never changes d, so the usual dominance argument
    is silent there).  Returns (partner, new_abs_diff) for the minimizer
    when it strictly beats |d|; ties pick the smallest partner index.
    verify_window cross-checks the scan against all opposing partners below
    n and raises InternalConsistencyError if the scan missed a strictly
    better one.
    """
    d = state.d
    in_larger_side = (d > 0) == state.in_set1[n] and not state.is_zero()
    if not in_larger_side:
        if metrics is not None:
            metrics.candidate_evaluations += 1
        return None

    abs_d = abs(d)
    best_idx = None
    best_val = None
    stop_value = None
    j = n - 1
    while j >= 0:
        if stop_value is not None and state.values[j] < stop_value:
            break
        if state.in_set1[j] == state.in_set1[n]:
            if stop_value is None:
                stop_value = state.values[j]
            j -= 1
            continue
        if metrics is not None:
            metrics.candidate_evaluations += 1
        val = abs(_pair_diff(state, n, j))
        if best_val is None or val <= best_val:  # <=: descending scan, keep lowest index
            best_idx, best_val = j, val
        j -= 1

    if verify_window:
        reference = best_val if best_val is not None else abs_d
        for q in range(n):
            if state.in_set1[q] == state.in_set1[n]:
                continue
            if abs(_pair_diff(state, n, q)) < reference:
                raise InternalConsistencyError(
                    f"window scan at cursor {n} missed a better partner {q}"
                )

    if best_idx is not None and best_val < abs_d:
        return best_idx, best_val
    return None


def apply_swap(state: PartitionState, n: int, partner: int) -> SwapOutcome:
    """Exchange memberships of n and partner and update sums incrementally.

    Classifies the new difference: ZERO when it vanished (within the float
    tolerance), FLIPPED when the sign strictly crossed, UNCHANGED otherwise.
    """
    if state.in_set1[n] == state.in_set1[partner]:
        raise ContractViolationError(f"indices {n} and {partner} are in the same side")
    a, b = (n, partner) if state.in_set1[n] else (partner, n)
    xa, xb = state.values[a], state.values[b]
    old_d = state.d
    state.s1 = state.s1 - xa + xb
    state.s2 = state.s2 - xb + xa
    state.d = state.d - 2 * xa + 2 * xb
    state.in_set1[a] = False
    state.in_set1[b] = True
    if state.is_zero():
        return SwapOutcome.ZERO
    if (old_d > 0) != (state.d > 0):
        return SwapOutcome.FLIPPED
    return SwapOutcome.UNCHANGED


def recompute_sums(state: PartitionState) -> PartitionState:
    """Recompute s1, s2, d from scratch and refresh the state in place.

    Float mode uses exactly-rounded summation to cancel incremental drift.
    Exact mode instead asserts the maintained values are already identical;
    a mismatch means a bug, not input trouble.
    """
    s1 = _sum_values((x for x, m in zip(state.values, state.in_set1) if m), state.mode)
    s2 = _sum_values((x for x, m in zip(state.values, state.in_set1) if not m), state.mode)
    if state.mode is Mode.EXACT_INT and (s1, s2) != (state.s1, state.s2):
        raise InternalConsistencyError(
            f"maintained sums ({state.s1}, {state.s2}) != recomputed ({s1}, {s2})"
        )
    state.s1, state.s2, state.d = s1, s2, s1 - s2
    return state


def run_traverse(
    state: PartitionState,
    cfg: SolverConfig,
    metrics: Metrics,
    trace: Optional[list] = None,
) -> TraverseOutcome:
    """One cursor sweep from the lowest sorted index upward.

    Applies the best improving swap at each cursor.  A sign flip ends the
    sweep immediately (the caller restarts); a zero difference is terminal;
    otherwise the sweep completes after the top index.
    """
    metrics.traverses += 1
    if state.mode is Mode.FLOAT64:
        recompute_sums(state)
    evals_before = metrics.candidate_evaluations
    outcome = TraverseOutcome.COMPLETED
    for n in range(len(state.values)):
        hit = find_best_swap(state, n, metrics, cfg.verify_window)
        if hit is None:
            continue
        partner, _ = hit
        d_before = state.d
        swap_outcome = apply_swap(state, n, partner)
        metrics.swaps += 1
        if trace is not None:
            trace.append(SwapEvent(n, partner, d_before, state.d, swap_outcome))
        if swap_outcome is SwapOutcome.ZERO:
            outcome = TraverseOutcome.ZERO_REACHED
            break
        if swap_outcome is SwapOutcome.FLIPPED:
            metrics.sign_changes += 1
            outcome = TraverseOutcome.SIGN_FLIPPED
            break
    this_traverse = metrics.candidate_evaluations - evals_before
    if this_traverse > metrics.max_traverse_evaluations:
        metrics.max_traverse_evaluations = this_traverse
    return outcome


def traverse_guard(n: int, mode: Mode, factor: int = 1) -> int:
    """Sweep-count ceiling: N+2 exact, 2N+4 float, times the config factor."""
    base = n + 2 if mode is Mode.EXACT_INT else 2 * n + 4
    return factor * base


def solve(
    instance: Instance,
    cfg: SolverConfig = SolverConfig(),
    card1: Optional[int] = None,
) -> SolveReport:
    """Find a pair-swap locally optimal partition.

    Repeats sweeps until one completes without a sign flip (or the
    difference hits zero).  The sweep count is hard-capped by the
    nontermination guard; exceeding it raises InternalConsistencyError
    because the termination argument bounds sweeps well below the guard.
    """
    t0 = time.perf_counter_ns()
    si = normalize_and_sort(instance)
    state = init_partition(si, cfg, card1)
    metrics = Metrics()
    trace = [] if cfg.collect_trace else None
    guard = traverse_guard(len(si), si.mode, cfg.traverse_guard_factor)
    while True:
        if metrics.traverses >= guard:
            raise InternalConsistencyError(
                f"nontermination guard tripped after {metrics.traverses} traverses"
            )
        outcome = run_traverse(state, cfg, metrics, trace)
        if outcome is not TraverseOutcome.SIGN_FLIPPED:
            break
    maintained_d = state.d
    recompute_sums(state)
    drift = abs(maintained_d - state.d) if si.mode is Mode.FLOAT64 else 0.0
    set1 = tuple(sorted(si.perm[i] for i in state.set1_indices()))
    set2 = tuple(sorted(si.perm[i] for i in state.set2_indices()))
    metrics.wall_time_ns = time.perf_counter_ns() - t0
    return SolveReport(
        partition=state,
        objective=abs(state.d),
        metrics=metrics,
        original_set1=set1,
        original_set2=set2,
        sorted_instance=si,
        trace=tuple(trace) if trace is not None else (),
        maintained_drift=drift,
    )


def is_locally_optimal_pairswap(
    state: PartitionState, tolerance: float = 0.0
) -> LocalOptCheck:
    """Exhaustive O(N^2) check over all cross-side pairs.

    True iff no swap drops |d| below |d| - tolerance.  On failure the
    witness is one violating (side1_index, side2_index) pair.  The float
    path runs the same all-pairs check vectorized row by row.
    """
    abs_d = abs(state.d)
    set1 = state.set1_indices()
    set2 = state.set2_indices()
    if state.mode is Mode.FLOAT64 and len(set1) > 64 and len(set2) > 0:
        d = float(state.d)
        vals = np.asarray(state.values, dtype=np.float64)
        b = 2.0 * vals[np.asarray(set2, dtype=np.intp)]
        threshold = abs_d - tolerance
        for a_idx in set1:
            row = np.abs(d - 2.0 * vals[a_idx] + b)
            pos = int(np.argmin(row))
            if row[pos] < threshold:
                return LocalOptCheck(False, (a_idx, set2[pos]))
        return LocalOptCheck(True)
    for a_idx in set1:
        for b_idx in set2:
            if swap_new_diff(state, a_idx, b_idx) < abs_d - tolerance:
                return LocalOptCheck(False, (a_idx, b_idx))
    return LocalOptCheck(True)
