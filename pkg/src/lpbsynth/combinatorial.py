"""Combinatorial synthesis: right-to-left coefficient choice over the
successor table, with degree-interval propagation.

The greedy engine always takes the smallest admissible integer and is
incomplete: it can dead-end on representable inputs.  The backtracking
engine retries larger candidates depth-first, capped by a per-column
bound heuristic, and turns exhaustion into Unknown, never NotThreshold.
Both engines run the regularity pre-check so NotThreshold verdicts are
sound.
"""

from __future__ import annotations

from typing import Optional

from .analysis import op_order, regularity_check
from .core import Dnf, Lpb, normalize
from .extremal import minimal_true_points
from .intervals import NEG_INF, POS_INF, DegreeInterval
from .results import NOT_THRESHOLD, SUCCESS, UNKNOWN, DeadEnd, SynthesisResult
from .table import SuccessorNode, SuccessorTable, build_successor_table

DEFAULT_MAX_STEPS = 200_000

REASON_REGULARITY = "regularity"


class SynthesisInternalError(RuntimeError):
    """Interval propagation produced an empty interval despite an in-bounds
    coefficient; indicates a broken table invariant."""


def base_interval(node: SuccessorNode, coeff_suffix_sum: int) -> DegreeInterval:
    """Degree interval of a final node: (-inf, 0] for true, (sum of the
    coefficients right of the node's column, +inf) for false."""
    if node.formula.is_true:
        return DegreeInterval(NEG_INF, 0)
    return DegreeInterval(coeff_suffix_sum, POS_INF)


def choose_coefficient(nodes, ival) -> tuple:
    """Bounds (lo, hi) for the next coefficient: it must lie strictly
    between max(s0 - b1) and min(b0 - s1) over the non-final nodes of the
    column.  The choice is feasible iff lo < hi."""
    lo, hi = NEG_INF, POS_INF
    for node in nodes:
        if node.final:
            continue
        z = ival[node.zero.id]
        o = ival[node.one.id]
        d_lo = z.s - o.b
        d_hi = z.b - o.s
        if d_lo > lo:
            lo = d_lo
        if d_hi < hi:
            hi = d_hi
    return lo, hi


def propagate_interval(node: SuccessorNode, a: int, ival) -> DegreeInterval:
    z = ival[node.zero.id]
    o = ival[node.one.id]
    s = max(z.s, o.s + a)
    b = min(z.b, o.b + a)
    if s >= b:
        raise SynthesisInternalError(
            f"empty interval ({s},{b}] after choosing {a} at column {node.column}")
    return DegreeInterval(s, b)


def smallest_admissible(lo, hi) -> Optional[int]:
    """Smallest non-negative integer strictly inside (lo, hi); endpoints
    are integers or infinite."""
    cand = 0 if lo < 0 else int(lo) + 1
    return cand if cand < hi else None


def _prepare(d: Dnf):
    nd = normalize(d)
    order = op_order(nd)
    rd = order.apply(nd)
    mtps = minimal_true_points(rd)
    regular = regularity_check(rd, mtps)
    return rd, order, regular


def _store_intervals(table: SuccessorTable, ival) -> None:
    for node in table.nodes:
        node.interval = ival.get(node.id)


def _assemble_success(table, order, ival, coeffs, steps=None) -> SynthesisResult:
    m = table.m
    ri = ival[table.root.id]
    degree = int(ri.s) + 1 if ri.s != NEG_INF else int(ri.b)
    renamed = [coeffs.get(i, 0) for i in range(1, m + 1)]
    lpb = Lpb(order.restore_coeffs(renamed), degree)
    _store_intervals(table, ival)
    return SynthesisResult(
        SUCCESS, lpb=lpb, interval=ri, order=order, steps=steps,
        final_nodes=table.final_node_count(), table=table)


def _rescale(ival, coeffs):
    return ({i: iv.scaled(2) for i, iv in ival.items()},
            {v: 2 * c for v, c in coeffs.items()})


def greedy_synthesize(d: Dnf) -> SynthesisResult:
    """Smallest-integer strategy: pick the least admissible coefficient at
    every column; doubling the whole system once exposes an integer when
    the open interval has none.  Dead ends yield Unknown."""
    rd, order, regular = _prepare(d)
    if not regular:
        return SynthesisResult(NOT_THRESHOLD, order=order, reason=REASON_REGULARITY)
    table = build_successor_table(rd)
    m = rd.m
    ival = {node.id: base_interval(node, 0) for node in table.columns[m]}
    coeffs: dict[int, int] = {}
    suffix = 0

    def unknown(k, lo, hi):
        _store_intervals(table, ival)
        chosen = tuple(sorted(coeffs.items(), reverse=True))
        return SynthesisResult(
            UNKNOWN, order=order, dead_end=DeadEnd(k + 1, lo, hi),
            partial_coeffs=chosen,
            final_nodes=table.final_node_count(), table=table)

    for k in range(m - 1, -1, -1):
        nodes_k = table.columns[k]
        lo, hi = choose_coefficient(nodes_k, ival)
        if lo >= hi:
            return unknown(k, lo, hi)
        a = smallest_admissible(lo, hi)
        if a is None:
            if hi <= 0:
                return unknown(k, lo, hi)
            ival, coeffs = _rescale(ival, coeffs)
            suffix *= 2
            lo, hi = lo * 2, hi * 2
            a = smallest_admissible(lo, hi)  # integer endpoints: one doubling suffices
        coeffs[k + 1] = a
        suffix += a
        for node in nodes_k:
            if node.final:
                ival[node.id] = base_interval(node, suffix)
            else:
                ival[node.id] = propagate_interval(node, a, ival)

    if table.root.id not in ival:  # m == 0: constant root, no columns walked
        ival[table.root.id] = base_interval(table.root, 0)
    return _assemble_success(table, order, ival, coeffs)


class _StepBudgetExhausted(Exception):
    pass


def backtrack_synthesize(
    d: Dnf,
    bound_factor: Optional[int] = None,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> SynthesisResult:
    """Depth-first repair of the greedy strategy: candidates are tried
    smallest-first within the feasible open interval, capped at
    bound_factor times the previously chosen coefficient (bound_factor
    alone for the first column); a dead end backtracks to the most recent
    column with untried candidates.
    """
    rd, order, regular = _prepare(d)
    if not regular:
        return SynthesisResult(NOT_THRESHOLD, order=order, reason=REASON_REGULARITY)
    table = build_successor_table(rd)
    m = rd.m
    B = bound_factor if bound_factor is not None else max(m, 1)
    steps = 0
    first_dead: Optional[DeadEnd] = None
    first_partial: Optional[tuple[tuple[int, int], ...]] = None

    def record_dead(k, lo, hi, coeffs):
        nonlocal first_dead, first_partial
        if first_dead is None:
            first_dead = DeadEnd(k + 1, lo, hi)
            first_partial = tuple(sorted(coeffs.items(), reverse=True))

    def dfs(k, ival, coeffs, suffix, scale) -> Optional[SynthesisResult]:
        nonlocal steps
        if k < 0:
            return _assemble_success(table, order, ival, coeffs, steps=steps)
        nodes_k = table.columns[k]
        lo, hi = choose_coefficient(nodes_k, ival)
        if lo >= hi:
            record_dead(k, lo, hi, coeffs)
            return None
        a0 = smallest_admissible(lo, hi)
        if a0 is None:
            if hi <= 0:
                record_dead(k, lo, hi, coeffs)
                return None
            ival, coeffs = _rescale(ival, coeffs)
            suffix *= 2
            scale *= 2
            lo, hi = lo * 2, hi * 2
            a0 = smallest_admissible(lo, hi)
        prev = coeffs.get(k + 2, 0)
        cap = B * max(prev, scale)
        top = cap if hi == POS_INF else min(cap, int(hi) - 1)
        for a in range(a0, top + 1):
            steps += 1
            if steps > max_steps:
                raise _StepBudgetExhausted
            child_ival = dict(ival)
            for node in nodes_k:
                if node.final:
                    child_ival[node.id] = base_interval(node, suffix + a)
                else:
                    child_ival[node.id] = propagate_interval(node, a, ival)
            child_coeffs = dict(coeffs)
            child_coeffs[k + 1] = a
            res = dfs(k - 1, child_ival, child_coeffs, suffix + a, scale)
            if res is not None:
                return res
        return None

    base = {node.id: base_interval(node, 0) for node in table.columns[m]}
    try:
        res = dfs(m - 1, base, {}, 0, 1)
    except _StepBudgetExhausted:
        return SynthesisResult(
            UNKNOWN, order=order, dead_end=first_dead, partial_coeffs=first_partial,
            steps=steps, reason="step budget exhausted",
            final_nodes=table.final_node_count(), table=table)
    if res is not None:
        return res
    return SynthesisResult(
        UNKNOWN, order=order, dead_end=first_dead, partial_coeffs=first_partial,
        steps=steps, reason="candidates exhausted",
        final_nodes=table.final_node_count(), table=table)
