"""Complete LP-based decision procedure.

The feasibility program has one row per minimal true point (weighted sum
at least the degree), one per maximal false point (strictly below, encoded
as a unit gap: a rational solution with positive gap scales to gap >= 1),
sign rows for the weights, and a cosmetic objective biasing toward small
certificates.  It is solved with the exact rational simplex, so an
infeasible answer is a proof, not a tolerance judgment.

Two solver-internal accelerations keep desk-scale corpora fast without
touching exactness: a floating-point warm start whose snapped rational
solution is verified exactly against every row, and row generation (solve
an active subset, add exactly-violated rows, repeat; infeasibility of a
subset already proves infeasibility of the whole system).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

from .analysis import op_order, regularity_check
from .core import Dnf, Lpb, Point, normalize
from .extremal import maximal_false_points, minimal_true_points
from .results import NOT_THRESHOLD, SUCCESS, SynthesisResult
from .simplex import INFEASIBLE, SimplexResult, simplex_solve

REASON_REGULARITY = "regularity"
REASON_LP = "lp-infeasible"

_SNAP_DENOMS = (1, 2, 3, 4, 6, 8, 12, 24, 60, 120, 2520, 10**4, 10**9)


@dataclass(frozen=True)
class LinRow:
    coeffs: tuple  # over a_1..a_m, d
    rel: str  # '<=' or '>='
    rhs: int

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        lhs = sum(c * v for c, v in zip(self.coeffs, x) if c)
        return lhs >= self.rhs if self.rel == ">=" else lhs <= self.rhs

    def violation(self, x: Sequence[Fraction]) -> Fraction:
        lhs = sum(c * v for c, v in zip(self.coeffs, x) if c)
        return self.rhs - lhs if self.rel == ">=" else lhs - self.rhs


@dataclass(frozen=True)
class LinearProgram:
    """Variables a_1..a_m then d (free); minimize objective . x."""

    m: int
    rows: tuple[LinRow, ...]
    objective: tuple

    @property
    def num_vars(self) -> int:
        return self.m + 1


@dataclass(frozen=True)
class LpOutcome:
    feasible: bool
    assignment: Optional[tuple[Fraction, ...]] = None  # a_1..a_m, d


def build_lp(mtps: Sequence[Point], mfps: Sequence[Point], m: int) -> LinearProgram:
    rows = []
    for x in mtps:
        rows.append(LinRow(tuple(x) + (-1,), ">=", 0))
    for y in mfps:
        rows.append(LinRow(tuple(y) + (-1,), "<=", -1))
    for i in range(m):
        unit = tuple(1 if j == i else 0 for j in range(m)) + (0,)
        rows.append(LinRow(unit, ">=", 0))
    objective = (1,) * (m + 1)
    return LinearProgram(m, tuple(rows), objective)


def dump_lp(lp: LinearProgram) -> str:
    lines = []
    for row in lp.rows:
        cs = " ".join(str(c) for c in row.coeffs)
        lines.append(f"{cs} {row.rel} {row.rhs}")
    return "\n".join(lines) + "\n"


def _float_warm_start(lp: LinearProgram) -> Optional[tuple[Fraction, ...]]:
    """Ask a floating-point LP for a candidate point and snap it to small
    rationals; only an exactly verified snap is ever used.

    Every row is tightened by 1/2 first.  A feasible system stays feasible
    under any fixed margin (solutions scale), and the margin absorbs both
    float error and snapping error, so the snapped point verifies against
    the original rows almost always.
    """
    try:
        from scipy.optimize import linprog
    except ImportError:  # pragma: no cover
        return None
    n = lp.num_vars
    a_ub, b_ub = [], []
    for row in lp.rows:
        if row.rel == "<=":
            a_ub.append([float(c) for c in row.coeffs])
            b_ub.append(float(row.rhs) - 0.5)
        else:
            a_ub.append([-float(c) for c in row.coeffs])
            b_ub.append(-float(row.rhs) - 0.5)
    res = linprog([float(c) for c in lp.objective], A_ub=a_ub, b_ub=b_ub,
                  bounds=[(None, None)] * n, method="highs")
    if not res.success or res.x is None:
        return None
    for den in _SNAP_DENOMS:
        cand = tuple(Fraction(float(v)).limit_denominator(den) for v in res.x)
        if all(row.satisfied_by(cand) for row in lp.rows):
            return cand
    return None


def _exact_row_generation(lp: LinearProgram) -> LpOutcome:
    rows = lp.rows
    n = lp.num_vars
    nonneg = [True] * lp.m + [False]

    def run(active: list[LinRow]) -> SimplexResult:
        return simplex_solve(
            n, [(r.coeffs, r.rel, r.rhs) for r in active], lp.objective, nonneg)

    if len(rows) <= 4 * (lp.m + 2):
        active = list(rows)
        rest: list[LinRow] = []
    else:
        sign_rows = [r for r in rows if sum(1 for c in r.coeffs if c) == 1]
        others = [r for r in rows if r not in sign_rows]
        seed = others[: 2 * (lp.m + 2)]
        active = sign_rows + seed
        rest = others[len(seed):]

    while True:
        res = run(active)
        if res.status == INFEASIBLE:
            return LpOutcome(False)
        x = res.x  # feasible for the active rows even when unbounded
        violated = sorted((r for r in rest if not r.satisfied_by(x)),
                          key=lambda r: -r.violation(x))
        if not violated:
            return LpOutcome(True, x)
        batch = violated[:16]
        active.extend(batch)
        for r in batch:
            rest.remove(r)


def solve_lp(lp: LinearProgram, float_warm_start: bool = True) -> LpOutcome:
    """Feasible with an exact rational assignment, or exactly infeasible."""
    if float_warm_start:
        snapped = _float_warm_start(lp)
        if snapped is not None:
            return LpOutcome(True, snapped)
    return _exact_row_generation(lp)


def rationals_to_integer_lpb(assignment: Sequence[Fraction], m: int) -> Lpb:
    """Scale a rational solution to integers (lcm of denominators), then
    shrink by the common gcd; dividing every value by a common divisor
    preserves all point evaluations exactly."""
    vals = [Fraction(v) for v in assignment]
    scale = lcm(*(v.denominator for v in vals)) if vals else 1
    ints = [int(v * scale) for v in vals]
    g = gcd(*ints) if any(ints) else 1
    if g > 1:
        ints = [v // g for v in ints]
    return Lpb(tuple(ints[:m]), ints[m] if len(ints) > m else 0)


def synthesize_lp(d: Dnf, float_warm_start: bool = True) -> SynthesisResult:
    """normalize -> strength order -> extremal points -> exact LP -> integer
    rounding, with coefficients mapped back to the original numbering."""
    nd = normalize(d)
    order = op_order(nd)
    rd = order.apply(nd)
    mtps = minimal_true_points(rd)
    if not regularity_check(rd, mtps):
        return SynthesisResult(NOT_THRESHOLD, order=order, reason=REASON_REGULARITY)
    mfps = maximal_false_points(rd, mtps)
    lp = build_lp(mtps, mfps, rd.m)
    out = solve_lp(lp, float_warm_start=float_warm_start)
    if not out.feasible:
        return SynthesisResult(NOT_THRESHOLD, order=order, reason=REASON_LP)
    renamed = rationals_to_integer_lpb(out.assignment, rd.m)
    lpb = Lpb(order.restore_coeffs(renamed.coeffs), renamed.degree)
    return SynthesisResult(SUCCESS, lpb=lpb, order=order)
