"""Dense two-phase simplex over exact rationals with Bland's anti-cycling
pivot rule.

Rows are (coefficients, relation, rhs) with relations '<=', '>=' or '=='.
Structural variables may be free or sign-restricted; free variables are
split internally.  Infeasibility and optimality are exact: there is no
tolerance anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Row = tuple  # (coeffs, relation, rhs)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class SimplexResult:
    status: str
    x: tuple[Fraction, ...] | None = None  # feasible point (optimal if status says so)
    objective: Fraction | None = None


def simplex_solve(
    n: int,
    rows: Sequence[Row],
    objective: Sequence,
    nonneg: Sequence[bool],
) -> SimplexResult:
    """Minimize objective . x subject to the rows; x_j >= 0 where nonneg[j]."""
    # Column layout: one column per structural variable, plus a negative
    # copy for each free variable, then slacks, then artificials.
    neg_col_of = {}
    cols = n
    for j in range(n):
        if not nonneg[j]:
            neg_col_of[j] = cols
            cols += 1

    a: list[list[Fraction]] = []
    b: list[Fraction] = []
    slack_cols: list[int | None] = []
    for coeffs, rel, rhs in rows:
        if len(coeffs) != n:
            raise ValueError("row length does not match variable count")
        row = [Fraction(0)] * cols
        for j, c in enumerate(coeffs):
            row[j] = Fraction(c)
            if j in neg_col_of:
                row[neg_col_of[j]] = -Fraction(c)
        a.append(row)
        b.append(Fraction(rhs))
        if rel == "<=":
            slack_cols.append(1)
        elif rel == ">=":
            slack_cols.append(-1)
        elif rel == "==":
            slack_cols.append(None)
        else:
            raise ValueError(f"unknown relation {rel!r}")

    m_rows = len(a)
    slack_of_row: list[int | None] = [None] * m_rows
    for i, s in enumerate(slack_cols):
        if s is not None:
            for row in a:
                row.append(Fraction(0))
            a[i][cols] = Fraction(s)
            slack_of_row[i] = cols
            cols += 1

    for i in range(m_rows):
        if b[i] < 0:
            a[i] = [-v for v in a[i]]
            b[i] = -b[i]

    basis: list[int] = [-1] * m_rows
    artificials: list[int] = []
    for i in range(m_rows):
        s = slack_of_row[i]
        if s is not None and a[i][s] == 1:
            basis[i] = s
        else:
            for row in a:
                row.append(Fraction(0))
            a[i][cols] = Fraction(1)
            basis[i] = cols
            artificials.append(cols)
            cols += 1

    def run_bland(cost: list[Fraction]) -> str:
        while True:
            # reduced costs r_j = c_j - c_B . column_j (tableau is reduced)
            lam = [cost[basis[i]] for i in range(m_rows)]
            enter = -1
            for j in range(cols):
                r = cost[j]
                if any(lam):
                    r = r - sum(lam[i] * a[i][j] for i in range(m_rows) if lam[i])
                if r < 0:
                    enter = j
                    break
            if enter < 0:
                return OPTIMAL
            leave = -1
            best: Fraction | None = None
            for i in range(m_rows):
                if a[i][enter] > 0:
                    ratio = b[i] / a[i][enter]
                    if best is None or ratio < best or \
                            (ratio == best and basis[i] < basis[leave]):
                        best = ratio
                        leave = i
            if leave < 0:
                return UNBOUNDED
            _pivot(a, b, leave, enter)
            basis[leave] = enter

    def _pivot(a, b, pr, pc):
        piv = a[pr][pc]
        arow = a[pr]
        if piv != 1:
            inv = 1 / piv
            a[pr] = arow = [v * inv for v in arow]
            b[pr] *= inv
        for i in range(m_rows):
            if i == pr:
                continue
            f = a[i][pc]
            if f:
                ai = a[i]
                a[i] = [x - f * y for x, y in zip(ai, arow)]
                b[i] -= f * b[pr]

    def current_x() -> tuple[Fraction, ...]:
        vals = [Fraction(0)] * cols
        for i in range(m_rows):
            vals[basis[i]] = b[i]
        out = []
        for j in range(n):
            v = vals[j]
            if j in neg_col_of:
                v -= vals[neg_col_of[j]]
            out.append(v)
        return tuple(out)

    if artificials:
        art_set = set(artificials)
        cost1 = [Fraction(1) if j in art_set else Fraction(0) for j in range(cols)]
        status = run_bland(cost1)
        assert status == OPTIMAL  # phase 1 is bounded below by 0
        phase1_value = sum(b[i] for i in range(m_rows) if basis[i] in art_set)
        if phase1_value > 0:
            return SimplexResult(INFEASIBLE)
        # drive artificials out of the (degenerate) basis
        drop_rows = []
        for i in range(m_rows):
            if basis[i] in art_set:
                pc = next((j for j in range(cols)
                           if j not in art_set and a[i][j] != 0), None)
                if pc is None:
                    drop_rows.append(i)  # redundant all-zero row
                else:
                    _pivot(a, b, i, pc)
                    basis[i] = pc
        if drop_rows:
            for i in reversed(drop_rows):
                del a[i], b[i], basis[i]
            m_rows = len(a)
        keep = min(artificials)
        a = [row[:keep] for row in a]
        cols = keep

    cost2 = [Fraction(0)] * cols
    for j in range(n):
        c = Fraction(objective[j])
        cost2[j] = c
        if j in neg_col_of:
            cost2[neg_col_of[j]] = -c
    status = run_bland(cost2)
    x = current_x()
    obj = sum(Fraction(objective[j]) * x[j] for j in range(n))
    return SimplexResult(status, x, obj)
