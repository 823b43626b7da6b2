from fractions import Fraction

from lpbsynth.simplex import INFEASIBLE, OPTIMAL, UNBOUNDED, simplex_solve

F = Fraction


def test_simple_optimum():
    # min x + y  s.t.  x + y >= 2, x <= 5
    res = simplex_solve(2, [((1, 1), ">=", 2), ((1, 0), "<=", 5)],
                        (1, 1), [True, True])
    assert res.status == OPTIMAL
    assert res.objective == 2
    assert sum(res.x) == 2


def test_infeasible():
    res = simplex_solve(1, [((1,), ">=", 2), ((1,), "<=", 1)], (0,), [True])
    assert res.status == INFEASIBLE


def test_unbounded_returns_feasible_point():
    res = simplex_solve(1, [((1,), ">=", 3)], (-1,), [True])
    assert res.status == UNBOUNDED
    assert res.x[0] >= 3


def test_free_variable():
    # min d  s.t.  d >= -4 (d free)
    res = simplex_solve(1, [((1,), ">=", -4)], (1,), [False])
    assert res.status == OPTIMAL
    assert res.x[0] == -4


def test_equality_rows():
    # min x+y s.t. x + 2y == 4, x - y == 1  ->  x=2, y=1
    res = simplex_solve(2, [((1, 2), "==", 4), ((1, -1), "==", 1)],
                        (1, 1), [True, True])
    assert res.status == OPTIMAL
    assert res.x == (F(2), F(1))


def test_redundant_equalities():
    res = simplex_solve(2, [((1, 1), "==", 2), ((2, 2), "==", 4)],
                        (1, 0), [True, True])
    assert res.status == OPTIMAL
    assert res.x[0] + res.x[1] == 2


def test_fractional_optimum_is_exact():
    # min y s.t. 3y >= 1 -> y = 1/3 exactly
    res = simplex_solve(1, [((3,), ">=", 1)], (1,), [True])
    assert res.x[0] == F(1, 3)


def test_degenerate_cycling_guard():
    # classic cycling-prone instance; Bland's rule must terminate
    rows = [
        ((F(1, 4), -8, -1, 9), "<=", 0),
        ((F(1, 2), -12, F(-1, 2), 3), "<=", 0),
        ((0, 0, 1, 0), "<=", 1),
    ]
    res = simplex_solve(4, rows, (F(-3, 4), 150, F(-1, 50), 6),
                        [True, True, True, True])
    assert res.status == OPTIMAL
    assert res.objective == F(-77, 100)  # at x = (1, 0, 1, 0)


def test_scaling_keeps_tag():
    rows = [((2, 1), ">=", 3), ((1, 3), "<=", 9), ((1, 0), ">=", 0)]
    base = simplex_solve(2, rows, (1, 1), [True, False]).status
    for factor in (2, 7, 100):
        rows_f = [(tuple(c * factor for c in cs), rel, rhs * factor)
                  for cs, rel, rhs in rows]
        assert simplex_solve(2, rows_f, (1, 1), [True, False]).status == base
