import random

import pytest

from conftest import THRESH_2111, XOR_PAIRS
from lpbsynth import (
    Dnf,
    MaximalFalsePointError,
    brute_force_extremal,
    eval_dnf,
    eval_lpb,
    lpb_to_dnf,
    Lpb,
    maximal_false_points,
    minimal_true_points,
    normalize,
    op_order,
    random_lpb,
    regularity_check,
)

OR_AND = Dnf.of(3, [{1}, {2, 3}])  # x1 v x2x3


class TestMinimalTruePoints:
    def test_characteristic_vectors(self):
        assert set(minimal_true_points(THRESH_2111)) == {
            (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 1)}

    def test_constants(self):
        assert minimal_true_points(Dnf.true(3)) == ((0, 0, 0),)
        assert minimal_true_points(Dnf.false(3)) == ()

    def test_one_point_per_clause(self):
        rng = random.Random(3)
        for _ in range(40):
            d = lpb_to_dnf(random_lpb(rng.randint(1, 9), rng.getrandbits(32)))
            assert len(minimal_true_points(d)) == len(d.clauses)


class TestMaximalFalsePoints:
    def test_small_or_and(self):
        assert set(maximal_false_points(OR_AND)) == {(0, 1, 0), (0, 0, 1)}

    def test_four_var(self):
        assert set(maximal_false_points(THRESH_2111)) == {
            (1, 0, 0, 0), (0, 1, 1, 0), (0, 1, 0, 1), (0, 0, 1, 1)}

    def test_constant_true_has_none(self):
        assert maximal_false_points(Dnf.true(3)) == ()

    def test_non_regular_input_fails_loudly(self):
        with pytest.raises(MaximalFalsePointError):
            maximal_false_points(XOR_PAIRS)


class TestBruteForce:
    def test_small_or_and(self):
        ext = brute_force_extremal(OR_AND)
        assert set(ext.mtps) == {(1, 0, 0), (0, 1, 1)}
        assert set(ext.mfps) == {(0, 1, 0), (0, 0, 1)}

    def test_constants(self):
        f = brute_force_extremal(Dnf.false(2))
        assert f.mtps == () and f.mfps == ((1, 1),)
        t = brute_force_extremal(Dnf.true(2))
        assert t.mtps == ((0, 0),) and t.mfps == ()

    def test_cap(self):
        from lpbsynth import DimensionError

        with pytest.raises(DimensionError):
            brute_force_extremal(Dnf.true(21))


def test_oracle_agreement_random():
    rng = random.Random(23)
    for _ in range(80):
        m = rng.randint(1, 10)
        d = lpb_to_dnf(random_lpb(m, rng.getrandbits(32)))
        rd = op_order(d).apply(d)
        assert regularity_check(rd)
        ext = brute_force_extremal(rd)
        assert tuple(sorted(minimal_true_points(rd))) == ext.mtps
        assert tuple(sorted(maximal_false_points(rd))) == ext.mfps


def test_extremal_sets_determine_function():
    rng = random.Random(29)
    for _ in range(25):
        m = rng.randint(1, 8)
        d = lpb_to_dnf(random_lpb(m, rng.getrandbits(32)))
        mtps = minimal_true_points(d)
        for b in range(1 << m):
            p = tuple((b >> i) & 1 for i in range(m))
            above_some_mtp = any(all(x <= v for x, v in zip(q, p)) for q in mtps)
            assert above_some_mtp == eval_dnf(d, p)
