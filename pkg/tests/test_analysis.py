import random

import pytest

from conftest import DEAD_END_SIX, FIVE_VAR, THRESH_2111, XOR_PAIRS, brute_regular
from lpbsynth import (
    Dnf,
    Lpb,
    lpb_to_dnf,
    normalize,
    occurrence_pattern,
    occurrence_patterns,
    op_order,
    random_lpb,
    regularity_check,
    symmetric,
    symmetry_prefix,
)


class TestOccurrencePattern:
    def test_counts_by_clause_size(self):
        assert occurrence_pattern(FIVE_VAR, 1) == (0, 4, 0, 0, 0)
        assert occurrence_pattern(FIVE_VAR, 5) == (0, 1, 1, 0, 0)

    def test_constant_false(self):
        assert occurrence_pattern(Dnf.false(3), 2) == (0, 0, 0)

    def test_index_out_of_range(self):
        with pytest.raises(ValueError):
            occurrence_pattern(FIVE_VAR, 6)

    def test_total_literal_count(self):
        for d in (THRESH_2111, FIVE_VAR, DEAD_END_SIX, XOR_PAIRS):
            pats = occurrence_patterns(d)
            assert sum(sum(p) for p in pats) == d.literal_count()


class TestOpOrder:
    def test_five_var_is_identity(self):
        assert op_order(FIVE_VAR).by_rank == (1, 2, 3, 4, 5)

    def test_short_clause_dominates(self):
        d = Dnf.of(3, [{3}, {1, 2}])
        assert op_order(d).by_rank == (3, 1, 2)

    def test_single_variable(self):
        assert op_order(Dnf.of(1, [{1}])).by_rank == (1,)

    def test_roundtrip_inverse(self):
        d = Dnf.of(4, [{4}, {2, 3}, {1, 2, 3}])
        order = op_order(d)
        for r, v in enumerate(order.by_rank):
            assert order.rank_of[v - 1] == r

    def test_apply_then_identity_order(self):
        d = Dnf.of(4, [{4}, {2, 3}, {1, 2, 3}])
        rd = op_order(d).apply(d)
        assert op_order(rd).is_identity

    def test_restore_coeffs(self):
        order = op_order(Dnf.of(3, [{3}, {1, 2}]))  # ranks: x3, x1, x2
        assert order.restore_coeffs((5, 2, 1)) == (2, 1, 5)

    def test_coefficient_order_consistency(self):
        # strictly larger coefficients must come with stronger patterns
        rng = random.Random(11)
        for _ in range(60):
            m = rng.randint(2, 8)
            lpb = random_lpb(m, rng.getrandbits(32), max_coeff=8)
            d = lpb_to_dnf(lpb)
            pats = occurrence_patterns(d)
            for i in range(m):
                for k in range(m):
                    if lpb.coeffs[i] > lpb.coeffs[k]:
                        assert pats[i] >= pats[k]


class TestSymmetric:
    def test_symmetric_pair(self):
        assert symmetric(FIVE_VAR, 3, 4)

    def test_asymmetric_pair(self):
        assert not symmetric(THRESH_2111, 1, 2)

    def test_reflexive(self):
        assert symmetric(THRESH_2111, 2, 2)

    def test_prefix_lengths(self):
        assert symmetry_prefix(FIVE_VAR, 3) == 2
        assert symmetry_prefix(FIVE_VAR, 1) == 1
        assert symmetry_prefix(Dnf.of(3, [{1, 2, 3}]), 1) == 3

    def test_equal_patterns_without_symmetry_stay_separate(self):
        # x1 and x3 share the pattern but swapping them changes the clauses,
        # so they must not land in one block
        d = XOR_PAIRS
        assert occurrence_pattern(d, 1) == occurrence_pattern(d, 3)
        assert not symmetric(d, 1, 3)
        assert symmetry_prefix(d, 1) == 2  # x1,x2 only


class TestRegularity:
    def test_non_regular_pairs(self):
        assert not regularity_check(XOR_PAIRS)

    def test_regular_examples(self):
        for d in (THRESH_2111, FIVE_VAR, DEAD_END_SIX, Dnf.of(1, [{1}]),
                  Dnf.true(3), Dnf.false(3)):
            assert regularity_check(d)

    def test_matches_brute_force_on_random_monotone(self):
        rng = random.Random(5)
        for _ in range(120):
            m = rng.randint(1, 5)
            n_clauses = rng.randint(0, 6)
            raw = Dnf.of(m, [
                {v for v in range(1, m + 1) if rng.random() < 0.5} or {1}
                for _ in range(n_clauses)])
            d = op_order(normalize(raw)).apply(normalize(raw))
            assert regularity_check(d) == brute_regular(d)

    def test_lpb_derived_dnfs_are_regular(self):
        rng = random.Random(17)
        for _ in range(60):
            m = rng.randint(1, 10)
            d = lpb_to_dnf(random_lpb(m, rng.getrandbits(32)))
            rd = op_order(d).apply(d)
            assert regularity_check(rd)

    def test_invariant_under_symmetric_exchange(self):
        # exchanging two symmetric variables leaves the clause set and so
        # the verdict untouched
        d = lpb_to_dnf(Lpb.of((3, 2, 2, 1), 4))
        swapped = Dnf(4, frozenset(
            frozenset({2: 3, 3: 2}.get(v, v) for v in c) for c in d.clauses))
        assert swapped == d
        assert regularity_check(d) == regularity_check(swapped)
