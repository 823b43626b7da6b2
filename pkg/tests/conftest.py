"""Shared example functions and independent oracles for the test suite.

The oracles here deliberately avoid the library's fast paths: regularity is
re-derived from an exhaustive extremal-point scan, and thresholdness at
tiny dimensions is decided by brute-force integer weight search over the
extremal points.
"""

from __future__ import annotations

from itertools import product

from lpbsynth import Dnf, brute_force_extremal, eval_dnf

# f = x1(x2 v x3 v x4) v x2x3x4, represented by 2,1,1,1 >= 3
THRESH_2111 = Dnf.of(4, [{1, 2}, {1, 3}, {1, 4}, {2, 3, 4}])

# f = x1x2 v x1x3x4 v x2x3x4, represented by 2,2,1,1 >= 4
THRESH_2211 = Dnf.of(4, [{1, 2}, {1, 3, 4}, {2, 3, 4}])

# five-variable function represented by 4,3,2,2,1 >= 5 (degree interval (4,5])
FIVE_VAR = Dnf.of(5, [{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {3, 4, 5}])

# six-variable threshold function on which the smallest-integer strategy
# dead-ends after choosing a6=1, a5=2, a4=2; representable by 9,7,6,4,4,1 >= 15
DEAD_END_SIX = Dnf.of(6, [{1, 2}, {1, 3}, {1, 4, 5}, {2, 3, 4},
                          {2, 3, 5}, {2, 4, 5}, {3, 4, 5, 6}])

# classic monotone non-threshold function x1x2 v x3x4
XOR_PAIRS = Dnf.of(4, [{1, 2}, {3, 4}])


def brute_regular(d: Dnf) -> bool:
    """Regularity by definition: for every minimal true point (taken from
    an exhaustive scan) and every i < j with p_i = 0, p_j = 1, the swapped
    point still satisfies d."""
    mtps = brute_force_extremal(d).mtps
    for p in mtps:
        for j in range(d.m):
            if not p[j]:
                continue
            for i in range(j):
                if p[i]:
                    continue
                q = list(p)
                q[i], q[j] = 1, 0
                if not eval_dnf(d, tuple(q)):
                    return False
    return True


def brute_threshold(d: Dnf, weight_bound: int = 4) -> bool:
    """Thresholdness at tiny m by exhaustive integer weight search over the
    extremal points: weights work iff the smallest true-point sum exceeds
    the largest false-point sum.  Minimal integer representations at m <= 4
    need coefficients no larger than 3, so the default bound has margin.
    """
    ext = brute_force_extremal(d)
    for a in product(range(weight_bound + 1), repeat=d.m):
        lo = min((sum(ai for ai, v in zip(a, x) if v) for x in ext.mtps),
                 default=None)
        hi = max((sum(ai for ai, v in zip(a, y) if v) for y in ext.mfps),
                 default=None)
        if lo is None:  # constant false: any degree above all sums works
            return True
        if hi is None:  # constant true
            return True
        if lo > hi:
            return True
    return False


def all_monotone_dnfs(m: int) -> list[Dnf]:
    """Every monotone function on m variables as its prime irredundant DNF,
    by filtering all 2^(2^m) truth tables for monotonicity."""
    n = 1 << m
    out = []
    for tt in range(1 << n):
        if _is_monotone_tt(tt, m):
            out.append(_tt_to_prime_dnf(tt, m))
    return out


def _is_monotone_tt(tt: int, m: int) -> bool:
    for i in range(m):
        off = 1 << i
        mask = 0
        for b in range(1 << m):
            if not (b >> i) & 1:
                mask |= 1 << b
        # a true point whose i-flip upward is false violates monotonicity
        if tt & mask & ~(tt >> off) & mask:
            return False
    return True


def _tt_to_prime_dnf(tt: int, m: int) -> Dnf:
    points = [b for b in range(1 << m) if (tt >> b) & 1]
    minimal = []
    for b in points:
        if all(not (tt >> (b & ~(1 << i))) & 1
               for i in range(m) if (b >> i) & 1):
            minimal.append(b)
    return Dnf.from_masks(m, minimal)
