"""Variable analysis: occurrence patterns, the strength order they induce,
syntactic symmetry, and the regularity test that gates synthesis.

The occurrence pattern of a variable is the vector (n_1, ..., n_m) where
n_j counts the clauses of size j containing it; patterns are compared
lexicographically, so occurring in shorter clauses dominates.  This is the
row of the Winder matrix for the variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .core import Dnf, Point, point_mask

OccurrencePattern = tuple


def occurrence_patterns(d: Dnf) -> list[tuple[int, ...]]:
    """Patterns for all variables in one pass over the clause set."""
    counts = [[0] * d.m for _ in range(d.m)]
    for clause in d.clauses:
        size = len(clause)
        for v in clause:
            counts[v - 1][size - 1] += 1
    return [tuple(row) for row in counts]


def occurrence_pattern(d: Dnf, v: int) -> tuple[int, ...]:
    if not 1 <= v <= d.m:
        raise ValueError(f"variable {v} out of range 1..{d.m}")
    counts = [0] * d.m
    for clause in d.clauses:
        if v in clause:
            counts[len(clause) - 1] += 1
    return tuple(counts)


@dataclass(frozen=True)
class VariableOrder:
    """Bijection on 1..m; by_rank[r] is the original index of the variable
    renumbered to r+1."""

    by_rank: tuple[int, ...]

    @cached_property
    def rank_of(self) -> tuple[int, ...]:
        inv = [0] * len(self.by_rank)
        for r, v in enumerate(self.by_rank):
            inv[v - 1] = r
        return tuple(inv)

    @property
    def m(self) -> int:
        return len(self.by_rank)

    @property
    def is_identity(self) -> bool:
        return all(v == r + 1 for r, v in enumerate(self.by_rank))

    def apply(self, d: Dnf) -> Dnf:
        """Renumber so that this order becomes the identity."""
        if self.is_identity:
            return d
        return Dnf(d.m, frozenset(
            frozenset(self.rank_of[v - 1] + 1 for v in c) for c in d.clauses))

    def apply_point(self, p: Sequence[int]) -> Point:
        return tuple(p[self.by_rank[r] - 1] for r in range(self.m))

    def restore_coeffs(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        """Map coefficients chosen in renumbered space back to the original
        variable numbering."""
        out = [0] * self.m
        for r, v in enumerate(self.by_rank):
            out[v - 1] = coeffs[r]
        return tuple(out)


def op_order(d: Dnf) -> VariableOrder:
    """Variables sorted by occurrence pattern, strongest first; ties keep
    ascending original index."""
    pats = occurrence_patterns(d)
    ranked = sorted(range(1, d.m + 1), key=lambda v: (_neg(pats[v - 1]), v))
    return VariableOrder(tuple(ranked))


def _neg(pattern: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-x for x in pattern)


def symmetric(d: Dnf, i: int, j: int) -> bool:
    """True iff exchanging variables i and j maps the clause set to itself."""
    for v in (i, j):
        if not 1 <= v <= d.m:
            raise ValueError(f"variable {v} out of range 1..{d.m}")
    if i == j:
        return True
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    masks = set(d.masks)
    for c in d.masks:
        has_i, has_j = bool(c & bi), bool(c & bj)
        if has_i != has_j:
            c = c ^ bi ^ bj
            if c not in masks:
                return False
    return True


def symmetry_prefix(d: Dnf, start: int) -> int:
    """Largest l so that variables start..start+l-1 are pairwise symmetric
    and share the same occurrence pattern.

    Checking each candidate against the first variable suffices: swaps
    preserving the clause set form a group, and pattern equality is
    transitive.
    """
    pats = occurrence_patterns(d)
    base = pats[start - 1]
    l = 1
    while start + l <= d.m and pats[start + l - 1] == base \
            and symmetric(d, start, start + l):
        l += 1
    return l


def regularity_check(d: Dnf, mtps: Sequence[Point] | None = None) -> bool:
    """Swap test for regularity w.r.t. the current variable numbering.

    Requires d normalized and already renumbered so that variable strength
    decreases with the index.  For every minimal true point p and every
    pair i < j with p_i = 0 and p_j = 1, the point with positions i and j
    exchanged must still satisfy d.

    The test runs on clause masks: the swapped point p' = p - e_j + e_i
    satisfies d iff some clause c with i in c has c - {i} contained in
    p - {j}.  (A clause avoiding i would be a proper subset of the prime
    clause p, which absorption rules out.)
    """
    if mtps is not None:
        mtp_masks = [point_mask(p) for p in mtps]
    else:
        mtp_masks = list(d.masks)
    clause_masks = d.masks
    m = d.m
    for p in mtp_masks:
        ones = [j for j in range(m) if (p >> j) & 1]
        if not ones:
            continue
        top = ones[-1]
        for i in range(top):
            if (p >> i) & 1:
                continue
            bit_i = 1 << i
            # reduced clauses through variable i that fit inside p
            inter = None
            for c in clause_masks:
                if c & bit_i:
                    rest = c & ~bit_i
                    if rest & ~p == 0:
                        inter = rest if inter is None else inter & rest
                        if inter == 0:
                            break
            if inter is None:
                return False  # no swap target: moving a 1 from j to i fails
            if inter:
                for j in ones:
                    if j > i and (inter >> j) & 1:
                        return False
    return True
