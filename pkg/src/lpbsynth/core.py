"""Core data types: positive DNFs, linear pseudo-Boolean constraints (LPBs),
point evaluation, normalization and the truth-table equivalence oracle.

A DNF is a set of clauses, each clause a set of variable indices in 1..m
(set-of-sets semantics, positive polarity only).  Constant true is the DNF
consisting of exactly the empty clause; constant false is the empty clause
set.  An LPB ``a_1 x_1 + ... + a_m x_m >= d`` has non-negative integer
coefficients; a point satisfies it iff the weighted sum of its 1-bits
reaches the degree d (d <= 0 makes it a tautology).

Internally clauses are bitmasks (variable i maps to bit i-1), which keeps
evaluation, absorption and truth-table construction cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

Point = tuple  # length-m tuple of 0/1 values

DEFAULT_ORACLE_CAP = 20
DEFAULT_CLAUSE_CAP = 100_000


class DimensionError(ValueError):
    """Point length or variable count does not match."""


class ClauseExplosionError(RuntimeError):
    """DNF conversion exceeded the configured clause cap."""


def point_mask(point: Sequence[int]) -> int:
    mask = 0
    for i, v in enumerate(point):
        if v:
            mask |= 1 << i
    return mask


def mask_point(mask: int, m: int) -> Point:
    return tuple((mask >> i) & 1 for i in range(m))


@dataclass(frozen=True)
class Dnf:
    """Positive DNF over variables 1..m."""

    m: int
    clauses: frozenset[frozenset[int]]

    @staticmethod
    def of(m: int, clauses: Iterable[Iterable[int]]) -> "Dnf":
        if m < 0:
            raise ValueError("variable count must be non-negative")
        cs = []
        for clause in clauses:
            c = frozenset(int(v) for v in clause)
            for v in c:
                if not 1 <= v <= m:
                    raise ValueError(f"variable index {v} out of range 1..{m}")
            cs.append(c)
        return Dnf(m, frozenset(cs))

    @staticmethod
    def from_masks(m: int, masks: Iterable[int]) -> "Dnf":
        return Dnf(m, frozenset(
            frozenset(i + 1 for i in range(m) if (c >> i) & 1) for c in masks))

    @staticmethod
    def true(m: int) -> "Dnf":
        return Dnf(m, frozenset([frozenset()]))

    @staticmethod
    def false(m: int) -> "Dnf":
        return Dnf(m, frozenset())

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Clause bitmasks in canonical (size, value) order."""
        ms = [sum(1 << (v - 1) for v in c) for c in self.clauses]
        ms.sort(key=lambda c: (c.bit_count(), c))
        return tuple(ms)

    @property
    def is_false(self) -> bool:
        return not self.clauses

    @property
    def is_true(self) -> bool:
        return len(self.clauses) == 1 and frozenset() in self.clauses

    @property
    def is_constant(self) -> bool:
        return self.is_false or self.is_true

    def literal_count(self) -> int:
        return sum(len(c) for c in self.clauses)

    def sorted_clauses(self) -> list[tuple[int, ...]]:
        return [tuple(sorted(c)) for c in
                sorted(self.clauses, key=lambda c: (len(c), tuple(sorted(c))))]

    def __repr__(self) -> str:
        body = " | ".join("&".join(f"x{v}" for v in c) if c else "true"
                          for c in self.sorted_clauses())
        return f"Dnf(m={self.m}, {body or 'false'})"


@dataclass(frozen=True)
class Lpb:
    """Linear pseudo-Boolean constraint ``sum a_i x_i >= degree``."""

    coeffs: tuple[int, ...]
    degree: int

    def __post_init__(self):
        if any(a < 0 for a in self.coeffs):
            raise ValueError("LPB coefficients must be non-negative")

    @staticmethod
    def of(coeffs: Iterable[int], degree: int) -> "Lpb":
        return Lpb(tuple(int(a) for a in coeffs), int(degree))

    @property
    def m(self) -> int:
        return len(self.coeffs)

    def __repr__(self) -> str:
        terms = " + ".join(f"{a}*x{i+1}" for i, a in enumerate(self.coeffs))
        return f"Lpb({terms or '0'} >= {self.degree})"


def normalize(d: Dnf) -> Dnf:
    """Absorption-free form: drop duplicate clauses and supersets of other
    clauses.  For positive DNFs this is the unique prime irredundant form.
    An empty clause absorbs everything, yielding constant true.
    """
    kept: list[int] = []
    for c in d.masks:  # sorted by size, so subsets come first
        if any(k & c == k for k in kept):
            continue
        kept.append(c)
    return Dnf.from_masks(d.m, kept)


def eval_dnf(d: Dnf, point: Sequence[int]) -> bool:
    if len(point) != d.m:
        raise DimensionError(f"point has {len(point)} bits, DNF has {d.m}")
    mask = point_mask(point)
    return any(c & mask == c for c in d.masks)


def eval_dnf_mask(d: Dnf, mask: int) -> bool:
    return any(c & mask == c for c in d.masks)


def eval_lpb(l: Lpb, point: Sequence[int]) -> bool:
    if len(point) != l.m:
        raise DimensionError(f"point has {len(point)} bits, LPB has {l.m}")
    return sum(a for a, v in zip(l.coeffs, point) if v) >= l.degree


@lru_cache(maxsize=None)
def _var_patterns(m: int) -> tuple[int, ...]:
    """Truth tables of the single variables over all 2^m points, as bit
    masks indexed by point number (point b sets variable i iff bit i-1 of b).
    """
    n = 1 << m
    pats = []
    for i in range(m):
        half = 1 << i
        block = ((1 << half) - 1) << half  # one period: half zeros, half ones
        width = half * 2
        while width < n:
            block |= block << width
            width *= 2
        pats.append(block)
    return tuple(pats)


def dnf_truth_table(d: Dnf) -> int:
    """Truth table of the DNF as an integer with 2^m bits."""
    n = 1 << d.m
    full = (1 << n) - 1
    pats = _var_patterns(d.m)
    tt = 0
    for c in d.masks:
        row = full
        i = 0
        cc = c
        while cc:
            if cc & 1:
                row &= pats[i]
            cc >>= 1
            i += 1
        tt |= row
        if tt == full:
            break
    return tt


def lpb_truth_table(l: Lpb) -> int:
    """Truth table of the LPB as an integer with 2^m bits."""
    m = l.m
    n = 1 << m
    idx = np.arange(n, dtype=np.int64)
    sums = np.zeros(n, dtype=np.int64)
    for i, a in enumerate(l.coeffs):
        if a:
            sums += ((idx >> i) & 1) * a
    sat = sums >= l.degree
    packed = np.packbits(sat, bitorder="little").tobytes()
    return int.from_bytes(packed, "little")


def equivalent(d: Dnf, l: Lpb, max_vars: int = DEFAULT_ORACLE_CAP) -> bool:
    """Exhaustive truth-table comparison of a DNF and an LPB."""
    if d.m != l.m:
        raise DimensionError(f"DNF has {d.m} variables, LPB has {l.m}")
    if d.m > max_vars:
        raise DimensionError(f"{d.m} variables exceed the oracle cap {max_vars}")
    return dnf_truth_table(d) == lpb_truth_table(l)


def lpb_to_dnf(l: Lpb, max_clauses: int = DEFAULT_CLAUSE_CAP) -> Dnf:
    """Prime irredundant DNF of the function represented by the LPB.

    Each clause is the support of one minimal true point.  Enumeration is a
    depth-first branch over variables in descending coefficient order; with
    that order, a branch that just reached the degree is always inclusion-
    minimal, and branches that cannot reach it are pruned by suffix sums.
    """
    m = l.m
    order = sorted(range(m), key=lambda i: (-l.coeffs[i], i))
    a = [l.coeffs[i] for i in order]
    suffix = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] + a[i]

    out: list[frozenset[int]] = []
    chosen: list[int] = []

    def walk(i: int, s: int) -> None:
        if s >= l.degree:
            if len(out) >= max_clauses:
                raise ClauseExplosionError(
                    f"more than {max_clauses} clauses at {m} variables")
            out.append(frozenset(order[j] + 1 for j in chosen))
            return
        if i == m or s + suffix[i] < l.degree:
            return
        chosen.append(i)
        walk(i + 1, s + a[i])
        chosen.pop()
        walk(i + 1, s)

    walk(0, 0)
    return Dnf(m, frozenset(out))
