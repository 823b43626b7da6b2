"""Minimal true points and maximal false points of a regular positive DNF,
plus an exhaustive scan oracle used to cross-check them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import (
    DEFAULT_ORACLE_CAP,
    DimensionError,
    Dnf,
    Point,
    dnf_truth_table,
    eval_dnf_mask,
    mask_point,
    point_mask,
)


class MaximalFalsePointError(RuntimeError):
    """A computed candidate failed the neighbor test; the input was not
    regular or not normalized."""


@dataclass(frozen=True)
class ExtremalSets:
    mtps: tuple[Point, ...]
    mfps: tuple[Point, ...]


def minimal_true_points(d: Dnf) -> tuple[Point, ...]:
    """One point per clause: its characteristic vector.  Requires d in
    prime irredundant (normalized) form."""
    return tuple(sorted(mask_point(c, d.m) for c in d.masks))


def maximal_false_points(d: Dnf, mtps: Sequence[Point] | None = None) -> tuple[Point, ...]:
    """Maximal false points of a regular DNF, renumbered to the strength
    order.

    Candidates zero out one 1-bit of a minimal true point and saturate all
    weaker (higher-index) positions.  Candidates that still satisfy d are
    dropped, the inclusion-maximal falsifying survivors are kept, and each
    survivor must pass the neighbor test (every 0 -> 1 flip satisfies d);
    any failure aborts the computation rather than returning a partial set.
    """
    m = d.m
    if mtps is not None:
        mtp_masks = [point_mask(p) for p in mtps]
    else:
        mtp_masks = list(d.masks)
    full = (1 << m) - 1
    candidates = set()
    for p in mtp_masks:
        for i in range(m):
            if (p >> i) & 1:
                low = p & ((1 << i) - 1)
                high = full & ~((1 << (i + 1)) - 1)
                candidates.add(low | high)
    false_cands = [c for c in candidates if not eval_dnf_mask(d, c)]
    maximal = [c for c in false_cands
               if not any(c != o and c & o == c for o in false_cands)]
    for c in maximal:
        for i in range(m):
            if not (c >> i) & 1 and not eval_dnf_mask(d, c | (1 << i)):
                raise MaximalFalsePointError(
                    f"candidate {mask_point(c, m)} is not maximal false; "
                    "input not regular or not normalized")
    return tuple(sorted(mask_point(c, m) for c in maximal))


def brute_force_extremal(d: Dnf, max_vars: int = DEFAULT_ORACLE_CAP) -> ExtremalSets:
    """Exact extremal sets by scanning all 2^m points."""
    m = d.m
    if m > max_vars:
        raise DimensionError(f"{m} variables exceed the oracle cap {max_vars}")
    n = 1 << m
    tt = dnf_truth_table(d)
    raw = np.frombuffer(tt.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    sat = np.unpackbits(raw, bitorder="little")[:n].astype(bool)
    idx = np.arange(n, dtype=np.int64)

    minimal = sat.copy()
    maximal = ~sat
    for i in range(m):
        bit = 1 << i
        has = ((idx >> i) & 1).astype(bool)
        neighbor_sat = sat[idx ^ bit]
        # a true point with a removable 1 is not minimal
        minimal &= ~(has & neighbor_sat)
        # a false point with an addable 1 that stays false is not maximal
        maximal &= ~(~has & ~neighbor_sat)

    mtps = tuple(sorted(mask_point(int(b), m) for b in idx[minimal]))
    mfps = tuple(sorted(mask_point(int(b), m) for b in idx[maximal]))
    return ExtremalSets(mtps, mfps)
