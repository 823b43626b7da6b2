"""Half-open degree intervals (s, b] with extended-integer endpoints.

Any degree strictly above s and up to b yields the same function for a
fixed coefficient vector.  Endpoints stay integers throughout synthesis;
infinities only ever appear as -inf for s or +inf for b, so endpoint
differences never hit inf - inf.
"""

from __future__ import annotations

from dataclasses import dataclass

NEG_INF = float("-inf")
POS_INF = float("inf")


def fmt_end(v) -> str:
    if v == NEG_INF:
        return "-inf"
    if v == POS_INF:
        return "inf"
    return str(int(v))


@dataclass(frozen=True)
class DegreeInterval:
    s: int | float  # minimum degree, exclusive (possibly -inf)
    b: int | float  # maximum degree, inclusive (possibly +inf)

    def scaled(self, factor: int) -> "DegreeInterval":
        return DegreeInterval(self.s * factor, self.b * factor)

    def contains(self, degree: int) -> bool:
        return self.s < degree <= self.b

    def __str__(self) -> str:
        return f"({fmt_end(self.s)},{fmt_end(self.b)}]"
