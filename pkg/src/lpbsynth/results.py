"""Shared result type for the synthesis engines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .analysis import VariableOrder
from .core import Lpb
from .intervals import DegreeInterval, fmt_end

SUCCESS = "Success"
NOT_THRESHOLD = "NotThreshold"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class DeadEnd:
    """Empty coefficient choice: no value fits strictly between lo and hi
    when picking the coefficient of variable `column`."""

    column: int
    lo: int | float
    hi: int | float

    def __str__(self) -> str:
        return f"column {self.column}: empty interval ({fmt_end(self.lo)},{fmt_end(self.hi)})"


@dataclass(frozen=True)
class SynthesisResult:
    status: str
    lpb: Optional[Lpb] = None
    interval: Optional[DegreeInterval] = None
    order: Optional[VariableOrder] = None
    reason: Optional[str] = None
    dead_end: Optional[DeadEnd] = None
    partial_coeffs: Optional[tuple[tuple[int, int], ...]] = None  # (var, value) up to the dead end
    steps: Optional[int] = None
    final_nodes: Optional[int] = None
    table: object = field(default=None, repr=False, compare=False)

    @property
    def is_success(self) -> bool:
        return self.status == SUCCESS

    @property
    def is_not_threshold(self) -> bool:
        return self.status == NOT_THRESHOLD

    @property
    def is_unknown(self) -> bool:
        return self.status == UNKNOWN
