"""Text formats.

DNF files::

    # optional comment lines
    p dnf <m>
    <v1> <v2> ... 0      one clause per line, 0-terminated
    0                    the empty clause (constant true)

A file with a header and no clause lines is constant false.  Literals are
positive only; a negative index is a polarity violation, not a negation.

LPB text is a single line ``<a_1> <a_2> ... <a_m> >= <d>``.
"""

from __future__ import annotations

from .core import Dnf, Lpb


class DnfFormatError(ValueError):
    """Malformed DNF input."""


class PolarityError(DnfFormatError):
    """Negative literal in a positive-polarity DNF."""


class LpbFormatError(ValueError):
    """Malformed LPB text."""


def parse_dnf(text: str) -> Dnf:
    """Parse the DNF file format.  Returns the clauses exactly as written
    (no absorption); set-of-sets semantics apply.
    """
    m = None
    clauses: list[frozenset[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if m is None:
            parts = line.split()
            if len(parts) != 3 or parts[0] != "p" or parts[1] != "dnf":
                raise DnfFormatError(f"line {lineno}: expected header 'p dnf <m>'")
            try:
                m = int(parts[2])
            except ValueError:
                raise DnfFormatError(f"line {lineno}: bad variable count {parts[2]!r}")
            if m < 0:
                raise DnfFormatError(f"line {lineno}: negative variable count")
            continue
        try:
            tokens = [int(t) for t in line.split()]
        except ValueError:
            raise DnfFormatError(f"line {lineno}: non-integer token")
        if not tokens or tokens[-1] != 0:
            raise DnfFormatError(f"line {lineno}: clause must end with 0")
        if 0 in tokens[:-1]:
            raise DnfFormatError(f"line {lineno}: tokens after clause terminator")
        lits = tokens[:-1]
        for v in lits:
            if v < 0:
                raise PolarityError(
                    f"line {lineno}: negative literal {v} (positive polarity required)")
            if v > m:
                raise DnfFormatError(f"line {lineno}: variable {v} out of range 1..{m}")
        clauses.append(frozenset(lits))
    if m is None:
        raise DnfFormatError("missing 'p dnf <m>' header")
    return Dnf(m, frozenset(clauses))


def format_dnf(d: Dnf, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"p dnf {d.m}")
    for clause in d.sorted_clauses():
        lines.append(" ".join(str(v) for v in clause + (0,)))
    return "\n".join(lines) + "\n"


def parse_lpb(text: str) -> Lpb:
    tokens = text.split()
    if tokens.count(">=") != 1:
        raise LpbFormatError("expected exactly one '>=' in LPB text")
    split = tokens.index(">=")
    if split != len(tokens) - 2:
        raise LpbFormatError("expected a single degree after '>='")
    try:
        coeffs = [int(t) for t in tokens[:split]]
        degree = int(tokens[split + 1])
    except ValueError:
        raise LpbFormatError("non-integer token in LPB text")
    if any(a < 0 for a in coeffs):
        raise LpbFormatError("negative coefficient in LPB text")
    return Lpb(tuple(coeffs), degree)


def format_lpb(l: Lpb) -> str:
    return " ".join([str(a) for a in l.coeffs] + [">=", str(l.degree)])
