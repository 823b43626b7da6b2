"""DNF decomposition: the Cut operation and the successor table.

The table mirrors the structure of the decomposition by hand: each main
node with symmetry run l expands into a grid of successors, one level per
variable split away, with l+1 main successors at the last level instead of
2^l thanks to child sharing (the 1-child of the k-th entry of a level is
the 0-child of its (k+1)-th entry).  Main successors that are constant are
final and expand no further, even before the last column.  Non-constant
main successors with the same formula in the same column are materialized
once and shared across parents; constants and auxiliary entries are kept
per cell, like the cells of the written-out table.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .analysis import symmetry_prefix
from .core import Dnf, normalize
from .intervals import DegreeInterval, fmt_end

MAIN = "main"
AUX = "aux"


def cut(d: Dnf, xset: Iterable[int], k: int) -> Dnf:
    """Clauses of d containing exactly min(k, k_max) variables of X, with
    those variables removed; k_max is the length of the longest clause
    contained in X (infinite if none).  Result is normalized."""
    xmask = 0
    for v in xset:
        if not 1 <= v <= d.m:
            raise ValueError(f"variable {v} out of range 1..{d.m}")
        xmask |= 1 << (v - 1)
    size = xmask.bit_count()
    if not 0 <= k <= size:
        raise ValueError(f"k={k} out of range 0..{size}")
    k_max = None  # infinity
    for c in d.masks:
        if c & ~xmask == 0:
            n = c.bit_count()
            if k_max is None or n > k_max:
                k_max = n
    sel = k if k_max is None else min(k, k_max)
    picked = [c & ~xmask for c in d.masks if (c & xmask).bit_count() == sel]
    return normalize(Dnf.from_masks(d.m, picked))


class SuccessorNode:
    __slots__ = ("id", "formula", "column", "kind", "final", "zero", "one", "interval")

    def __init__(self, node_id: int, formula: Dnf, column: int, kind: str, final: bool):
        self.id = node_id
        self.formula = formula
        self.column = column
        self.kind = kind
        self.final = final
        self.zero: Optional[SuccessorNode] = None
        self.one: Optional[SuccessorNode] = None
        self.interval: Optional[DegreeInterval] = None

    def __repr__(self) -> str:
        tag = "final " if self.final else ""
        return f"<{tag}{self.kind} node {self.id} col {self.column}: {format_formula(self.formula)}>"


class SuccessorTable:
    def __init__(self, m: int):
        self.m = m
        self.columns: list[list[SuccessorNode]] = [[] for _ in range(m + 1)]
        self.nodes: list[SuccessorNode] = []
        self.root: Optional[SuccessorNode] = None
        self._main_index: dict[tuple[int, Dnf], SuccessorNode] = {}

    def new_node(self, formula: Dnf, column: int, kind: str, final: bool) -> SuccessorNode:
        node = SuccessorNode(len(self.nodes), formula, column, kind, final)
        self.nodes.append(node)
        self.columns[column].append(node)
        return node

    def final_node_count(self) -> int:
        return sum(1 for n in self.nodes if n.final)

    def total_formula_size(self) -> int:
        return sum(n.formula.literal_count() for n in self.nodes)

    def size_bound_ok(self) -> bool:
        """Whole-table size claim: total literal count stays below
        |root| * (m + 1).  Degenerate for constant roots (single node)."""
        if self.root is not None and self.root.final:
            return len(self.nodes) == 1
        return self.total_formula_size() < self.root.formula.literal_count() * (self.m + 1)


def build_successor_table(d: Dnf) -> SuccessorTable:
    """Build the full successor table of a normalized DNF whose variables
    are already numbered in decreasing strength order."""
    table = SuccessorTable(d.m)
    root_final = d.is_constant
    root = table.new_node(d, 0, MAIN, root_final)
    table.root = root
    if not root_final:
        table._main_index[(0, d)] = root
    queue = [root]
    qi = 0
    while qi < len(queue):
        node = queue[qi]
        qi += 1
        n, phi = node.column, node.formula
        l = symmetry_prefix(phi, n + 1)
        prev_level = [node]
        for lv in range(1, l + 1):
            xset = range(n + 1, n + lv + 1)
            level: list[SuccessorNode] = []
            for k in range(lv + 1):
                f = cut(phi, xset, k)
                col = n + lv
                if lv < l:
                    child = table.new_node(f, col, AUX, False)
                elif f.is_constant:
                    child = table.new_node(f, col, MAIN, True)
                else:
                    child = table._main_index.get((col, f))
                    if child is None:
                        child = table.new_node(f, col, MAIN, False)
                        table._main_index[(col, f)] = child
                        queue.append(child)
                level.append(child)
            for k, parent in enumerate(prev_level):
                parent.zero = level[k]
                parent.one = level[k + 1]
            prev_level = level
    return table


def format_formula(d: Dnf) -> str:
    if d.is_true:
        return "true"
    if d.is_false:
        return "false"
    return "+".join(".".join(f"x{v}" for v in c) for c in d.sorted_clauses())


def table_csv(table: SuccessorTable) -> str:
    lines = ["column,kind,final,formula,s,b"]
    for node in table.nodes:
        s = fmt_end(node.interval.s) if node.interval else ""
        b = fmt_end(node.interval.b) if node.interval else ""
        lines.append(f"{node.column},{node.kind},{int(node.final)},"
                     f"{format_formula(node.formula)},{s},{b}")
    return "\n".join(lines) + "\n"


def table_dot(table: SuccessorTable) -> str:
    lines = ["digraph successors {", "  rankdir=LR;"]
    for node in table.nodes:
        shape = "doublecircle" if node.final else ("box" if node.kind == MAIN else "ellipse")
        label = format_formula(node.formula)
        if node.interval:
            label += f"\\n{node.interval}"
        lines.append(f'  n{node.id} [shape={shape}, label="{label}"];')
    for node in table.nodes:
        if node.zero is not None:
            lines.append(f'  n{node.id} -> n{node.zero.id} [label="0"];')
            lines.append(f'  n{node.id} -> n{node.one.id} [label="1"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
