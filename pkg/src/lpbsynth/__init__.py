"""Threshold synthesis for positive DNFs.

Decides whether a monotone Boolean function given as a positive DNF is a
threshold function and, if so, builds a single linear pseudo-Boolean
constraint representing it: a complete engine based on an exact rational
feasibility LP over the extremal points, and a fast but incomplete
combinatorial engine that decomposes the DNF into a successor table and
propagates degree intervals, with a backtracking repair on top.
"""

from .analysis import (
    VariableOrder,
    occurrence_pattern,
    occurrence_patterns,
    op_order,
    regularity_check,
    symmetric,
    symmetry_prefix,
)
from .combinatorial import (
    backtrack_synthesize,
    base_interval,
    choose_coefficient,
    greedy_synthesize,
    propagate_interval,
)
from .core import (
    ClauseExplosionError,
    DimensionError,
    Dnf,
    Lpb,
    equivalent,
    eval_dnf,
    eval_lpb,
    lpb_to_dnf,
    normalize,
)
from .extremal import (
    ExtremalSets,
    MaximalFalsePointError,
    brute_force_extremal,
    maximal_false_points,
    minimal_true_points,
)
from .formats import (
    DnfFormatError,
    LpbFormatError,
    PolarityError,
    format_dnf,
    format_lpb,
    parse_dnf,
    parse_lpb,
)
from .harness import (
    ExperimentConfig,
    ExperimentRecord,
    instance_seed,
    random_lpb,
    records_to_csv,
    run_experiment,
    write_csv,
)
from .intervals import DegreeInterval
from .lp import (
    LinearProgram,
    LpOutcome,
    build_lp,
    dump_lp,
    rationals_to_integer_lpb,
    solve_lp,
    synthesize_lp,
)
from .results import NOT_THRESHOLD, SUCCESS, UNKNOWN, DeadEnd, SynthesisResult
from .table import SuccessorTable, build_successor_table, cut, table_csv, table_dot

__version__ = "0.1.0"

__all__ = [
    "ClauseExplosionError",
    "DeadEnd",
    "DegreeInterval",
    "DimensionError",
    "Dnf",
    "DnfFormatError",
    "ExperimentConfig",
    "ExperimentRecord",
    "ExtremalSets",
    "LinearProgram",
    "Lpb",
    "LpbFormatError",
    "LpOutcome",
    "MaximalFalsePointError",
    "NOT_THRESHOLD",
    "PolarityError",
    "SUCCESS",
    "SuccessorTable",
    "SynthesisResult",
    "UNKNOWN",
    "VariableOrder",
    "backtrack_synthesize",
    "base_interval",
    "brute_force_extremal",
    "build_lp",
    "build_successor_table",
    "choose_coefficient",
    "cut",
    "dump_lp",
    "equivalent",
    "eval_dnf",
    "eval_lpb",
    "format_dnf",
    "format_lpb",
    "greedy_synthesize",
    "instance_seed",
    "lpb_to_dnf",
    "maximal_false_points",
    "minimal_true_points",
    "normalize",
    "occurrence_pattern",
    "occurrence_patterns",
    "op_order",
    "parse_dnf",
    "parse_lpb",
    "propagate_interval",
    "random_lpb",
    "rationals_to_integer_lpb",
    "records_to_csv",
    "regularity_check",
    "run_experiment",
    "solve_lp",
    "symmetric",
    "symmetry_prefix",
    "synthesize_lp",
    "table_csv",
    "table_dot",
    "write_csv",
]
