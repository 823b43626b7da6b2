"""Random LPB corpus generation and the cross-engine experiment runner.

Instances are seeded per (seed, m, index), so records do not depend on
execution order, and identical configurations reproduce identical corpora.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .combinatorial import DEFAULT_MAX_STEPS, backtrack_synthesize, greedy_synthesize
from .core import (
    DEFAULT_CLAUSE_CAP,
    DEFAULT_ORACLE_CAP,
    ClauseExplosionError,
    Dnf,
    Lpb,
    equivalent,
    lpb_to_dnf,
)
from .lp import synthesize_lp
from .results import SUCCESS, UNKNOWN, SynthesisResult

MAX_COEFF_CAP = 1000

ALGORITHMS = ("lp", "greedy", "backtrack")

CSV_HEADER = "id,m,seed,algo,outcome,verified,final_nodes,elapsed_us,backtrack_steps"


def default_max_coeff(m: int) -> int:
    return min(2 ** m, MAX_COEFF_CAP)


def random_lpb(m: int, seed: int, max_coeff: Optional[int] = None) -> Lpb:
    """Coefficients uniform in 1..max_coeff, sorted descending; degree
    uniform in 1..sum, which keeps the function non-constant."""
    if m < 1:
        raise ValueError("need at least one variable")
    if max_coeff is None:
        max_coeff = default_max_coeff(m)
    if max_coeff < 1:
        raise ValueError("max_coeff must be positive")
    rng = random.Random(seed)
    coeffs = sorted((rng.randint(1, max_coeff) for _ in range(m)), reverse=True)
    degree = rng.randint(1, sum(coeffs))
    return Lpb(tuple(coeffs), degree)


def instance_seed(seed: int, m: int, index: int) -> int:
    """Order-independent per-instance seed (integer mixing only, so it does
    not depend on hash randomization)."""
    x = (seed * 0x9E3779B97F4A7C15 + m * 0xBF58476D1CE4E5B9 + index * 0x94D049BB133111EB)
    x &= (1 << 63) - 1
    x ^= x >> 31
    return x


@dataclass(frozen=True)
class ExperimentConfig:
    m_values: tuple[int, ...]
    count: int
    seed: int
    algorithms: tuple[str, ...] = ("lp", "greedy")
    max_coeff: Optional[int] = None
    oracle_cap: int = DEFAULT_ORACLE_CAP
    clause_cap: int = DEFAULT_CLAUSE_CAP
    bound_factor: Optional[int] = None
    max_steps: int = DEFAULT_MAX_STEPS
    record_elapsed: bool = True  # off: elapsed_us is 0, making output byte-reproducible


@dataclass(frozen=True)
class ExperimentRecord:
    instance: str
    m: int
    seed: int
    algo: str
    outcome: str
    verified: Optional[bool]
    final_nodes: Optional[int]
    elapsed_us: int
    backtrack_steps: Optional[int]

    def csv_line(self) -> str:
        verified = "" if self.verified is None else str(self.verified).lower()
        fn = "" if self.final_nodes is None else str(self.final_nodes)
        bs = "" if self.backtrack_steps is None else str(self.backtrack_steps)
        return (f"{self.instance},{self.m},{self.seed},{self.algo},"
                f"{self.outcome},{verified},{fn},{self.elapsed_us},{bs}")


def _run_algo(algo: str, dnf: Dnf, cfg: ExperimentConfig) -> SynthesisResult:
    if algo == "lp":
        return synthesize_lp(dnf)
    if algo == "greedy":
        return greedy_synthesize(dnf)
    if algo == "backtrack":
        return backtrack_synthesize(
            dnf, bound_factor=cfg.bound_factor, max_steps=cfg.max_steps)
    raise ValueError(f"unknown algorithm {algo!r}")


def _verify(res: SynthesisResult, dnf: Dnf, cap: int) -> Optional[bool]:
    """Consistency with ground truth for generator instances, which are
    threshold by construction: a Success must pass the truth-table oracle,
    an Unknown claims nothing, a NotThreshold verdict is wrong."""
    if dnf.m > cap:
        return None
    if res.status == SUCCESS:
        return equivalent(dnf, res.lpb, max_vars=cap)
    return res.status == UNKNOWN


def run_experiment(cfg: ExperimentConfig) -> list[ExperimentRecord]:
    records: list[ExperimentRecord] = []
    for m in cfg.m_values:
        for index in range(cfg.count):
            iid = f"m{m:02d}_i{index:04d}"
            seed = instance_seed(cfg.seed, m, index)
            lpb = random_lpb(m, seed, cfg.max_coeff)
            try:
                dnf = lpb_to_dnf(lpb, max_clauses=cfg.clause_cap)
            except ClauseExplosionError:
                for algo in cfg.algorithms:
                    records.append(ExperimentRecord(
                        iid, m, seed, algo, "Error", None, None, 0, None))
                continue
            for algo in cfg.algorithms:
                t0 = time.perf_counter_ns()
                res = _run_algo(algo, dnf, cfg)
                elapsed = (time.perf_counter_ns() - t0) // 1000
                records.append(ExperimentRecord(
                    iid, m, seed, algo, res.status,
                    _verify(res, dnf, cfg.oracle_cap),
                    res.final_nodes,
                    elapsed if cfg.record_elapsed else 0,
                    res.steps))
    return records


def records_to_csv(records: Sequence[ExperimentRecord]) -> str:
    return "\n".join([CSV_HEADER] + [r.csv_line() for r in records]) + "\n"


def write_csv(records: Sequence[ExperimentRecord], path) -> None:
    with open(path, "w") as fh:
        fh.write(records_to_csv(records))
