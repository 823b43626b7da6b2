"""Figures for experiment runs, rendered next to the CSV output."""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .harness import ExperimentRecord  # noqa: E402


def _unknown_rates(records: Sequence[ExperimentRecord]):
    totals: dict[tuple[str, int], int] = defaultdict(int)
    unknown: dict[tuple[str, int], int] = defaultdict(int)
    for r in records:
        if r.outcome == "Error":
            continue
        totals[(r.algo, r.m)] += 1
        if r.outcome == "Unknown":
            unknown[(r.algo, r.m)] += 1
    series: dict[str, tuple[list[int], list[float]]] = {}
    for algo in sorted({a for a, _ in totals}):
        ms = sorted(m for a, m in totals if a == algo)
        rates = [unknown[(algo, m)] / totals[(algo, m)] for m in ms]
        series[algo] = (ms, rates)
    return series


def failure_rate_figure(records: Sequence[ExperimentRecord], path) -> None:
    """Share of Unknown outcomes per variable count, one line per algorithm."""
    series = _unknown_rates(records)
    fig, ax = plt.subplots(figsize=(6, 4))
    for algo, (ms, rates) in series.items():
        ax.plot(ms, [100 * r for r in rates], marker="o", label=algo)
    ax.set_xlabel("variables m")
    ax.set_ylabel("failure rate [%]")
    ax.set_title("Conversion failure rate")
    ax.grid(True, alpha=0.3)
    if series:
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def final_nodes_figure(records: Sequence[ExperimentRecord], path) -> None:
    """Mean number of final successor-table nodes per variable count."""
    sums: dict[int, int] = defaultdict(int)
    counts: dict[int, int] = defaultdict(int)
    for r in records:
        if r.final_nodes is not None:
            sums[r.m] += r.final_nodes
            counts[r.m] += 1
    ms = sorted(counts)
    means = [sums[m] / counts[m] for m in ms]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ms, means, marker="s", color="tab:green")
    ax.set_xlabel("variables m")
    ax.set_ylabel("mean final nodes")
    ax.set_title("Average number of final nodes")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_report(records: Sequence[ExperimentRecord], out_dir) -> list[Path]:
    """Write the standard figures; returns the paths produced."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    fr = out / "failure_rate.png"
    failure_rate_figure(records, fr)
    written.append(fr)
    if any(r.final_nodes is not None for r in records):
        fn = out / "final_nodes.png"
        final_nodes_figure(records, fn)
        written.append(fn)
    return written
