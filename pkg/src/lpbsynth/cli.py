"""Command-line interface.

Exit codes: 0 success / equivalent, 1 not a threshold function /
inequivalent, 2 unknown (combinatorial dead end), 3 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analysis import op_order, regularity_check
from .combinatorial import DEFAULT_MAX_STEPS, backtrack_synthesize, greedy_synthesize
from .core import DEFAULT_ORACLE_CAP, DimensionError, Dnf, equivalent, normalize
from .extremal import maximal_false_points, minimal_true_points
from .formats import (
    DnfFormatError,
    LpbFormatError,
    format_dnf,
    format_lpb,
    parse_dnf,
    parse_lpb,
)
from .harness import (
    ALGORITHMS,
    ExperimentConfig,
    instance_seed,
    lpb_to_dnf,
    random_lpb,
    run_experiment,
    write_csv,
)
from .lp import build_lp, dump_lp, synthesize_lp
from .results import NOT_THRESHOLD, SUCCESS, UNKNOWN
from .table import table_csv, table_dot

EXIT_OK = 0
EXIT_NOT_THRESHOLD = 1
EXIT_UNKNOWN = 2
EXIT_ERROR = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract reserves 2 for Unknown
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lpbsynth",
                description="Decide whether a positive DNF is a threshold "
                            "function and synthesize a single linear "
                            "pseudo-Boolean constraint for it.")
    sub = p.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("synth", help="synthesize an LPB from a DNF file")
    ps.add_argument("--algo", choices=ALGORITHMS, default="lp")
    ps.add_argument("--verify", action="store_true",
                    help="check the result against the truth-table oracle")
    ps.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    ps.add_argument("--bound-factor", type=int, default=None,
                    help="backtracking cap multiplier (default: m)")
    ps.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    ps.add_argument("--dump-table", metavar="PATH",
                    help="write the successor table as CSV (combinatorial)")
    ps.add_argument("--dump-dot", metavar="PATH",
                    help="write the successor DAG in DOT format (combinatorial)")
    ps.add_argument("--dump-lp", metavar="PATH",
                    help="write the feasibility LP rows (lp algorithm)")
    ps.add_argument("file", metavar="FILE")

    pg = sub.add_parser("gen", help="generate paired .lpb/.dnf instances")
    pg.add_argument("--vars", type=int, required=True)
    pg.add_argument("--count", type=int, required=True)
    pg.add_argument("--seed", type=int, required=True)
    pg.add_argument("--max-coeff", type=int, default=None)
    pg.add_argument("--out", required=True, metavar="DIR")

    pe = sub.add_parser("experiment", help="run the cross-engine experiment")
    pe.add_argument("--vars", required=True, metavar="A..B",
                    help="variable counts, e.g. 5 or 3..8")
    pe.add_argument("--count", type=int, required=True, help="instances per m")
    pe.add_argument("--seed", type=int, required=True)
    pe.add_argument("--algos", default="lp,greedy",
                    help="comma list from: " + ",".join(ALGORITHMS))
    pe.add_argument("--max-coeff", type=int, default=None)
    pe.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    pe.add_argument("--bound-factor", type=int, default=None)
    pe.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    pe.add_argument("--out", required=True, metavar="CSV")
    pe.add_argument("--plot-dir", metavar="DIR",
                    help="figure directory (default: alongside the CSV)")
    pe.add_argument("--no-plots", action="store_true")
    pe.add_argument("--no-elapsed", action="store_true",
                    help="zero the elapsed_us column for reproducible output")

    pc = sub.add_parser("check", help="truth-table equivalence of a DNF and an LPB")
    pc.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    pc.add_argument("dnf_file", metavar="DNF_FILE")
    pc.add_argument("lpb_file", metavar="LPB_FILE")
    return p


def _read_dnf(path: str) -> Dnf:
    return parse_dnf(Path(path).read_text())


def _cmd_synth(args) -> int:
    dnf = _read_dnf(args.file)
    if args.dump_lp:
        if args.algo != "lp":
            print("note: --dump-lp applies to the lp algorithm; ignored",
                  file=sys.stderr)
        else:
            _write_lp_dump(dnf, args.dump_lp)
    if args.algo == "lp":
        res = synthesize_lp(dnf)
    elif args.algo == "greedy":
        res = greedy_synthesize(dnf)
    else:
        res = backtrack_synthesize(dnf, bound_factor=args.bound_factor,
                                   max_steps=args.max_steps)

    for attr, writer in (("dump_table", table_csv), ("dump_dot", table_dot)):
        path = getattr(args, attr)
        if not path:
            continue
        if res.table is None:
            print(f"note: no successor table to dump (--{attr.replace('_', '-')})",
                  file=sys.stderr)
        else:
            Path(path).write_text(writer(res.table))

    if res.status == NOT_THRESHOLD:
        print(f"not a threshold function ({res.reason})")
        return EXIT_NOT_THRESHOLD
    if res.status == UNKNOWN:
        detail = str(res.dead_end) if res.dead_end else (res.reason or "dead end")
        print(f"unknown: {detail}")
        return EXIT_UNKNOWN

    print(format_lpb(res.lpb))
    if res.interval is not None:
        print(f"interval {res.interval}")
    if args.verify:
        if dnf.m > args.oracle_cap:
            print(f"note: {dnf.m} variables exceed the oracle cap "
                  f"{args.oracle_cap}; verification skipped", file=sys.stderr)
        elif not equivalent(dnf, res.lpb, max_vars=args.oracle_cap):
            print("verification failed: output is not equivalent to the input",
                  file=sys.stderr)
            return EXIT_NOT_THRESHOLD
        else:
            print("verified: equivalent on all points", file=sys.stderr)
    return EXIT_OK


def _write_lp_dump(dnf: Dnf, path: str) -> None:
    nd = normalize(dnf)
    rd = op_order(nd).apply(nd)
    mtps = minimal_true_points(rd)
    if not regularity_check(rd, mtps):
        print("note: input is not regular; no LP to dump", file=sys.stderr)
        return
    lp = build_lp(mtps, maximal_false_points(rd, mtps), rd.m)
    Path(path).write_text(dump_lp(lp))


def _cmd_gen(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for index in range(args.count):
        seed = instance_seed(args.seed, args.vars, index)
        lpb = random_lpb(args.vars, seed, args.max_coeff)
        dnf = lpb_to_dnf(lpb)
        stem = f"m{args.vars:02d}_i{index:04d}"
        (out / f"{stem}.lpb").write_text(format_lpb(lpb) + "\n")
        (out / f"{stem}.dnf").write_text(
            format_dnf(dnf, comment=f"from LPB {format_lpb(lpb)} (seed {seed})"))
    print(f"wrote {args.count} instance pairs to {out}")
    return EXIT_OK


def _parse_var_range(text: str) -> tuple[int, ...]:
    if ".." in text:
        a, b = text.split("..", 1)
        lo, hi = int(a), int(b)
        if lo < 1 or hi < lo:
            raise ValueError(f"bad variable range {text!r}")
        return tuple(range(lo, hi + 1))
    v = int(text)
    if v < 1:
        raise ValueError(f"bad variable count {text!r}")
    return (v,)


def _cmd_experiment(args) -> int:
    algos = tuple(a.strip() for a in args.algos.split(",") if a.strip())
    for a in algos:
        if a not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {a!r}")
    cfg = ExperimentConfig(
        m_values=_parse_var_range(args.vars),
        count=args.count,
        seed=args.seed,
        algorithms=algos,
        max_coeff=args.max_coeff,
        oracle_cap=args.oracle_cap,
        bound_factor=args.bound_factor,
        max_steps=args.max_steps,
        record_elapsed=not args.no_elapsed,
    )
    records = run_experiment(cfg)
    out = Path(args.out)
    if out.parent and not out.parent.exists():
        out.parent.mkdir(parents=True, exist_ok=True)
    write_csv(records, out)
    print(f"wrote {len(records)} records to {out}")
    if not args.no_plots:
        from .report import render_report

        plot_dir = Path(args.plot_dir) if args.plot_dir else out.parent
        for fig in render_report(records, plot_dir):
            print(f"wrote {fig}")
    return EXIT_OK


def _cmd_check(args) -> int:
    dnf = _read_dnf(args.dnf_file)
    lpb = parse_lpb(Path(args.lpb_file).read_text())
    if equivalent(dnf, lpb, max_vars=args.oracle_cap):
        print("equivalent")
        return EXIT_OK
    print("not equivalent")
    return EXIT_NOT_THRESHOLD


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "synth":
            return _cmd_synth(args)
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "experiment":
            return _cmd_experiment(args)
        return _cmd_check(args)
    except (DnfFormatError, LpbFormatError, DimensionError, ValueError,
            OSError) as exc:
        print(f"lpbsynth: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
