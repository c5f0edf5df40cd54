"""Command-line interface.

Exit codes: 0 success, 1 data error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from . import __version__
from .casestudy import DEFAULT_SETTINGS, ordering, run_case_study
from .classic import all_metrics
from .config import ConfigError, load_synth_config, load_tuner_config
from .io import NoRecords, ParseError, emit, emit_scatter, ingest, to_csv, to_json
from .model import Cohort, ValidationError
from .report import OUTPUT_FORMATS, render, tuning_rows
from .sbci import DEFAULT_TAU, NORMS, PENALTIES, SbciParams, sbci
from .synth import SynthConfig, generate_cohort
from .tuner import MEAN_BALANCE_MODES, EmptyCohort, TunerConfig, grid_search

DATA_ERRORS = (ParseError, ValidationError, NoRecords, ConfigError, EmptyCohort, OSError)


def _unit_float(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"must lie in [0, 1], got {text}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text}")
    return value


def _csv_list(conv):
    def parse(text: str):
        try:
            return tuple(conv(v.strip()) for v in text.split(",") if v.strip())
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None

    return parse


PENALTY_CHOICES = sorted(PENALTIES) + ["a", "id"]
NORM_CHOICES = sorted(NORMS) + ["w", "id", "log"]


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=OUTPUT_FORMATS, default="text", help="output format (default: text)")
    p.add_argument("-o", "--output", type=Path, help="write to this file instead of stdout")


def _add_input(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("input", type=Path, nargs=None if required else "?", help="CSV or JSON publication records")
    p.add_argument("--input-format", choices=("csv", "json"), help="override format detection by extension")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scalecite", description="Author-level citation indices and SBCI tuning.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("metrics", help="classic indices for every author")
    _add_input(p)
    p.add_argument("--beta", type=_positive_float, default=0.1, help="decay rate for h_exp (default: 0.1)")
    p.add_argument("--threshold", type=_positive_int, default=10, help="citation threshold for i_a (default: 10)")
    _add_output(p)

    p = sub.add_parser("sbci", help="SBCI score for every author")
    _add_input(p)
    p.add_argument("--alpha", type=_unit_float, default=0.6)
    p.add_argument("--tau", type=_positive_int, default=DEFAULT_TAU)
    p.add_argument("--f", dest="penalty", choices=PENALTY_CHOICES, default="sqrt")
    p.add_argument("--g", dest="norm", choices=NORM_CHOICES, default="log1p")
    _add_output(p)

    p = sub.add_parser("tune", help="grid search over alpha x f x g")
    _add_input(p, required=False)
    p.add_argument("--seed", type=int, help="tune on a synthetic cohort with this seed (when no input is given)")
    p.add_argument("--synth-config", type=Path, help="generator config for --seed")
    p.add_argument("--config", type=Path, help="tuner config file (key = value)")
    p.add_argument("--alpha-grid", type=_csv_list(float))
    p.add_argument("--f-grid", type=_csv_list(str))
    p.add_argument("--g-grid", type=_csv_list(str))
    p.add_argument("--tau", type=_positive_int)
    p.add_argument("--lambda1", type=float)
    p.add_argument("--lambda2", type=float)
    p.add_argument("--lambda3", type=float)
    p.add_argument("--epsilon", type=_nonneg_int)
    p.add_argument("--mean-balance", choices=MEAN_BALANCE_MODES)
    p.add_argument("--workers", type=_positive_int, default=1)
    _add_output(p)

    p = sub.add_parser("synth", help="generate a synthetic cohort")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--config", type=Path, help="generator config file (key = value)")
    p.add_argument("--cohort-format", choices=("csv", "json"), help="cohort file format (default: by extension, csv on stdout)")
    p.add_argument("-o", "--output", type=Path, help="write to this file instead of stdout")

    p = sub.add_parser("case-study", help="reproduce the six-candidate comparison")
    p.add_argument("--beta", type=_positive_float, help="decay rate for h_exp (default: fixture value)")
    _add_output(p)

    p = sub.add_parser("scatter", help="per-paper (authors, citations) data for a log-log scatter")
    _add_input(p)
    p.add_argument("-o", "--output", type=Path, required=True)
    return parser


def _write(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text, encoding="utf-8")


def _load(args) -> Cohort:
    return ingest(args.input, args.input_format)


def cmd_metrics(args) -> int:
    cohort = _load(args)
    rows = [{"author_id": m.id, **all_metrics(m, beta=args.beta, a=args.threshold)} for m in cohort.members]
    rows.sort(key=lambda r: r["author_id"])
    _write(render(rows, args.format), args.output)
    return 0


def cmd_sbci(args) -> int:
    cohort = _load(args)
    params = SbciParams(args.alpha, args.tau, args.penalty, args.norm)
    rows = [{"author_id": m.id, "sbci": sbci(m, params)} for m in cohort.members]
    rows.sort(key=lambda r: r["author_id"])
    _write(render(rows, args.format, digits=4), args.output)
    return 0


def _tuner_config(args) -> TunerConfig:
    base = load_tuner_config(args.config) if args.config else TunerConfig()
    overrides = {
        "alpha_grid": args.alpha_grid,
        "penalty_grid": args.f_grid,
        "norm_grid": args.g_grid,
        "tau": args.tau,
        "lambda1": args.lambda1,
        "lambda2": args.lambda2,
        "lambda3": args.lambda3,
        "epsilon": args.epsilon,
        "mean_balance": args.mean_balance,
    }
    try:
        return replace(base, **{k: v for k, v in overrides.items() if v is not None})
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def cmd_tune(args, parser) -> int:
    if args.input is not None:
        cohort = _load(args)
    elif args.seed is not None:
        synth = load_synth_config(args.synth_config) if args.synth_config else SynthConfig()
        cohort = generate_cohort(synth, args.seed)
    else:
        parser.error("tune: give an input file or --seed")
    config = _tuner_config(args)
    best, table = grid_search(cohort, config, workers=args.workers)
    text = render(tuning_rows(table), args.format, digits=4 if args.format == "text" else 2)
    if args.format == "text":
        text += f"\nbest: alpha={best.alpha:g} f={best.penalty.label} g={best.norm.label} tau={best.tau}\n"
    _write(text, args.output)
    return 0


def cmd_synth(args) -> int:
    config = load_synth_config(args.config) if args.config else SynthConfig()
    cohort = generate_cohort(config, args.seed)
    fmt = args.cohort_format
    if args.output is None:
        sys.stdout.write(to_json(cohort) if fmt == "json" else to_csv(cohort))
    else:
        emit(cohort, args.output, fmt)
    return 0


def cmd_case_study(args) -> int:
    rows, problems = run_case_study(DEFAULT_SETTINGS, args.beta)
    text = render(rows, args.format)
    if args.format == "text":
        first = f"SBCI {DEFAULT_SETTINGS[0].label}"
        text += f"\nSBCI {DEFAULT_SETTINGS[0].label} ordering: {' > '.join(ordering(rows, first))}\n"
        text += "all published cells reproduced\n" if not problems else ""
    _write(text, args.output)
    for msg in problems:
        print(f"mismatch: {msg}", file=sys.stderr)
    return 1 if problems else 0


def cmd_scatter(args) -> int:
    n = emit_scatter(_load(args), args.output)
    print(f"wrote {n} rows to {args.output}", file=sys.stderr)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "metrics": cmd_metrics,
        "sbci": cmd_sbci,
        "tune": lambda a: cmd_tune(a, parser),
        "synth": cmd_synth,
        "case-study": cmd_case_study,
        "scatter": cmd_scatter,
    }
    try:
        return handlers[args.command](args)
    except DATA_ERRORS as exc:
        print(f"scalecite {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
