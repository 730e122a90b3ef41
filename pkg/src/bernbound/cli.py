"""Command-line front end.

Subcommands: ``bound``, ``figure``, ``tables``, ``verify`` and ``sequential``.
Exit status is 0 on success, 1 when a check fails and 2 on bad arguments.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import json
import math
import os
import sys
from typing import Iterable, Sequence

import numpy as np

from .intervals import Method, Side, alpha_star, bound_value, compute_bound
from .special import DomainError
from .verify import parse_policy, run_sequential_batch, run_suite, table1_check, table2_check

PRECISION_ENV = "BERNBOUND_PRECISION"
FIGURE_METHODS = (Method.F, Method.G, Method.BINOMLIKE, Method.HOEFFDING)
FIGURE_COLUMNS = ("qhat_f", "qhat_g", "qhat_1", "qhat_H")


def _precision() -> int:
    raw = os.environ.get(PRECISION_ENV, "12")
    try:
        value = int(raw)
    except ValueError:
        value = -1
    if not (1 <= value <= 17):
        raise DomainError(f"{PRECISION_ENV} must be an integer in [1, 17], got {raw!r}")
    return value


@contextlib.contextmanager
def _open_output(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


class _Writer:
    """Header-first CSV or JSON-lines rows with LF line endings."""

    def __init__(self, fh, fmt: str, columns: Sequence[str]):
        self.fh, self.fmt, self.columns = fh, fmt, tuple(columns)
        if fmt == "csv":
            self._csv = csv.writer(fh, lineterminator="\n")
            self._csv.writerow(self.columns)

    def row(self, values: Sequence) -> None:
        if self.fmt == "csv":
            self._csv.writerow([_csv_cell(v) for v in values])
        else:
            self.fh.write(json.dumps(dict(zip(self.columns, values))) + "\n")

    def comment(self, text: str, payload: dict) -> None:
        if self.fmt == "csv":
            self.fh.write(f"# {text}\n")
        else:
            self.fh.write(json.dumps(payload) + "\n")


def _csv_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


# --------------------------------------------------------------------------- subcommands


def cmd_bound(args) -> int:
    methods = [Method.parse(m) for m in args.methods.split(",") if m.strip()]
    sides = [Side.LOWER, Side.UPPER] if args.side == "both" else [Side(args.side)]
    prec = _precision()
    with _open_output(args.output) as fh:
        writer = _Writer(fh, args.format, ("method", "side", "value", "n", "k", "alpha", "flags"))
        for method in methods:
            for side in sides:
                res = compute_bound(method, args.n, args.k, args.alpha, side)
                value = f"{res.value:.{prec}f}" if args.format == "csv" else res.value
                writer.row((method.value, side.value, value, args.n, args.k, args.alpha, ";".join(res.flags)))
    return 0


def alpha_grid(n: int, k: int, points: int = 400) -> list[float]:
    """Log-spaced alphas in [1e-4, 1] plus the branch point at ``k`` and 1/4."""
    grid = set(float(a) for a in np.logspace(-4.0, 0.0, points))
    grid.add(0.25)
    if k >= 1:
        grid.add(alpha_star(n, k))
    return sorted(a for a in grid if a > 0.0)


def figure_rows(panel: str, n: int, alpha: float | None = None, k: int | None = None,
                points: int = 400) -> tuple[tuple[str, ...], list[tuple]]:
    if panel == "a":
        rows = [(kk, *(bound_value(m, n, kk, alpha) for m in FIGURE_METHODS)) for kk in range(n + 1)]
        return ("k", *FIGURE_COLUMNS), rows
    rows = [(a, *(bound_value(m, n, k, a) for m in FIGURE_METHODS)) for a in alpha_grid(n, k, points)]
    return ("alpha", *FIGURE_COLUMNS), rows


def cmd_figure(args) -> int:
    columns, rows = figure_rows(args.panel, args.n, args.alpha, args.k, args.points)
    with _open_output(args.output) as fh:
        writer = _Writer(fh, args.format, columns)
        for row in rows:
            writer.row(row)
    return 0


def cmd_tables(args) -> int:
    rep1, rows1 = table1_check(perturb=args.perturb)
    rep2, rows2 = table2_check(perturb=args.perturb)
    with _open_output(args.output) as fh:
        writer = _Writer(fh, args.format, ("table", "n", "d", "computed", "printed", "pass"))
        for row in rows1 + rows2:
            writer.row(row)
    bad = rep1.failures + rep2.failures
    for msg in bad:
        print(f"mismatch: {msg}", file=sys.stderr)
    return 1 if bad else 0


def cmd_verify(args) -> int:
    reports = run_suite(args.suite, n_max=args.n_max, trials=args.trials, seed=args.seed)
    with _open_output(args.output) as fh:
        writer = _Writer(fh, args.format, ("check", "passed", "checked", "failures", "detail"))
        for rep in reports:
            writer.row((rep.name, rep.passed, rep.checked, len(rep.failures), rep.detail))
    failed = [rep for rep in reports if not rep.passed]
    if failed:
        print(f"FAIL {failed[0].name}: {failed[0].failures[0]}", file=sys.stderr)
        return 1
    return 0


def cmd_sequential(args) -> int:
    policy = parse_policy(args.policy)
    records, summary = run_sequential_batch(policy, args.n, args.alpha, args.runs, args.seed)
    with _open_output(args.output) as fh:
        writer = _Writer(fh, args.format, ("run", "qbar", "successes", "qhat_f", "covered"))
        for i, rec in enumerate(records):
            writer.row((i, rec.realized_qbar, rec.successes, rec.qhat_f_value, rec.covered))
        payload = {
            "summary": {
                "runs": summary.runs,
                "alpha": summary.alpha,
                "covered_fraction": summary.covered_fraction,
                "sigma": summary.sigma,
                "passed": summary.passed,
            }
        }
        writer.comment(
            f"runs={summary.runs} covered_fraction={summary.covered_fraction!r} "
            f"sigma={summary.sigma!r} passed={str(summary.passed).lower()}",
            payload,
        )
    return 0 if summary.passed else 1


# --------------------------------------------------------------------------- parser


def _probability(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (0.0 <= value <= 1.0) or math.isnan(value):
        raise argparse.ArgumentTypeError(f"must lie in [0, 1], got {text}")
    return value


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bernbound",
        description="Confidence bounds on the average success probability of independent Bernoulli trials.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", default="-", help="output path, '-' for stdout")
    common.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", parents=[common], help="bounds for one (n, k, alpha) query")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_nonnegative, required=True)
    p.add_argument("--alpha", type=_probability, required=True)
    p.add_argument("--methods", default="f,g", help="comma list of f,g,hoeffding,binomlike,clopper-pearson")
    p.add_argument("--side", choices=("lower", "upper", "both"), default="lower")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("figure", parents=[common], help="curve data: panel a over k, panel b over alpha")
    p.add_argument("--panel", choices=("a", "b"), required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--alpha", type=_probability)
    p.add_argument("--k", type=_nonnegative)
    p.add_argument("--points", type=_positive, default=400, help="log-spaced alpha points for panel b")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("tables", parents=[common], help="recompute the alpha-dagger and binomial-mode tables")
    p.add_argument("--perturb", type=float, default=0.0, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", parents=[common], help="run verification sweeps")
    p.add_argument("--suite", choices=("coverage", "tightness", "lemmas", "all"), required=True)
    p.add_argument("--n-max", type=_positive, default=None)
    p.add_argument("--trials", type=_nonnegative, default=0, help="Monte Carlo trials, 0 for exact only")
    p.add_argument("--seed", type=_nonnegative, default=20240101)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sequential", parents=[common], help="sequential-sampling coverage demo")
    p.add_argument("--policy", required=True, help="constant:P, adversarial-threshold or momentum")
    p.add_argument("--n", type=_positive, default=20)
    p.add_argument("--alpha", type=_probability, default=0.05)
    p.add_argument("--runs", type=_positive, default=10_000)
    p.add_argument("--seed", type=_nonnegative, default=0)
    p.set_defaults(func=cmd_sequential)
    return parser


def _validate(parser: argparse.ArgumentParser, args) -> None:
    if args.command == "bound":
        if args.k > args.n:
            parser.error(f"--k must not exceed --n ({args.k} > {args.n})")
        methods = [m for m in args.methods.split(",") if m.strip()]
        if not methods:
            parser.error("--methods is empty")
        for m in methods:
            try:
                method = Method.parse(m)
            except DomainError as exc:
                parser.error(str(exc))
            if method is Method.HOEFFDING and args.alpha == 0.0:
                parser.error("the hoeffding bound needs --alpha > 0")
    elif args.command == "figure":
        if args.panel == "a":
            if args.alpha is None or args.alpha == 0.0:
                parser.error("panel a needs --alpha in (0, 1]")
        else:
            if args.k is None:
                parser.error("panel b needs --k")
            if args.k > args.n:
                parser.error(f"--k must not exceed --n ({args.k} > {args.n})")
    elif args.command == "sequential":
        try:
            parse_policy(args.policy)
        except DomainError as exc:
            parser.error(str(exc))


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(None if argv is None else list(argv))
    _validate(parser, args)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"bernbound: error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # downstream reader closed early (e.g. ``| head``)
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
