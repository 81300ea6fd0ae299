"""Command-line harness.

Exit codes: 0 when every verdict is PASS, 2 on any FAIL, 3 on usage or
guard errors.  Reports print as JSON by default or CSV with --format csv;
--plot-dir additionally renders one PNG figure per report next to the
delimited output.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .chaos import SEARCH_GUARD
from .partitions import Composition, GuardExceeded
from .reports import (
    Report,
    converge_report,
    count_report,
    crossval_report,
    freeness_report,
    linearize_report,
    paths_report,
    render_report,
    residual_report,
    tableaux_report,
    toeplitz_report,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        raise UsageError(message)


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x != ""]
    except ValueError as exc:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from exc


def _parse_fractions(text: str) -> list[Fraction]:
    try:
        return [Fraction(x) for x in text.split(",") if x != ""]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"expected a comma-separated rational list, got {text!r}") from exc


def build_parser() -> _Parser:
    parser = _Parser(prog="chaoslab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", type=Path, default=None, help="write the report to a file")
        p.add_argument("--plot-dir", type=Path, default=None, help="render a PNG figure here")
        p.add_argument("--guard", type=int, default=SEARCH_GUARD, help="search-space size guard")

    p = sub.add_parser("converge", help="finite-n traces against the pairing-sum limit")
    p.add_argument("--model", choices=("free", "classical"), default="free")
    p.add_argument("--r", required=True, help="composition, e.g. 2,2")
    p.add_argument("--t", default=None, help="times, e.g. 1,1 (default all 1)")
    p.add_argument("--n", required=True, help="values of n, e.g. 4,8,16")
    common(p)

    p = sub.add_parser("residual", help="recurrence-defect traces per n")
    p.add_argument("--model", choices=("free", "classical"), default="free")
    p.add_argument("--r", required=True, type=int, help="order of the recurrence")
    p.add_argument("--t", default="1", help="time parameter, e.g. 1 or 1/2")
    p.add_argument("--n", required=True, help="values of n")
    common(p)

    p = sub.add_parser("freeness", help="asymptotic freeness / independence gaps")
    p.add_argument("--model", choices=("free", "classical"), default="free")
    p.add_argument("--r", required=True, help="part sizes per interval, e.g. 1,1")
    p.add_argument("--t", required=True, help="interval breakpoints; a leading 0 is implied")
    p.add_argument("--word", required=True, help="letter word over the intervals, e.g. ABAB")
    p.add_argument("--n", required=True, help="values of n")
    common(p)

    p = sub.add_parser("crossval", help="identity battery over all compositions")
    p.add_argument("--max-total", type=int, default=8)
    common(p)

    p = sub.add_parser("count", help="all family counts for one composition")
    p.add_argument("--r", required=True)
    common(p)

    p = sub.add_parser("linearize", help="linearization coefficients vs pairing counts")
    p.add_argument("--family", choices=("chebyshev", "hermite", "charlier"), default="chebyshev")
    p.add_argument("--r", required=True)
    p.add_argument("--k", type=int, default=None, help="target degree (default: all)")
    common(p)

    p = sub.add_parser("paths", help="enumerate lattice paths for a composition")
    p.add_argument("--r", required=True)
    p.add_argument("--irreducible", action="store_true")
    common(p)

    p = sub.add_parser("tableaux", help="enumerate two-row tableaux of a weight")
    p.add_argument("--r", required=True)
    common(p)

    p = sub.add_parser("toeplitz", help="vacuum moment of a truncated operator product")
    p.add_argument("--r", required=True)
    p.add_argument("--d", type=int, default=None, help="truncation dimension")
    common(p)

    return parser


def _build_report(args: argparse.Namespace) -> Report:
    if args.command == "converge":
        parts = _parse_ints(args.r)
        times = _parse_fractions(args.t) if args.t else None
        if times is not None and len(times) == 1:
            times = times * len(parts)
        comp = Composition(tuple(parts), tuple(times) if times else None)
        return converge_report(args.model, comp, _parse_ints(args.n), args.guard)
    if args.command == "residual":
        times = _parse_fractions(args.t)
        if len(times) != 1:
            raise UsageError(f"residual takes a single time, got {args.t!r}")
        return residual_report(args.model, args.r, times[0], _parse_ints(args.n), args.guard)
    if args.command == "freeness":
        parts = tuple(_parse_ints(args.r))
        breakpoints = _parse_fractions(args.t)
        if len(breakpoints) == len(parts):
            breakpoints = [Fraction(0)] + breakpoints
        return freeness_report(
            args.model, parts, breakpoints, args.word, _parse_ints(args.n), args.guard
        )
    if args.command == "crossval":
        return crossval_report(args.max_total)
    if args.command == "count":
        return count_report(Composition(tuple(_parse_ints(args.r))))
    if args.command == "linearize":
        return linearize_report(args.family, tuple(_parse_ints(args.r)), args.k)
    if args.command == "paths":
        return paths_report(tuple(_parse_ints(args.r)), args.irreducible)
    if args.command == "tableaux":
        return tableaux_report(tuple(_parse_ints(args.r)))
    if args.command == "toeplitz":
        return toeplitz_report(tuple(_parse_ints(args.r)), args.d)
    raise UsageError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        report = _build_report(args)
    except (UsageError, GuardExceeded, ValueError) as exc:
        print(f"chaoslab: error: {exc}", file=sys.stderr)
        return 3
    text = render_report(report, args.format)
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    if args.plot_dir is not None:
        from .figures import render_report_figure

        render_report_figure(report, args.plot_dir)
    if report.has_errors:
        return 3
    return 0 if report.verdict == "PASS" else 2


if __name__ == "__main__":
    raise SystemExit(main())
