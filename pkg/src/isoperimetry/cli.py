"""Command-line interface.

Usage::

    isoperimetry table --n 4 --p 4 --format csv
    isoperimetry sweep --n-min 4 --n-max 4096 --geometric 2 --p 1
    isoperimetry wasted --n 100 --p 1
    isoperimetry convex polygon.csv
    isoperimetry verify --suite bounds

Exit codes: 0 success, 1 verification mismatch, 2 bad arguments or
unparseable input, 3 I/O failure, 4 polygon invariant violated.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys

import numpy as np

from . import __version__
from .convex_estimator import estimate, load_polygon
from .emit import FORMATS, render
from .errors import DomainError, PolygonInvariantError, PolygonParseError
from .isoperimetric import wasted_report
from .metrics import REGISTRY, evaluate_all
from .verify import SUITES, run_suite, sweep

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_INVARIANT = 4


class _UsageError(Exception):
    pass


def _cmd_table(args):
    records = []
    for mv in evaluate_all(args.n, args.p, args.m):
        d = REGISTRY[mv.id]
        records.append({
            "metric": mv.id.value,
            "section": d.paper_section,
            "value": mv.value,
            "bounded": d.bounded_01,
            "limit": d.limit_at_infinity,
            "erratum_note": d.erratum_note,
        })
    return records, EXIT_OK


def _cmd_sweep(args):
    if args.geometric is not None and args.step is not None:
        raise _UsageError("--geometric and --step are mutually exclusive")
    rows = sweep(
        args.n_min,
        args.n_max,
        step=args.step or 1,
        ratio=args.geometric,
        p=args.p,
        m=args.m,
        workers=args.workers,
    )
    return [r.record() for r in rows], EXIT_OK


def _cmd_wasted(args):
    return [dataclasses.asdict(wasted_report(args.n, args.p))], EXIT_OK


def _cmd_convex(args):
    poly = load_polygon(args.input, args.input_format)
    rec = dataclasses.asdict(estimate(poly))
    rec["notes"] = "; ".join(rec["notes"])
    return [rec], EXIT_OK


def _cmd_verify(args):
    results = run_suite(args.suite)
    code = EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH
    return [r.record() for r in results], code


def _add_output(sp, default_format="table"):
    sp.add_argument("--format", choices=FORMATS, default=default_format)
    sp.add_argument("--output", metavar="PATH", help="write to PATH instead of stdout")
    sp.add_argument("--meta", action="store_true", help="prepend a provenance header")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isoperimetry",
        description="Regular-polygon areas, wasted area, efficiency indices and checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("table", help="all efficiency indices for one polygon")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=float, default=1.0)
    sp.add_argument("--m", type=float, default=0.0)
    _add_output(sp)
    sp.set_defaults(func=_cmd_table)

    sp = sub.add_parser("sweep", help="every quantity over a range of n")
    sp.add_argument("--n-min", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--step", type=int, default=None)
    sp.add_argument("--geometric", type=float, default=None, metavar="RATIO")
    sp.add_argument("--p", type=float, default=1.0)
    sp.add_argument("--m", type=float, default=0.0)
    sp.add_argument("--workers", type=int, default=1)
    _add_output(sp, "csv")
    sp.set_defaults(func=_cmd_sweep)

    sp = sub.add_parser("wasted", help="wasted-area report for one polygon")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=float, default=1.0)
    _add_output(sp)
    sp.set_defaults(func=_cmd_wasted)

    sp = sub.add_parser("convex", help="average-apothem area estimate for a convex polygon")
    sp.add_argument("input", help="polygon file (.csv with x,y lines or .json array)")
    sp.add_argument("--input-format", choices=("csv", "json"), default=None)
    _add_output(sp)
    sp.set_defaults(func=_cmd_convex)

    sp = sub.add_parser("verify", help="run verification checks")
    sp.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    _add_output(sp)
    sp.set_defaults(func=_cmd_verify)
    return parser


def _meta_lines(argv):
    return (
        f"isoperimetry {__version__}",
        "command: " + " ".join(argv),
        f"python {sys.version.split()[0]}, numpy {np.__version__}",
    )


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    def usage_error(msg):
        parser.print_usage(sys.stderr)
        print(f"isoperimetry {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_USAGE

    try:
        records, code = args.func(args)
    except (DomainError, _UsageError) as exc:
        return usage_error(exc)
    except PolygonParseError as exc:
        return usage_error(f"cannot parse {args.input}: {exc}")
    except PolygonInvariantError as exc:
        print(f"isoperimetry convex: invalid polygon: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except OSError as exc:
        print(f"isoperimetry {args.command}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO

    text = render(records, args.format, _meta_lines(argv) if args.meta else ())
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"isoperimetry {args.command}: cannot write output: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)
        sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
