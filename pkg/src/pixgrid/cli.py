"""Batch front-end: run the pipeline and emit CSV/JSON/PGM coverage maps.

Subcommands:
  coverage   full per-pixel map in the chosen format
  total      the summed covered area as a single number
  cases      diagnostic listing of all 81 location codes

The classification tolerance can be overridden with the PIXGRID_EPS_REL
environment variable.  Exit codes: 0 success, 1 validation error, 2 oracle
check failure, 3 internal unrealizable-code error.
"""

import argparse
import json
import math
import os
import sys
from itertools import product

from .areas import family_of
from .classify import ClassifyConfig, LocationCode, UnrealizableCodeError, realizable
from .coverage import (CoverageMap, RadiusTooSmallError, compute_coverage,
                       total_covered_area, verify_map)
from .grid import Circle, GridSpec
from .oracle import OracleConfig

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_ORACLE = 2
EXIT_UNREALIZABLE = 3


class _ValidationError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; the contract here is exit 1 for any
    # validation problem, with the message on stderr.
    def error(self, message):
        raise _ValidationError(message)


def _add_geometry_flags(p):
    p.add_argument("--size", type=float, required=True, help="pixel edge length")
    p.add_argument("--gap", type=float, default=None, help="inter-pixel gap")
    p.add_argument("--fill-factor", type=float, default=None,
                   help="alternative to --gap: size^2/pitch^2")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--cx", type=float, required=True, help="circle center x")
    p.add_argument("--cy", type=float, required=True, help="circle center y")
    p.add_argument("--radius", type=float, required=True)


def _build_parser():
    parser = _Parser(prog="pixgrid",
                     description="Exact circle-on-pixel-grid coverage maps.")
    sub = parser.add_subparsers(dest="command", required=True)

    cov = sub.add_parser("coverage", help="emit the per-pixel coverage map")
    _add_geometry_flags(cov)
    cov.add_argument("--format", choices=("csv", "json", "pgm"), default="csv")
    cov.add_argument("--check-oracle", action="store_true",
                     help="cross-check every entry against the quadrature oracle")

    tot = sub.add_parser("total", help="print the total covered area")
    _add_geometry_flags(tot)
    tot.add_argument("--check-oracle", action="store_true")

    sub.add_parser("cases", help="list all 81 location codes with verdicts")
    return parser


def _validate_geometry(args) -> tuple[GridSpec, Circle, ClassifyConfig]:
    if args.gap is not None and args.fill_factor is not None:
        raise _ValidationError("specify only one of --gap and --fill-factor")
    if not args.size > 0:
        raise _ValidationError(f"size must be > 0, got {args.size}")
    if args.fill_factor is not None:
        if not 0 < args.fill_factor <= 1:
            raise _ValidationError(
                f"fill factor must be in (0, 1], got {args.fill_factor}")
        gap = args.size * (1.0 / math.sqrt(args.fill_factor) - 1.0)
    else:
        gap = args.gap if args.gap is not None else 0.0
    if gap < 0:
        raise _ValidationError(f"gap must be >= 0, got {gap}")
    if args.rows < 1 or args.cols < 1:
        raise _ValidationError(
            f"rows/cols must be >= 1, got {args.rows}x{args.cols}")
    if not args.radius > 2 * args.size:
        raise _ValidationError(
            f"radius {args.radius} must exceed twice the pixel size "
            f"{args.size} (R > 2*Size)")

    eps_env = os.environ.get("PIXGRID_EPS_REL")
    if eps_env is None:
        cfg = ClassifyConfig()
    else:
        try:
            cfg = ClassifyConfig(eps_rel=float(eps_env))
        except ValueError as exc:
            raise _ValidationError(f"bad PIXGRID_EPS_REL: {exc}") from exc

    return (GridSpec(size=args.size, gap=gap, rows=args.rows, cols=args.cols),
            Circle(cx=args.cx, cy=args.cy, radius=args.radius), cfg)


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _emit_csv(cov: CoverageMap, out):
    out.write("row,col,code,area,fraction\n")
    for e in cov.entries:
        out.write(f"{e.index.row},{e.index.col},{e.code.digits},"
                  f"{_fmt(e.area)},{_fmt(e.fraction)}\n")


def _emit_json(cov: CoverageMap, out):
    doc = {
        "grid": {"size": cov.grid.size, "gap": cov.grid.gap,
                 "rows": cov.grid.rows, "cols": cov.grid.cols},
        "circle": {"cx": cov.circle.cx, "cy": cov.circle.cy,
                   "radius": cov.circle.radius},
        "entries": [
            {"row": e.index.row, "col": e.index.col, "code": e.code.digits,
             "area": e.area, "fraction": e.fraction}
            for e in cov.entries
        ],
        "total_area": total_covered_area(cov),
    }
    json.dump(doc, out, indent=2)
    out.write("\n")


def _emit_pgm(cov: CoverageMap, out):
    values = {(e.index.row, e.index.col): round(e.fraction * 65535)
              for e in cov.entries}
    out.write("P2\n")
    out.write(f"{cov.grid.cols} {cov.grid.rows}\n")
    out.write("65535\n")
    for r in range(cov.grid.rows):
        row = [str(values.get((r, c), 0)) for c in range(cov.grid.cols)]
        # keep plain-PGM lines under 70 characters
        line = ""
        for tok in row:
            if line and len(line) + 1 + len(tok) > 70:
                out.write(line + "\n")
                line = tok
            else:
                line = tok if not line else line + " " + tok
        out.write(line + "\n")


def _check_oracle(cov: CoverageMap, out_err) -> int:
    s2 = cov.grid.size ** 2
    report = verify_map(cov, OracleConfig(abs_tol=1e-10 * s2),
                        tol=1e-8 * s2, outside_tol=1e-10 * s2)
    if report.passed:
        return EXIT_OK
    for idx, closed, ref in report.entry_failures:
        out_err.write(f"oracle mismatch at {tuple(idx)}: "
                      f"closed-form {_fmt(closed)} vs oracle {_fmt(ref)}\n")
    for idx, ref in report.outside_failures:
        out_err.write(f"uncovered pixel {tuple(idx)} has oracle area "
                      f"{_fmt(ref)}\n")
    return EXIT_ORACLE


def run_cases(out) -> int:
    for digits in product("012", repeat=4):
        code = LocationCode.from_digits("".join(digits))
        if realizable(code):
            out.write(f"{code.digits} realizable    {family_of(code)}\n")
        else:
            out.write(f"{code.digits} unrealizable  -\n")
    return EXIT_OK


def main(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _ValidationError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_VALIDATION

    if args.command == "cases":
        return run_cases(out)

    try:
        grid, circle, cfg = _validate_geometry(args)
        cov = compute_coverage(grid, circle, cfg)
    except (_ValidationError, RadiusTooSmallError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_VALIDATION
    except UnrealizableCodeError as exc:
        err.write(f"internal error: {exc}\n")
        return EXIT_UNREALIZABLE

    if args.check_oracle:
        status = _check_oracle(cov, err)
        if status != EXIT_OK:
            return status

    if args.command == "total":
        out.write(_fmt(total_covered_area(cov)) + "\n")
    else:
        {"csv": _emit_csv, "json": _emit_json, "pgm": _emit_pgm}[args.format](cov, out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
