"""``serinv`` command line.

Exit status: 0 success, 2 input error, 3 computational error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import tables
from .errors import SerinvError
from .oracles import ORACLES, get_oracle
from .pade import build_pade, render_canonical
from .resummation import Kind, build_direct, direct_order, parametric_from_direct, solve_rho
from .series import TruncatedSeries, normalize_to_rho, revert

EXIT_OK, EXIT_INPUT, EXIT_MATH = 0, 2, 3


class InputError(Exception):
    pass


def _floats(text: str) -> list:
    if not text.strip():
        return []
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise InputError(f"cannot parse number list {text!r}") from None


def _load_series(path: str) -> TruncatedSeries:
    try:
        if path == "-":
            obj = json.load(sys.stdin)
        else:
            with open(path) as fh:
                obj = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from None
    try:
        return TruncatedSeries.from_json(obj)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, SerinvError):
            raise
        raise InputError(f"{path}: not a series object ({exc})") from None


def _kind(text: str) -> Kind:
    try:
        return Kind.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _emit(text: str) -> None:
    sys.stdout.write(text)


def cmd_table(args) -> int:
    try:
        spec = tables.get_table(args.id)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    evaluators, rows = tables.compute_table(spec)
    if args.print_pade:
        prefix = "" if args.format == "md" else "# "
        for ev in evaluators:
            _emit(f"{prefix}{ev.method.label}: {ev.render()}\n")
        _emit("\n" if args.format == "md" else "")
    header, body = tables.table_records(spec, rows, args.precision)
    _emit(tables.render(header, body, args.format))
    return EXIT_OK


def cmd_compare(args) -> int:
    grid = _floats(args.grid)
    try:
        oracle = get_oracle(args.oracle)
        methods = [tables.Method.parse(m) for m in args.methods.split(",") if m.strip()]
    except (KeyError, ValueError) as exc:
        raise InputError(exc.args[0]) from None
    if not methods:
        raise InputError("no methods given")
    if not grid:
        return EXIT_OK
    rows = tables.compare(oracle, methods, grid)
    header, body = tables.comparison_records(methods, rows, args.precision)
    _emit(tables.render(header, body, args.format))
    _emit(("# " if args.format == "csv" else "\n") + tables.comparison_summary(rows) + "\n")
    return EXIT_OK


def cmd_revert(args) -> int:
    s = _load_series(args.input)
    out = normalize_to_rho(s) if args.rho else revert(_shifted(s))
    _emit(json.dumps(out.to_json()) + "\n")
    return EXIT_OK


def _shifted(s: TruncatedSeries) -> TruncatedSeries:
    # E - E0, so the series can be reverted
    if not s.coeffs or s.coeffs[0] == 0:
        return s
    return TruncatedSeries((0,) + s.coeffs[1:], s.variable, s.prefactor, s.exact)


def cmd_pade(args) -> int:
    s = _load_series(args.input)
    if args.rho:
        s = normalize_to_rho(s)
    p = build_pade(s, args.L, args.M)
    _emit(render_canonical(p) + "\n")
    return EXIT_OK


def cmd_eval(args) -> int:
    s = _load_series(args.input)
    xs = _floats(args.at)
    kind = _kind(args.kind) if args.kind else Kind("sum", s.order)
    if args.inverse:
        rep = parametric_from_direct(s, kind)
        for x in xs:
            report = solve_rho(rep, x)
            _emit(f"{x:.{args.precision}g} {rep.E_of_rho(report.rho):.{args.precision}g}\n")
        return EXIT_OK
    approx = build_direct(s.truncate(min(s.order, direct_order(kind))), kind)
    for x in xs:
        _emit(f"{x:.{args.precision}g} {approx(x):.{args.precision}g}\n")
    return EXIT_OK


def cmd_series(args) -> int:
    try:
        o = get_oracle(args.oracle)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    _emit(json.dumps(o.series(args.order).to_json()) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="serinv",
                                 description="Series reversion and resummation toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    def output_opts(p):
        p.add_argument("--format", choices=("csv", "md"), default="csv")
        p.add_argument("--precision", type=int, default=10,
                       help="significant digits (17 round-trips a float)")

    p = sub.add_parser("table", help="reproduce one of the reference tables")
    p.add_argument("id", help=", ".join(tables.TABLES))
    output_opts(p)
    p.add_argument("--print-pade", action="store_true",
                   help="print the approximants used before the table")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("compare", help="direct vs inverse errors on a grid")
    p.add_argument("--oracle", required=True, help=", ".join(ORACLES))
    p.add_argument("--methods", required=True,
                   help="comma list such as direct:sum:5,inverse:pade:2/3")
    p.add_argument("--grid", required=True, help="comma-separated g values")
    output_opts(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("revert", help="revert E - E0, or normalize to rho with --rho")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--rho", action="store_true")
    p.set_defaults(func=cmd_revert)

    p = sub.add_parser("pade", help="canonical [L/M] of a series")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--rho", action="store_true", help="normalize to rho first")
    p.set_defaults(func=cmd_pade)

    p = sub.add_parser("eval", help="evaluate an approximant at given points")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--at", required=True, help="comma-separated abscissae")
    p.add_argument("--kind", help="sum:N, pade:L/M, powered:L/M:m or factored:L/M")
    p.add_argument("--pade", dest="kind", type=lambda v: f"pade:{v}", help="shorthand for --kind pade:L/M")
    p.add_argument("--inverse", action="store_true", help="use the parametric representation")
    p.add_argument("--precision", type=int, default=10)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("series", help="print an oracle's series as JSON")
    p.add_argument("--oracle", required=True, help=", ".join(ORACLES))
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_series)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    if getattr(args, "precision", 10) < 1:
        print("serinv: --precision must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"serinv: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SerinvError as exc:
        print(f"serinv: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
