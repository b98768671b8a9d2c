"""gwsym command line: chi, verify, power, eq, traceform, specialize.

Exit status is 0 on success, 1 when a verification or comparison fails and
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import hodge
from .closed_form import chi_curve, chi_sym_closed, rank_formula
from .curves import EtaleAlgebra, trace_form
from .errors import GWSymError
from .fields import QQ, FieldDesc, FunctionField, parse_field
from .gw import (GWElement, as_pm_counts, discriminant, is_equal, normalize, render,
                 signature, specialize_t, to_json)
from .parse import parse_element, parse_poly
from .power import a_n

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# oracle cells of the verify sweep; GWSYM_MAX_N lifts the n bound
VERIFY_ORACLE_GMAX = 4
VERIFY_ORACLE_NMAX = 6

CSV_COLUMNS = ("g", "n", "rank", "sig", "disc", "pm_plus", "pm_minus")


def _sig(x: GWElement):
    try:
        return signature(x)
    except GWSymError:
        return None


def _disc(x: GWElement):
    try:
        return str(discriminant(x))
    except GWSymError:
        return None


def _summary_row(g, n, x: GWElement) -> dict:
    counts = as_pm_counts(x) or (None, None)
    return {"g": g, "n": n, "rank": x.rank, "sig": _sig(x), "disc": _disc(x),
            "pm_plus": counts[0], "pm_minus": counts[1]}


def _write_csv(rows, columns, out):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow(["" if r[c] is None else r[c] for c in columns])


def _element_json(x: GWElement, **extra) -> dict:
    d = to_json(x)
    d.update({"rank": x.rank, "signature": _sig(x), "discriminant": _disc(x)})
    d.update(extra)
    return d


def _emit_element(x: GWElement, fmt: str, out, g=None, n=None):
    x = normalize(x)
    if fmt == "json":
        extra = {} if g is None else {"g": g, "n": n}
        print(json.dumps(_element_json(x, **extra)), file=out)
    elif fmt == "csv":
        _write_csv([_summary_row(g, n, x)], CSV_COLUMNS, out)
    else:
        print(render(x), file=out)
        print(f"rank: {x.rank}", file=out)
        s = _sig(x)
        if s is not None:
            print(f"signature: {s}", file=out)
        d = _disc(x)
        if d is not None:
            print(f"discriminant: <{d}>", file=out)


# -- commands -----------------------------------------------------------------

def compute_chi(g: int, n: int, method: str, field: FieldDesc = QQ) -> GWElement:
    if method == "closed":
        return chi_sym_closed(g, n, field)
    if method == "power":
        return a_n(chi_curve(g, field), n)
    if field != QQ:
        raise GWSymError("the oracle works over Q only")
    return hodge.chi_sym_oracle(g, n)


def cmd_chi(args, out) -> int:
    x = compute_chi(args.genus, args.sym, args.method, parse_field(args.field))
    _emit_element(x, args.format, out, args.genus, args.sym)
    return EXIT_OK


def _oracle_nmax() -> int:
    if os.environ.get("GWSYM_MAX_N"):
        return hodge.max_n()
    return VERIFY_ORACLE_NMAX


def verify_cell(cell) -> dict:
    g, n, oracle_nmax = cell
    closed = chi_sym_closed(g, n)
    power = a_n(chi_curve(g), n)
    ok = is_equal(closed, power) and closed.rank == rank_formula(g, n)
    oracle = None
    if n >= 2 and n % 2 == 0 and g <= VERIFY_ORACLE_GMAX and n <= oracle_nmax:
        oracle = hodge.chi_sym_oracle(g, n)
        ok = ok and is_equal(oracle, closed)
    return {"g": g, "n": n,
            "closed": render(normalize(closed)),
            "oracle": "skipped" if oracle is None else render(normalize(oracle)),
            "power": render(normalize(power)),
            "equal": ok}


def run_verify(gmax: int, nmax: int, jobs: int = 1) -> list[dict]:
    """All cells, reported in (g, n) order whatever the completion order."""
    nm = _oracle_nmax()
    cells = [(g, n, nm) for g in range(gmax + 1) for n in range(nmax + 1)]
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(verify_cell, cells))
    return [verify_cell(c) for c in cells]


def _aligned(rows, columns) -> str:
    table = [list(columns)] + [[str(r[c]) for c in columns] for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(columns))]
    return "\n".join("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip()
                     for row in table)


def cmd_verify(args, out) -> int:
    if args.gmax < 0 or args.nmax < 0:
        raise GWSymError("gmax and nmax must be nonnegative")
    rows = run_verify(args.gmax, args.nmax, args.jobs)
    cols = ("g", "n", "closed", "oracle", "power", "equal")
    failed = sum(not r["equal"] for r in rows)
    if args.format == "json":
        print(json.dumps({"cells": rows, "passed": not failed}), file=out)
    elif args.format == "csv":
        _write_csv(rows, cols, out)
    else:
        print(_aligned(rows, cols), file=out)
        if failed:
            print(f"{failed} of {len(rows)} cells FAILED", file=out)
        else:
            print(f"all {len(rows)} cells pass", file=out)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_power(args, out) -> int:
    F = parse_field(args.field)
    x = parse_element(args.form, F)
    _emit_element(a_n(x, args.n), args.format, out)
    return EXIT_OK


def cmd_eq(args, out) -> int:
    F = parse_field(args.field)
    same = is_equal(parse_element(args.lhs, F), parse_element(args.rhs, F))
    print("true" if same else "false", file=out)
    return EXIT_OK if same else EXIT_FAIL


def cmd_traceform(args, out) -> int:
    A = EtaleAlgebra(tuple(parse_poly(p) for p in args.polys))
    _emit_element(trace_form(A), args.format, out)
    return EXIT_OK


def cmd_specialize(args, out) -> int:
    F = parse_field(args.field)
    if not F.is_function_field:
        F = FunctionField(F)
    _emit_element(specialize_t(parse_element(args.expr, F)), args.format, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gwsym",
                                 description="Quadratic Euler characteristics in GW(k).")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("chi", help="chi(Sym^n C) for a smooth genus-g curve")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--sym", type=int, required=True)
    p.add_argument("--method", choices=("closed", "oracle", "power"), default="closed")
    p.add_argument("--field", default="Q")
    fmt(p)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("verify", help="cross-check closed form, oracle and power structure")
    p.add_argument("--gmax", type=int, default=4)
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--jobs", type=int, default=1)
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("power", help="a_n of a GW expression")
    p.add_argument("--form", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--field", default="Q")
    fmt(p)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("eq", help="equality in GW(k); exit 1 when unequal")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.add_argument("--field", default="Q")
    p.set_defaults(func=cmd_eq)

    p = sub.add_parser("traceform", help="trace form of a product of Q[x]/(f)")
    p.add_argument("polys", nargs="+")
    fmt(p)
    p.set_defaults(func=cmd_traceform)

    p = sub.add_parser("specialize", help="specialization GW(F(t)) -> GW(F) at t = 0")
    p.add_argument("expr")
    p.add_argument("--field", default="Q(t)")
    fmt(p)
    p.set_defaults(func=cmd_specialize)
    return ap


def _protect_values(argv):
    """Keep argparse from reading expressions such as ``-1*<1>`` as options.

    argparse treats a dash-led token containing a space as a value, and the
    grammar ignores whitespace, so a leading space is enough.
    """
    return [" " + a if a.startswith("-") and "<" in a else a for a in argv]


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    ap = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = ap.parse_args(_protect_values(argv))
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except (GWSymError, ValueError, ArithmeticError) as e:
        print(f"gwsym {args.command}: {e}", file=sys.stderr)
        return EXIT_USAGE


def run(argv) -> tuple[int, str]:
    """main() with captured stdout, for tests."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()
