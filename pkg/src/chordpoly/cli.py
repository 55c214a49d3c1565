"""Command-line interface: ``chordpoly <command> [args] [options]``.

Exit codes: 0 success, 1 verification or tolerance failure, 2 usage or
validation error.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import re
import sys
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence

from . import verify
from .chords import EllipseSpec, chord_product_numeric
from .errors import InvalidEllipse, OverflowToNonFinite, PairingFailure
from .figure import render_svg
from .lucasfib import KINDS, family_poly
from .radicals import solve_omega

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _emit_csv(header: Sequence[str], rows: Iterable[Sequence]) -> None:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(x) if isinstance(x, float) else x for x in row])


def _integer_fields(values: Dict[str, float], rel_tol: float) -> Dict[str, int]:
    out = {}
    for k, v in values.items():
        if math.isfinite(v) and abs(v - round(v)) <= rel_tol * max(1.0, abs(v)):
            out[k] = int(round(v))
    return out


def _fmt_complex(z: complex) -> str:
    if z.imag == 0:
        return repr(z.real)
    sign = "-" if z.imag < 0 else "+"
    return f"{z.real!r} {sign} {abs(z.imag)!r}i"


def _spec_from_args(args) -> EllipseSpec:
    if args.golden:
        if args.a is not None or args.b is not None:
            raise UsageError("--golden cannot be combined with explicit a, b")
        return EllipseSpec.golden()
    if args.a is None or args.b is None:
        raise UsageError("give both a and b, or --golden")
    try:
        return EllipseSpec(args.a, args.b)
    except InvalidEllipse as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_poly(args) -> int:
    if args.n < 0:
        raise UsageError("n must be nonnegative")
    poly = family_poly(args.kind, args.n)
    if args.format == "json":
        terms = [{"i": i, "j": j, "coeff": str(c)} for (i, j), c in poly.sorted_terms()]
        _emit_json({"kind": args.kind, "n": args.n, "terms": terms})
    elif args.format == "csv":
        _emit_csv(("i", "j", "coeff"), ((i, j, c) for (i, j), c in poly.sorted_terms()))
    else:
        print(poly)
    return EXIT_OK


def cmd_chords(args) -> int:
    if args.n < 2:
        raise UsageError("n must be >= 2")
    spec = _spec_from_args(args)
    rep = chord_product_numeric(args.n, spec)
    ok = rep.relative_discrepancy <= args.rel_tol
    if args.format == "json":
        d = rep.to_dict()
        ints = _integer_fields(
            {"numeric_product": rep.numeric_product, "formula_value": rep.formula_value}, args.rel_tol
        )
        if ints:
            d["as_integer"] = ints
        _emit_json(d)
    elif args.format == "csv":
        _emit_csv(
            ("n", "a", "b", "numeric_product", "formula_value", "relative_discrepancy", "log_product"),
            [(rep.n, spec.a, spec.b, rep.numeric_product, rep.formula_value, rep.relative_discrepancy, rep.log_product)],
        )
    else:
        print(f"n = {rep.n}, a = {spec.a!r}, b = {spec.b!r}")
        print("chord lengths: " + ", ".join(f"{d:.12g}" for d in rep.chord_lengths))
        print(f"numeric product:      {rep.numeric_product!r}")
        print(f"formula n(a^n-b^n)/(a-b): {rep.formula_value!r}")
        print(f"relative discrepancy: {rep.relative_discrepancy:.3e}")
    if not ok:
        print(f"discrepancy {rep.relative_discrepancy:.3e} exceeds rel-tol {args.rel_tol:g}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_table(args) -> int:
    if args.max_n < 2:
        raise UsageError("max_n must be >= 2")
    spec = _spec_from_args(args)
    reports = [chord_product_numeric(n, spec) for n in range(2, args.max_n + 1)]
    ok = all(r.relative_discrepancy <= args.rel_tol for r in reports)
    rows = [(r.n, r.numeric_product, r.formula_value, r.formula_value / r.n) for r in reports]
    if args.format == "json":
        out = []
        for n, num, form, fac in rows:
            row = {"n": n, "numeric_product": num, "formula_value": form, "factor": fac}
            ints = _integer_fields({"numeric_product": num, "formula_value": form, "factor": fac}, args.rel_tol)
            if ints:
                row["as_integer"] = ints
            out.append(row)
        _emit_json({"a": spec.a, "b": spec.b, "rows": out})
    elif args.format == "csv":
        _emit_csv(("n", "numeric_product", "formula_value", "factor"), rows)
    else:
        print(f"{'n':>4}  {'numeric_product':>22}  {'formula_value':>22}  {'factor':>22}")
        for n, num, form, fac in rows:
            print(f"{n:>4}  {num:>22.15g}  {form:>22.15g}  {fac:>22.15g}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_roots(args) -> int:
    if args.n < 2:
        raise UsageError("n must be >= 2")
    try:
        sol = solve_omega(args.n, args.p, args.q)
    except PairingFailure as exc:
        print(f"pairing failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    ok = sol.max_residual <= args.rel_tol * max(1.0, abs(float(sol.q)))
    if args.format == "json":
        _emit_json(sol.to_dict())
    elif args.format == "csv":
        _emit_csv(("j", "re", "im"), ((j, z.real, z.imag) for j, z in enumerate(sol.roots)))
    else:
        print(f"Omega_{sol.n}(z) = L_{sol.n}(z, {sol.p}) - {sol.q}")
        print(f"a = {_fmt_complex(sol.a)}")
        print(f"b = {_fmt_complex(sol.b)}")
        print(f"twist = {sol.twist}")
        if sol.degenerate_double_root:
            print("degenerate: q^2 = 4 p^n (a^n = b^n)")
        for j, z in enumerate(sol.roots):
            print(f"root[{j}] = {_fmt_complex(z)}")
        print(f"max residual = {sol.max_residual:.3e}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    results = verify.run(args.suite, args.seed)
    ok = all(r.ok for r in results)
    if args.format == "json":
        _emit_json(
            {
                "seed": args.seed,
                "ok": ok,
                "suites": [
                    {
                        "name": r.name,
                        "passed": r.passed,
                        "total": r.total,
                        "worst_fraction_of_tol": r.worst,
                        "worst_case": r.worst_case,
                        "failures": r.failures,
                    }
                    for r in results
                ],
            }
        )
    elif args.format == "csv":
        _emit_csv(
            ("suite", "passed", "total", "worst_fraction_of_tol"),
            ((r.name, r.passed, r.total, r.worst) for r in results),
        )
    else:
        print(f"seed = {args.seed}")
        for r in results:
            print(r.summary())
            for f in r.failures[:20]:
                print(f"    FAILED {f}")
        print("all suites passed" if ok else "FAILURES")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_figure(args) -> int:
    if args.n < 2:
        raise UsageError("n must be >= 2")
    if not args.out:
        raise UsageError("figure needs --out PATH")
    spec = _spec_from_args(args)
    svg = render_svg(args.n, spec)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from None
    print(f"wrote {args.out}", file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return v


def _seed(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return v


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


# argparse only treats "-3" and "-.5" as negative numbers; also accept "-3/2" and "-1e-3"
_NEGATIVE_NUMBER = re.compile(r"^-(\d+(/\d+)?|\d*\.?\d+([eE][-+]?\d+)?)$")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--rel-tol", type=_positive_float, default=1e-9)
    common.add_argument("--seed", type=_seed, default=verify.DEFAULT_SEED)
    common.add_argument("--golden", action="store_true", help="use a = (1+sqrt5)/2, b = (1-sqrt5)/2")
    common.add_argument("--out", metavar="PATH")

    parser = argparse.ArgumentParser(
        prog="chordpoly",
        description="Lucas/Fibonacci polynomials, chord products on stretched circles, and radical roots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[common], help="print L_n, F_n, V_n or U_n")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("chords", parents=[common], help="chord product for one n")
    p.add_argument("n", type=int)
    p.add_argument("a", type=float, nargs="?")
    p.add_argument("b", type=float, nargs="?")
    p.set_defaults(func=cmd_chords)

    p = sub.add_parser("table", parents=[common], help="chord products for n = 2..max_n")
    p.add_argument("max_n", type=int)
    p.add_argument("a", type=float, nargs="?")
    p.add_argument("b", type=float, nargs="?")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("roots", parents=[common], help="roots of L_n(z, p) - q by radicals")
    p.add_argument("n", type=int)
    p.add_argument("p", type=_fraction)
    p.add_argument("q", type=_fraction)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("verify", parents=[common], help="run seeded identity sweeps")
    p.add_argument("suite", nargs="?", default="all", choices=("all",) + tuple(verify.SUITES))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figure", parents=[common], help="write an SVG of the chords")
    p.add_argument("n", type=int)
    p.add_argument("a", type=float, nargs="?")
    p.add_argument("b", type=float, nargs="?")
    p.set_defaults(func=cmd_figure)

    for p in sub.choices.values():
        p._negative_number_matcher = _NEGATIVE_NUMBER
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OverflowToNonFinite as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
