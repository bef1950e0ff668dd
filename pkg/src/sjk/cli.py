"""Command-line interface.

Verbs: poly, egf, lacunary, connect, react, table, verify.  Output goes
to stdout in text (default), json, or latex form; diagnostics go to
stderr.  Exit codes: 0 success, 1 usage or domain/parameter error, 2
verification failure.  The environment variable SJK_MAX_ORDER (default
64) caps every truncation order and degree accepted on the command line.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import families, jsonio, lacunary, verify
from .connect import (
    HERMITE_FAMILY,
    SJ_FAMILY,
    hermite_connection,
    reaction_solve,
    sj_connection,
)
from .errors import SjkError
from .poly import CoeffSeries, Poly

DEFAULT_MAX_ORDER = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse would exit(2) on bad flags; remap to the declared contract.
    def error(self, message):
        raise UsageError(message)


def _max_order() -> int:
    raw = os.environ.get("SJK_MAX_ORDER", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_ORDER
    except ValueError:
        raise UsageError(f"SJK_MAX_ORDER must be an integer, got {raw!r}")


def _check_cap(value: int, label: str):
    cap = _max_order()
    if value > cap:
        raise UsageError(f"{label} {value} exceeds SJK_MAX_ORDER = {cap}")
    return value


def _rat(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected a rational like '-3/2', got {text!r}")


def _emit_poly(p: Poly, fmt: str, out):
    if fmt == "json":
        print(jsonio.dumps(jsonio.poly_to_obj(p)), file=out)
    elif fmt == "latex":
        print(p.latex(), file=out)
    else:
        print(p.text(), file=out)


def _emit_series(s: CoeffSeries, fmt: str, out, parameter="lambda"):
    if fmt == "json":
        print(jsonio.dumps(jsonio.series_to_obj(s, parameter)), file=out)
        return
    for k, c in enumerate(s.coeffs):
        if fmt == "latex":
            print(f"{parameter}^{{{k}}}: {c.latex()}", file=out)
        else:
            print(f"{parameter}^{k}: {c.text()}", file=out)


def _cmd_poly(args, out):
    n = _check_cap(args.n, "degree")
    fam = args.family
    if fam == "sj":
        p = families.sj_closed_mm(n, args.gamma)
    elif fam == "sj-beta":
        p = families.sj_closed_beta(n, args.beta)
    elif fam == "hermite":
        p = families.hermite_closed(n)
    else:  # jacobi
        p = families.jacobi_classical(n, args.alpha, args.beta)
    _emit_poly(p, args.format, out)
    return 0


def _cmd_egf(args, out):
    order = _check_cap(args.order, "order")
    if args.family == "sj":
        s = CoeffSeries.build(families.sj_egf_coeff, order)
    elif args.family == "hermite":
        s = families.hermite_egf(order)
    else:  # sj-beta-shifted
        s = families.egf_beta_shifted(order, args.beta)
    _emit_series(s, args.format, out)
    return 0


def _lacunary_closed(family: str, K: int, L: int, order: int) -> CoeffSeries:
    if family == "sj":
        if L == 0 and K >= 2:
            return lacunary.sj_lacunary_closed(K, order)
        return lacunary.mu_slice(lacunary.sj_lacunary_shift_gen(K, L, order), L)
    if L == 0:
        return lacunary.hermite_lacunary_closed(K, order)
    return lacunary.mu_slice(lacunary.hermite_lacunary_shift(K, L, order), L)


def _cmd_lacunary(args, out):
    order = _check_cap(args.order, "order")
    _check_cap(args.K * order + args.L, "K*order+L")
    source = families.sj_family if args.family == "sj" else families.hermite_family
    params = lacunary.LacunaryParams(args.K, args.L, order)
    oracle = lacunary.multisection_oracle(source, params)
    if args.check:
        closed = _lacunary_closed(args.family, args.K, args.L, order)
        ok = closed == oracle
        print(f"closed-form == oracle: {'PASS' if ok else 'FAIL'}", file=out)
        if not ok:
            for k in range(order + 1):
                a, b = closed.coeffs[k], oracle.coeffs[k]
                if a != b:
                    print(
                        f"  first mismatch at lambda^{k}: closed={a.text()} "
                        f"oracle={b.text()}",
                        file=out,
                    )
                    break
            return 2
        return 0
    _emit_series(oracle, args.format, out)
    return 0


def _cmd_connect(args, out):
    M = _check_cap(args.M, "M")
    fam = SJ_FAMILY if args.family == "sj" else HERMITE_FAMILY
    if args.format == "json":
        if fam == SJ_FAMILY:
            rows = [
                {"n": n, "num": str(sj_connection(M, n).numerator),
                 "den": str(sj_connection(M, n).denominator)}
                for n in range(M + 1)
            ]
        else:
            rows = [
                {"n": n, "poly": jsonio.poly_to_obj(hermite_connection(M, n))}
                for n in range(M + 1)
            ]
        print(jsonio.dumps({"family": args.family, "M": M, "weights": rows}), file=out)
        return 0
    for n in range(M + 1):
        if fam == SJ_FAMILY:
            val = str(sj_connection(M, n))
        else:
            c = hermite_connection(M, n)
            val = c.latex() if args.format == "latex" else c.text()
        print(f"A[{M},{n}] = {val}", file=out)
    return 0


def _cmd_react(args, out):
    N0 = _check_cap(args.N0, "N0")
    t_order = _check_cap(args.t_order, "t-order")
    sol = reaction_solve(N0, t_order)
    _emit_series(sol, args.format, out, parameter="t")
    return 0


def _cmd_table(args, out):
    top = _check_cap(args.max_n, "max-n")
    fn = families.sj_family if args.family == "sj" else families.hermite_family
    for n in range(top + 1):
        p = fn(n)
        body = p.latex() if args.format == "latex" else p.text()
        print(f"{n}: {body}", file=out)
    return 0


def _cmd_verify(args, out):
    names = args.suite or None
    try:
        failures = verify.run_suites(names, jobs=args.jobs, out=out)
    except KeyError as exc:
        raise UsageError(
            f"unknown suite {exc.args[0]!r}; known: {', '.join(sorted(verify.SUITES))}"
        )
    return 2 if failures else 0


def build_parser() -> _Parser:
    parser = _Parser(prog="sjk", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("text", "json", "latex"), default="text"
        )

    p = sub.add_parser("poly", help="print one family polynomial")
    p.add_argument("--family", choices=("sj", "sj-beta", "hermite", "jacobi"),
                   required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=_rat, default=Fraction(0))
    p.add_argument("--beta", type=_rat, default=Fraction(0))
    p.add_argument("--gamma", type=_rat, default=Fraction(0))
    add_format(p)
    p.set_defaults(fn=_cmd_poly)

    p = sub.add_parser("egf", help="print EGF coefficients")
    p.add_argument("--family", choices=("sj", "hermite", "sj-beta-shifted"),
                   required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--beta", type=_rat, default=Fraction(0))
    add_format(p)
    p.set_defaults(fn=_cmd_egf)

    p = sub.add_parser("lacunary", help="lacunary series; --check compares "
                                        "the closed form against the oracle")
    p.add_argument("--family", choices=("sj", "hermite"), required=True)
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--L", type=int, default=0)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--check", action="store_true")
    add_format(p)
    p.set_defaults(fn=_cmd_lacunary)

    p = sub.add_parser("connect", help="connection coefficient row for x^M")
    p.add_argument("--family", choices=("sj", "hermite"), required=True)
    p.add_argument("--M", type=int, required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_connect)

    p = sub.add_parser("react", help="decay-system solution as a t-series")
    p.add_argument("--N0", type=int, required=True)
    p.add_argument("--t-order", dest="t_order", type=int, default=6)
    add_format(p)
    p.set_defaults(fn=_cmd_react)

    p = sub.add_parser("table", help="family polynomials up to a degree")
    p.add_argument("--family", choices=("sj", "hermite"), required=True)
    p.add_argument("--max-n", dest="max_n", type=int, required=True)
    add_format(p)
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("verify", help="run named invariant suites")
    p.add_argument("--suite", action="append",
                   help="suite name (repeatable); default: all")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=_cmd_verify)

    return parser


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "K", None) is not None and args.K < 1:
            raise UsageError("K must be >= 1")
        for attr in ("n", "order", "L", "M", "N0", "t_order", "max_n"):
            v = getattr(args, attr, None)
            if v is not None and v < 0:
                raise UsageError(f"--{attr.replace('_', '-')} must be >= 0")
        return args.fn(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return 1
    except SjkError as exc:
        print(f"error: {exc}", file=err)
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
