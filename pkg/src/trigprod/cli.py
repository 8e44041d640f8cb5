"""Command-line interface.

    trigprod coeffs P --n 6 [--cache DIR]
    trigprod eval P --n 4 --theta 2pi/5
    trigprod constants [--tol 1e-12]
    trigprod norms Q --n 100 --p 2 [--method quadrature|coefficients]
    trigprod verify --theorem T7 --n-max 200
    trigprod verify --all --n-max 100
    trigprod figure --id 2 --out f2.csv [--n-max 400]

Exit status: 0 on success, 1 on an accuracy or cache-integrity failure,
2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import asymptotics, cache
from .coeffs import coefficients
from .constants import compute_constants
from .errors import AccuracyError, IntegrityError, TrigProdError
from .figures import FigureSpec, emit_figure
from .norms import linf_norm_pn, lp_norm_coefficients, lp_norm_pn, lp_norm_qn
from .pointeval import log_abs_pn, log_abs_qn

_PI_EXPR = re.compile(r"^(?P<coef>[+-]?(\d+(\.\d*)?|\.\d+)?)pi(/(?P<den>\d+))?$")


def parse_theta(text: str) -> float | Fraction:
    """``<int>pi/<int>``, ``<decimal>pi`` or ``<decimal>``.

    Multiples of pi come back as a Fraction (the multiple of pi), which the
    evaluators treat exactly.
    """
    s = text.strip().replace(" ", "").replace("*", "")
    m = _PI_EXPR.match(s)
    if m:
        coef = m.group("coef")
        r = Fraction(coef) if coef not in (None, "", "+", "-") else Fraction(-1 if coef == "-" else 1)
        if m.group("den"):
            den = int(m.group("den"))
            if den == 0:
                raise ValueError("zero denominator")
            r /= den
        return r
    try:
        value = float(s)
    except ValueError:
        raise ValueError(f"cannot parse angle {text!r}") from None
    if not math.isfinite(value):
        raise ValueError("angle must be finite")
    return value


def _theta_arg(text: str):
    try:
        return parse_theta(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _p_arg(text: str) -> float:
    p = math.inf if text.lower() in ("inf", "infinity") else float(text)
    if not p >= 1:
        raise argparse.ArgumentTypeError("p must be >= 1")
    return p


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trigprod", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="print or cache an exact coefficient table")
    p.add_argument("kind", choices=["P", "Q"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cache", nargs="?", const="", default=None, metavar="DIR",
                   help=f"read/write the table cache (default dir from ${cache.ENV_VAR})")

    p = sub.add_parser("eval", help="|P_n(theta)| or |Q_n(theta)|")
    p.add_argument("kind", choices=["P", "Q"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theta", type=_theta_arg, required=True, help="e.g. 2pi/5, 0.5pi, 1.25")

    p = sub.add_parser("constants", help="w0, K, B, C, G, A and derived prefactors")
    p.add_argument("--tol", type=float, default=1e-12)

    p = sub.add_parser("norms", help="L^p norm on the circle (or l^p of coefficients)")
    p.add_argument("kind", choices=["P", "Q"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=_p_arg, required=True)
    p.add_argument("--method", choices=["quadrature", "coefficients"], default="quadrature")
    p.add_argument("--tol", type=float, default=1e-10)

    p = sub.add_parser("verify", help="check a theorem numerically; prints JSON")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--theorem", choices=asymptotics.THEOREM_TAGS)
    group.add_argument("--all", action="store_true")
    p.add_argument("--n-max", type=int, default=100)

    p = sub.add_parser("figure", help="write the CSV data behind a figure")
    p.add_argument("--id", type=int, required=True, choices=range(1, 7))
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--n-max", type=int, default=None, help="override the default n range")
    return parser


def _cmd_coeffs(args, out) -> int:
    directory = args.cache or None
    table = None
    if args.cache is not None:
        try:
            table = cache.cache_read(args.kind, args.n, directory)
        except FileNotFoundError:
            table = None
    if table is None:
        table = coefficients(args.kind, args.n)
        if args.cache is not None:
            path = cache.cache_write(table, directory)
            print(f"# cached {path}", file=sys.stderr)
    out.write("j,coefficient\n")
    out.writelines(f"{j},{int(c)}\n" for j, c in enumerate(table.coeffs))
    return 0


def _cmd_eval(args, out) -> int:
    mag = (log_abs_pn if args.kind == "P" else log_abs_qn)(args.n, args.theta)
    theta = float(args.theta) * math.pi if isinstance(args.theta, Fraction) else args.theta
    json.dump(
        {"kind": args.kind, "n": args.n, "theta": theta,
         "log_magnitude": mag.log_value if not mag.is_zero else None,
         "magnitude": mag.value()},
        out,
    )
    out.write("\n")
    return 0


def _cmd_constants(args, out) -> int:
    cs = compute_constants(args.tol)
    out.write("name,value,error,published\n")
    for name, value, err, published in cs.as_rows():
        out.write(f"{name},{_fmt(value)},{'' if err is None else _fmt(err)},"
                  f"{'' if published is None else published}\n")
    return 0


def _cmd_norms(args, out) -> int:
    if args.method == "coefficients":
        result = lp_norm_coefficients(coefficients(args.kind, args.n), args.p)
    elif math.isinf(args.p):
        if args.kind == "P":
            result = linf_norm_pn(args.n)
        else:
            result = lp_norm_coefficients(coefficients("Q", args.n), 1)  # ||Q_n||_inf = Q_n(0) = 2^n
            result = type(result)(result.value, math.inf, "coefficient-sum", 0.0)
    else:
        fn = lp_norm_pn if args.kind == "P" else lp_norm_qn
        result = fn(args.n, args.p, args.tol)
    out.write("n,p,value_log,method,error\n")
    out.write(f"{args.n},{args.p},{_fmt(result.log_value)},{result.method},{_fmt(result.error_estimate)}\n")
    return 0


def _cmd_verify(args, out) -> int:
    if args.all:
        reports = asymptotics.run_all(args.n_max)
    else:
        reports = asymptotics.run_verification(args.theorem, args.n_max)
    payload = [r.to_dict() for r in reports]
    json.dump(payload if len(payload) > 1 else payload[0], out, indent=2)
    out.write("\n")
    return 0


def _cmd_figure(args, out) -> int:
    path = emit_figure(FigureSpec(args.id, args.out, args.n_max))
    out.write(f"{path}\n")
    return 0


COMMANDS = {
    "coeffs": _cmd_coeffs,
    "eval": _cmd_eval,
    "constants": _cmd_constants,
    "norms": _cmd_norms,
    "verify": _cmd_verify,
    "figure": _cmd_figure,
}


def run(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (AccuracyError, IntegrityError) as exc:
        print(f"trigprod: {exc}", file=sys.stderr)
        return 1
    except (TrigProdError, ValueError) as exc:
        print(f"trigprod: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
