"""Command line front end.

Subcommands: check (membership predicates), decompose (generator
certificate), vk (the explicit lift), dims (dimension cross check) and
selftest (the full verification suite).  Exit codes are stable:
0 success, 1 domain rejection, 2 input error, 3 internal invariant
violation.
"""

from __future__ import annotations

import argparse
import sys

from .decompose import decompose, verify_decomposition
from .errors import (
    InternalInvariantViolation,
    NotSupersymmetricError,
    PolyParseError,
    RingMismatchError,
)
from .genexpr import serialize_gen_expr
from .generators import make_v
from .oracle import dim_grid, dim_reports_to_csv
from .poly_core import Ring, d_dT, parse_poly, poly_to_str, psi
from .supersym import is_p_balanced, is_strictly_supersymmetric, is_supersymmetric

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _ring_args(parser: argparse.ArgumentParser):
    parser.add_argument("--m", type=int, required=True, help="number of x variables")
    parser.add_argument("--n", type=int, required=True, help="number of y variables")
    parser.add_argument("--p", type=int, required=True, help="odd prime characteristic")


def _poly_args(parser: argparse.ArgumentParser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--poly", help="polynomial text, e.g. 'x1^2 - 2*x1*y1'")
    group.add_argument("--file", help="path to a file holding the polynomial text")


def _read_poly(args) -> str:
    if args.poly is not None:
        return args.poly
    with open(args.file, "r", encoding="utf-8") as fh:
        return fh.read()


def cmd_check(args) -> int:
    ring = Ring(args.m, args.n, False, args.p)
    f = parse_poly(_read_poly(args), ring)
    verdict = is_supersymmetric(f)
    if ring.m >= 1 and ring.n >= 1:
        strict = verdict.symmetric_x and verdict.symmetric_y and is_strictly_supersymmetric(f)
    else:
        strict = verdict.overall  # no x/y pair exists, nothing can depend on T
    balanced = is_p_balanced(f)
    flag = lambda v: "true" if v else "false"
    print(f"symmetric_x: {flag(verdict.symmetric_x)}")
    print(f"symmetric_y: {flag(verdict.symmetric_y)}")
    print(f"derivative_vanishes: {flag(verdict.derivative_vanishes)}")
    print(f"overall: {flag(verdict.overall)}")
    print(f"strict: {flag(strict)}")
    print(f"p_balanced: {flag(balanced)}")
    return EXIT_OK if verdict.overall else EXIT_DOMAIN


def cmd_decompose(args) -> int:
    ring = Ring(args.m, args.n, False, args.p)
    f = parse_poly(_read_poly(args), ring)
    expr = decompose(f)
    print(serialize_gen_expr(expr))
    if args.verify and not verify_decomposition(f, expr):
        raise InternalInvariantViolation("certificate failed to re-expand to the input")
    return EXIT_OK


def cmd_vk(args) -> int:
    if not (args.m >= 1 and args.n >= 1):
        raise ValueError("vk needs m >= 1 and n >= 1")
    if not 0 < args.k < args.p:
        raise ValueError("k must satisfy 0 < k < p")
    v = make_v(args.p, args.k, args.m, args.n)
    print(poly_to_str(v))
    if args.show_psi:
        image = psi(v)
        print(poly_to_str(image))
        print(poly_to_str(d_dT(image)))
    return EXIT_OK


def cmd_dims(args) -> int:
    if args.dmax < 0:
        raise ValueError("dmax must be nonnegative")
    reports = dim_grid(args.m, args.n, args.p, args.dmax)
    print(dim_reports_to_csv(reports))
    mismatches = [r for r in reports if not r.match]
    if mismatches:
        print(f"MISMATCH in {len(mismatches)} of {len(reports)} degrees")
        return EXIT_DOMAIN
    print(f"all {len(reports)} degrees match")
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .selfcheck import run_all

    results = run_all()
    unexpected = 0
    for res in results:
        if res.ok:
            status = "PASS"
        elif not res.expected_ok:
            status = "FAIL (expected; see README notes)"
        else:
            status = "FAIL"
            unexpected += 1
        print(f"{res.name}: {status} [{res.seconds:.1f}s] {res.detail}")
    if unexpected:
        print(f"{unexpected} unexpected failure(s)")
        return EXIT_DOMAIN
    print("selftest complete")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supersympoly",
        description="Exact computations with supersymmetric polynomials over F_p",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run the membership predicates")
    _ring_args(p_check)
    _poly_args(p_check)
    p_check.set_defaults(func=cmd_check)

    p_dec = sub.add_parser("decompose", help="write the input over the generators")
    _ring_args(p_dec)
    _poly_args(p_dec)
    p_dec.add_argument("--verify", action="store_true", help="re-expand and compare")
    p_dec.set_defaults(func=cmd_decompose)

    p_vk = sub.add_parser("vk", help="print the lift polynomial v_k")
    _ring_args(p_vk)
    p_vk.add_argument("--k", type=int, required=True)
    p_vk.add_argument(
        "--show-psi",
        action="store_true",
        help="also print the x_m=y_n=T image and its T derivative",
    )
    p_vk.set_defaults(func=cmd_vk)

    p_dims = sub.add_parser(
        "dims",
        help="dimension cross check (keep m,n <= 2, p in {3,5}, dmax <= 12)",
    )
    _ring_args(p_dims)
    p_dims.add_argument("--dmax", type=int, required=True)
    p_dims.set_defaults(func=cmd_dims)

    p_self = sub.add_parser("selftest", help="run the full verification suite")
    p_self.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PolyParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (RingMismatchError, ValueError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotSupersymmetricError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except InternalInvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
