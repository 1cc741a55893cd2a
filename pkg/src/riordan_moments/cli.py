"""Command-line interface.

    riordan-moments build "1/(1-x)" "x/(1-x)" --rows 6
    riordan-moments production --family legendre --r 3
    riordan-moments production --exp "exp(x)" "log(1/(1-x))"
    riordan-moments recurrence --sequence 1,1,2,5,14,42,132,429
    riordan-moments moments --alpha 0,0,0 --beta 1,1,1 --count 7
    riordan-moments hankel --fixture A000108 --n 4 --method both
    riordan-moments family hermite --r 1/2 --n 6
    riordan-moments verify --all

Exit status: 0 success, 1 verification failure (including a production
matrix that is not tri-diagonal), 2 usage or parse error, 3 domain error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import render
from .errors import (
    NotEnoughCoefficients,
    NotEnoughMoments,
    NotTridiagonal,
    OrderExceeded,
    ParseError,
    RiordanError,
)
from .exact import format_rational, parse_rational_list, rational
from .expr import parse_series
from .expriordan import ExponentialRiordan
from .families import FAMILY_NAMES, family
from .fixtures import load_catalog, verify_all
from .orthopoly import (
    hankel_product,
    hankel_transform,
    jfraction_from_moments,
    moments_from_recurrence,
    recurrence_from_moments,
)
from .production import ThreeTermRecurrence, extract_recurrence, production_matrix, riordan_stieltjes
from .riordan import OrdinaryRiordan

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _rational_arg(text: str) -> Fraction:
    try:
        return rational(text)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational p/q: {text!r}") from exc


def _rational_list_arg(text: str) -> list[Fraction]:
    try:
        return parse_rational_list(text)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of rationals: {text!r}") from exc


def _out(args, text: str, obj) -> None:
    print(render.dumps(obj) if args.json else text)


# -- sources ----------------------------------------------------------------


def _order(args, needed: int) -> int:
    return max(needed, args.order or 0)


def _pair(args, rows: int):
    """The Riordan pair named on the command line (positional g f or --family)."""
    if getattr(args, "family", None):
        fam = family(args.family, args.r if args.r is not None else 2, args.s, order=_order(args, rows))
        pair = fam.moment_array
    else:
        if len(args.gf) != 2:
            raise UsageError("give two series expressions g f, or --family NAME")
        order = _order(args, rows)
        g = parse_series(args.gf[0], order)
        f = parse_series(args.gf[1], order)
        pair = (ExponentialRiordan if args.exp else OrdinaryRiordan)(g, f)
    if getattr(args, "invert_first", False):
        pair = pair.inverse()
    return pair


def _moment_values(args, count: int | None) -> list[Fraction]:
    """Moments from --sequence, --fixture or an array's first column; all of them if count is None."""
    if args.sequence is not None:
        values = list(args.sequence)
    elif args.fixture is not None:
        catalog = load_catalog(args.fixtures)
        if args.fixture not in catalog:
            raise UsageError(f"unknown fixture {args.fixture!r}")
        fx = catalog[args.fixture]
        if fx.kind != "sequence":
            raise UsageError(f"fixture {fx.id} is a triangle, not a sequence")
        values = list(fx.values)
    else:
        rows = count if count is not None else args.rows
        values = _pair(args, rows).realize(rows).first_column()
    if count is None:
        return values
    if len(values) < count:
        raise NotEnoughMoments(f"need {count} terms, source has {len(values)}")
    return values[:count]


def _add_source(p: argparse.ArgumentParser, sequences: bool = False) -> None:
    p.add_argument("gf", nargs="*", metavar="EXPR", help="g and f as series expressions in x")
    p.add_argument("--exp", action="store_true", help="exponential Riordan array [g, f]")
    p.add_argument("--invert-first", action="store_true", help="use the inverse of the array")
    p.add_argument("--family", choices=FAMILY_NAMES, help="use a named family's moment array")
    p.add_argument("--r", type=_rational_arg, default=None, help="family parameter r (p/q)")
    p.add_argument("--s", type=_rational_arg, default=None, help="family parameter s (chebyshev-u)")
    if sequences:
        p.add_argument("--sequence", type=_rational_list_arg, help="moments as a comma-separated list")
        p.add_argument("--fixture", help="moments from a sequence fixture")
        p.add_argument("--fixtures", help="fixture catalog path")


# -- commands ---------------------------------------------------------------


def cmd_build(args) -> int:
    pair = _pair(args, args.rows)
    m = pair.realize(args.rows)
    _out(args, render.matrix_text(m), {"array": pair.bracket, "rows": render.matrix_json(m)})
    return EXIT_OK


def cmd_production(args) -> int:
    pair = _pair(args, args.rows)
    m = pair.realize(args.rows)
    p = production_matrix(m)
    verdict = p.tridiagonal_verdict()
    analytic = riordan_stieltjes(pair, p.size)
    agrees = analytic == p
    obj = render.production_json(p, verdict)
    obj["analytic_agrees"] = agrees
    text = "\n".join([render.matrix_text(p), render.verdict_text(verdict), f"analytic route agrees: {'yes' if agrees else 'no'}"])
    _out(args, text, obj)
    return EXIT_OK if verdict and agrees else EXIT_FAIL


def cmd_recurrence(args) -> int:
    if args.sequence is not None or args.fixture is not None:
        values = _moment_values(args, None)
        n = (len(values) - 2) // 2
        if n < 0:
            raise NotEnoughMoments("need at least two moments")
        rec = recurrence_from_moments(values, n)
    else:
        pair = _pair(args, args.rows)
        p = production_matrix(pair.realize(args.rows))
        try:
            rec = extract_recurrence(p)
        except NotTridiagonal as exc:
            print(f"not tri-diagonal: {exc}", file=sys.stderr)
            return EXIT_FAIL
    _out(args, render.recurrence_text(rec), render.recurrence_json(rec))
    return EXIT_OK


def cmd_moments(args) -> int:
    count = args.count
    if args.alpha is not None or args.beta is not None:
        rec = ThreeTermRecurrence(tuple(args.alpha or ()), tuple(args.beta or ()))
        mu = moments_from_recurrence(rec, count, args.mu0).values
    else:
        mu = _moment_values(args, count)
    _out(args, render.sequence_text(mu), render.strings(mu))
    return EXIT_OK


def cmd_hankel(args) -> int:
    n = args.n
    mu = _moment_values(args, 2 * n + 1)
    report: dict = {"n_max": n, "method": args.method}
    lines = []
    direct = product = None
    if args.method in ("direct", "both"):
        direct = hankel_transform(mu, n)
        report["direct"] = render.hankel_json(direct)
        lines.append("direct:  " + render.sequence_text(direct))
    if args.method in ("product", "both"):
        rec = jfraction_from_moments(mu, n)
        product = [hankel_product(rec, mu[0], k) for k in range(n + 1)]
        report["product"] = render.hankel_json(product)
        lines.append("product: " + render.sequence_text(product))
    status = EXIT_OK
    if args.method == "both":
        agree = direct == product
        report["agree"] = agree
        lines.append(f"agree: {'yes' if agree else 'no'}")
        status = EXIT_OK if agree else EXIT_FAIL
    _out(args, "\n".join(lines), report)
    return status


def cmd_family(args) -> int:
    n = args.n
    count = 2 * n + 2
    r = args.r if args.r is not None else Fraction(2)
    fam = family(args.name, r, args.s, order=_order(args, count))
    mu = fam.moments(count)
    rec = fam.recurrence(n)
    p = production_matrix(fam.moment_array.realize(n + 2))
    checks = {
        "production_tridiagonal": bool(p.tridiagonal_verdict()),
        "production_matches_recurrence": p == rec.production(n + 1),
        "recurrence_from_moments": recurrence_from_moments(mu, n) == rec,
        "hankel_closed_form": hankel_transform(mu, n) == [fam.hankel_closed(k) for k in range(n + 1)],
        "hankel_product": [hankel_product(rec, mu[0], k) for k in range(n + 1)]
        == [fam.hankel_closed(k) for k in range(n + 1)],
    }
    if fam.value is not None:
        checks["moments_closed_form"] = mu == [fam.value(k) for k in range(count)]
    hankel = hankel_transform(mu, n)
    obj = {
        "family": fam.name,
        "r": format_rational(fam.r),
        "s": format_rational(fam.s) if fam.s is not None else None,
        "exponential": fam.exponential,
        "moments": render.strings(mu),
        "recurrence": render.recurrence_json(rec),
        "hankel": render.hankel_json(hankel),
        "checks": checks,
    }
    lines = [
        f"family {fam.name} at r = {format_rational(fam.r)}" + (f", s = {format_rational(fam.s)}" if fam.s is not None else ""),
        "moments: " + render.sequence_text(mu),
        render.recurrence_text(rec),
        "hankel:  " + render.sequence_text(hankel),
    ]
    lines += [f"{'PASS' if ok else 'FAIL'} {name}" for name, ok in checks.items()]
    _out(args, "\n".join(lines), obj)
    return EXIT_OK if all(checks.values()) else EXIT_FAIL


def cmd_verify(args) -> int:
    catalog = load_catalog(args.fixtures)
    if args.all or not args.ids:
        ids = None
    else:
        unknown = [i for i in args.ids if i not in catalog]
        if unknown:
            raise UsageError("unknown fixture id(s): " + ", ".join(unknown))
        ids = args.ids
    results = verify_all(catalog, ids)
    obj = [{"id": res.id, "passed": res.passed, "terms": res.length, "detail": res.detail} for res in results]
    lines = []
    for res in results:
        line = f"{'PASS' if res.passed else 'FAIL'} {res.id} ({res.length} terms)"
        if res.detail:
            line += f": {res.detail}"
        lines.append(line)
    failed = sum(not res.passed for res in results)
    lines.append(f"{len(results) - failed}/{len(results)} fixtures passed")
    _out(args, "\n".join(lines), obj)
    return EXIT_FAIL if failed else EXIT_OK


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riordan-moments",
        description="Exact Riordan arrays, production matrices, moments and Hankel transforms.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--order", type=int, default=None, help="series truncation order (default: as needed)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="realize a Riordan array")
    _add_source(p)
    p.add_argument("--rows", type=int, default=8)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("production", parents=[common], help="production matrix and tri-diagonal verdict")
    _add_source(p)
    p.add_argument("--rows", type=int, default=8, help="rows realized; the matrix has one fewer")
    p.set_defaults(func=cmd_production)

    p = sub.add_parser("recurrence", parents=[common], help="three-term recurrence coefficients")
    _add_source(p, sequences=True)
    p.add_argument("--rows", type=int, default=8)
    p.set_defaults(func=cmd_recurrence)

    p = sub.add_parser("moments", parents=[common], help="moment sequence")
    _add_source(p, sequences=True)
    p.add_argument("--alpha", type=_rational_list_arg, help="alpha_0, alpha_1, ...")
    p.add_argument("--beta", type=_rational_list_arg, help="beta_1, beta_2, ...")
    p.add_argument("--mu0", type=_rational_arg, default=Fraction(1))
    p.add_argument("--count", type=int, default=8)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("hankel", parents=[common], help="Hankel transform h_0..h_n")
    _add_source(p, sequences=True)
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--method", choices=("direct", "product", "both"), default="direct")
    p.set_defaults(func=cmd_hankel)

    p = sub.add_parser("family", parents=[common], help="check a named orthogonal family")
    p.add_argument("name", choices=FAMILY_NAMES)
    p.add_argument("--r", type=_rational_arg, default=None)
    p.add_argument("--s", type=_rational_arg, default=None)
    p.add_argument("--n", type=int, default=6)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", parents=[common], help="recompute fixtures and compare")
    p.add_argument("ids", nargs="*")
    p.add_argument("--all", action="store_true")
    p.add_argument("--fixtures", help="fixture catalog path")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("rows", "count", "n"):
        value = getattr(args, name, None)
        if value is not None and value < (1 if name != "n" else 0):
            parser.error(f"--{name} must be positive")
    try:
        return args.func(args)
    except (UsageError, ParseError, OrderExceeded, NotEnoughMoments, NotEnoughCoefficients) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RiordanError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
