"""Command-line front end.

Point evaluations print a single shortest-round-trip decimal to stdout;
grid subcommands emit CSV (UTF-8, LF) with the fixed header

    a,b,p,d,approx,exact,rel_err,log_scaled_abs_err,tail_prob,underflow

leaving fields empty where a metric does not apply.  Exit codes: 0 ok,
2 usage error, 3 domain error, 4 convergence failure.
"""

from __future__ import annotations

import argparse
import csv
import sys
from typing import Sequence

from .analysis import (
    ErrorRecord,
    GridSpec,
    RateFitResult,
    default_shape_grid,
    log_spaced,
    rate_fit,
    relative_error_curves,
    relative_error_over_means,
    scaled_abs_error_curves,
    tail_probability_grid,
)
from .approx import (
    ONE_THIRD,
    approx_median,
    approx_median_default,
    exact_median_special,
    gamma_median_approx,
)
from .errors import ConvergenceError, DomainError
from .params import BetaParams
from .solver import beta_median_exact, gamma_median_exact
from .special import reg_inc_beta

CSV_HEADER = [
    "a", "b", "p", "d", "approx", "exact",
    "rel_err", "log_scaled_abs_err", "tail_prob", "underflow",
]

DEFAULT_P_LIST = (0.001, 0.25, 0.35, 0.45, 0.49, 0.499)
DEFAULT_D_LIST = (0.0, 0.25, 0.3, ONE_THIRD, 0.4, 0.5)


def parse_offset(token: str) -> float:
    """Offset flag value: the literal token ``1/3`` means the exact double
    nearest 1/3; anything else is read as a decimal."""
    token = token.strip()
    if token == "1/3":
        return ONE_THIRD
    try:
        return float(token)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid offset: {token!r}")


def parse_offset_list(text: str) -> list[float]:
    return [parse_offset(tok) for tok in text.split(",") if tok.strip()]


def parse_float_list(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number list: {text!r}")


def _fmt(value: float | bool | None) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return repr(value)


def _write_records(records: Sequence[ErrorRecord], out_path: str | None) -> None:
    stream = open(out_path, "w", encoding="utf-8", newline="") if out_path else sys.stdout
    try:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in records:
            writer.writerow([
                _fmt(r.a), _fmt(r.b), _fmt(r.p), _fmt(r.d),
                _fmt(r.approx), _fmt(r.exact), _fmt(r.rel_err),
                _fmt(r.log_scaled_abs_err), _fmt(r.tail_prob), _fmt(r.underflow),
            ])
    finally:
        if out_path:
            stream.close()


def _write_fit(result: RateFitResult, out_path: str | None) -> None:
    stream = open(out_path, "w", encoding="utf-8", newline="") if out_path else sys.stdout
    try:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["d", "p", "slope", "intercept", "max_abs_residual"])
        writer.writerow([_fmt(result.d), _fmt(result.p), _fmt(result.slope),
                         _fmt(result.intercept), _fmt(result.max_abs_residual)])
    finally:
        if out_path:
            stream.close()


def _cmd_median(args: argparse.Namespace) -> int:
    params = BetaParams(args.a, args.b)
    if args.method == "exact":
        value = beta_median_exact(params)
    elif args.method == "approx":
        value = approx_median(params, args.d) if args.d is not None \
            else approx_median_default(params)
    else:
        special = exact_median_special(params)
        if special is None:
            raise DomainError(
                f"no closed-form median for a={args.a!r}, b={args.b!r} "
                "(requires a = 1, b = 1, or a = b)"
            )
        value = special
    print(repr(value))
    return 0


def _cmd_cdf(args: argparse.Namespace) -> int:
    params = BetaParams(args.a, args.b)  # validates the shapes
    print(repr(reg_inc_beta(args.x, params.a, params.b)))
    return 0


def _cmd_gamma_median(args: argparse.Namespace) -> int:
    if args.method == "exact":
        value = gamma_median_exact(args.a)
    else:
        value = gamma_median_approx(args.a)
    print(repr(value))
    return 0


def _shape_points(args: argparse.Namespace) -> list[float]:
    if args.points is not None:
        return log_spaced(args.a_min, args.a_max, args.points)
    return default_shape_grid(args.a_min, args.a_max)


def _cmd_grid_relerr(args: argparse.Namespace) -> int:
    grid = GridSpec(
        p_values=tuple(args.p),
        shape_values=tuple(_shape_points(args)),
        d_values=tuple(args.d),
    )
    _write_records(relative_error_curves(grid), args.out)
    return 0


def _open_means_grid(n: int) -> list[float]:
    return [i / (n + 1) for i in range(1, n + 1)]


def _cmd_grid_means(args: argparse.Namespace) -> int:
    records = relative_error_over_means(
        args.min_shape, _open_means_grid(args.p_points), args.d
    )
    _write_records(records, args.out)
    return 0


def _cmd_curve_abserr(args: argparse.Namespace) -> int:
    records = scaled_abs_error_curves(args.p, default_shape_grid(), args.d)
    _write_records(records, args.out)
    return 0


def _cmd_grid_tail(args: argparse.Namespace) -> int:
    shapes = log_spaced(args.shape_min, args.shape_max, args.points)
    records = tail_probability_grid(shapes, _open_means_grid(args.p_points))
    _write_records(records, args.out)
    return 0


def _cmd_rate_fit(args: argparse.Namespace) -> int:
    result = rate_fit(args.p, args.a_min, args.a_max, args.points, args.d)
    _write_fit(result, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="betamedian",
        description="Beta-distribution median approximation and analysis grids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("median", help="median of Beta(a, b)")
    p.add_argument("--a", type=float, required=True, help="first shape")
    p.add_argument("--b", type=float, required=True, help="second shape")
    p.add_argument("--method", choices=["exact", "approx", "special"],
                   default="exact", help="exact solver, closed-form "
                   "approximation, or exact special case (default: exact)")
    p.add_argument("--d", type=parse_offset, default=None,
                   help="offset for --method approx (default 1/3; the "
                   "token 1/3 is parsed exactly)")
    p.set_defaults(func=_cmd_median)

    p = sub.add_parser("cdf", help="Beta(a, b) CDF at x")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.set_defaults(func=_cmd_cdf)

    p = sub.add_parser("gamma-median", help="median of unit-scale Gamma(a)")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--method", choices=["exact", "approx"], default="exact")
    p.set_defaults(func=_cmd_gamma_median)

    p = sub.add_parser(
        "grid-relerr",
        help="relative-error grid over (d, p, a), CSV",
    )
    p.add_argument("--p", type=parse_float_list, default=list(DEFAULT_P_LIST),
                   help="comma-separated means (default: "
                   "0.001,0.25,0.35,0.45,0.49,0.499)")
    p.add_argument("--a-min", type=float, default=1.0)
    p.add_argument("--a-max", type=float, default=1024.0)
    p.add_argument("--points", type=int, default=None,
                   help="number of log-spaced shapes (default: 25/decade)")
    p.add_argument("--d", type=parse_offset_list, default=[ONE_THIRD],
                   help="comma-separated offsets (default: 1/3)")
    p.add_argument("--out", default=None, help="CSV path (default: stdout)")
    p.set_defaults(func=_cmd_grid_relerr)

    p = sub.add_parser(
        "grid-means",
        help="relative error over the whole range of means, CSV",
    )
    p.add_argument("--min-shape", type=float, required=True,
                   help="value of the smaller shape parameter")
    p.add_argument("--p-points", type=int, default=99,
                   help="number of equally spaced means in (0, 1)")
    p.add_argument("--d", type=parse_offset, default=ONE_THIRD)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_grid_means)

    p = sub.add_parser(
        "curve-abserr",
        help="log scaled absolute error across shapes for several d, CSV",
    )
    p.add_argument("--p", type=float, default=0.01)
    p.add_argument("--d", type=parse_offset_list,
                   default=list(DEFAULT_D_LIST),
                   help="comma-separated offsets (default: 0,0.25,0.3,1/3,0.4,0.5)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_curve_abserr)

    p = sub.add_parser(
        "grid-tail",
        help="CDF at the approximate median over a (shape, mean) grid, CSV",
    )
    p.add_argument("--shape-min", type=float, default=1.0)
    p.add_argument("--shape-max", type=float, default=64.0)
    p.add_argument("--points", type=int, default=7,
                   help="number of log-spaced smaller-shape values")
    p.add_argument("--p-points", type=int, default=99)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_grid_tail)

    p = sub.add_parser(
        "rate-fit",
        help="power-law fit of the approximation's convergence rate, CSV",
    )
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--d", type=parse_offset, required=True)
    p.add_argument("--a-min", type=float, default=8.0)
    p.add_argument("--a-max", type=float, default=4096.0)
    p.add_argument("--points", type=int, default=10)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_rate_fit)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the synopsis
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"betamedian: domain error: {exc}", file=sys.stderr)
        return 3
    except ConvergenceError as exc:
        print(f"betamedian: convergence failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
