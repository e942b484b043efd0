"""Command-line front end emitting CSV or JSON for the library's capabilities.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 convergence failure.
Output is deterministic: fixed significant digits, no timestamps, no locale.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import applications, identities
from . import laguerre as lag
from .core import (
    Params,
    SeriesBudget,
    eval as _eval,
    eval_asymptotic,
    eval_integral,
    eval_kummer,
    eval_series,
)
from .errors import (
    AmbiguousCase,
    DomainError,
    Inconclusive,
    InvalidShift,
    NonConvergence,
    NotDegenerate,
    ZeroOnCircle,
)
from .identities import ContiguousRelation
from .valuedist import (
    CircleSpec,
    characteristic_T,
    find_real_zeros,
    order_estimate,
    real_zero_count,
    zero_count_argument_principle,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_NUMERIC = 3

_DEFAULT_IDENTITY_TOL = 1e-9
_FLOAT_EPS = float(np.finfo(float).eps)


class _UsageError(Exception):
    """Flag combination that argparse alone cannot reject."""


class _Parser(argparse.ArgumentParser):
    """Parser whose usage failures exit with code 1, usage text on stderr."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(value, precision: int) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (list, tuple)):
        return ";".join(_fmt(v, precision) for v in value)
    return f"{float(value):.{precision}g}"


def _json_value(value, precision: int):
    if isinstance(value, (str, bool)):
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (list, tuple)):
        return [_json_value(v, precision) for v in value]
    # rounding through the same format keeps CSV and JSON numerically identical
    return float(f"{float(value):.{precision}g}")


def _emit(header, rows, args) -> int:
    if args.json:
        records = [
            {key: _json_value(val, args.precision) for key, val in zip(header, row)}
            for row in rows
        ]
        payload = records[0] if len(records) == 1 else records
        print(json.dumps(payload))
    else:
        print(",".join(header))
        for row in rows:
            print(",".join(_fmt(val, args.precision) for val in row))
    return EXIT_OK


def _budget(args) -> SeriesBudget:
    tol = args.tol if args.tol is not None else 1e-15
    return SeriesBudget(tol=tol, max_terms=args.max_terms)


def _params_from(args) -> Params:
    return Params(
        complex(args.alpha_re, args.alpha_im), complex(args.gamma_re, args.gamma_im)
    )


def _z_from(args) -> complex:
    return complex(args.z_re, args.z_im)


def _add_param_flags(sub, with_z: bool = True):
    sub.add_argument("--alpha-re", type=float, required=True, help="Re alpha")
    sub.add_argument("--alpha-im", type=float, default=0.0, help="Im alpha")
    sub.add_argument("--gamma-re", type=float, required=True, help="Re gamma")
    sub.add_argument("--gamma-im", type=float, default=0.0, help="Im gamma")
    if with_z:
        sub.add_argument("--z-re", type=float, default=0.0, help="Re z")
        sub.add_argument("--z-im", type=float, default=0.0, help="Im z")


def _cmd_eval(args) -> int:
    p = _params_from(args)
    z = _z_from(args)
    header = ["value_re", "value_im", "abs_error_est", "regime", "terms_used"]
    if args.method == "integral":
        nodes = args.quad_nodes
        value = eval_integral(p, z, nodes)
        coarse = eval_integral(p, z, max(nodes // 2, 8))
        # node halving catches truncation; the quadrature rule itself carries
        # a weight-accuracy floor ~ nodes*eps on the absolute-value envelope
        envelope = abs(eval_integral(p, complex(z.real), nodes))
        err = abs(value - coarse) + 60.0 * nodes * _FLOAT_EPS * envelope
        row = [value.real, value.imag, err, "Integral", nodes]
        return _emit(header, [row], args)
    budget = _budget(args)
    if args.method == "auto":
        res = _eval(p, z, budget)
    elif args.method == "series":
        res = eval_series(p, z, budget)
    elif args.method == "kummer":
        res = eval_kummer(p, z, budget)
    else:
        res = eval_asymptotic(p, z)
    row = [res.value.real, res.value.imag, res.abs_error_est, res.regime.value, res.terms_used]
    return _emit(header, [row], args)


def _cmd_identity(args) -> int:
    p = _params_from(args)
    z = _z_from(args)
    budget = SeriesBudget(max_terms=args.max_terms)
    threshold = args.tol if args.tol is not None else _DEFAULT_IDENTITY_TOL
    which = args.which
    if which == "kummer":
        residual = identities.kummer_residual(p, z, budget)
    elif which == "diff":
        residual = identities.differentiation_residual(
            p, z, args.n, budget, h=args.fd_step
        )
    else:
        rel = ContiguousRelation[which.upper()]
        residual = identities.contiguous_residual(rel, p, z, budget)
    status = "PASS" if residual <= threshold else "FAIL"
    return _emit(
        ["check", "residual", "threshold", "status"],
        [[which, residual, threshold, status]],
        args,
    )


def _cmd_laguerre(args) -> int:
    spec = lag.LaguerreSpec(args.n, args.mu)
    if args.coeffs:
        poly = lag.laguerre_coeffs(spec)
        rows = [[k, complex(c).real, poly.exact] for k, c in enumerate(poly.coeffs)]
        return _emit(["k", "coeff", "exact"], rows, args)
    if args.ortho:
        if args.n2 is None:
            raise _UsageError("--ortho requires --n2")
        value = lag.orthogonality_integral(args.n, args.n2, args.mu, args.quad_nodes)
        return _emit(
            ["n", "n2", "mu", "integral"], [[args.n, args.n2, args.mu, value]], args
        )
    if args.generating:
        if args.t is None:
            raise _UsageError("--generating requires --t")
        residual = lag.generating_residual(args.mu, args.z, args.t, args.terms)
        return _emit(
            ["n", "mu", "z", "t", "residual"],
            [[args.n, args.mu, args.z, args.t, residual]],
            args,
        )
    value = lag.laguerre_eval(spec, args.z)
    return _emit(["n", "mu", "z", "value"], [[args.n, args.mu, args.z, value.real]], args)


def _cmd_characteristic(args) -> int:
    if not args.rmin < args.rmax:
        raise _UsageError("--rmin must be smaller than --rmax")
    p = _params_from(args)
    budget = _budget(args)
    radii = np.geomspace(args.rmin, args.rmax, args.points)
    rows = []
    for r in radii:
        spec = CircleSpec(float(r), args.samples, args.zero_guard)
        row = characteristic_T(p, spec, budget)
        rows.append([row.r, row.m_r, row.N_r, row.T_r, row.logM_r, row.nu_r, row.n_r])
    return _emit(["r", "m", "N", "T", "logM", "nu", "n"], rows, args)


def _cmd_order(args) -> int:
    if not args.rmin < args.rmax:
        raise _UsageError("--rmin must be smaller than --rmax")
    p = _params_from(args)
    grid = np.geomspace(args.rmin, args.rmax, args.points)
    slope = order_estimate(p, grid, samples=args.samples, budget=_budget(args))
    return _emit(["order_estimate"], [[slope]], args)


def _cmd_zeros(args) -> int:
    if args.real:
        if args.alpha is None or args.gamma is None:
            raise _UsageError("--real mode requires --alpha and --gamma")
        n_plus, n_minus = real_zero_count(args.alpha, args.gamma)
        if args.locate:
            zeros = find_real_zeros(
                Params(args.alpha, args.gamma), args.x_max, _budget(args)
            )
            return _emit(
                ["alpha", "gamma", "n_plus", "n_minus", "zeros"],
                [[args.alpha, args.gamma, n_plus, n_minus, zeros]],
                args,
            )
        return _emit(
            ["alpha", "gamma", "n_plus", "n_minus"],
            [[args.alpha, args.gamma, n_plus, n_minus]],
            args,
        )
    if args.alpha_re is None or args.gamma_re is None:
        raise _UsageError("argument mode requires --alpha-re and --gamma-re")
    if args.radius is None:
        raise _UsageError("argument mode requires --radius")
    p = Params(
        complex(args.alpha_re, args.alpha_im), complex(args.gamma_re, args.gamma_im)
    )
    count = zero_count_argument_principle(
        p, args.radius, args.zero_guard, _budget(args)
    )
    return _emit(["r", "count"], [[args.radius, count]], args)


def _cmd_app(args) -> int:
    which = args.which
    budget = _budget(args)
    if which == "erf":
        if args.x is None:
            raise _UsageError("erf requires --x")
        return _emit(["x", "value"], [[args.x, applications.erf_via_kummer(args.x, budget)]], args)
    if which == "gammainc":
        if args.n is None or args.x is None:
            raise _UsageError("gammainc requires --n and --x")
        value = applications.incomplete_gamma(args.n, args.x, budget)
        return _emit(["n", "x", "value"], [[args.n, args.x, value]], args)
    if which == "normcdf":
        if args.x is None:
            raise _UsageError("normcdf requires --x")
        value = applications.normal_cdf(args.mean, args.sigma, args.x, budget)
        return _emit(
            ["mean", "sigma", "x", "value"],
            [[args.mean, args.sigma, args.x, value]],
            args,
        )
    spec = applications.WhittakerSpec(
        complex(args.k_re, args.k_im),
        complex(args.m_re, args.m_im),
        complex(args.z_re, args.z_im),
    )
    value = applications.whittaker_M(spec, budget)
    return _emit(["value_re", "value_im"], [[value.real, value.imag]], args)


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of CSV")
    common.add_argument(
        "--precision", type=int, default=17, help="significant digits (6..17)"
    )
    common.add_argument(
        "--tol",
        type=float,
        default=None,
        help="series tolerance; for identity checks, the PASS threshold (default 1e-9)",
    )
    common.add_argument(
        "--max-terms", type=int, default=10000, help="series term budget"
    )

    parser = _Parser(prog="confluent", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("eval", parents=[common], help="evaluate F(alpha; gamma; z)")
    _add_param_flags(sub)
    sub.add_argument(
        "--method",
        choices=["auto", "series", "kummer", "asymptotic", "integral"],
        default="auto",
    )
    sub.add_argument("--quad-nodes", type=int, default=160, help="integral method nodes")
    sub.set_defaults(func=_cmd_eval)

    sub = subs.add_parser("identity", parents=[common], help="identity residual checks")
    _add_param_flags(sub)
    sub.add_argument(
        "--which",
        required=True,
        choices=["kummer", "r1", "r2", "r3", "r4", "r5", "r6", "diff"],
    )
    sub.add_argument("--n", type=int, default=1, help="derivative order for diff")
    sub.add_argument("--fd-step", type=float, default=None, help="stencil step override")
    sub.set_defaults(func=_cmd_identity)

    sub = subs.add_parser("laguerre", parents=[common], help="Laguerre polynomials")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--mu", type=float, default=0.0)
    sub.add_argument("--z", type=float, default=0.0)
    sub.add_argument("--coeffs", action="store_true", help="print coefficient table")
    sub.add_argument("--ortho", action="store_true", help="orthogonality integral")
    sub.add_argument("--n2", type=int, default=None)
    sub.add_argument("--quad-nodes", type=int, default=0, help="0 picks automatically")
    sub.add_argument("--generating", action="store_true", help="generating-function residual")
    sub.add_argument("--t", type=float, default=None)
    sub.add_argument("--terms", type=int, default=None)
    sub.set_defaults(func=_cmd_laguerre)

    sub = subs.add_parser(
        "characteristic", parents=[common], help="growth table over a radius grid"
    )
    _add_param_flags(sub, with_z=False)
    sub.add_argument("--rmin", type=float, required=True)
    sub.add_argument("--rmax", type=float, required=True)
    sub.add_argument("--points", type=int, default=8)
    sub.add_argument("--samples", type=int, default=4096)
    sub.add_argument("--zero-guard", type=float, default=1e-8)
    sub.set_defaults(func=_cmd_characteristic)

    sub = subs.add_parser("order", parents=[common], help="growth-order estimate")
    _add_param_flags(sub, with_z=False)
    sub.add_argument("--rmin", type=float, default=10.0)
    sub.add_argument("--rmax", type=float, default=1000.0)
    sub.add_argument("--points", type=int, default=12)
    sub.add_argument("--samples", type=int, default=1024)
    sub.set_defaults(func=_cmd_order)

    sub = subs.add_parser("zeros", parents=[common], help="zero counts and locations")
    sub.add_argument("--real", action="store_true", help="closed-form real-axis counts")
    sub.add_argument("--alpha", type=float, default=None, help="real alpha (--real mode)")
    sub.add_argument("--gamma", type=float, default=None, help="real gamma (--real mode)")
    sub.add_argument("--locate", action="store_true", help="also locate positive zeros")
    sub.add_argument("--x-max", type=float, default=None)
    sub.add_argument("--alpha-re", type=float, default=None)
    sub.add_argument("--alpha-im", type=float, default=0.0)
    sub.add_argument("--gamma-re", type=float, default=None)
    sub.add_argument("--gamma-im", type=float, default=0.0)
    sub.add_argument("--radius", type=float, default=None, help="argument-principle radius")
    sub.add_argument("--zero-guard", type=float, default=1e-8)
    sub.set_defaults(func=_cmd_zeros)

    sub = subs.add_parser("app", parents=[common], help="classical reductions")
    sub.add_argument(
        "which", choices=["erf", "gammainc", "normcdf", "whittaker"], help="function"
    )
    sub.add_argument("--x", type=float, default=None)
    sub.add_argument("--n", type=float, default=None)
    sub.add_argument("--mean", type=float, default=0.0)
    sub.add_argument("--sigma", type=float, default=1.0)
    sub.add_argument("--k-re", type=float, default=0.0)
    sub.add_argument("--k-im", type=float, default=0.0)
    sub.add_argument("--m-re", type=float, default=0.0)
    sub.add_argument("--m-im", type=float, default=0.0)
    sub.add_argument("--z-re", type=float, default=1.0)
    sub.add_argument("--z-im", type=float, default=0.0)
    sub.set_defaults(func=_cmd_app)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not 6 <= args.precision <= 17:
        parser.error("--precision must be between 6 and 17")
    try:
        return args.func(args)
    except _UsageError as exc:
        parser.error(str(exc))
    except (DomainError, NotDegenerate, InvalidShift, ZeroOnCircle, AmbiguousCase) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (NonConvergence, Inconclusive) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
