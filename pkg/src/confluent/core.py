"""Evaluation of the confluent hypergeometric function across the complex plane.

The entire function F(alpha; gamma; z) = sum_n (alpha)_n / (n! (gamma)_n) z^n
is computed by one of several regimes: the defining power series, the exact
finite sum when alpha is a nonpositive integer, the reflection
F(alpha; gamma; z) = e^z F(gamma - alpha; gamma; -z), a large-|z| expansion
with optimal truncation, and a Gauss-Jacobi discretisation of the Euler
integral used as an independent cross-check.  Every public evaluator reports
an absolute error estimate alongside the value.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np
from scipy.special import loggamma, roots_jacobi

from .errors import DomainError, NonConvergence, NotDegenerate

_EPS = float(np.finfo(float).eps)
# Multiplier for the rounding term of error estimates; calibrated against
# extended-precision references so the estimate stays an upper bound.
_ROUND_C = 8.0

# Regime switch radius: inside, the power series; outside, the expansion.
R_SWITCH = 40.0

# The direct (or reflected) series loses roughly e^(|z| - |Re z|) digits to
# cancellation.  Beyond this budget the expansion is already accurate, so the
# dispatcher hands over early even below R_SWITCH.
_CANCEL_LIMIT = 16.0
_ASYM_MIN_RADIUS = 25.0

# Near the negative real axis the reflected series is exact to rounding for
# any radius the summands can represent, and it is kept there so moderate
# negative arguments avoid the expansion's branch bookkeeping.
_NEG_AXIS_BAND = 10.0
_NEG_AXIS_LIMIT = 600.0

_NONPOS_INT_TOL = 1e-12
_ASYM_MAX_TERMS = 400
_ASYM_TINY = 1e-17


class Regime(Enum):
    SERIES = "Series"
    KUMMER_REFLECTED = "KummerReflected"
    ASYMPTOTIC = "Asymptotic"
    POLYNOMIAL = "Polynomial"
    INTEGRAL = "Integral"


def _nearest_nonpositive_integer(w: complex) -> int | None:
    k = round(w.real)
    if k <= 0 and abs(w - k) <= _NONPOS_INT_TOL:
        return k
    return None


@dataclass(frozen=True)
class Params:
    """Parameter pair (alpha, gamma); gamma must stay off the poles 0, -1, -2, ..."""

    alpha: complex
    gamma: complex

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "gamma", complex(self.gamma))
        if _nearest_nonpositive_integer(self.gamma) is not None:
            raise DomainError(
                f"gamma={self.gamma} is within {_NONPOS_INT_TOL} of a nonpositive integer"
            )

    def degenerate(self) -> bool:
        """True when alpha is (numerically) a nonpositive integer, so F is a polynomial."""
        return _nearest_nonpositive_integer(self.alpha) is not None

    @property
    def degree(self) -> int:
        k = _nearest_nonpositive_integer(self.alpha)
        if k is None:
            raise NotDegenerate(f"alpha={self.alpha} is not a nonpositive integer")
        return -k


@dataclass(frozen=True)
class SeriesBudget:
    """Stopping control for the power series."""

    tol: float = 1e-15
    max_terms: int = 10000

    def __post_init__(self):
        if not (self.tol > 0.0):
            raise DomainError("tol must be positive")
        if self.max_terms < 1:
            raise DomainError("max_terms must be at least 1")


@dataclass(frozen=True)
class EvalResult:
    value: complex
    abs_error_est: float
    regime: Regime
    terms_used: int


def pochhammer(a: complex, n: int) -> complex:
    """Rising factorial (a)_n by explicit product; exact at nonpositive integer a."""
    if n < 0:
        raise DomainError("pochhammer order must be nonnegative")
    out = 1
    for k in range(n):
        out = out * (a + k)
    return out


# ---------------------------------------------------------------------------
# vectorised kernels; scalars wrap one-element arrays so there is a single
# implementation of each summation loop


def _series_grid(alpha: complex, gamma: complex, zs: np.ndarray, budget: SeriesBudget):
    """Power series at each z; returns (sum, abs_error, terms_used) arrays."""
    zs = np.asarray(zs, dtype=complex)
    s = np.ones_like(zs)
    comp = np.zeros_like(zs)  # Kahan compensation
    t = np.ones_like(zs)
    abs_sum = np.ones(zs.shape)
    streak = np.zeros(zs.shape, dtype=int)
    terms = np.ones(zs.shape, dtype=int)
    omitted = np.zeros(zs.shape)
    done = np.zeros(zs.shape, dtype=bool)

    if alpha == gamma:
        # common factor cancels exactly and the sum is the exponential series
        def _coeff(n):
            return 1.0 / (n + 1)

    else:

        def _coeff(n):
            return (alpha + n) / ((gamma + n) * (n + 1))

    for n in range(budget.max_terms):
        t_next = t * _coeff(n) * zs
        active = ~done
        if not active.any():
            break
        y = t_next - comp
        tmp = s + y
        comp = np.where(active, (tmp - s) - y, comp)
        s = np.where(active, tmp, s)
        mag = np.abs(t_next)
        abs_sum = np.where(active, abs_sum + mag, abs_sum)
        terms = np.where(active, n + 2, terms)
        t = np.where(active, t_next, t)
        small = mag < budget.tol * np.abs(s)
        streak = np.where(active & small, streak + 1, np.where(active, 0, streak))
        newly = active & (streak >= 2)
        if newly.any():
            nxt = np.abs(t_next * _coeff(n + 1) * zs)
            omitted = np.where(newly, nxt, omitted)
            done = done | newly
    if not done.all():
        bad = int((~done).sum())
        raise NonConvergence(
            f"series did not meet tol={budget.tol} within {budget.max_terms} terms "
            f"at {bad} point(s)"
        )
    err = omitted + _ROUND_C * _EPS * abs_sum
    return s, err, terms


def _poly_grid(alpha: complex, gamma: complex, degree: int, zs: np.ndarray):
    """Exact finite sum for degenerate alpha; degree + 1 terms."""
    zs = np.asarray(zs, dtype=complex)
    s = np.ones_like(zs)
    comp = np.zeros_like(zs)
    t = np.ones_like(zs)
    abs_sum = np.ones(zs.shape)
    for k in range(degree):
        t = t * ((alpha + k) / ((gamma + k) * (k + 1))) * zs
        y = t - comp
        tmp = s + y
        comp = (tmp - s) - y
        s = tmp
        abs_sum += np.abs(t)
    # residual coefficient is zero only when alpha is an exact integer; the
    # dropped tail for alpha within 1e-12 of one is charged to the estimate
    tail = np.abs(t * ((alpha + degree) / ((gamma + degree) * (degree + 1))) * zs)
    err = tail + _ROUND_C * _EPS * abs_sum
    terms = np.full(zs.shape, degree + 1, dtype=int)
    return s, err, terms


def _kummer_grid(p: Params, zs: np.ndarray, budget: SeriesBudget):
    """Reflected evaluation e^z F(gamma-alpha; gamma; -z); series runs at -z."""
    zs = np.asarray(zs, dtype=complex)
    refl = kummer_reflect(p)
    if refl.degenerate():
        s, err, terms = _poly_grid(refl.alpha, refl.gamma, refl.degree, -zs)
    else:
        s, err, terms = _series_grid(refl.alpha, refl.gamma, -zs, budget)
    ez = np.exp(zs)
    vals = ez * s
    err = np.abs(ez) * err + _ROUND_C * _EPS * np.abs(vals)
    return vals, err, terms


def _principal_log(zs: np.ndarray) -> np.ndarray:
    """log z with the branch on the negative real axis taken from below."""
    theta = np.angle(zs)
    theta = np.where((zs.imag == 0) & (zs.real < 0), -math.pi, theta)
    return np.log(np.abs(zs)) + 1j * theta


def _asym_sum(a: complex, b: complex, u: np.ndarray, limit: int | None):
    """sum_n (a)_n (b)_n / n! u^n with per-point optimal truncation.

    Stops before the smallest-magnitude term; the dropped term is the error.
    Returns (sum, trunc_error, abs_sum, terms).
    """
    u = np.asarray(u, dtype=complex)
    s = np.ones_like(u)
    comp = np.zeros_like(u)
    t = np.ones_like(u)
    abs_sum = np.ones(u.shape)
    terms = np.ones(u.shape, dtype=int)
    trunc = np.zeros(u.shape)
    done = np.zeros(u.shape, dtype=bool)
    cap = _ASYM_MAX_TERMS if limit is None else limit
    for n in range(cap):
        t_next = t * ((a + n) * (b + n) / (n + 1)) * u
        active = ~done
        if not active.any():
            break
        mag_next = np.abs(t_next)
        mag_cur = np.abs(t)
        if limit is None:
            tiny = mag_next < _ASYM_TINY * np.abs(s)
            grew = mag_next >= mag_cur
            stop_grow = active & grew & ~tiny
            add_mask = active & ~stop_grow
        else:
            tiny = np.zeros(u.shape, dtype=bool)
            stop_grow = np.zeros(u.shape, dtype=bool)
            add_mask = active
        y = t_next - comp
        tmp = s + y
        comp = np.where(add_mask, (tmp - s) - y, comp)
        s = np.where(add_mask, tmp, s)
        abs_sum = np.where(add_mask, abs_sum + mag_next, abs_sum)
        terms = np.where(add_mask, n + 2, terms)
        if limit is None:
            # growth onset: drop the smallest included term (kept for n = 0)
            if stop_grow.any():
                drop = stop_grow & (terms > 1)
                s = np.where(drop, s - t, s)
                terms = np.where(drop, terms - 1, terms)
                trunc = np.where(stop_grow, np.where(drop, mag_cur, 1.0), trunc)
                done = done | stop_grow
            newly_tiny = add_mask & tiny
            if newly_tiny.any():
                trunc = np.where(newly_tiny, mag_next, trunc)
                done = done | newly_tiny
        t = np.where(add_mask, t_next, t)
    still = ~done
    if limit is None and still.any():
        trunc = np.where(still, np.abs(t), trunc)
    elif limit is not None:
        trunc = np.abs(t * ((a + cap) * (b + cap) / (cap + 1)) * u)
    return s, trunc, abs_sum, terms


def _pole_prefactor_dead(w: complex) -> bool:
    """True when 1/Gamma(w) vanishes, killing that branch of the expansion."""
    return _nearest_nonpositive_integer(w) is not None


def _asym_grid(p: Params, zs: np.ndarray, M: int | None, N: int | None):
    """Large-|z| expansion in scaled form: F = w * exp(logscale).

    Two sums: a reflected power in 1/(-z) and the exponentially large branch
    e^z z^(alpha-gamma).  Branch factor e^(i pi eps alpha) uses eps = +1 for
    Im z > 0 and eps = -1 otherwise (the negative real axis is approached
    from below, consistent with _principal_log).
    """
    a, g = p.alpha, p.gamma
    zs = np.asarray(zs, dtype=complex)
    logz = _principal_log(zs)
    eps_branch = np.where(zs.imag > 0, 1.0, -1.0)

    s1, tr1, ab1, n1 = _asym_sum(a, a - g + 1.0, -1.0 / zs, M)
    s2, tr2, ab2, n2 = _asym_sum(g - a, 1.0 - a, 1.0 / zs, N)

    lg_g = loggamma(g)
    dead1 = _pole_prefactor_dead(g - a)
    dead2 = _pole_prefactor_dead(a)
    p1 = (
        np.full(zs.shape, -np.inf, dtype=complex)
        if dead1
        else lg_g - loggamma(g - a) + 1j * math.pi * eps_branch * a - a * logz
    )
    p2 = (
        np.full(zs.shape, -np.inf, dtype=complex)
        if dead2
        else lg_g - loggamma(a) + zs + (a - g) * logz
    )

    with np.errstate(invalid="ignore"):
        l1 = np.where(np.abs(s1) > 0, p1.real + np.log(np.maximum(np.abs(s1), 1e-300)), -np.inf)
        l2 = np.where(np.abs(s2) > 0, p2.real + np.log(np.maximum(np.abs(s2), 1e-300)), -np.inf)
    if dead1:
        l1 = np.full(zs.shape, -np.inf)
    if dead2:
        l2 = np.full(zs.shape, -np.inf)
    logscale = np.maximum(l1, l2)
    safe_scale = np.where(np.isfinite(logscale), logscale, 0.0)

    def _branch(pref, sval, dead):
        if dead:
            return np.zeros_like(zs)
        amp = np.exp(pref - safe_scale)
        return amp * sval

    w1 = _branch(p1, s1, dead1)
    w2 = _branch(p2, s2, dead2)
    w = w1 + w2

    def _branch_mag(pref, dead):
        if dead:
            return np.zeros(zs.shape)
        return np.exp(pref.real - safe_scale)

    m1 = _branch_mag(p1, dead1)
    m2 = _branch_mag(p2, dead2)
    err = m1 * (tr1 + _ROUND_C * _EPS * ab1) + m2 * (tr2 + _ROUND_C * _EPS * ab2)
    # rounding of the log-domain prefactors is amplified by their magnitude
    log_amp = 4.0 + np.abs(safe_scale) + np.abs(zs.imag)
    err = err + _EPS * (_ROUND_C + log_amp) * (np.abs(w1) + np.abs(w2))
    terms = n1 + n2
    return w, safe_scale, err, terms


_REGIME_CODE = {
    Regime.SERIES: 0,
    Regime.KUMMER_REFLECTED: 1,
    Regime.ASYMPTOTIC: 2,
    Regime.POLYNOMIAL: 3,
}
_CODE_REGIME = {v: k for k, v in _REGIME_CODE.items()}


def eval_scaled_grid(p: Params, zs, budget: SeriesBudget | None = None):
    """Dispatch evaluation over an array of points in scaled form.

    Returns (w, logscale, err_scaled, regime_codes, terms) with
    F(z) = w * exp(logscale) and abs error err_scaled * exp(logscale).
    """
    budget = budget or SeriesBudget()
    zs = np.atleast_1d(np.asarray(zs, dtype=complex))
    w = np.zeros_like(zs)
    scale = np.zeros(zs.shape)
    err = np.zeros(zs.shape)
    codes = np.zeros(zs.shape, dtype=int)
    terms = np.zeros(zs.shape, dtype=int)

    if p.degenerate():
        vals, e, t = _poly_grid(p.alpha, p.gamma, p.degree, zs)
        return vals, scale, e, np.full(zs.shape, _REGIME_CODE[Regime.POLYNOMIAL]), t

    r = np.abs(zs)
    cancel = r - np.abs(zs.real)
    neg = zs.real < 0
    kum_mask = neg & (cancel <= _NEG_AXIS_BAND) & (r <= _NEG_AXIS_LIMIT)
    asym_mask = ~kum_mask & (
        (r > R_SWITCH) | ((r > _ASYM_MIN_RADIUS) & (cancel > _CANCEL_LIMIT))
    )
    kum_mask = kum_mask | (~asym_mask & ~kum_mask & neg)
    ser_mask = ~kum_mask & ~asym_mask

    if ser_mask.any():
        v, e, t = _series_grid(p.alpha, p.gamma, zs[ser_mask], budget)
        w[ser_mask], err[ser_mask], terms[ser_mask] = v, e, t
        codes[ser_mask] = _REGIME_CODE[Regime.SERIES]
    if kum_mask.any():
        v, e, t = _kummer_grid(p, zs[kum_mask], budget)
        w[kum_mask], err[kum_mask], terms[kum_mask] = v, e, t
        codes[kum_mask] = _REGIME_CODE[Regime.KUMMER_REFLECTED]
    if asym_mask.any():
        v, s, e, t = _asym_grid(p, zs[asym_mask], None, None)
        w[asym_mask], scale[asym_mask] = v, s
        err[asym_mask], terms[asym_mask] = e, t
        codes[asym_mask] = _REGIME_CODE[Regime.ASYMPTOTIC]
    return w, scale, err, codes, terms


def _scalar_result(w, scale, err, regime: Regime, terms) -> EvalResult:
    mag = math.exp(scale[0]) if scale[0] < 709.0 else math.inf
    value = complex(w[0]) * mag
    return EvalResult(value, float(err[0]) * mag, regime, int(terms[0]))


def eval(p: Params, z: complex, budget: SeriesBudget | None = None) -> EvalResult:
    """Evaluate F(alpha; gamma; z), selecting the regime automatically."""
    w, scale, err, codes, terms = eval_scaled_grid(p, [complex(z)], budget)
    return _scalar_result(w, scale, err, _CODE_REGIME[int(codes[0])], terms)


def eval_series(p: Params, z: complex, budget: SeriesBudget | None = None) -> EvalResult:
    """Direct power series regardless of |z|; the estimate reports cancellation."""
    budget = budget or SeriesBudget()
    s, err, terms = _series_grid(p.alpha, p.gamma, np.array([complex(z)]), budget)
    return EvalResult(complex(s[0]), float(err[0]), Regime.SERIES, int(terms[0]))


def eval_polynomial(p: Params, z: complex) -> EvalResult:
    """Exact finite sum for degenerate alpha = -n; degree + 1 terms."""
    nd = p.degree  # raises NotDegenerate when alpha is off the integer lattice
    s, err, terms = _poly_grid(p.alpha, p.gamma, nd, np.array([complex(z)]))
    return EvalResult(complex(s[0]), float(err[0]), Regime.POLYNOMIAL, int(terms[0]))


def kummer_reflect(p: Params) -> Params:
    """Image of (alpha, gamma) under the reflection alpha -> gamma - alpha."""
    return Params(p.gamma - p.alpha, p.gamma)


def eval_kummer(p: Params, z: complex, budget: SeriesBudget | None = None) -> EvalResult:
    """Force the reflected route e^z F(gamma-alpha; gamma; -z)."""
    budget = budget or SeriesBudget()
    v, e, t = _kummer_grid(p, np.array([complex(z)]), budget)
    return EvalResult(complex(v[0]), float(e[0]), Regime.KUMMER_REFLECTED, int(t[0]))


def eval_asymptotic(
    p: Params, z: complex, M: int | None = None, N: int | None = None
) -> EvalResult:
    """Large-|z| expansion; M, N override the optimal truncation indices."""
    z = complex(z)
    if z == 0:
        raise DomainError("expansion undefined at z = 0")
    w, scale, err, terms = _asym_grid(p, np.array([z]), M, N)
    return _scalar_result(w, scale, err, Regime.ASYMPTOTIC, terms)


def derivative(p: Params, z: complex, n: int, budget: SeriesBudget | None = None) -> complex:
    """n-th derivative via the shift (alpha)_n/(gamma)_n F(alpha+n; gamma+n; z)."""
    if n < 0:
        raise DomainError("derivative order must be nonnegative")
    if n == 0:
        return eval(p, z, budget).value
    shifted = Params(p.alpha + n, p.gamma + n)
    factor = pochhammer(p.alpha, n) / pochhammer(p.gamma, n)
    return factor * eval(shifted, z, budget).value


@lru_cache(maxsize=64)
def _jacobi_rule(nodes: int, a_re: float, b_re: float):
    # scipy's weight is (1-x)^alpha (1+x)^beta on [-1, 1]; map u = (1+x)/2 so
    # beta absorbs u^(a_re) and alpha absorbs (1-u)^(b_re)
    x, w = roots_jacobi(nodes, b_re, a_re)
    return (x + 1.0) / 2.0, w


def eval_integral(p: Params, z: complex, quad_nodes: int = 160) -> complex:
    """Euler-integral evaluation, valid for Re gamma > Re alpha > 0.

    Gauss-Jacobi nodes absorb the endpoint weights u^(alpha-1) (1-u)^(gamma-alpha-1);
    imaginary parts of the exponents stay in the integrand.
    """
    a, g = p.alpha, p.gamma
    if not (g.real > a.real > 0):
        raise DomainError("integral representation needs Re gamma > Re alpha > 0")
    if quad_nodes < 1:
        raise DomainError("quad_nodes must be positive")
    z = complex(z)
    a_re = a.real - 1.0
    b_re = g.real - a.real - 1.0
    u, wts = _jacobi_rule(quad_nodes, a_re, b_re)
    integrand = np.exp(z * u)
    if a.imag != 0.0:
        integrand = integrand * np.exp(1j * a.imag * np.log(u))
    if (g - a).imag != 0.0:
        integrand = integrand * np.exp(1j * (g - a).imag * np.log(1.0 - u))
    total = complex(np.sum(wts * integrand)) * 2.0 ** (-(a_re + b_re + 1.0))
    pref = cmath.exp(loggamma(g) - loggamma(a) - loggamma(g - a))
    return pref * total
