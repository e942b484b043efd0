"""Growth and zero-distribution diagnostics for F(alpha; gamma; z).

Everything samples the function in scaled form (value times exp(logscale)),
so circles of radius up to 1e4 and beyond stay inside double range.  F is
entire, so the characteristic reduces to the proximity term; the zero-counting
integral is still reported row by row.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Params, SeriesBudget, eval_scaled_grid
from .errors import (
    AmbiguousCase,
    DomainError,
    Inconclusive,
    NonConvergence,
    ZeroOnCircle,
)

_TWO_PI = 2.0 * math.pi
_MAX_WINDING_SAMPLES = 1 << 20
_PERTURB = 1.0 + 1e-6
_ATTEMPTS = 8

_trapezoid = getattr(np, "trapezoid", None) or np.trapz


@dataclass(frozen=True)
class CircleSpec:
    """Sampling plan for one circle |z| = r."""

    r: float
    samples: int = 4096
    zero_guard: float = 1e-8

    def __post_init__(self):
        if not (self.r > 0.0):
            raise DomainError("radius must be positive")
        if self.samples < 64 or self.samples & (self.samples - 1):
            raise DomainError("samples must be a power of two, at least 64")
        if not (self.zero_guard > 0.0):
            raise DomainError("zero_guard must be positive")


@dataclass(frozen=True)
class CharacteristicRow:
    """One radius of the growth table."""

    r: float
    m_r: float
    N_r: float
    T_r: float
    logM_r: float
    nu_r: int
    n_r: int

    def __post_init__(self):
        if not (self.r > 0.0):
            raise DomainError("radius must be positive")
        if min(self.m_r, self.N_r, self.T_r) < 0.0 or self.nu_r < 0 or self.n_r < 0:
            raise DomainError("characteristic quantities must be nonnegative")
        if self.T_r > max(self.logM_r, 0.0) + 1e-9 * (1.0 + abs(self.logM_r)) + 1e-12:
            raise DomainError("characteristic exceeded log max modulus")


@dataclass(frozen=True)
class ZeroReport:
    """Zero-count summary: circle counts plus both real semi-axes.

    argument_counts holds (radius, count) pairs in increasing radius order;
    located_real_zeros has length n_plus whenever the location scan agreed
    with the closed-form table.
    """

    n_plus: int
    n_minus: int
    located_real_zeros: tuple
    argument_counts: tuple

    def __post_init__(self):
        counts = [c for _, c in self.argument_counts]
        if any(c < 0 for c in counts) or self.n_plus < 0 or self.n_minus < 0:
            raise DomainError("zero counts must be nonnegative")
        if any(b < a for a, b in zip(counts, counts[1:])):
            raise DomainError("circle counts must be nondecreasing in r")


def _circle_points(r: float, samples: int) -> np.ndarray:
    theta = _TWO_PI * np.arange(samples) / samples
    return r * np.exp(1j * theta)


def _log_abs_grid(p: Params, zs: np.ndarray, budget: SeriesBudget | None) -> np.ndarray:
    w, scale, _, _, _ = eval_scaled_grid(p, zs, budget)
    mag = np.abs(w)
    with np.errstate(divide="ignore"):
        return np.where(mag > 0.0, np.log(np.maximum(mag, 1e-300)) + scale, -np.inf)


def _zero_hits(logabs: np.ndarray, zero_guard: float) -> bool:
    """True when some sample grazes a zero of the sampled function.

    A graze is a vanishing sample or a drop below zero_guard relative to the
    angular neighbors; an absolute floor would misfire on functions like e^z
    whose modulus legitimately spans e^(+-r) around the circle.
    """
    if np.any(np.isneginf(logabs)):
        return True
    neighbors = np.maximum(np.roll(logabs, 1), np.roll(logabs, -1))
    return bool(np.any(logabs < neighbors + math.log(zero_guard)))


def _guarded_circle(p: Params, c: CircleSpec, budget: SeriesBudget | None):
    """log|F| on a circle near radius c.r, nudged off any zero it grazes."""
    r = c.r
    for _ in range(_ATTEMPTS):
        logabs = _log_abs_grid(p, _circle_points(r, c.samples), budget)
        if not _zero_hits(logabs, c.zero_guard):
            return r, logabs
        r *= _PERTURB
    raise ZeroOnCircle(f"a zero sits on every circle tried near r = {c.r}")


def proximity_m(f, c: CircleSpec) -> float:
    """Mean of log+|f| over the circle |z| = c.r for a caller-supplied map."""
    r = c.r
    for _ in range(_ATTEMPTS):
        zs = _circle_points(r, c.samples)
        try:
            vals = np.asarray(f(zs), dtype=complex)
            if vals.shape != zs.shape:
                raise TypeError
        except TypeError:
            vals = np.array([complex(f(z)) for z in zs])
        mag = np.abs(vals)
        with np.errstate(divide="ignore"):
            logabs = np.where(mag > 0.0, np.log(np.maximum(mag, 1e-300)), -np.inf)
        if not _zero_hits(logabs, c.zero_guard):
            return float(np.mean(np.maximum(logabs, 0.0)))
        r *= _PERTURB
    raise ZeroOnCircle(f"sampled values graze a zero near r = {c.r}")


def max_term_central_index(p: Params, r: float, budget: SeriesBudget | None = None):
    """Largest series term mu(r) and its (largest) index nu(r) at |z| = r.

    The scan walks log|a_n r^n| by the term recurrence; for nondegenerate
    parameters it stops after twenty consecutive decreasing terms.
    """
    if not (r > 0.0):
        raise DomainError("radius must be positive")
    budget = budget or SeriesBudget()
    lr = math.log(r)
    la = 0.0
    best = 0.0
    arg = 0
    if p.degenerate():
        for n in range(1, p.degree + 1):
            la += (
                math.log(abs(p.alpha + (n - 1)))
                - math.log(abs(p.gamma + (n - 1)))
                - math.log(n)
                + lr
            )
            if la >= best:
                best, arg = la, n
        mu = math.exp(best) if best < 709.0 else math.inf
        return mu, arg
    limit = max(budget.max_terms, int(3.0 * r) + 200)
    streak = 0
    prev = la
    for n in range(1, limit + 1):
        la += (
            math.log(abs(p.alpha + (n - 1)))
            - math.log(abs(p.gamma + (n - 1)))
            - math.log(n)
            + lr
        )
        if la >= best:
            best, arg = la, n
        streak = streak + 1 if la < prev else 0
        prev = la
        if streak >= 20 and n >= arg + 20:
            mu = math.exp(best) if best < 709.0 else math.inf
            return mu, arg
    raise NonConvergence(f"term scan found no sustained decay within {limit} terms")


def zero_count_argument_principle(
    p: Params,
    r: float,
    zero_guard: float = 1e-8,
    budget: SeriesBudget | None = None,
    max_samples: int = _MAX_WINDING_SAMPLES,
) -> int:
    """Number of zeros with |z| < r, via the winding of F around the circle.

    Phase steps are refined adaptively until every one is below pi/2; the
    wrapped steps then telescope to an exact multiple of 2 pi.
    """
    if not (r > 0.0):
        raise DomainError("radius must be positive")
    budget = budget or SeriesBudget()
    _, nu = max_term_central_index(p, r, budget)
    n0 = 256
    while n0 < 8 * max(nu, 32) and n0 < max_samples:
        n0 <<= 1
    for attempt in range(_ATTEMPTS):
        radius = r * _PERTURB**attempt
        count = _winding_once(p, radius, n0, zero_guard, budget, max_samples)
        if count is not None:
            return count
    raise ZeroOnCircle(f"a zero sits on every circle tried near r = {r}")


def _winding_once(p, r, n0, zero_guard, budget, max_samples):
    theta = _TWO_PI * np.arange(n0) / n0
    w, scale, _, _, _ = eval_scaled_grid(p, r * np.exp(1j * theta), budget)
    if _zero_hits(_scaled_logabs(w, scale), zero_guard):
        return None
    for _ in range(64):
        dph = np.angle(np.roll(w, -1) * np.conj(w))
        bad = np.abs(dph) >= math.pi / 2.0
        if not bad.any():
            total = float(np.sum(dph))
            k = round(total / _TWO_PI)
            if k < 0:
                raise NonConvergence("phase accounting produced a negative winding")
            return int(k)
        theta_next = np.roll(theta, -1)
        theta_next[-1] += _TWO_PI
        mids = 0.5 * (theta[bad] + theta_next[bad])
        if theta.size + mids.size > max_samples:
            raise NonConvergence(
                f"winding needed more than {max_samples} samples at r = {r}"
            )
        wm, sm, _, _, _ = eval_scaled_grid(p, r * np.exp(1j * mids), budget)
        if np.any(wm == 0.0):
            return None
        theta = np.concatenate([theta, mids])
        w = np.concatenate([w, wm])
        order = np.argsort(theta)
        theta = theta[order]
        w = w[order]
    raise NonConvergence(f"phase refinement did not settle at r = {r}")


def _scaled_logabs(w, scale):
    mag = np.abs(w)
    with np.errstate(divide="ignore"):
        return np.where(mag > 0.0, np.log(np.maximum(mag, 1e-300)) + scale, -np.inf)


def _counting_integral(p, r, zero_guard, n_outer, budget) -> float:
    """integral_0^r n(t)/t dt on a log-spaced grid; n(0) = 0 for entire F."""
    if n_outer == 0:
        return 0.0
    t0 = min(1.0, r / 8.0)
    n0 = zero_count_argument_principle(p, t0, zero_guard, budget)
    while n0 > 0 and t0 > 1e-6:
        t0 /= 4.0
        n0 = zero_count_argument_principle(p, t0, zero_guard, budget)
    grid = np.geomspace(t0, r, 16)
    counts = np.empty(grid.size)
    counts[0] = n0
    counts[-1] = n_outer
    for i in range(1, grid.size - 1):
        counts[i] = zero_count_argument_principle(p, float(grid[i]), zero_guard, budget)
    return float(_trapezoid(counts, np.log(grid)))


def characteristic_T(
    p: Params, c: CircleSpec, budget: SeriesBudget | None = None
) -> CharacteristicRow:
    """One row of the growth table at radius c.r.

    F is entire, so the pole term of T vanishes and T_r = m_r; the N_r column
    reports the zero-counting integral for the same radius.
    """
    _, logabs = _guarded_circle(p, c, budget)
    m_r = float(np.mean(np.maximum(logabs, 0.0)))
    log_m = float(np.max(logabs))
    _, nu = max_term_central_index(p, c.r, budget)
    n_r = zero_count_argument_principle(p, c.r, c.zero_guard, budget)
    n_int = _counting_integral(p, c.r, c.zero_guard, n_r, budget)
    return CharacteristicRow(
        r=c.r, m_r=m_r, N_r=n_int, T_r=m_r, logM_r=log_m, nu_r=nu, n_r=n_r
    )


def order_estimate(
    p: Params, r_grid, samples: int = 1024, budget: SeriesBudget | None = None
) -> float:
    """Least-squares slope of log log M(r) against log r on the upper half grid.

    Needs at least eight radii spanning two decades or more.
    """
    rs = np.array(sorted(float(r) for r in r_grid))
    if rs.size < 8:
        raise DomainError("order estimation needs at least 8 radii")
    if rs[0] <= 0.0:
        raise DomainError("radii must be positive")
    if rs[-1] < 100.0 * rs[0] * (1.0 - 1e-12):
        raise DomainError("radius grid must span at least two decades")
    if p.degenerate() and p.degree == 0:
        raise DomainError("constant function has no growth order")
    log_m = np.empty(rs.size)
    for i, r in enumerate(rs):
        log_m[i] = float(np.max(_log_abs_grid(p, _circle_points(r, samples), budget)))
    half = rs.size // 2
    x = np.log(rs[half:])
    y = np.log(np.maximum(log_m[half:], 1e-300))
    return float(np.polyfit(x, y, 1)[0])


def log_derivative_proximity(
    p: Params, c: CircleSpec, budget: SeriesBudget | None = None
) -> float:
    """m(r, F'/F): mean log+ of the logarithmic derivative on the circle.

    Exactly zero when alpha = gamma, where F'/F = 1 termwise.
    """
    if p.degenerate() and p.degree == 0:
        return 0.0
    shifted = Params(p.alpha + 1.0, p.gamma + 1.0)
    pref = 0.0 if p.alpha == p.gamma else math.log(abs(p.alpha)) - math.log(abs(p.gamma))
    r = c.r
    for _ in range(_ATTEMPTS):
        zs = _circle_points(r, c.samples)
        log_den = _log_abs_grid(p, zs, budget)
        if not _zero_hits(log_den, c.zero_guard):
            log_num = _log_abs_grid(shifted, zs, budget)
            vals = pref + log_num - log_den
            return float(np.mean(np.maximum(vals, 0.0)))
        r *= _PERTURB
    raise ZeroOnCircle(f"a zero of F sits on every circle tried near r = {c.r}")


def _require_real(p: Params):
    if abs(p.alpha.imag) > 1e-12 or abs(p.gamma.imag) > 1e-12:
        raise DomainError("real-axis zero counting needs real parameters")
    return p.alpha.real, p.gamma.real


def _positive_axis_count(a: float, g: float) -> int:
    if a < 0.0 and g > 0.0:
        return math.ceil(-a)
    if a >= 0.0 and g > 0.0:
        return 0
    if a >= 0.0 and g < 0.0:
        return math.floor(-g / 2.0) - math.floor(-(g + 1.0) / 2.0)
    if a < 0.0 and g < 0.0:
        ca = math.ceil(-a)
        cg = math.ceil(-g)
        if ca >= cg:
            return ca - cg
        if cg > ca > 0:
            return (cg - ca + 1) // 2 - (cg - ca) // 2
    raise AmbiguousCase(f"no case of the sign table covers (alpha, gamma) = ({a}, {g})")


def real_zero_count(alpha: float, gamma: float):
    """(positive-axis, negative-axis) zero counts from the closed-form table.

    The negative-axis count is the positive-axis count of the reflected pair
    (gamma - alpha, gamma).
    """
    a = float(alpha)
    g = float(gamma)
    k = round(g)
    if k <= 0 and abs(g - k) <= 1e-12:
        raise DomainError(f"gamma={g} is (numerically) a nonpositive integer")
    return _positive_axis_count(a, g), _positive_axis_count(g - a, g)


def _bisect(f, lo, hi, flo):
    for _ in range(80):
        if hi - lo <= 1e-10:
            break
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (flo < 0.0) != (fm < 0.0):
            hi = mid
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


def find_real_zeros(
    p: Params, x_max: float | None = None, budget: SeriesBudget | None = None
):
    """Zeros of F on (0, x_max], by derivative-adapted sign scan plus bisection.

    The count is cross-checked against the closed-form table; a mismatch
    (double zero, scan gap, zero beyond x_max) raises Inconclusive rather
    than returning a silently wrong list.
    """
    a, g = _require_real(p)
    if p.degenerate() and p.degree == 0:
        raise DomainError("function is identically 1 and has no zeros")
    expected, _ = real_zero_count(a, g)
    if x_max is None:
        x_max = 40.0
        if p.degenerate():
            x_max = max(x_max, 4.0 * p.degree + 2.0 * abs(g) + 10.0)
    if not (x_max > 0.0):
        raise DomainError("x_max must be positive")

    from .core import derivative, eval as _eval

    def f(x: float) -> float:
        return _eval(p, complex(x), budget).value.real

    def df(x: float) -> float:
        return derivative(p, complex(x), 1, budget).real

    zeros = []
    x, v = 0.0, 1.0
    while x < x_max:
        slope = abs(df(x))
        scale = abs(v) / slope if slope > 1e-12 else 0.25
        dx = min(0.25, max(1e-4, 0.4 * scale))
        xn = min(x + dx, x_max)
        vn = f(xn)
        if vn == 0.0:
            zeros.append(xn)
            x, v = xn + 1e-4, f(xn + 1e-4)
            continue
        if (v < 0.0) != (vn < 0.0):
            zeros.append(_bisect(f, x, xn, v))
        x, v = xn, vn
    if len(zeros) != expected:
        raise Inconclusive(
            f"scan found {len(zeros)} zeros on (0, {x_max}] but the table expects {expected}",
            found=zeros,
            expected=expected,
        )
    return zeros


def zero_report(
    p: Params,
    radii,
    locate: bool = True,
    x_max: float | None = None,
    zero_guard: float = 1e-8,
    budget: SeriesBudget | None = None,
) -> ZeroReport:
    """Assemble circle counts and real-axis counts into one record."""
    rs = tuple(sorted(float(r) for r in radii))
    if not rs or rs[0] <= 0.0:
        raise DomainError("need at least one positive radius")
    pairs = tuple(
        (r, zero_count_argument_principle(p, r, zero_guard, budget)) for r in rs
    )
    a, g = _require_real(p)
    n_plus, n_minus = real_zero_count(a, g)
    located = tuple(find_real_zeros(p, x_max, budget)) if locate else ()
    return ZeroReport(
        n_plus=n_plus,
        n_minus=n_minus,
        located_real_zeros=located,
        argument_counts=pairs,
    )
