"""Classical special functions routed through the confluent evaluator.

Each reduction is a thin exact identity; the numerical heavy lifting stays
in one place so these wrappers inherit its accuracy and error control.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .core import Params, SeriesBudget, eval as _eval
from .errors import DomainError

_SQRT_PI = math.sqrt(math.pi)
# 1 - erf(x) < 1.6e-12 past this point, so the complementary branch switches
_ERF_TAIL = 5.0
_PARAMS_ERF = Params(1.0, 1.5)


def erf_via_kummer(x: float, budget: SeriesBudget | None = None) -> float:
    """erf(x) = 2x/sqrt(pi) e^(-x^2) F(1; 3/2; x^2)."""
    x = float(x)
    w = x * x
    if w > 700.0:
        # the scaled product underflows/overflows pairwise; erf is 1 to rounding
        return math.copysign(1.0, x)
    val = _eval(_PARAMS_ERF, complex(w), budget).value.real
    return 2.0 * x / _SQRT_PI * math.exp(-w) * val


def _erfc(u: float, budget: SeriesBudget | None = None) -> float:
    """Complementary error function built from the same reduction.

    For u >= _ERF_TAIL the direct complement is already below 1.6e-12, so
    absolute accuracy survives; for u <= -_ERF_TAIL the reflection
    erfc(u) = 2 - erfc(-u) keeps full relative accuracy near 2.
    """
    if u >= 0.0:
        return 1.0 - erf_via_kummer(u, budget)
    return 2.0 - (1.0 - erf_via_kummer(-u, budget))


def incomplete_gamma(n: float, x: float, budget: SeriesBudget | None = None) -> float:
    """Lower incomplete gamma: integral_0^x t^(n-1) e^-t dt = x^n e^-x F(1; n+1; x) / n."""
    n = float(n)
    x = float(x)
    if not (n > 0.0):
        raise DomainError("exponent n must be positive")
    if x < 0.0:
        raise DomainError("upper limit x must be nonnegative")
    if x == 0.0:
        return 0.0
    if x > 700.0:
        # remaining tail is below e-300 of the total mass
        return math.gamma(n)
    pref = math.exp(n * math.log(x) - x) / n
    return pref * _eval(Params(1.0, n + 1.0), complex(x), budget).value.real


def normal_cdf(m: float, sigma: float, x: float, budget: SeriesBudget | None = None) -> float:
    """Gaussian distribution function via the complementary error function."""
    sigma = float(sigma)
    if not (sigma > 0.0):
        raise DomainError("sigma must be positive")
    u = (float(m) - float(x)) / (sigma * math.sqrt(2.0))
    val = 0.5 * _erfc(u, budget)
    return min(max(val, 0.0), 1.0)


@dataclass(frozen=True)
class WhittakerSpec:
    """Indices and argument of the Whittaker function M_(k,m)(z)."""

    k: complex
    m: complex
    z: complex

    def __post_init__(self):
        object.__setattr__(self, "k", complex(self.k))
        object.__setattr__(self, "m", complex(self.m))
        object.__setattr__(self, "z", complex(self.z))


def whittaker_M(spec: WhittakerSpec, budget: SeriesBudget | None = None) -> complex:
    """M_(k,m)(z) = e^(-z/2) z^(1/2+m) F(1/2+m-k; 1+2m; z), principal branch.

    The power z^(1/2+m) is cut along the negative real axis, so arguments
    there (and z = 0) are rejected instead of silently picking a side.
    """
    z = spec.z
    if z == 0 or (z.imag == 0.0 and z.real < 0.0):
        raise DomainError("z must avoid the branch cut (-inf, 0]")
    p = Params(0.5 + spec.m - spec.k, 1.0 + 2.0 * spec.m)
    power = cmath.exp((0.5 + spec.m) * cmath.log(z))
    return cmath.exp(-z / 2.0) * power * _eval(p, z, budget).value
