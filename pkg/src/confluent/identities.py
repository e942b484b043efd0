"""Identity web around F(alpha; gamma; z): reflection, contiguous shifts, derivatives.

Each check returns a residual normalized by the largest participating term,
so one tolerance is meaningful across wildly different magnitudes.
"""

from __future__ import annotations

import cmath
import math
from enum import Enum

from .core import Params, SeriesBudget, derivative, eval as _eval, kummer_reflect
from .errors import DomainError, InvalidShift


class ContiguousRelation(Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R4 = "R4"
    R5 = "R5"
    R6 = "R6"


# Each relation: ((d_alpha, d_gamma), coefficient(alpha, gamma, z)) triples whose
# weighted sum of contiguous values vanishes identically.
_RELATIONS = {
    ContiguousRelation.R1: (
        ((-1, 0), lambda a, g, z: g - a),
        ((0, 0), lambda a, g, z: 2 * a - g + z),
        ((1, 0), lambda a, g, z: -a),
    ),
    ContiguousRelation.R2: (
        ((0, -1), lambda a, g, z: g * (g - 1)),
        ((0, 0), lambda a, g, z: -g * (g - 1 + z)),
        ((0, 1), lambda a, g, z: z * (g - a)),
    ),
    ContiguousRelation.R3: (
        ((0, 0), lambda a, g, z: a - g + 1),
        ((1, 0), lambda a, g, z: -a),
        ((0, -1), lambda a, g, z: g - 1),
    ),
    ContiguousRelation.R4: (
        ((0, 0), lambda a, g, z: g),
        ((-1, 0), lambda a, g, z: -g),
        ((0, 1), lambda a, g, z: -z),
    ),
    ContiguousRelation.R5: (
        ((0, 0), lambda a, g, z: g * (a + z)),
        ((0, 1), lambda a, g, z: z * (a - g)),
        ((1, 0), lambda a, g, z: -a * g),
    ),
    ContiguousRelation.R6: (
        ((0, 0), lambda a, g, z: a - 1 + z),
        ((-1, 0), lambda a, g, z: g - a),
        ((0, -1), lambda a, g, z: 1 - g),
    ),
}


def relation_terms(rel: ContiguousRelation, p: Params, z: complex):
    """Parameter shifts and coefficient values for one relation at (p, z)."""
    out = []
    for (da, dg), coeff in _RELATIONS[rel]:
        out.append(((da, dg), coeff(p.alpha, p.gamma, complex(z))))
    return out


def _shifted(p: Params, da: int, dg: int) -> Params:
    try:
        return Params(p.alpha + da, p.gamma + dg)
    except DomainError as exc:
        raise InvalidShift(
            f"shift gamma -> gamma{dg:+d} lands on a nonpositive integer ({p.gamma + dg})"
        ) from exc


def contiguous_residual(
    rel: ContiguousRelation, p: Params, z: complex, budget: SeriesBudget | None = None
) -> float:
    """|weighted sum| / max |term| for one of the six contiguous relations."""
    z = complex(z)
    total = 0.0 + 0.0j
    largest = 0.0
    for (da, dg), coeff in _RELATIONS[rel]:
        value = _eval(_shifted(p, da, dg), z, budget).value
        term = coeff(p.alpha, p.gamma, z) * value
        total += term
        largest = max(largest, abs(term))
    if largest == 0.0:
        return 0.0
    return abs(total) / largest


def kummer_residual(p: Params, z: complex, budget: SeriesBudget | None = None) -> float:
    """Residual of F(alpha; gamma; z) - e^z F(gamma-alpha; gamma; -z).

    Normalized by 1 + max(|side|): relative for large values, absolute near
    zeros of F, where a pure ratio would be unstable.
    """
    z = complex(z)
    lhs = _eval(p, z, budget).value
    rhs = cmath.exp(z) * _eval(kummer_reflect(p), -z, budget).value
    return abs(lhs - rhs) / (1.0 + max(abs(lhs), abs(rhs)))


def _fd_step(n: int) -> float:
    # balances stencil truncation O(h^2) against rounding O(eps / h^n)
    if n == 1:
        return 1e-5
    return (1e-16) ** (1.0 / (n + 2))


def differentiation_residual(
    p: Params,
    z: complex,
    n: int,
    budget: SeriesBudget | None = None,
    h: float | None = None,
) -> float:
    """Shifted-parameter derivative against an order-n central difference."""
    if not (1 <= n <= 6):
        raise DomainError("finite-difference check supports orders 1..6")
    z = complex(z)
    step = _fd_step(n) if h is None else float(h)
    if step <= 0:
        raise DomainError("step must be positive")
    exact = derivative(p, z, n, budget)
    acc = 0.0 + 0.0j
    for k in range(n + 1):
        weight = (-1) ** k * math.comb(n, k)
        acc += weight * _eval(p, z + (n / 2 - k) * step, budget).value
    fd = acc / step**n
    return abs(exact - fd) / (1.0 + max(abs(exact), abs(fd)))
