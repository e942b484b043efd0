"""Generalized Laguerre polynomials L_n^mu routed through the confluent evaluator.

L_n^mu(z) = binom(n+mu, n) F(-n; mu+1; z). Coefficients come out exact
(Fraction arithmetic) whenever mu is rational with a small denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .core import Params, eval_polynomial, pochhammer
from .errors import DomainError, NonConvergence

_MAX_EXACT_DEN = 1000
_GEN_TMAX = 0.9


def _nonpositive_int(w: complex, tol: float = 1e-12) -> bool:
    w = complex(w)
    n = round(w.real)
    return n <= 0 and abs(w - n) <= tol


@dataclass(frozen=True)
class LaguerreSpec:
    """Degree and upper parameter of L_n^mu."""

    n: int
    mu: complex = 0.0

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise DomainError("degree n must be a nonnegative integer")
        if _nonpositive_int(complex(self.mu) + 1):
            raise DomainError("mu + 1 must not be a nonpositive integer")

    def params(self) -> Params:
        return Params(-float(self.n), complex(self.mu) + 1)


@dataclass(frozen=True)
class PolyCoeffs:
    """Polynomial coefficients in ascending power order.

    exact=True means every entry is a Fraction and carries no rounding.
    """

    coeffs: tuple
    exact: bool

    def __len__(self) -> int:
        return len(self.coeffs)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def as_floats(self) -> tuple:
        return tuple(complex(c) for c in self.coeffs)

    def __call__(self, z: complex) -> complex:
        acc = 0.0 + 0.0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc


def _exact_mu(mu) -> Fraction | None:
    if isinstance(mu, Fraction):
        return mu if mu.denominator <= _MAX_EXACT_DEN else None
    if isinstance(mu, int):
        return Fraction(mu)
    if isinstance(mu, complex):
        if mu.imag != 0.0:
            return None
        mu = mu.real
    if isinstance(mu, float):
        frac = Fraction(mu).limit_denominator(_MAX_EXACT_DEN)
        return frac if float(frac) == mu else None
    return None


def laguerre_eval(spec: LaguerreSpec, z: complex) -> complex:
    """L_n^mu(z) via the degenerate confluent series."""
    pref = pochhammer(complex(spec.mu) + 1, spec.n) / math.factorial(spec.n)
    return pref * eval_polynomial(spec.params(), complex(z)).value


def laguerre_coeffs(spec: LaguerreSpec) -> PolyCoeffs:
    """Ascending coefficients of L_n^mu; exact rationals when mu allows."""
    n = spec.n
    mu_exact = _exact_mu(spec.mu)
    if mu_exact is not None:
        pref = Fraction(1)
        for k in range(n):
            pref *= (mu_exact + 1 + k)
        pref /= math.factorial(n)
        coeffs = []
        term = pref
        coeffs.append(term)
        for k in range(n):
            # c_{k+1}/c_k = (-n + k) / ((k+1)(mu+1+k))
            term = term * (-(n - k)) / ((k + 1) * (mu_exact + 1 + k))
            coeffs.append(term)
        return PolyCoeffs(tuple(coeffs), True)
    mu = complex(spec.mu)
    pref = pochhammer(mu + 1, n) / math.factorial(n)
    coeffs = [pref]
    term = pref
    for k in range(n):
        term = term * (-(n - k)) / ((k + 1) * (mu + 1 + k))
        coeffs.append(term)
    return PolyCoeffs(tuple(coeffs), False)


def laguerre_diff_identity(n: int, m: int) -> float:
    """Max |coefficient gap| in L_n^m(z) = (-1)^m d^m/dz^m L_{n+m}(z).

    Both sides reduce to exact rationals, so the residual is exactly zero
    unless the identity itself were wrong.
    """
    if n < 0 or m < 0:
        raise DomainError("orders must be nonnegative integers")
    lhs = laguerre_coeffs(LaguerreSpec(n, m)).coeffs
    base = laguerre_coeffs(LaguerreSpec(n + m, 0)).coeffs
    rhs = []
    for k in range(n + 1):
        c = base[k + m]
        for j in range(1, m + 1):
            c *= k + j
        rhs.append(c * (-1) ** m)
    return float(max(abs(a - b) for a, b in zip(lhs, rhs)))


def laguerre_sequence(mu: complex, z: complex, kmax: int) -> np.ndarray:
    """[L_0^mu(z), ..., L_kmax^mu(z)] by the three-term recurrence."""
    if kmax < 0:
        raise DomainError("kmax must be nonnegative")
    mu = complex(mu)
    z = complex(z)
    out = np.empty(kmax + 1, dtype=complex)
    out[0] = 1.0
    if kmax >= 1:
        out[1] = 1.0 + mu - z
    for k in range(1, kmax):
        out[k + 1] = ((2 * k + mu + 1 - z) * out[k] - (k + mu) * out[k - 1]) / (k + 1)
    return out


def generating_residual(mu: complex, z: complex, t: complex, n_terms: int | None = None) -> float:
    """Partial sum of sum_k L_k^mu(z) t^k against its closed form.

    Relative residual; |t| <= 0.9 keeps the geometric tail under control.
    """
    mu = complex(mu)
    z = complex(z)
    t = complex(t)
    if _nonpositive_int(mu + 1):
        raise DomainError("mu + 1 must not be a nonpositive integer")
    if abs(t) > _GEN_TMAX:
        raise DomainError(f"|t| must be <= {_GEN_TMAX} for a controlled tail")
    one_minus = 1.0 - t
    closed = np.exp(-z * t / one_minus) * np.exp(-(mu + 1) * np.log(one_minus))
    scale = max(abs(closed), 1e-300)

    if n_terms is not None:
        kmax = int(n_terms)
        if kmax < 1:
            raise DomainError("n_terms must be positive")
        seq = laguerre_sequence(mu, z, kmax - 1)
        partial = complex(np.polynomial.polynomial.polyval(t, seq))
        return abs(partial - closed) / scale

    # grow the partial sum until the observed term ratio certifies the tail
    partial = 0.0 + 0.0j
    prev_term = None
    lk = laguerre_sequence(mu, z, 1)
    l_prev, l_cur = lk[0], lk[1]
    tk = 1.0 + 0.0j
    streak = 0
    for k in range(0, 20000):
        if k == 0:
            lval = l_prev
        elif k == 1:
            lval = l_cur
        else:
            l_next = ((2 * (k - 1) + mu + 1 - z) * l_cur - (k - 1 + mu) * l_prev) / k
            l_prev, l_cur = l_cur, l_next
            lval = l_cur
        term = lval * tk
        partial += term
        tk *= t
        if prev_term is not None and abs(prev_term) > 0:
            ratio = abs(term) / abs(prev_term)
            if ratio < 0.98 and abs(term) * ratio / (1.0 - ratio) < 1e-13 * scale:
                streak += 1
                if streak >= 3:
                    return abs(partial - closed) / scale
            else:
                streak = 0
        prev_term = term
    raise NonConvergence("generating-function partial sum failed to settle")


def laguerre_quadrature(mu: float, nodes: int):
    """Gauss nodes and weights for the weight x^mu e^-x on (0, inf).

    Symmetric tridiagonal eigenproblem: diagonal 2k+mu+1, off-diagonal
    sqrt(k(k+mu)); weights are Gamma(mu+1) times the squared first
    eigenvector components.
    """
    mu = float(mu)
    if mu <= -1.0:
        raise DomainError("weight exponent must satisfy mu > -1")
    if nodes < 1:
        raise DomainError("need at least one node")
    k = np.arange(nodes, dtype=float)
    diag = 2.0 * k + mu + 1.0
    off = np.sqrt((k[1:]) * (k[1:] + mu))
    vals, vecs = eigh_tridiagonal(diag, off)
    weights = math.gamma(mu + 1.0) * vecs[0, :] ** 2
    return vals, weights


def orthogonality_integral(n: int, n2: int, mu: float, quad_nodes: int = 0) -> float:
    """integral_0^inf x^mu e^-x L_n^mu(x) L_n2^mu(x) dx by Gauss quadrature.

    Exact up to rounding once quad_nodes > (n + n2) / 2; the default picks
    a safe count automatically.
    """
    if n < 0 or n2 < 0:
        raise DomainError("degrees must be nonnegative")
    if quad_nodes <= 0:
        quad_nodes = (n + n2) // 2 + 8
    x, w = laguerre_quadrature(mu, quad_nodes)
    kmax = max(n, n2)
    table = np.empty((kmax + 1, x.size), dtype=float)
    table[0] = 1.0
    if kmax >= 1:
        table[1] = 1.0 + mu - x
    for k in range(1, kmax):
        table[k + 1] = ((2 * k + mu + 1 - x) * table[k] - (k + mu) * table[k - 1]) / (k + 1)
    return float(np.sum(w * table[n] * table[n2]))
