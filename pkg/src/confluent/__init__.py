"""Confluent hypergeometric evaluation with growth and zero-distribution analysis."""

from .applications import (
    WhittakerSpec,
    erf_via_kummer,
    incomplete_gamma,
    normal_cdf,
    whittaker_M,
)
from .core import (
    EvalResult,
    Params,
    Regime,
    SeriesBudget,
    R_SWITCH,
    derivative,
    eval,
    eval_asymptotic,
    eval_integral,
    eval_kummer,
    eval_polynomial,
    eval_series,
    kummer_reflect,
    pochhammer,
)
from .errors import (
    AmbiguousCase,
    ConfluentError,
    DomainError,
    Inconclusive,
    InvalidShift,
    NonConvergence,
    NotDegenerate,
    ZeroOnCircle,
)
from .identities import (
    ContiguousRelation,
    contiguous_residual,
    differentiation_residual,
    kummer_residual,
    relation_terms,
)
from .laguerre import (
    LaguerreSpec,
    PolyCoeffs,
    generating_residual,
    laguerre_coeffs,
    laguerre_diff_identity,
    laguerre_eval,
    laguerre_quadrature,
    laguerre_sequence,
    orthogonality_integral,
)
from .valuedist import (
    CharacteristicRow,
    CircleSpec,
    ZeroReport,
    characteristic_T,
    find_real_zeros,
    log_derivative_proximity,
    max_term_central_index,
    order_estimate,
    proximity_m,
    real_zero_count,
    zero_count_argument_principle,
    zero_report,
)

__all__ = [
    "AmbiguousCase",
    "CharacteristicRow",
    "CircleSpec",
    "ConfluentError",
    "ContiguousRelation",
    "DomainError",
    "EvalResult",
    "Inconclusive",
    "InvalidShift",
    "LaguerreSpec",
    "NonConvergence",
    "NotDegenerate",
    "Params",
    "PolyCoeffs",
    "Regime",
    "R_SWITCH",
    "SeriesBudget",
    "WhittakerSpec",
    "ZeroOnCircle",
    "ZeroReport",
    "characteristic_T",
    "contiguous_residual",
    "derivative",
    "differentiation_residual",
    "erf_via_kummer",
    "eval",
    "eval_asymptotic",
    "eval_integral",
    "eval_kummer",
    "eval_polynomial",
    "eval_series",
    "find_real_zeros",
    "generating_residual",
    "incomplete_gamma",
    "kummer_reflect",
    "kummer_residual",
    "laguerre_coeffs",
    "laguerre_diff_identity",
    "laguerre_eval",
    "laguerre_quadrature",
    "laguerre_sequence",
    "log_derivative_proximity",
    "max_term_central_index",
    "normal_cdf",
    "order_estimate",
    "orthogonality_integral",
    "pochhammer",
    "proximity_m",
    "real_zero_count",
    "relation_terms",
    "whittaker_M",
    "zero_count_argument_principle",
    "zero_report",
]

__version__ = "0.1.0"
