"""Exact verification of binomial Fibonacci/Lucas sum identities mod 5.

The package pairs every closed-form identity family with exact arithmetic in
the golden ring, verifies them over (n, t) grids with zero tolerance, and
covers the generic-angle trigonometric lemmas and Bernoulli-polynomial series
numerically at high precision.
"""

from .bernoulli import (
    SeriesTarget,
    bernoulli_number,
    bernoulli_poly,
    difference_check,
    raabe_check,
    series_verify,
    sin_ratio_series_partial,
)
from .catalog import (
    REGISTRY,
    IdentityFamily,
    ParameterError,
    VerificationReport,
    eval_lhs,
    eval_rhs,
    get_family,
    list_families,
    verify_family,
)
from .chebyshev import cheb_t, cheb_t_explicit, cheb_u, cheb_u_explicit
from .golden import ALPHA, BETA, GoldenElement, Root5, decompose, power_alpha, power_beta
from .quintic import (
    cheb_t_at_minus_alpha_half,
    cheb_t_at_minus_beta_half,
    cos_2npi5,
    cos_npi5,
    sin_odd_ratio,
    sin_ratio,
    sin_ratio3,
)
from .sequences import GibonacciParams, binom, fib, gib, lucas

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "BETA",
    "GibonacciParams",
    "GoldenElement",
    "IdentityFamily",
    "ParameterError",
    "REGISTRY",
    "Root5",
    "SeriesTarget",
    "VerificationReport",
    "bernoulli_number",
    "bernoulli_poly",
    "binom",
    "cheb_t",
    "cheb_t_at_minus_alpha_half",
    "cheb_t_at_minus_beta_half",
    "cheb_t_explicit",
    "cheb_u",
    "cheb_u_explicit",
    "cos_2npi5",
    "cos_npi5",
    "decompose",
    "difference_check",
    "eval_lhs",
    "eval_rhs",
    "fib",
    "get_family",
    "gib",
    "list_families",
    "lucas",
    "power_alpha",
    "power_beta",
    "raabe_check",
    "series_verify",
    "sin_odd_ratio",
    "sin_ratio",
    "sin_ratio3",
    "sin_ratio_series_partial",
    "verify_family",
]
