"""Normal inverse Gaussian CDF by uniform asymptotic expansions.

Evaluates F(x; alpha, beta, mu, delta) and its complement G = 1 - F with an
erfc-based uniform asymptotic expansion (plus a Laplace variant for the
minus part), backed by two independent quadrature oracles for validation.
"""

from .coeffs import CoeffKind, CoeffTable, d_closed_form, d_coefficients, u_coefficients
from .errors import (
    ConvergenceError,
    DomainError,
    NearTransitionError,
    NigError,
    UnreliableRegionError,
)
from .expansion import (
    DEFAULT_KMAX,
    EvalResult,
    FMinusMode,
    Method,
    W_MINUS_MIN,
    Z_MIN,
    cdf,
    cdf_asym,
    f_minus_asym,
    f_plus_asym,
    g_plus_asym,
    sf_asym,
)
from .oracle import (
    DEFAULT_TOL,
    QuadratureSpec,
    QuadRule,
    cdf_quad_direct,
    cdf_quad_split,
    reflect,
    remainder_g,
)
from .params import Geometry, Parameters, geometry, transition_point, validate
from .special import ERFCX_NEG_LIMIT, erfc, erfcx

__version__ = "0.1.0"

__all__ = [
    "CoeffKind",
    "CoeffTable",
    "ConvergenceError",
    "DEFAULT_KMAX",
    "DEFAULT_TOL",
    "DomainError",
    "ERFCX_NEG_LIMIT",
    "EvalResult",
    "FMinusMode",
    "Geometry",
    "Method",
    "NearTransitionError",
    "NigError",
    "Parameters",
    "QuadRule",
    "QuadratureSpec",
    "UnreliableRegionError",
    "W_MINUS_MIN",
    "Z_MIN",
    "cdf",
    "cdf_asym",
    "cdf_quad_direct",
    "cdf_quad_split",
    "d_closed_form",
    "d_coefficients",
    "erfc",
    "erfcx",
    "f_minus_asym",
    "f_plus_asym",
    "g_plus_asym",
    "geometry",
    "reflect",
    "remainder_g",
    "sf_asym",
    "transition_point",
    "u_coefficients",
    "validate",
]
