"""Distribution parameters and per-evaluation geometry.

The normal inverse Gaussian distribution is parameterized by tail weight
``alpha``, asymmetry ``beta``, location ``mu``, and scale ``delta``.  Every
evaluation method in this package works in polar-style coordinates derived
from the point ``x``: a radius ``omega``, two angles ``nu`` and ``tau``, and
the large parameter ``z = 2*alpha*omega``.  This module validates parameters
and computes those quantities once, so the expansion and quadrature code can
stay purely algebraic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = ["Parameters", "Geometry", "validate", "transition_point", "geometry"]


@dataclass(frozen=True, slots=True)
class Parameters:
    """Validated distribution parameters plus derived constants.

    ``gamma = sqrt(alpha^2 - beta^2)`` and ``tau = arccos(beta/alpha)`` are
    fixed per distribution, so they are computed once here.  Invariants:
    ``gamma^2 + beta^2 = alpha^2``, ``alpha*sin(tau) = gamma``, and
    ``alpha*cos(tau) = beta``, all to machine relative accuracy.
    """

    alpha: float
    beta: float
    mu: float
    delta: float
    gamma: float
    tau: float


@dataclass(frozen=True, slots=True)
class Geometry:
    """Everything the expansions need at a single point x.

    ``s_plus = sin((nu-tau)/2)`` carries the sign of ``x0 - x`` and vanishes
    exactly at the transition point; ``s_minus = sin((nu+tau)/2)`` is always
    positive.  ``w_plus``/``w_minus`` are the matching cosines; ``w_minus``
    goes negative once ``nu + tau`` exceeds pi.  ``sigma_plus_sq = -s_plus^2``
    and ``sigma_minus_sq = -s_minus^2`` are the squared pole locations, and
    ``zeta_plus = s_plus*sqrt(z)``, ``zeta_minus = s_minus*sqrt(z)`` are the
    error-function arguments.
    """

    xi: float
    omega: float
    nu: float
    z: float
    s_plus: float
    s_minus: float
    w_plus: float
    w_minus: float
    sigma_plus_sq: float
    sigma_minus_sq: float
    zeta_plus: float
    zeta_minus: float
    x0: float


def _require_finite(name: str, value: float) -> float:
    try:
        value = float(value)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{name} must be a real number, got {value!r}") from exc
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


def validate(alpha: float, beta: float, mu: float, delta: float) -> Parameters:
    """Check the parameter domain and derive gamma and tau.

    Requires ``alpha > 0``, ``delta > 0``, and ``-alpha < beta < alpha``
    (strict).  Raises DomainError otherwise.
    """
    alpha = _require_finite("alpha", alpha)
    beta = _require_finite("beta", beta)
    mu = _require_finite("mu", mu)
    delta = _require_finite("delta", delta)
    if alpha <= 0.0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    if delta <= 0.0:
        raise DomainError(f"delta must be positive, got {delta}")
    if abs(beta) >= alpha:
        raise DomainError(f"need -alpha < beta < alpha, got beta={beta}, alpha={alpha}")
    # factored form avoids cancellation when |beta| approaches alpha
    gamma = math.sqrt((alpha - beta) * (alpha + beta))
    # atan2 stays accurate where acos(beta/alpha) loses digits, same angle
    tau = math.atan2(gamma, beta)
    return Parameters(alpha, beta, mu, delta, gamma, tau)


def transition_point(p: Parameters) -> float:
    """The x where the integrand's pole meets the saddle point.

    Equals ``mu + beta*delta/gamma``, which is also the distribution mean;
    the CDF there is close to one half.
    """
    return p.mu + p.beta * p.delta / p.gamma


def geometry(p: Parameters, x: float) -> Geometry:
    """Compute all per-evaluation quantities at the point x.

    ``nu`` is taken in (0, pi) via a two-argument arctangent so that one code
    path serves both signs of ``xi = x - mu``.
    """
    x = _require_finite("x", x)
    xi = x - p.mu
    omega = math.hypot(xi, p.delta)
    nu = math.atan2(p.delta, xi)
    z = 2.0 * p.alpha * omega
    half_diff = 0.5 * (nu - p.tau)
    half_sum = 0.5 * (nu + p.tau)
    s_plus = math.sin(half_diff)
    w_plus = math.cos(half_diff)
    s_minus = math.sin(half_sum)
    w_minus = math.cos(half_sum)
    sqrt_z = math.sqrt(z)
    return Geometry(
        xi=xi,
        omega=omega,
        nu=nu,
        z=z,
        s_plus=s_plus,
        s_minus=s_minus,
        w_plus=w_plus,
        w_minus=w_minus,
        sigma_plus_sq=-s_plus * s_plus,
        sigma_minus_sq=-s_minus * s_minus,
        zeta_plus=s_plus * sqrt_z,
        zeta_minus=s_minus * sqrt_z,
        x0=transition_point(p),
    )
