"""Reference values by numerical quadrature, two independent routes.

The primary oracle splits the CDF exactly into two erfc terms plus smooth
Gaussian-weighted remainder integrals; its integrand has no poles on the
real line, so it is valid for every point, including the transition point
and negative ``xi``.  The secondary oracle integrates the steepest-descent
representation directly with a trapezoid rule; it degenerates when the
poles approach the saddle, so it refuses a band around the transition and
reaches ``nu < tau`` through the reflection identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import ConvergenceError, DomainError, NearTransitionError
from .params import Geometry, Parameters, geometry, validate
from .special import erfc, erfcx

__all__ = [
    "QuadRule",
    "QuadratureSpec",
    "remainder_g",
    "cdf_quad_split",
    "cdf_quad_direct",
    "reflect",
    "DEFAULT_TOL",
]

DEFAULT_TOL = 1e-12
_MIN_TOL = 1e-13
_NEAR_TRANSITION_GAP = 0.02
# below this |w_minus| the whole minus-part contribution is O(1e-13) and the
# two halves of the split cancel; treat it as zero instead of integrating
_W_MINUS_NEGLIGIBLE = 1e-13


class QuadRule(Enum):
    TRAPEZOID_DECAY = "trapezoid_decay"
    GAUSS_COMPOSITE = "gauss_composite"


@dataclass(frozen=True, slots=True)
class QuadratureSpec:
    """Concrete quadrature configuration for one integral.

    ``step_or_nodes`` is the initial trapezoid step (TRAPEZOID_DECAY) or the
    initial panel count (GAUSS_COMPOSITE); ``truncation`` is the half-width
    S chosen so the discarded tail sits below tol/10; refinement stops once
    one more level changes the result by less than ``tol``.
    """

    rule: QuadRule
    step_or_nodes: float | int
    truncation: float
    tol: float


def _check_tol(tol: float) -> float:
    try:
        tol = float(tol)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"tol must be a real number, got {tol!r}") from exc
    if not tol >= _MIN_TOL:
        raise DomainError(f"tol must be at least {_MIN_TOL:g}, got {tol!r}")
    return tol


def remainder_g(sigma: float, w: float) -> float:
    """The pole-free remainder factor of the split identity.

    Equals ``-1/(sqrt(1+sigma^2) * w * (sqrt(1+sigma^2) + w))`` for
    ``w in (0, 1]``: smooth, negative, decaying like 1/sigma^2.
    """
    if not isinstance(sigma, (int, float)) or not math.isfinite(sigma):
        raise DomainError(f"sigma must be finite, got {sigma!r}")
    if not (0.0 < w <= 1.0):
        raise DomainError(f"w must lie in (0, 1], got {w!r}")
    q = math.sqrt(1.0 + sigma * sigma)
    return -1.0 / (q * w * (q + w))


def _legendre_16() -> tuple[tuple[float, ...], tuple[float, ...]]:
    """Nodes and weights of 16-point Gauss-Legendre on [-1, 1]."""
    n = 16
    half_nodes = []
    half_weights = []
    for i in range(n // 2):
        x = math.cos(math.pi * (i + 0.75) / (n + 0.5))
        dp = 0.0
        for _ in range(100):
            p0, p1 = 1.0, x
            for k in range(2, n + 1):
                p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
            dp = n * (x * p1 - p0) / (x * x - 1.0)
            dx = p1 / dp
            x -= dx
            if abs(dx) < 1e-15:
                break
        half_nodes.append(x)
        half_weights.append(2.0 / ((1.0 - x * x) * dp * dp))
    nodes = tuple(half_nodes + [-v for v in half_nodes])
    weights = tuple(half_weights + half_weights)
    return nodes, weights


_GL_NODES, _GL_WEIGHTS = _legendre_16()


def _make_spec(z: float, tol: float, rule: QuadRule) -> QuadratureSpec:
    # e^{-z S^2} = e^{-64}, far below any permitted tolerance
    trunc = 8.0 / math.sqrt(z)
    if rule is QuadRule.TRAPEZOID_DECAY:
        return QuadratureSpec(rule, min(0.5, trunc / 8.0), trunc, tol)
    if rule is QuadRule.GAUSS_COMPOSITE:
        return QuadratureSpec(rule, 2, trunc, tol)
    raise DomainError(f"unknown quadrature rule {rule!r}")


def _kernel(z: float, w: float, spec: QuadratureSpec, max_levels: int = 12) -> float:
    """integral of e^{-z sigma^2} / (q (q + w)) over the real line, q = sqrt(1+sigma^2).

    The integrand is even, analytic in a strip of half-width 1 around the
    real axis, and bounded by 1, so both rules converge geometrically; each
    refinement level is compared with the previous until the change drops
    below ``spec.tol`` (absolute).
    """

    def f(sig: float) -> float:
        q = math.sqrt(1.0 + sig * sig)
        return math.exp(-z * sig * sig) / (q * (q + w))

    S = spec.truncation
    if spec.rule is QuadRule.TRAPEZOID_DECAY:

        def level(h: float) -> float:
            total = 0.5 * f(0.0)
            k = 1
            while True:
                sig = k * h
                if sig > S:
                    break
                total += f(sig)
                k += 1
            return 2.0 * h * total

        h = float(spec.step_or_nodes)
        prev = level(h)
        for _ in range(max_levels):
            h *= 0.5
            cur = level(h)
            if abs(cur - prev) <= spec.tol:
                return cur
            prev = cur
        raise ConvergenceError(
            f"trapezoid kernel did not stabilize to {spec.tol:g} within {max_levels} halvings"
        )

    def composite(panels: int) -> float:
        width = S / panels
        total = 0.0
        for i in range(panels):
            center = (i + 0.5) * width
            for t, wt in zip(_GL_NODES, _GL_WEIGHTS):
                total += wt * f(center + 0.5 * width * t)
        return width * total  # one factor 1/2 from the jacobian, times 2 for evenness

    panels = int(spec.step_or_nodes)
    prev = composite(panels)
    for _ in range(max_levels):
        panels *= 2
        cur = composite(panels)
        if abs(cur - prev) <= spec.tol:
            return cur
        prev = cur
    raise ConvergenceError(
        f"composite kernel did not stabilize to {spec.tol:g} within {max_levels} doublings"
    )


def cdf_quad_split(
    p: Parameters,
    x: float,
    tol: float = DEFAULT_TOL,
    rule: QuadRule = QuadRule.TRAPEZOID_DECAY,
) -> float:
    """High-accuracy CDF by the exact erfc split plus smooth quadrature.

    F = 1/2 erfc(zeta_plus) + E (-2 s_plus)/(4 pi) K(z, w_plus)
      + sgn [ 1/2 E erfcx(zeta_minus) + E (-2 s_minus)/(4 pi) K(z, |w_minus|) ]

    with E = e^{z sigma_plus^2} <= 1, sgn = sign(w_minus), and K the kernel
    integral above.  The erfcx form of the minus-part erfc term equals
    (1/2) e^{2 gamma delta} erfc(zeta_minus) with both factors kept at or
    below one, so nothing overflows.  Valid for every x and every z > 0.
    """
    tol = _check_tol(tol)
    g = geometry(p, x)
    damp = math.exp(g.z * g.sigma_plus_sq)
    value = 0.5 * erfc(g.zeta_plus)
    coef_plus = -2.0 * g.s_plus * damp / (4.0 * math.pi)
    if coef_plus != 0.0:
        spec = _make_spec(g.z, min(0.1, tol / (4.0 * abs(coef_plus))), rule)
        value += coef_plus * _kernel(g.z, g.w_plus, spec)
    if abs(g.w_minus) >= _W_MINUS_NEGLIGIBLE:
        sgn = 1.0 if g.w_minus > 0.0 else -1.0
        contrib = sgn * 0.5 * damp * erfcx(g.zeta_minus)
        coef_minus = -2.0 * g.s_minus * sgn * damp / (4.0 * math.pi)
        if coef_minus != 0.0:
            spec = _make_spec(g.z, min(0.1, tol / (4.0 * abs(coef_minus))), rule)
            contrib += coef_minus * _kernel(g.z, abs(g.w_minus), spec)
        value += contrib
    return min(1.0, max(0.0, value))


def cdf_quad_direct(p: Parameters, x: float, tol: float = DEFAULT_TOL) -> float:
    """Independent CDF oracle: trapezoid on the steepest-descent integral.

    Only defined away from the transition: |nu - tau| <= 0.02 raises
    NearTransitionError because the integrand's poles pinch the contour
    there.  Points with nu < tau are evaluated through the reflection
    identity, which swaps them to nu > tau.
    """
    tol = _check_tol(tol)
    g = geometry(p, x)
    gap = g.nu - p.tau
    if abs(gap) <= _NEAR_TRANSITION_GAP:
        raise NearTransitionError(
            f"|nu - tau| = {abs(gap):.4g} is within {_NEAR_TRANSITION_GAP}; "
            "the split oracle handles the transition region"
        )
    if gap < 0.0:
        rp, rx = reflect(p, x)
        return 1.0 - cdf_quad_direct(rp, rx, tol)
    return _direct_integral(p, g, tol)


def _direct_integral(p: Parameters, g: Geometry, tol: float) -> float:
    aw = p.alpha * g.omega
    big_a = p.delta * p.gamma + p.beta * g.xi  # equals aw + z sigma_plus_sq <= aw
    sp2 = g.s_plus * g.s_plus
    sm2 = g.s_minus * g.s_minus
    sin_nu = p.delta / g.omega
    cos_nu = g.xi / g.omega
    cos_tau = p.beta / p.alpha

    def f(s: float) -> float:
        ch = math.cosh(s)
        sh2 = math.sinh(0.5 * s) ** 2
        # factored denominator: equal to (ch - cos tau cos nu)^2 - sin^2 tau sin^2 nu
        # but positive term by term, no cancellation
        den = 4.0 * (sh2 + sp2) * (sh2 + sm2)
        return math.exp(big_a - aw * ch) * sin_nu * (cos_tau * ch - cos_nu) / den

    reach = math.log(10.0 / tol) + 10.0
    S = math.acosh(1.0 + reach / aw)
    spec = QuadratureSpec(
        QuadRule.TRAPEZOID_DECAY, min(0.25, 0.5 / math.sqrt(aw)), S, tol
    )

    def level(h: float) -> float:
        total = 0.5 * f(0.0)
        k = 1
        while True:
            s = k * h
            if s > S:
                break
            total += f(s)
            k += 1
        return h * total / math.pi  # 2 for evenness, over 2 pi

    h = float(spec.step_or_nodes)
    prev = level(h)
    for _ in range(14):
        h *= 0.5
        cur = level(h)
        if abs(cur - prev) <= tol:
            return min(1.0, max(0.0, cur))
        prev = cur
    raise ConvergenceError(
        f"direct-integral trapezoid did not stabilize to {tol:g} within 14 halvings"
    )


def reflect(p: Parameters, x: float) -> tuple[Parameters, float]:
    """Mirror the evaluation: F(x; p) = 1 - F(-x; reflected p).

    Flips the signs of beta and mu, negates x, and is its own inverse.
    """
    return validate(p.alpha, -p.beta, -p.mu, p.delta), -x
