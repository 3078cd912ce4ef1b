"""Asymptotic evaluation of the CDF and its complement.

The CDF splits as F = F_plus + F_minus and the complement as
G = G_plus - F_minus.  F_plus and G_plus always use the uniform expansion,
whose leading term is an erfc of ``zeta_plus`` and which stays smooth
through the transition point.  F_minus has two interchangeable expansions:
a uniform one of the same shape (leading term built from erfcx so nothing
overflows) and a plain Laplace series; AUTO picks the uniform branch when
``w_minus >= 0.05`` and the Laplace branch otherwise, where the uniform
coefficients become ill-conditioned but the Laplace pole parameter sits
safely near -1.

``cdf`` adds the evaluation policy: quadrature fallback for small z or
small ``w_minus``, and complement-first evaluation right of the transition
so the smaller of F and G is always the one computed directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .coeffs import d_coefficients, u_coefficients
from .errors import DomainError, UnreliableRegionError
from .params import Geometry, Parameters, geometry
from .special import erfc, erfcx
from . import oracle

__all__ = [
    "Method",
    "FMinusMode",
    "EvalResult",
    "Z_MIN",
    "W_MINUS_MIN",
    "DEFAULT_KMAX",
    "f_plus_asym",
    "f_minus_asym",
    "g_plus_asym",
    "cdf_asym",
    "sf_asym",
    "cdf",
]

Z_MIN = 30.0
W_MINUS_MIN = 0.05
DEFAULT_KMAX = 5


class Method(Enum):
    UNIFORM_ASYM = "uniform_asym"
    LAPLACE_ASYM = "laplace_asym"
    QUAD_SPLIT = "quad_split"
    QUAD_DIRECT = "quad_direct"


class FMinusMode(Enum):
    UNIFORM = "uniform"
    LAPLACE = "laplace"
    AUTO = "auto"


@dataclass(frozen=True, slots=True)
class EvalResult:
    """One evaluation: probability, route taken, and an error heuristic.

    ``error_estimate`` sums the magnitudes of the last retained series terms
    (plus any clamping distance); it is a heuristic, not a bound.
    ``complemented`` records that the value was produced as 1 minus the
    directly computed complement.
    """

    value: float
    method: Method
    kmax_used: int
    error_estimate: float
    complemented: bool = False


def _uniform_series(g: Geometry, s: float, w: float, kmax: int) -> tuple[float, float]:
    """Signed series correction of the uniform expansion and |last term|.

    The prefactor is e^{z sigma_plus^2} tan((nu -+ tau)/4) / (2 sqrt(pi z));
    the tangent is evaluated as s/(1+w) (half-angle identity), which keeps
    the sign of s and stays smooth where s crosses zero.
    """
    damp = math.exp(g.z * g.sigma_plus_sq)
    pref = damp * (s / (1.0 + w)) / (2.0 * math.sqrt(math.pi * g.z))
    total = 0.0
    last = 0.0
    zk = 1.0
    for dk in d_coefficients(w, kmax).values:
        last = dk / zk
        total += last
        zk *= g.z
    return pref * total, abs(pref * last)


def _f_plus(g: Geometry, kmax: int) -> tuple[float, float]:
    series, last = _uniform_series(g, g.s_plus, g.w_plus, kmax)
    return 0.5 * erfc(g.zeta_plus) - series, last


def _g_plus(g: Geometry, kmax: int) -> tuple[float, float]:
    series, last = _uniform_series(g, g.s_plus, g.w_plus, kmax)
    return 0.5 * erfc(-g.zeta_plus) + series, last


def _f_minus_uniform(g: Geometry, kmax: int) -> tuple[float, float]:
    if g.w_minus < W_MINUS_MIN:
        raise UnreliableRegionError(
            f"uniform minus-part coefficients are unreliable for w_minus = "
            f"{g.w_minus:.4g} < {W_MINUS_MIN}; use the Laplace mode or quadrature"
        )
    damp = math.exp(g.z * g.sigma_plus_sq)
    # equal to (1/2) e^{2 gamma delta} erfc(zeta_minus), written so both
    # factors stay at or below one
    erfc_part = 0.5 * damp * erfcx(g.zeta_minus)
    series, last = _uniform_series(g, g.s_minus, g.w_minus, kmax)
    return erfc_part - series, last


def _f_minus_laplace(g: Geometry, kmax: int) -> tuple[float, float]:
    damp = math.exp(g.z * g.sigma_plus_sq)
    # sin(nu + tau) = 2 s_minus w_minus exactly
    pref = damp * (2.0 * g.s_minus * g.w_minus) / (4.0 * math.pi) * math.sqrt(math.pi / g.z)
    total = 0.0
    last = 0.0
    zk = 1.0
    poch = 1.0
    for k, uk in enumerate(u_coefficients(g.sigma_minus_sq, kmax).values):
        if k > 0:
            poch *= k - 0.5
        last = uk * poch / zk
        total += last
        zk *= g.z
    return pref * total, abs(pref * last)


def _f_minus(g: Geometry, kmax: int, mode: FMinusMode) -> tuple[float, float, FMinusMode]:
    if mode is FMinusMode.AUTO:
        branch = FMinusMode.UNIFORM if g.w_minus >= W_MINUS_MIN else FMinusMode.LAPLACE
    elif isinstance(mode, FMinusMode):
        branch = mode
    else:
        raise DomainError(f"unknown f_minus mode {mode!r}")
    if branch is FMinusMode.UNIFORM:
        value, last = _f_minus_uniform(g, kmax)
    else:
        value, last = _f_minus_laplace(g, kmax)
    return value, last, branch


def f_plus_asym(g: Geometry, kmax: int = DEFAULT_KMAX) -> float:
    """Uniform expansion of the plus part; leading term erfc(zeta_plus)/2."""
    return _f_plus(g, kmax)[0]


def g_plus_asym(g: Geometry, kmax: int = DEFAULT_KMAX) -> float:
    """Uniform expansion of the complement's plus part.

    Satisfies f_plus_asym + g_plus_asym = 1 up to rounding: the erfc halves
    are complementary and the series corrections cancel exactly.
    """
    return _g_plus(g, kmax)[0]


def f_minus_asym(
    g: Geometry, kmax: int = DEFAULT_KMAX, mode: FMinusMode = FMinusMode.AUTO
) -> float:
    """The small minus-part correction, by either expansion.

    Forced UNIFORM raises UnreliableRegionError when ``w_minus < 0.05``;
    forced LAPLACE always evaluates, though its quality degrades as
    ``s_minus`` shrinks (the caller sees that through the last-term size).
    """
    return _f_minus(g, kmax, mode)[0]


def cdf_asym(
    p: Parameters,
    x: float,
    kmax: int = DEFAULT_KMAX,
    f_minus_mode: FMinusMode = FMinusMode.AUTO,
) -> EvalResult:
    """F by the asymptotic expansions alone, clamped to [0, 1]."""
    g = geometry(p, x)
    fp, last_p = _f_plus(g, kmax)
    fm, last_m, _ = _f_minus(g, kmax, f_minus_mode)
    raw = fp + fm
    value = min(1.0, max(0.0, raw))
    method = Method.LAPLACE_ASYM if f_minus_mode is FMinusMode.LAPLACE else Method.UNIFORM_ASYM
    return EvalResult(value, method, kmax, last_p + last_m + abs(raw - value))


def sf_asym(
    p: Parameters,
    x: float,
    kmax: int = DEFAULT_KMAX,
    f_minus_mode: FMinusMode = FMinusMode.AUTO,
) -> EvalResult:
    """G = 1 - F by the asymptotic expansions alone, clamped to [0, 1]."""
    g = geometry(p, x)
    gp, last_p = _g_plus(g, kmax)
    fm, last_m, _ = _f_minus(g, kmax, f_minus_mode)
    raw = gp - fm
    value = min(1.0, max(0.0, raw))
    method = Method.LAPLACE_ASYM if f_minus_mode is FMinusMode.LAPLACE else Method.UNIFORM_ASYM
    return EvalResult(value, method, kmax, last_p + last_m + abs(raw - value))


def cdf(
    p: Parameters,
    x: float,
    method: str = "auto",
    kmax: int = DEFAULT_KMAX,
    tol: float = oracle.DEFAULT_TOL,
    f_minus_mode: FMinusMode = FMinusMode.AUTO,
) -> EvalResult:
    """F with route selection.

    ``auto``: quadrature when z < 30 or w_minus < 0.05 (asymptotics not
    trusted there), otherwise the expansions, evaluating the complement and
    flipping when x lies right of the transition point so the smaller
    function is the one computed.  ``asym``, ``quad-split``, ``quad-direct``
    force a route.
    """
    if method == "auto":
        g = geometry(p, x)
        if g.z < Z_MIN or g.w_minus < W_MINUS_MIN:
            return EvalResult(oracle.cdf_quad_split(p, x, tol), Method.QUAD_SPLIT, 0, tol)
        if x > g.x0:
            r = sf_asym(p, x, kmax, f_minus_mode)
            value = min(1.0, max(0.0, 1.0 - r.value))
            return EvalResult(value, r.method, r.kmax_used, r.error_estimate, complemented=True)
        return cdf_asym(p, x, kmax, f_minus_mode)
    if method == "asym":
        return cdf_asym(p, x, kmax, f_minus_mode)
    if method == "quad-split":
        return EvalResult(oracle.cdf_quad_split(p, x, tol), Method.QUAD_SPLIT, 0, tol)
    if method == "quad-direct":
        return EvalResult(oracle.cdf_quad_direct(p, x, tol), Method.QUAD_DIRECT, 0, tol)
    raise DomainError(
        f"unknown method {method!r}; expected auto, asym, quad-split, or quad-direct"
    )
