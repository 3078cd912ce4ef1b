"""Numeric evaluation of the expansion coefficients.

Two families: ``d_k(w)`` weight the power series that accompanies the erfc
leading term of the uniform expansion, and ``u_k(p)`` weight the plain
Laplace expansion.  Both are generated by short recursions; the closed forms
for small k serve as independent cross-checks in the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError

__all__ = [
    "CoeffKind",
    "CoeffTable",
    "d_coefficients",
    "d_closed_form",
    "u_coefficients",
]


class CoeffKind(Enum):
    D = "d"
    U = "u"


@dataclass(frozen=True, slots=True)
class CoeffTable:
    """Finite coefficient sequence for one pole parameter.

    For kind D the parameter is ``w = cos((nu -+ tau)/2)`` and values[0] is
    exactly 1; for kind U the parameter is ``p = -sin((nu+tau)/2)^2`` and
    values[0] equals ``-1/p``.
    """

    kind: CoeffKind
    pole_param: float
    values: tuple[float, ...]


def _check_kmax(kmax: int) -> int:
    if not isinstance(kmax, int) or isinstance(kmax, bool) or kmax < 0:
        raise DomainError(f"kmax must be a nonnegative integer, got {kmax!r}")
    return kmax


def _check_w(w: float) -> float:
    try:
        w = float(w)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"w must be a real number, got {w!r}") from exc
    if not (0.0 < w <= 1.0):
        raise DomainError(f"w must lie in (0, 1], got {w!r}")
    return w


def d_coefficients(w: float, kmax: int) -> CoeffTable:
    """d_0..d_kmax by the series-inversion recursion.

    The generating sequence is b_0 = w + w^2, b_1 = w + w^2/2, b_2 = -w^2/8,
    then b_{k+1} = -(k - 1/2) b_k / (k + 1); inverting the series gives
    c_0 = 1, c_k = -(1/b_0) sum_{j=1..k} b_j c_{k-j}, and finally
    d_k = (1/2)_k c_k with the Pochhammer factor kept as a running product.
    """
    w = _check_w(w)
    kmax = _check_kmax(kmax)
    b = [w + w * w, w + 0.5 * w * w, -w * w / 8.0]
    for k in range(2, kmax):
        b.append(-(k - 0.5) * b[k] / (k + 1))
    c = [1.0]
    for k in range(1, kmax + 1):
        acc = 0.0
        for j in range(1, k + 1):
            acc += b[j] * c[k - j]
        # b_0 = w(1 + w) vanishes only at w = 0, which the domain excludes
        c.append(-acc / b[0])
    values = []
    poch = 1.0
    for k, ck in enumerate(c):
        if k > 0:
            poch *= k - 0.5
        values.append(poch * ck)
    return CoeffTable(CoeffKind.D, w, tuple(values))


def d_closed_form(w: float, k: int) -> float:
    """Explicit rational forms of d_k for k <= 4, used as test oracles."""
    w = _check_w(w)
    if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k <= 4:
        raise DomainError(f"closed forms exist for 0 <= k <= 4 only, got {k!r}")
    u = w + 1.0
    if k == 0:
        return 1.0
    if k == 1:
        return -(w + 2.0) / (4.0 * u)
    if k == 2:
        return 3.0 * (3.0 * w * w + 9.0 * w + 8.0) / (32.0 * u * u)
    if k == 3:
        return -15.0 * (((5.0 * w + 20.0) * w + 29.0) * w + 16.0) / (128.0 * u**3)
    return 105.0 * ((((35.0 * w + 175.0) * w + 345.0) * w + 325.0) * w + 128.0) / (2048.0 * u**4)


def u_coefficients(p: float, kmax: int) -> CoeffTable:
    """u_0..u_kmax by convolving two elementary Maclaurin series.

    ``1/(sigma^2 - p)`` contributes the geometric coefficients
    g_j = -1/p^{j+1} and ``(1 + sigma^2)^{-1/2}`` contributes
    h_j = binomial(-1/2, j); then u_k = sum_j g_j h_{k-j}.  The domain is
    p in [-1, 0): p = -1 is reached in floating point when nu + tau rounds
    to pi exactly, and every u_k stays finite there.
    """
    try:
        p = float(p)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"p must be a real number, got {p!r}") from exc
    if not (-1.0 <= p < 0.0) or math.isnan(p):
        raise DomainError(f"p must lie in [-1, 0), got {p!r}")
    kmax = _check_kmax(kmax)
    g = [-1.0 / p]
    h = [1.0]
    for j in range(1, kmax + 1):
        g.append(g[-1] / p)
        h.append(-h[-1] * (2 * j - 1) / (2 * j))
    values = []
    for k in range(kmax + 1):
        acc = 0.0
        for j in range(k + 1):
            acc += g[j] * h[k - j]
        values.append(acc)
    return CoeffTable(CoeffKind.U, p, tuple(values))
