"""
Double-exponential change of variable onto a finite interval (a, b).

    x = phi(t) = (b - a)/2 * tanh(pi/2 * sinh t) + (b + a)/2

Weights are reported in the dimensionless form

    w(t) = pi cosh(t) sech^2(pi/2 sinh t) / 4,     phi'(t) = (b - a) w(t),

so that the iterated formulas can pull the (b - a)^2 factor out front.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, MeshInfeasibleError
from .special import sine_integral

__all__ = [
    "DeMap",
    "DeNode",
    "weight",
    "phi",
    "phi_deriv",
    "make_node",
    "phi_inverse",
    "j_kernel",
]

_HALF_PI = 0.5 * math.pi
_QUARTER_PI = 0.25 * math.pi


@dataclass(frozen=True)
class DeMap:
    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise DomainError(f"interval endpoints must be finite, got ({self.a!r}, {self.b!r})")
        if not self.a < self.b:
            raise DomainError(f"need a < b, got a={self.a!r}, b={self.b!r}")

    @property
    def length(self) -> float:
        return self.b - self.a


@dataclass(frozen=True)
class DeNode:
    """A transformed abscissa with its one-sided endpoint distances.

    ``dist_a`` and ``dist_b`` are computed from closed forms rather than by
    subtracting ``x`` from an endpoint, so ``dist_b`` stays accurate when
    ``x`` rounds to ``b``.
    """

    t: float
    x: float
    dist_a: float
    dist_b: float
    w: float


def _sech2(u: float) -> float:
    e = math.exp(-2.0 * abs(u))
    return 4.0 * e / ((1.0 + e) * (1.0 + e))


def weight(t: float) -> float:
    """Dimensionless DE weight ``pi cosh(t) sech^2(pi/2 sinh t) / 4``.

    Underflows cleanly to 0 instead of producing ``inf * 0``.
    """
    at = abs(t)
    if at > 7.0:
        # pi/2 sinh(7) > 850: sech^2 underflows long before cosh overflows
        return 0.0
    s = _sech2(_HALF_PI * math.sinh(at))
    if s == 0.0:
        return 0.0
    return _QUARTER_PI * math.cosh(at) * s


def phi(m: DeMap, t: float) -> float:
    return 0.5 * (m.b - m.a) * math.tanh(_HALF_PI * math.sinh(t)) + 0.5 * (m.b + m.a)


def phi_deriv(m: DeMap, t: float) -> float:
    return (m.b - m.a) * weight(t)


def make_node(m: DeMap, t: float) -> DeNode:
    """Build the node at ``t`` with accurate distances to both endpoints.

    Raises
    ------
    MeshInfeasibleError
        If ``t`` is so large that the node collapses onto an endpoint in
        double precision.
    """
    t = float(t)
    length = m.b - m.a
    try:
        u = math.pi * math.sinh(t)
    except OverflowError:
        raise MeshInfeasibleError(f"node t={t!r} is not representable") from None
    # 1/(1 + e^{-u}) and 1/(1 + e^{u}) without overflow
    e = math.exp(-abs(u))
    near = length * e / (1.0 + e)
    far = length / (1.0 + e)
    if u >= 0:
        dist_a, dist_b = far, near
    else:
        dist_a, dist_b = near, far
    if dist_a == 0.0 or dist_b == 0.0:
        raise MeshInfeasibleError(
            f"node t={t!r} collapses onto an endpoint of ({m.a!r}, {m.b!r}) in double precision"
        )
    return DeNode(t=t, x=m.a + dist_a, dist_a=dist_a, dist_b=dist_b, w=weight(t))


def phi_inverse(m: DeMap, x: float) -> float:
    if not (m.a < x < m.b):
        raise DomainError(f"x={x!r} outside the open interval ({m.a!r}, {m.b!r})")
    r = (2.0 * x - m.a - m.b) / (m.b - m.a)
    if abs(r) >= 1.0:
        # x is within one ulp of an endpoint
        raise DomainError(f"x={x!r} is too close to an endpoint to invert")
    return math.asinh(math.atanh(r) / _HALF_PI)


def j_kernel(j: int, h: float, xi: float) -> float:
    """Sinc indefinite-integration kernel ``h (1/2 + Si(pi (xi/h - j)) / pi)``.

    Tends to ``h`` as ``xi -> +inf`` and to 0 as ``xi -> -inf``; for large
    arguments the sine integral switches to its asymptotic form, which
    carries the decaying oscillatory tail.
    """
    if not h > 0:
        raise DomainError(f"mesh size must be positive, got {h!r}")
    arg = math.pi * (xi / h - j)
    return h * (0.5 + sine_integral(arg) / math.pi)
