"""
One-dimensional DE-Sinc rules on a finite interval.

Both rules call the integrand with a :class:`~sinc_iterint.de_core.DeNode`,
not a bare float, so integrands with endpoint singularities can use the
exact one-sided distances ``node.dist_a`` / ``node.dist_b``.
"""

from __future__ import annotations

import math
from typing import Callable

from .de_core import DeMap, DeNode, j_kernel, make_node, phi_inverse
from .errors import DomainError, EvaluationError
from .summation import CompensatedSum

__all__ = ["de_sinc_quadrature", "de_sinc_indefinite"]

NodeFunction = Callable[[DeNode], float]


def _checked(g: NodeFunction, node: DeNode, index: int) -> float:
    value = g(node)
    if not math.isfinite(value):
        raise EvaluationError(f"integrand returned {value!r} at node index {index} (x={node.x!r})")
    return value


def de_sinc_quadrature(g: NodeFunction, m: DeMap, h_tilde: float, M_minus: int, M_plus: int) -> float:
    """Approximate ``int_a^b g(x) dx`` by ``h~ sum_{i=-M-}^{M+} g(phi(i h~)) phi'(i h~)``.

    Parameters
    ----------
    g : callable
        Integrand, called once per node with a ``DeNode``.
    m : DeMap
        The interval ``(a, b)``.
    h_tilde : float
        Mesh size in the transformed variable.
    M_minus, M_plus : int
        Truncation indices below and above zero.
    """
    if not h_tilde > 0:
        raise DomainError(f"mesh size must be positive, got {h_tilde!r}")
    length = m.b - m.a
    acc = CompensatedSum()
    for i in range(-M_minus, M_plus + 1):
        node = make_node(m, i * h_tilde)
        acc.add(_checked(g, node, i) * length * node.w)
    return h_tilde * acc.value


def de_sinc_indefinite(
    g: NodeFunction, m: DeMap, h: float, N_minus: int, N_plus: int, x: float
) -> float:
    """Approximate ``int_a^x g(s) ds`` with the Sinc indefinite-integration kernel.

    The node set does not depend on `x`; only the kernel values
    ``J(j, h)(phi^{-1}(x))`` do.
    """
    if not h > 0:
        raise DomainError(f"mesh size must be positive, got {h!r}")
    xi = phi_inverse(m, x)
    length = m.b - m.a
    acc = CompensatedSum()
    for j in range(-N_minus, N_plus + 1):
        node = make_node(m, j * h)
        acc.add(_checked(g, node, j) * length * node.w * j_kernel(j, h, xi))
    return acc.value
