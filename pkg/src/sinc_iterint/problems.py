"""
Built-in test problems with closed-form values.

1. Smooth integrand and boundary on (0, sqrt 2): f = 1/(x + y + 1/2), q = x^2/2.
2. Derivative singularities in both f and q on (0, 1):
   f = sqrt(1 - y^2), q = sqrt(1 - (1 - x)^2); exact value 2/3.
3. Weakly singular integrand under a decreasing boundary on (0, 1):
   f = 1/sqrt(x y), q = 1 - x; exact value pi.

All functions are written against :class:`~sinc_iterint.de_core.DeNode`
(``node_args=True``) and use the exact endpoint distances wherever the
formula would otherwise subtract nearly equal numbers.
"""

from __future__ import annotations

import math

from .de_core import DeNode
from .errors import DomainError
from .iterated import Direction, Problem, RegularityParams

__all__ = ["builtin", "reflected", "BUILTIN_IDS"]

BUILTIN_IDS = (1, 2, 3)

_SQRT2 = math.sqrt(2.0)

EXACT_1 = (
    -(_SQRT2 + 0.5) * math.log(1.0 + 2.0 * _SQRT2)
    + 2.0 * (1.0 + _SQRT2) * math.log(1.0 + _SQRT2)
    - _SQRT2
)


def _example1() -> Problem:
    def q(node):
        return 0.5 * node.x * node.x

    def q_prime(node):
        return node.x

    def f(node, y):
        return 1.0 / (node.x + y + 0.5)

    return Problem(
        a=0.0,
        b=_SQRT2,
        q=q,
        q_prime=q_prime,
        f=f,
        direction=Direction.INCREASING,
        params=RegularityParams(alpha=1.0, beta=1.0, gamma=1.0, delta=1.0, K=16.6, d=0.6),
        exact=EXACT_1,
        node_args=True,
        name="example 1: smooth integrand and boundary",
    )


def _example2() -> Problem:
    # on (0, 1): x = dist_a and 1 - x = dist_b, so 1 - (1-x)^2 = dist_a (1 + dist_b)
    def q(node):
        return math.sqrt(node.dist_a * (1.0 + node.dist_b))

    def q_prime(node):
        return node.dist_b / math.sqrt(node.dist_a * (1.0 + node.dist_b))

    def Y(y):
        return math.sqrt((1.0 - y) * (1.0 + y))

    def f(node, y):
        return Y(y)

    def X(node):
        return 1.0

    return Problem(
        a=0.0,
        b=1.0,
        q=q,
        q_prime=q_prime,
        f=f,
        direction=Direction.INCREASING,
        params=RegularityParams(alpha=1.0, beta=1.0, gamma=0.5, delta=3.0, K=1.63, d=1.0),
        product=(X, Y),
        exact=2.0 / 3.0,
        node_args=True,
        name="example 2: derivative singularities in f and q",
    )


def _example3() -> Problem:
    def q(node):
        return node.dist_b

    def q_prime(node):
        return -1.0

    def X(node):
        return 1.0 / math.sqrt(node.dist_a)

    def Y(y):
        return 1.0 / math.sqrt(y)

    def f(node, y):
        return 1.0 / math.sqrt(node.dist_a * y)

    return Problem(
        a=0.0,
        b=1.0,
        q=q,
        q_prime=q_prime,
        f=f,
        direction=Direction.DECREASING,
        params=RegularityParams(alpha=0.5, beta=1.0, gamma=1.0, delta=0.5, K=1.0, d=4.0 / 3.0),
        product=(X, Y),
        exact=math.pi,
        node_args=True,
        name="example 3: weak singularity, decreasing boundary",
    )


_BUILDERS = {1: _example1, 2: _example2, 3: _example3}


def builtin(example_id: int) -> Problem:
    """Return built-in problem 1, 2 or 3."""
    try:
        build = _BUILDERS[int(example_id)]
    except (KeyError, TypeError, ValueError):
        raise DomainError(f"unknown example id {example_id!r}; choose one of {BUILTIN_IDS}") from None
    return build()


def _mirror(node: DeNode, a: float, b: float) -> DeNode:
    return DeNode(t=-node.t, x=a + node.dist_b, dist_a=node.dist_b, dist_b=node.dist_a, w=node.w)


def reflected(problem: Problem) -> Problem:
    """The same integral after the substitution ``x -> a + b - x``.

    The boundary direction flips, ``alpha``/``beta`` and ``gamma``/``delta``
    swap, and the value is unchanged.
    """
    a, b = problem.a, problem.b
    p = problem.params
    params = RegularityParams(p.beta, p.alpha, p.delta, p.gamma, p.K, p.d)

    if problem.node_args:
        def mirror(node):
            return _mirror(node, a, b)
    else:
        def mirror(x):
            return a + b - x

    q, q_prime, f = problem.q, problem.q_prime, problem.f
    product = None
    if problem.product is not None:
        X, Y = problem.product
        product = (lambda x: X(mirror(x)), Y)
    direction = (
        Direction.DECREASING if problem.direction is Direction.INCREASING else Direction.INCREASING
    )
    return Problem(
        a=a,
        b=b,
        q=lambda x: q(mirror(x)),
        q_prime=lambda x: -q_prime(mirror(x)),
        f=lambda x, y: f(mirror(x), y),
        direction=direction,
        params=params,
        product=product,
        exact=problem.exact,
        node_args=problem.node_args,
        name=f"{problem.name} (reflected)" if problem.name else "reflected",
    )
