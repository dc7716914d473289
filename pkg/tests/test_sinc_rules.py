import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sinc_iterint import DeMap, DomainError, EvaluationError, de_sinc_indefinite, de_sinc_quadrature

UNIT = DeMap(0.0, 1.0)


def one(node):
    return 1.0


def test_quadrature_constant():
    # measured error 3.36e-6 at this mesh
    assert abs(de_sinc_quadrature(one, UNIT, 0.5, 6, 6) - 1.0) <= 1e-5
    assert abs(de_sinc_quadrature(one, UNIT, 0.25, 12, 12) - 1.0) <= 1e-13


def test_quadrature_odd_integrand_cancels():
    m = DeMap(-1.0, 1.0)
    for M in (3, 6, 9):
        assert abs(de_sinc_quadrature(lambda n: n.x, m, 0.5, M, M)) <= 1e-15


def test_quadrature_endpoint_singularity():
    value = de_sinc_quadrature(lambda n: 1.0 / math.sqrt(n.dist_a), UNIT, 0.5, 8, 8)
    assert abs(value - 2.0) <= 1e-4


def test_quadrature_beta_integrand():
    # int_0^1 x^{-1/2} (1-x)^{-1/2} dx = pi, singular at both ends
    g = lambda n: 1.0 / math.sqrt(n.dist_a * n.dist_b)
    assert abs(de_sinc_quadrature(g, UNIT, 0.2, 20, 20) - math.pi) <= 1e-10


def test_quadrature_rejects_nonfinite():
    with pytest.raises(EvaluationError, match="node index 0"):
        de_sinc_quadrature(lambda n: math.nan if n.t == 0 else 1.0, UNIT, 0.5, 2, 2)
    with pytest.raises(DomainError):
        de_sinc_quadrature(one, UNIT, 0.0, 2, 2)


def test_quadrature_calls_once_per_node():
    calls = []
    de_sinc_quadrature(lambda n: calls.append(n.t) or 1.0, UNIT, 0.5, 3, 5)
    assert calls == [i * 0.5 for i in range(-3, 6)]


def test_indefinite_constant():
    assert abs(de_sinc_indefinite(one, UNIT, 0.4, 8, 8, 0.5) - 0.5) <= 1e-5


def test_indefinite_odd_integrand():
    # measured error 2.7e-4 at h=0.4; 7.7e-9 at h=0.2
    g = lambda n: n.x - 0.5
    assert abs(de_sinc_indefinite(g, UNIT, 0.4, 8, 8, 0.5) + 0.125) <= 5e-4
    assert abs(de_sinc_indefinite(g, UNIT, 0.2, 16, 16, 0.5) + 0.125) <= 1e-8


def test_indefinite_near_b_recovers_quadrature():
    full = de_sinc_quadrature(one, UNIT, 0.4, 8, 8)
    near_b = de_sinc_indefinite(one, UNIT, 0.4, 8, 8, 1.0 - 1e-12)
    assert abs(near_b - 1.0) <= 1e-4
    assert abs(full - 1.0) <= 1e-4


def test_indefinite_domain():
    with pytest.raises(DomainError):
        de_sinc_indefinite(one, UNIT, 0.4, 8, 8, 1.0)
    with pytest.raises(EvaluationError):
        de_sinc_indefinite(lambda n: math.inf, UNIT, 0.4, 2, 2, 0.3)


coeffs = st.floats(-5, 5)


@settings(max_examples=50, deadline=None)
@given(coeffs, coeffs)
def test_linearity(alpha, beta):
    g1 = lambda n: math.exp(n.x)
    g2 = lambda n: 1.0 / math.sqrt(n.dist_a)
    combo = lambda n: alpha * g1(n) + beta * g2(n)
    for rule in (
        lambda g: de_sinc_quadrature(g, UNIT, 0.3, 10, 10),
        lambda g: de_sinc_indefinite(g, UNIT, 0.3, 10, 10, 0.37),
    ):
        lhs = rule(combo)
        rhs = alpha * rule(g1) + beta * rule(g2)
        scale = abs(alpha * rule(g1)) + abs(beta * rule(g2)) + 1e-300
        assert abs(lhs - rhs) <= 1e-13 * scale


@settings(max_examples=50, deadline=None)
@given(st.floats(0.1, 1.0), st.integers(1, 5), st.integers(1, 5))
def test_positivity(h, Mm, Mp):
    assert de_sinc_quadrature(lambda n: 1.0 + n.x * n.x, DeMap(-1.0, 2.0), h, Mm, Mp) > 0


def test_indefinite_monotone_approach():
    # smooth positive g: approximations at increasing x track the exact
    # increasing antiderivative within twice the pointwise error
    g = lambda n: math.exp(n.x)
    xs = [0.1 * k for k in range(1, 10)]
    approx = [de_sinc_indefinite(g, UNIT, 0.25, 14, 14, x) for x in xs]
    exact = [math.exp(x) - 1.0 for x in xs]
    err = max(abs(a - e) for a, e in zip(approx, exact))
    assert err <= 1e-6
    for (a1, e1), (a2, e2) in zip(zip(approx, exact), zip(approx[1:], exact[1:])):
        assert (a2 - a1) >= (e2 - e1) - 2 * err
