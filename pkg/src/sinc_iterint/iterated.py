"""
Iterated integration  I = int_a^b ( int_A^{q(x)} f(x, y) dy ) dx  by Sinc methods.

The substitution y = q(s) turns the inner integral into an integral over
(a, x) (increasing q) or (x, b) (decreasing q).  The outer integral is
then approximated by DE-Sinc quadrature with mesh 2h and the inner one by
DE-Sinc indefinite integration with mesh h, whose kernel evaluated at the
outer nodes reduces to the constants ``sigma(2i - j)``:

    I_inc = 2 (b-a)^2 h^2 sum_i w_{2i} sum_j f(x_{2i}, q(x_j)) q'(x_j) w_j (1/2 + sigma_{2i-j})
    I_dec = 2 (b-a)^2 h^2 sum_i w_{2i} sum_j f(x_{2i}, q(x_j)) (-q'(x_j)) w_j (1/2 - sigma_{2i-j})

Truncation indices follow from the regularity exponents so that the
error bound of :func:`error_bound_abs` applies.  The older symmetric
formula (outer mesh h, M = m, N = n) is available as :func:`original_mm`
for comparison; it carries no certificate.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

from .de_core import DeMap, DeNode, make_node
from .errors import DomainError, EvaluationError, MeshInfeasibleError, UnsupportedCaseError
from .special import beta_fn, build_sigma_table, c_const, rho
from .summation import CompensatedSum

__all__ = [
    "Direction",
    "RegularityParams",
    "Problem",
    "MeshPlan",
    "ErrorBound",
    "ApproxResult",
    "plan_mesh",
    "plan_original",
    "modified_inc",
    "modified_dec",
    "modified_product",
    "original_mm",
    "error_bound_abs",
    "error_bound_rel",
    "integrate",
]

_INTEGER_SNAP = 1e-12


class Direction(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"

    @property
    def sign(self) -> int:
        return 1 if self is Direction.INCREASING else -1


@dataclass(frozen=True)
class RegularityParams:
    """Constants of the growth condition

        |f(z, q(w)) q'(w)| <= K |z-a|^(alpha-1) |b-z|^(beta-1) |w-a|^(gamma-1) |b-w|^(delta-1)

    assumed to hold on the DE image of the strip ``|Im t| < d``.
    """

    alpha: float
    beta: float
    gamma: float
    delta: float
    K: float
    d: float

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta", "K"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise DomainError(f"{name} must be positive and finite, got {v!r}")
        if not (0.0 < self.d < 0.5 * math.pi):
            raise DomainError(f"d must lie in (0, pi/2), got {self.d!r}")

    @property
    def mu(self) -> float:
        return min(self.alpha, self.beta)

    @property
    def mu_bar(self) -> float:
        return max(self.alpha, self.beta)

    @property
    def nu(self) -> float:
        return min(self.gamma, self.delta)

    @property
    def nu_bar(self) -> float:
        return max(self.gamma, self.delta)

    def scaled(self, factor: float) -> "RegularityParams":
        """Same exponents and strip width, ``K`` multiplied by `factor`."""
        return RegularityParams(self.alpha, self.beta, self.gamma, self.delta, self.K * factor, self.d)


@dataclass(frozen=True)
class Problem:
    """An iterated integral over a region bounded by a monotone curve ``y = q(x)``.

    With ``node_args=True`` every function of ``x`` (``q``, ``q_prime``,
    the first argument of ``f`` and the factor ``X``) receives a
    :class:`~sinc_iterint.de_core.DeNode` instead of a float, so it can use
    the exact endpoint distances.  The second argument of ``f`` and the
    factor ``Y`` always receive the float ``y = q(x_j)``.

    ``product`` is an optional pair ``(X, Y)`` with ``f(x, y) = X(x) Y(y)``.
    """

    a: float
    b: float
    q: Callable
    q_prime: Callable
    f: Callable
    direction: Direction
    params: RegularityParams
    product: Optional[Tuple[Callable, Callable]] = None
    exact: Optional[float] = None
    node_args: bool = False
    name: str = ""

    def __post_init__(self):
        if not self.a < self.b:
            raise DomainError(f"need a < b, got a={self.a!r}, b={self.b!r}")
        if not isinstance(self.direction, Direction):
            object.__setattr__(self, "direction", Direction(self.direction))

    @property
    def demap(self) -> DeMap:
        return DeMap(self.a, self.b)

    def xarg(self, node: DeNode):
        return node if self.node_args else node.x

    def validate(self, samples: int = 100, tmax: float = 3.0) -> None:
        """Sample the problem on DE nodes and check the declared structure.

        Raises ``DomainError`` if ``q'`` has the wrong sign somewhere or the
        product factors do not reproduce ``f``.
        """
        m = self.demap
        nodes = [make_node(m, -tmax + 2.0 * tmax * k / (samples - 1)) for k in range(samples)]
        sign = self.direction.sign
        for node in nodes:
            qp = self.q_prime(self.xarg(node))
            if sign * qp < 0:
                raise DomainError(
                    f"q'({node.x!r}) = {qp!r} contradicts direction {self.direction.value}"
                )
        if self.product is None:
            return
        X, Y = self.product
        coarse = nodes[:: max(1, samples // 10)]
        for nx in coarse:
            for ns in coarse:
                y = self.q(self.xarg(ns))
                fv = self.f(self.xarg(nx), y)
                pv = X(self.xarg(nx)) * Y(y)
                if abs(fv - pv) > 1e-12 * (1.0 + abs(fv)):
                    raise DomainError(f"product factors disagree with f at x={nx.x!r}, y={y!r}")


@dataclass(frozen=True)
class MeshPlan:
    """Mesh sizes and truncation indices.

    For the modified formulas ``h_tilde == 2 h`` and the indices come from
    :func:`plan_mesh`; :func:`plan_original` produces the symmetric plan of
    the original formula with ``h_tilde == h``.
    """

    h: float
    h_tilde: float
    n: int
    m: int
    N_minus: int
    N_plus: int
    M_minus: int
    M_plus: int
    feasible: bool
    infeasibility_reasons: Tuple[str, ...] = ()
    formula: str = "modified"

    @property
    def n_total_general(self) -> int:
        return (self.M_minus + self.M_plus + 1) * (self.N_minus + self.N_plus + 1)

    @property
    def n_total_product(self) -> int:
        return (self.M_minus + self.M_plus + 1) + (self.N_minus + self.N_plus + 1)

    @property
    def sigma_kmax(self) -> int:
        scale = 2 if self.formula == "modified" else 1
        return scale * max(self.M_minus, self.M_plus) + max(self.N_minus, self.N_plus) + 2

    def require_feasible(self) -> None:
        if not self.feasible:
            raise MeshInfeasibleError(
                f"mesh with h={self.h!r} is infeasible: " + "; ".join(self.infeasibility_reasons),
                self.infeasibility_reasons,
            )


@dataclass(frozen=True)
class ErrorBound:
    """Certified bound ``abs = e1_component + e2_component``.

    ``e1_component`` bounds the outer quadrature error and ``e2_component``
    the accumulated inner indefinite-integration error.  ``rel`` is the
    relative bound, present only when it is meaningful.
    """

    abs: float
    e1_component: float
    e2_component: float
    rel: Optional[float] = None


@dataclass(frozen=True)
class ApproxResult:
    value: float
    plan: MeshPlan
    bound: Optional[ErrorBound]
    eval_count: int
    used_product_path: bool
    formula: str = "modified"


def _snap(v: float) -> float:
    r = round(v)
    return float(r) if abs(v - r) <= _INTEGER_SNAP else v


def _ceil(v: float) -> int:
    return int(math.ceil(_snap(v)))


def _floor(v: float) -> int:
    return int(math.floor(_snap(v)))


def plan_mesh(params: RegularityParams, h: float) -> MeshPlan:
    """Truncation indices for mesh size `h`.

    ``n = ceil(log(2d/(nu h)) / h)``, ``m = ceil((n + log(mu/nu)/h) / 2)``;
    the side with the smaller exponent keeps ``m`` (resp. ``n``) and the
    other side is shortened.  On exponent ties the first branch is used.
    An infeasible plan is returned, not raised, with its reasons listed.
    """
    if not (math.isfinite(h) and h > 0):
        raise DomainError(f"h must be positive and finite, got {h!r}")
    p = params
    h_tilde = 2.0 * h
    reasons: List[str] = []

    log_arg = 2.0 * p.d / (p.nu * h)
    if log_arg <= 1.0:
        reasons.append(
            f"log argument nonpositive: log(2d/(nu h)) = {math.log(log_arg):.6g} <= 0 (h >= 2d/nu = {2.0 * p.d / p.nu:.6g})"
        )
    n = _ceil(math.log(log_arg) / h)
    m = _ceil(0.5 * (n + math.log(p.mu / p.nu) / h))

    if p.mu == p.alpha:
        M_minus, M_plus = m, m - _floor(math.log(p.beta / p.alpha) / h_tilde)
    else:
        M_plus, M_minus = m, m - _floor(math.log(p.alpha / p.beta) / h_tilde)
    if p.nu == p.gamma:
        N_minus, N_plus = n, n - _floor(math.log(p.delta / p.gamma) / h)
    else:
        N_plus, N_minus = n, n - _floor(math.log(p.gamma / p.delta) / h)

    checks = (
        ("M_minus*h_tilde", M_minus * h_tilde, "rho_alpha", rho(p.alpha)),
        ("M_plus*h_tilde", M_plus * h_tilde, "rho_beta", rho(p.beta)),
        ("N_minus*h", N_minus * h, "rho_gamma", rho(p.gamma)),
        ("N_plus*h", N_plus * h, "rho_delta", rho(p.delta)),
    )
    feasible = True
    for lhs_name, lhs, rhs_name, rhs in checks:
        if not lhs >= rhs:
            feasible = False
            reasons.append(f"{lhs_name} = {lhs:.6g} < {rhs_name} = {rhs:.6g}")

    return MeshPlan(
        h=h,
        h_tilde=h_tilde,
        n=n,
        m=m,
        N_minus=N_minus,
        N_plus=N_plus,
        M_minus=M_minus,
        M_plus=M_plus,
        feasible=feasible,
        infeasibility_reasons=tuple(reasons),
    )


def plan_original(params: RegularityParams, h: float, epsilon: Optional[float] = None) -> MeshPlan:
    """Symmetric plan of the original formula: outer mesh `h`, ``M = m``, ``N = n``.

    ``m = ceil(log(4d/((nu-eps) h)) / h)`` and ``n = ceil(log(2d/((nu-eps) h)) / h)``;
    `epsilon` defaults to ``nu/10``.  Feasible means only that ``m, n >= 1``.
    """
    if not (math.isfinite(h) and h > 0):
        raise DomainError(f"h must be positive and finite, got {h!r}")
    nu = params.nu
    if epsilon is None:
        epsilon = nu / 10.0
    if not (0.0 < epsilon < nu):
        raise DomainError(f"epsilon must lie in (0, nu) = (0, {nu!r}), got {epsilon!r}")
    width = nu - epsilon
    m = _ceil(math.log(4.0 * params.d / (width * h)) / h)
    n = _ceil(math.log(2.0 * params.d / (width * h)) / h)
    reasons = []
    if m < 1:
        reasons.append(f"m = {m} is not a positive integer")
    if n < 1:
        reasons.append(f"n = {n} is not a positive integer")
    return MeshPlan(
        h=h,
        h_tilde=h,
        n=n,
        m=m,
        N_minus=n,
        N_plus=n,
        M_minus=m,
        M_plus=m,
        feasible=not reasons,
        infeasibility_reasons=tuple(reasons),
        formula="original",
    )


def _inner_nodes(problem: Problem, plan: MeshPlan, sign: int):
    """Nodes ``x_j`` with ``q(x_j)`` and the signed factor ``sign * q'(x_j) * w_j``."""
    m = problem.demap
    out = []
    for j in range(-plan.N_minus, plan.N_plus + 1):
        node = make_node(m, j * plan.h)
        arg = problem.xarg(node)
        y = problem.q(arg)
        qp = problem.q_prime(arg)
        if not (math.isfinite(y) and math.isfinite(qp)):
            raise EvaluationError(f"q or q' is not finite at inner node j={j} (x={node.x!r})")
        out.append((j, y, sign * qp * node.w))
    return out


def _outer_nodes(problem: Problem, plan: MeshPlan):
    m = problem.demap
    return [(i, make_node(m, i * plan.h_tilde)) for i in range(-plan.M_minus, plan.M_plus + 1)]


def _iterated_sum(problem: Problem, plan: MeshPlan, sign: int, use_product: bool):
    """Shared double sum of the modified and original formulas.

    `sign` is +1 for an increasing boundary and -1 for a decreasing one; it
    flips both ``q'`` and the sign of ``sigma`` in the kernel.  Returns the
    value and the number of integrand (or factor) evaluations.
    """
    scale = 2 if plan.formula == "modified" else 1
    table = build_sigma_table(plan.sigma_kmax)
    inner = _inner_nodes(problem, plan, sign)
    outer = _outer_nodes(problem, plan)
    evals = 0

    if use_product:
        X, Y = problem.product
        V = []
        for j, y, g in inner:
            yv = Y(y)
            evals += 1
            if not math.isfinite(yv):
                raise EvaluationError(f"Y returned {yv!r} at inner node j={j} (y={y!r})")
            V.append((j, yv * g))
        total = CompensatedSum()
        for i, node in outer:
            xv = X(problem.xarg(node))
            evals += 1
            if not math.isfinite(xv):
                raise EvaluationError(f"X returned {xv!r} at outer node i={i} (x={node.x!r})")
            acc = CompensatedSum()
            for j, v in V:
                acc.add(v * (0.5 + sign * table[scale * i - j]))
            total.add(xv * node.w * acc.value)
    else:
        f = problem.f
        total = CompensatedSum()
        for i, node in outer:
            xarg = problem.xarg(node)
            acc = CompensatedSum()
            for j, y, g in inner:
                fv = f(xarg, y)
                evals += 1
                if not math.isfinite(fv):
                    raise EvaluationError(
                        f"f returned {fv!r} at node (i={i}, j={j}), x={node.x!r}, y={y!r}"
                    )
                acc.add(fv * g * (0.5 + sign * table[scale * i - j]))
            total.add(node.w * acc.value)

    length = problem.b - problem.a
    value = plan.h_tilde * plan.h * length * length * total.value
    return value, evals


def _certified(problem: Problem, plan: MeshPlan, value: float, evals: int, product: bool) -> ApproxResult:
    bound = error_bound_abs(problem.params, plan.h, problem.b - problem.a)
    rel = error_bound_rel(bound.abs, value)
    bound = ErrorBound(bound.abs, bound.e1_component, bound.e2_component, rel)
    return ApproxResult(value=value, plan=plan, bound=bound, eval_count=evals, used_product_path=product)


def _check_modified_plan(plan: MeshPlan) -> None:
    if plan.formula != "modified":
        raise DomainError("the modified formulas need a plan from plan_mesh")
    plan.require_feasible()


def modified_inc(problem: Problem, plan: MeshPlan) -> ApproxResult:
    """General (non-product) formula for an increasing boundary, with certificate."""
    if problem.direction is not Direction.INCREASING:
        raise UnsupportedCaseError("modified_inc requires q'(x) >= 0; use modified_dec")
    _check_modified_plan(plan)
    value, evals = _iterated_sum(problem, plan, +1, use_product=False)
    return _certified(problem, plan, value, evals, False)


def modified_dec(problem: Problem, plan: MeshPlan) -> ApproxResult:
    """General (non-product) formula for a decreasing boundary, with certificate.

    Derived from ``int_x^b = int_a^b - int_a^x`` and the limit ``J(j,h)(+inf) = h``,
    which turns the kernel into ``1/2 - sigma_{2i-j}``.
    """
    if problem.direction is not Direction.DECREASING:
        raise UnsupportedCaseError("modified_dec requires q'(x) <= 0; use modified_inc")
    _check_modified_plan(plan)
    value, evals = _iterated_sum(problem, plan, -1, use_product=False)
    return _certified(problem, plan, value, evals, False)


def modified_product(problem: Problem, plan: MeshPlan) -> ApproxResult:
    """Product-type fast path: ``X`` once per outer node, ``Y`` once per inner node."""
    if problem.product is None:
        raise DomainError("modified_product needs a product decomposition f(x, y) = X(x) Y(y)")
    _check_modified_plan(plan)
    value, evals = _iterated_sum(problem, plan, problem.direction.sign, use_product=True)
    return _certified(problem, plan, value, evals, True)


def original_mm(
    problem: Problem,
    h: float,
    epsilon: Optional[float] = None,
    use_product: Optional[bool] = None,
) -> ApproxResult:
    """The original symmetric formula (outer mesh equal to inner mesh ``h``).

    No error bound is attached.  Uses the product shortcut whenever a
    decomposition is available unless ``use_product=False``.
    """
    if problem.direction is not Direction.INCREASING:
        raise UnsupportedCaseError(
            "the original formula cannot be used in this case because q(x) "
            "does not satisfy q'(x) >= 0"
        )
    plan = plan_original(problem.params, h, epsilon)
    plan.require_feasible()
    if use_product is None:
        use_product = problem.product is not None
    elif use_product and problem.product is None:
        raise DomainError("use_product=True needs a product decomposition")
    value, evals = _iterated_sum(problem, plan, +1, use_product=use_product)
    return ApproxResult(
        value=value, plan=plan, bound=None, eval_count=evals,
        used_product_path=use_product, formula="original",
    )


def error_bound_abs(params: RegularityParams, h: float, length: float) -> ErrorBound:
    """Certified bound on ``|I - I_DE(h)|`` for an interval of length `length` = b - a.

    Valid for both the increasing and the decreasing formula.  Refuses to
    produce a number for an infeasible mesh.
    """
    if not length > 0:
        raise DomainError(f"interval length must be positive, got {length!r}")
    plan_mesh(params, h).require_feasible()
    p = params
    d = p.d
    decay = math.exp(-math.pi * d / h)
    one_minus = -math.expm1(-math.pi * d / h)
    one_minus_sq = -math.expm1(-2.0 * math.pi * d / h)
    c_ab = c_const(p.alpha, p.beta, d)
    c_gd = c_const(p.gamma, p.delta, d)

    prefactor = 2.0 * p.K * length ** (p.alpha + p.beta + p.gamma + p.delta - 2.0) * decay
    e1 = (
        beta_fn(p.gamma, p.delta) * c_gd / p.mu
        * (math.exp(0.5 * math.pi * p.mu_bar) + 2.0 * c_ab / one_minus)
    )
    e2 = (
        (beta_fn(p.alpha, p.beta) + 4.0 * c_ab / p.mu * decay / one_minus) / p.nu
        * (1.1 * math.exp(0.5 * math.pi * p.nu_bar) + h * c_gd / (d * one_minus_sq))
    )
    e1 *= prefactor
    e2 *= prefactor
    return ErrorBound(abs=e1 + e2, e1_component=e1, e2_component=e2)


def error_bound_rel(bound_abs: float, approx: float) -> Optional[float]:
    """Relative bound ``E / (|approx| - E)``, or None when ``|approx| <= E``."""
    if not bound_abs > 0:
        raise DomainError(f"absolute bound must be positive, got {bound_abs!r}")
    if abs(approx) <= bound_abs:
        return None
    return bound_abs / abs(abs(approx) - bound_abs)


def integrate(problem: Problem, h: float) -> ApproxResult:
    """Plan the mesh for `h`, pick the formula for the boundary direction and
    the product path when available, and return the certified result."""
    plan = plan_mesh(problem.params, h)
    plan.require_feasible()
    if problem.product is not None:
        return modified_product(problem, plan)
    if problem.direction is Direction.INCREASING:
        return modified_inc(problem, plan)
    return modified_dec(problem, plan)
