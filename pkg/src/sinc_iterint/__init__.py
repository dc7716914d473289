"""Certified Sinc approximation of two-dimensional iterated integrals."""

from .de_core import DeMap, DeNode, j_kernel, make_node, phi, phi_deriv, phi_inverse, weight
from .errors import (
    DomainError,
    EvaluationError,
    MeshInfeasibleError,
    SincIterintError,
    UnsupportedCaseError,
)
from .iterated import (
    ApproxResult,
    Direction,
    ErrorBound,
    MeshPlan,
    Problem,
    RegularityParams,
    error_bound_abs,
    error_bound_rel,
    integrate,
    modified_dec,
    modified_inc,
    modified_product,
    original_mm,
    plan_mesh,
    plan_original,
)
from .problems import builtin, reflected
from .sinc_rules import de_sinc_indefinite, de_sinc_quadrature
from .special import SigmaTable, beta_fn, build_sigma_table, c_const, rho, sigma, sine_integral

__version__ = "0.1.0"
