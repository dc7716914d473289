"""
Certified iterated integrals
============================

For each built-in problem we plan a mesh from the regularity parameters,
evaluate the approximation and compare the observed error with the
computable bound.
"""

from sinc_iterint import builtin, integrate, plan_mesh
from sinc_iterint.problems import reflected

for example in (1, 2, 3):
    problem = builtin(example)
    print(problem.name)
    for h in (0.5, 0.3, 0.2):
        plan = plan_mesh(problem.params, h)
        if not plan.feasible:
            print(f"  h={h}: infeasible ({'; '.join(plan.infeasibility_reasons)})")
            continue
        r = integrate(problem, h)
        err = abs(r.value - problem.exact)
        path = "product" if r.used_product_path else "general"
        print(
            f"  h={h}: value={r.value:.15f} err={err:.2e} bound={r.bound.abs:.2e} "
            f"({path} path, {r.eval_count} evaluations)"
        )

# Mirroring x -> a + b - x turns an increasing boundary into a decreasing one.
# The bound is the same and the value is unchanged.
p = builtin(2)
for prob in (p, reflected(p)):
    r = integrate(prob, 0.25)
    print(f"{prob.direction.name:10s} value={r.value:.15f} bound={r.bound.abs:.2e}")
