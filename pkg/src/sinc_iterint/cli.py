"""
Command-line harness for the built-in problems.

    sinc-iterint sweep  --example N --h-list 0.5,0.4,0.3 --formula modified|original [--out FILE]
    sinc-iterint bound  --example N --h H [--K K]
    sinc-iterint verify --example N

Exit codes: 0 success, 2 usage (including an infeasible mesh for ``bound``),
3 certificate violation, 4 unsupported case.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import math
import sys
import time
from dataclasses import dataclass
from typing import List, Optional, Sequence, TextIO

from .errors import MeshInfeasibleError, UnsupportedCaseError
from .iterated import (
    ApproxResult,
    Direction,
    MeshPlan,
    integrate,
    original_mm,
    plan_mesh,
    plan_original,
)
from .problems import BUILTIN_IDS, builtin

__all__ = [
    "SweepRecord",
    "SWEEP_COLUMNS",
    "VERIFY_GRID",
    "cmd_sweep",
    "cmd_bound",
    "cmd_verify",
    "main",
]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CERTIFICATE = 3
EXIT_UNSUPPORTED = 4

ERROR_FLOOR = 1e-13

# geometric, 0.8 down to 0.15 in 11 steps (ratio ~0.859)
VERIFY_GRID = tuple(0.8 * (0.15 / 0.8) ** (k / 11) for k in range(12))

ORIGINAL_DECREASING_MESSAGE = (
    "the original formula cannot be used in this case because q(x) does not "
    "satisfy q'(x) >= 0 (the boundary is decreasing); use --formula modified"
)


@dataclass
class SweepRecord:
    h: float
    n: int
    m: int
    N_minus: int
    N_plus: int
    M_minus: int
    M_plus: int
    n_total: int
    formula: str
    value: Optional[float] = None
    abs_err: Optional[float] = None
    rel_err: Optional[float] = None
    bound_abs: Optional[float] = None
    bound_rel: Optional[float] = None
    eval_count: int = 0
    wall_time_ns: int = 0
    reason: str = ""

    def as_row(self) -> List[str]:
        return [_fmt(getattr(self, f.name)) for f in dataclasses.fields(self)]


SWEEP_COLUMNS = tuple(f.name for f in dataclasses.fields(SweepRecord))


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


def _record_from_plan(plan: MeshPlan, formula: str, product: bool) -> SweepRecord:
    return SweepRecord(
        h=plan.h,
        n=plan.n,
        m=plan.m,
        N_minus=plan.N_minus,
        N_plus=plan.N_plus,
        M_minus=plan.M_minus,
        M_plus=plan.M_plus,
        n_total=plan.n_total_product if product else plan.n_total_general,
        formula=formula,
    )


def _run_point(problem, h: float, formula: str) -> SweepRecord:
    if formula == "modified":
        plan = plan_mesh(problem.params, h)
    else:
        plan = plan_original(problem.params, h)
    product = problem.product is not None
    rec = _record_from_plan(plan, formula, product)
    if not plan.feasible:
        rec.reason = "infeasible: " + "; ".join(plan.infeasibility_reasons)
        return rec

    start = time.monotonic_ns()
    result: ApproxResult = integrate(problem, h) if formula == "modified" else original_mm(problem, h)
    rec.wall_time_ns = time.monotonic_ns() - start

    rec.value = result.value
    rec.eval_count = result.eval_count
    if problem.exact is not None:
        rec.abs_err = abs(result.value - problem.exact)
        if problem.exact != 0:
            rec.rel_err = rec.abs_err / abs(problem.exact)
    if result.bound is not None:
        rec.bound_abs = result.bound.abs
        rec.bound_rel = result.bound.rel
    return rec


def sweep_records(example: int, h_list: Sequence[float], formula: str = "modified") -> List[SweepRecord]:
    problem = builtin(example)
    if formula == "original" and problem.direction is Direction.DECREASING:
        raise UnsupportedCaseError(ORIGINAL_DECREASING_MESSAGE)
    return [_run_point(problem, float(h), formula) for h in h_list]


def cmd_sweep(example: int, h_list: Sequence[float], formula: str, out: TextIO) -> int:
    """Write one CSV row per mesh size; infeasible sizes get a reason instead of values."""
    if not h_list:
        print("error: h-list is empty", file=sys.stderr)
        return EXIT_USAGE
    if formula not in ("modified", "original"):
        print(f"error: unknown formula {formula!r}", file=sys.stderr)
        return EXIT_USAGE
    try:
        records = sweep_records(example, h_list, formula)
    except UnsupportedCaseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for rec in records:
        writer.writerow(rec.as_row())
    return EXIT_OK


def cmd_bound(example: int, h: float, out: TextIO, K: Optional[float] = None) -> int:
    """Print the mesh plan, the two bound components and the total as key=value lines."""
    problem = builtin(example)
    if K is not None:
        problem = dataclasses.replace(problem, params=problem.params.scaled(K / problem.params.K))
    plan = plan_mesh(problem.params, h)
    if not plan.feasible:
        print(
            f"error: mesh h={h!r} is infeasible: " + "; ".join(plan.infeasibility_reasons),
            file=sys.stderr,
        )
        return EXIT_USAGE
    result = integrate(problem, h)
    bound = result.bound
    lines = [
        ("example", example),
        ("h", plan.h),
        ("h_tilde", plan.h_tilde),
        ("n", plan.n),
        ("m", plan.m),
        ("N_minus", plan.N_minus),
        ("N_plus", plan.N_plus),
        ("M_minus", plan.M_minus),
        ("M_plus", plan.M_plus),
        ("n_total_general", plan.n_total_general),
        ("n_total_product", plan.n_total_product),
        ("K", problem.params.K),
        ("value", result.value),
        ("e1", bound.e1_component),
        ("e2", bound.e2_component),
        ("abs", bound.abs),
        ("rel", bound.rel),
    ]
    for key, value in lines:
        print(f"{key}={_fmt(value)}", file=out)
    return EXIT_OK


def cmd_verify(example: int, out: TextIO, grid: Sequence[float] = VERIFY_GRID) -> int:
    """Check the certificate on every feasible grid point and that the error falls.

    A row passes when ``abs_err <= bound_abs`` and, if a relative bound
    exists, ``rel_err <= bound_rel``.  The trend check passes when the
    error at the finest feasible point is below the error at the coarsest
    one or below the 1e-13 floor.
    """
    problem = builtin(example)
    ok = True
    errors = []
    for h in grid:
        plan = plan_mesh(problem.params, h)
        if not plan.feasible:
            print(f"h={h:.6g} SKIP infeasible: " + "; ".join(plan.infeasibility_reasons), file=out)
            continue
        result = integrate(problem, h)
        abs_err = abs(result.value - problem.exact)
        rel_err = abs_err / abs(problem.exact)
        b = result.bound
        passed = abs_err <= b.abs and (b.rel is None or rel_err <= b.rel)
        ok &= passed
        errors.append(abs_err)
        path = "product" if result.used_product_path else "general"
        print(
            f"h={h:.6g} path={path} eval_count={result.eval_count} "
            f"n_total_general={plan.n_total_general} n_total_product={plan.n_total_product} "
            f"abs_err={abs_err:.3e} bound_abs={b.abs:.3e} "
            f"rel_err={rel_err:.3e} bound_rel={_fmt_opt(b.rel)} {'PASS' if passed else 'FAIL'}",
            file=out,
        )
    if not errors:
        print("no feasible grid point", file=out)
        return EXIT_CERTIFICATE
    decreasing = errors[-1] < errors[0] or errors[-1] <= ERROR_FLOOR
    ok &= decreasing
    print(
        f"trend first_err={errors[0]:.3e} last_err={errors[-1]:.3e} "
        f"{'PASS' if decreasing else 'FAIL'}",
        file=out,
    )
    print(f"verify example {example}: {'PASS' if ok else 'FAIL'}", file=out)
    return EXIT_OK if ok else EXIT_CERTIFICATE


def _fmt_opt(v: Optional[float]) -> str:
    return "none" if v is None else f"{v:.3e}"


def _h_list(text: str) -> List[float]:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}")
    if not values or any(not (math.isfinite(v) and v > 0) for v in values):
        raise argparse.ArgumentTypeError(f"mesh sizes must be positive numbers: {text!r}")
    return values


def _positive(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not (math.isfinite(v) and v > 0):
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sinc-iterint",
        description="Certified Sinc approximation of the built-in iterated integrals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="CSV convergence table over a list of mesh sizes")
    p.add_argument("--example", type=int, choices=BUILTIN_IDS, required=True)
    p.add_argument("--h-list", type=_h_list, required=True, help="comma-separated mesh sizes")
    p.add_argument("--formula", choices=("modified", "original"), default="modified")
    p.add_argument("--out", help="output file (default: stdout)")

    p = sub.add_parser("bound", help="error bound components for one mesh size")
    p.add_argument("--example", type=int, choices=BUILTIN_IDS, required=True)
    p.add_argument("--h", type=_positive, required=True)
    p.add_argument("--K", type=_positive, default=None, help="override the growth constant K")

    p = sub.add_parser("verify", help="check the certificate over the built-in mesh grid")
    p.add_argument("--example", type=int, choices=BUILTIN_IDS, required=True)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "sweep":
        if args.out:
            with open(args.out, "w", newline="") as fh:
                return cmd_sweep(args.example, args.h_list, args.formula, fh)
        return cmd_sweep(args.example, args.h_list, args.formula, sys.stdout)
    if args.command == "bound":
        return cmd_bound(args.example, args.h, sys.stdout, K=args.K)
    return cmd_verify(args.example, sys.stdout)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
