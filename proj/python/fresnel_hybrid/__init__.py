"""Fresnel integrals C(x), S(x) and G(x) = C(x) + iS(x).

Three branches with analytic error bounds: a truncated Taylor series near
zero, a modified trapezoid rule in the middle range and an asymptotic
expansion for large arguments.
"""

from ._core import (
    HybridPlan,
    __version__,
    asym_bound,
    clothoid_sample,
    default_double_plan,
    double_factorial,
    evaluate,
    fresnel_c,
    fresnel_g,
    fresnel_s,
    min_trap_order,
    oracle_g,
    plan,
    selftest,
    solve_x1,
    solve_x2,
    taylor_bound,
    trap_bound,
)

__all__ = [
    "HybridPlan",
    "__version__",
    "asym_bound",
    "clothoid_sample",
    "default_double_plan",
    "double_factorial",
    "evaluate",
    "fresnel_c",
    "fresnel_g",
    "fresnel_s",
    "min_trap_order",
    "oracle_g",
    "plan",
    "selftest",
    "solve_x1",
    "solve_x2",
    "taylor_bound",
    "trap_bound",
]
