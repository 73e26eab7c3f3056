"""Cohen-Macaulay tests for multiplicative invariant rings over F_p."""

from ._minvar import (
    BoundExceeded,
    builtin_jobspec,
    builtin_names,
    check_g1_decomposition,
    classify,
    cohomology_dims,
    column_hnf,
    group_elements,
    group_order,
    height_ir,
    invariant_dim_in_ball,
    mu_action,
    mu_p,
    run,
    selftest,
    snf,
)

__all__ = [
    "BoundExceeded",
    "analyze",
    "builtin_jobspec",
    "builtin_names",
    "check_g1_decomposition",
    "classify",
    "cohomology",
    "cohomology_dims",
    "column_hnf",
    "group_elements",
    "group_order",
    "height_ir",
    "invariant_dim_in_ball",
    "invariants",
    "mu_action",
    "mu_p",
    "run",
    "selftest",
    "snf",
]


def analyze(jobspec):
    return run("analyze", jobspec)


def cohomology(jobspec, depth=None):
    return run("cohomology", jobspec, depth)


def invariants(jobspec, ball=None):
    return run("invariants", jobspec, ball)
