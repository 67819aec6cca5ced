"""Storage schemes over unidirectional ring networks."""

from ._ringstore import (  # noqa: F401
    ReconstructionPlan,
    RepairPlan,
    RingSim,
    RingstoreError,
    Scheme,
    build_cauchy_mds,
    build_ed_matrix,
    check_full_mds,
    check_weak_column_mds,
    check_weak_row_mds,
    cut_constraints,
    euclid_chain,
    execute_reconstruction,
    execute_repair,
    greedy_mds_columns,
    mat_rank,
    plan_reconstruction,
    plan_repair,
    reconstruct_lower_bound,
)

__all__ = [name for name in dir() if not name.startswith("_")]
