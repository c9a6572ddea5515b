"""Numerical toolkit for operators on semi-Hilbertian spaces.

A positive semidefinite weight ``A`` induces the semi-inner product
``<x, y>_A = <Ax, y>``.  This package computes the induced operator
calculus on finite-dimensional spaces — weighted adjoints, seminorms,
absolute-value powers, and numerical radii of block operator matrices —
and ships every supported radius/norm inequality as an executable,
fuzz-testable bound checker with parameter optimizers, plus a
finite-difference application and a batch CLI.
"""

from .blockops import BLOCK_KINDS, BlockSpec, assemble, dsum_context
from .fuzz import (
    A_KINDS,
    T_KINDS,
    CampaignReport,
    GenSpec,
    campaign_to_obj,
    gen_context,
    gen_operator,
    replay,
    run_campaign,
)
from .inequalities import (
    BoundParams,
    BoundReport,
    DomainViolation,
    NotAPositive,
    NotUnitVector,
    ParamGrid,
    UnknownId,
    VIOLATION_RTOL,
    check_holder_mccarthy,
    check_matrix_bound,
    check_mixed_schwarz,
    check_product_bound,
    check_scalar_lemma,
    check_single_operator_bound,
    check_vector_lemma,
    evaluate_bound,
    optimize_params,
    optimize_refined_alpha_bound,
    registry_entry,
    registry_ids,
)
from .linalg import (
    ConvergenceFailure,
    DIM_CAP,
    DimensionMismatch,
    DomainError,
    NonSquare,
    NotHermitian,
    NotPSD,
    Spectrum,
    as_matrix,
    as_vector,
    classical_numerical_radius,
    hermitian_eig,
    pinv,
    psd_power,
    psd_sqrt,
    spectral_norm,
)
from .pde import (
    EllipticSpec,
    InvalidSpec,
    PreconditionerReport,
    SingularOperator,
    SingularPreconditioner,
    assemble_fd,
    consistency_order,
    convergence_rows,
    preconditioner_report,
    richardson_contraction,
    stability_report,
    truncation_error,
    write_convergence_csv,
)
from .semihilbert import (
    DegenerateContext,
    NotPositive,
    ReducedOperator,
    SemiInnerContext,
    a_abs_power,
    a_adjoint,
    a_numerical_radius,
    a_numerical_radius_lower,
    is_a_positive,
    is_a_selfadjoint,
    make_context,
    op_seminorm,
    preserves_kernel,
    reduce,
    semi_inner,
    vec_seminorm,
)

__version__ = "0.1.0"

__all__ = [
    "A_KINDS",
    "BLOCK_KINDS",
    "BlockSpec",
    "BoundParams",
    "BoundReport",
    "CampaignReport",
    "ConvergenceFailure",
    "DIM_CAP",
    "DegenerateContext",
    "DimensionMismatch",
    "DomainError",
    "DomainViolation",
    "EllipticSpec",
    "GenSpec",
    "InvalidSpec",
    "NonSquare",
    "NotAPositive",
    "NotHermitian",
    "NotPSD",
    "NotPositive",
    "NotUnitVector",
    "ParamGrid",
    "PreconditionerReport",
    "ReducedOperator",
    "SemiInnerContext",
    "SingularOperator",
    "SingularPreconditioner",
    "Spectrum",
    "T_KINDS",
    "UnknownId",
    "VIOLATION_RTOL",
    "a_abs_power",
    "a_adjoint",
    "a_numerical_radius",
    "a_numerical_radius_lower",
    "as_matrix",
    "as_vector",
    "assemble",
    "assemble_fd",
    "campaign_to_obj",
    "check_holder_mccarthy",
    "check_matrix_bound",
    "check_mixed_schwarz",
    "check_product_bound",
    "check_scalar_lemma",
    "check_single_operator_bound",
    "check_vector_lemma",
    "classical_numerical_radius",
    "consistency_order",
    "convergence_rows",
    "dsum_context",
    "evaluate_bound",
    "gen_context",
    "gen_operator",
    "hermitian_eig",
    "is_a_positive",
    "is_a_selfadjoint",
    "make_context",
    "op_seminorm",
    "optimize_params",
    "optimize_refined_alpha_bound",
    "pinv",
    "preconditioner_report",
    "preserves_kernel",
    "psd_power",
    "psd_sqrt",
    "reduce",
    "registry_entry",
    "registry_ids",
    "replay",
    "richardson_contraction",
    "run_campaign",
    "semi_inner",
    "spectral_norm",
    "stability_report",
    "truncation_error",
    "vec_seminorm",
    "write_convergence_csv",
]
