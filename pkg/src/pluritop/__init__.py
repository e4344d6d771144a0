"""Exact finite-section toolkit for Toeplitz operators with pluriharmonic symbol on H_m(B_n)."""

from .scalars import QQi
from .space import (
    DegreeOverflow,
    Polynomial,
    SpaceParams,
    basis_enumerate,
    evaluate,
    gamma,
    inner_product,
    kernel_polynomial,
    kernel_truncated,
    rho,
)
from .opcore import (
    ArityMismatch,
    GradedOperator,
    OperatorReport,
    WindowMismatch,
    adjoint,
    apply,
    compose,
    direct_sum_n,
    frobenius_sq,
    identity,
    lincomb,
    report,
    residual,
    restrict,
    zero_operator,
)
from .hmops import (
    bh_lhs,
    bh_residual,
    bh_rhs,
    cauchy_dual,
    delta_cap,
    delta_cap_via_sigma,
    delta_op,
    fejer_sum,
    graded_projection,
    homogeneous_component,
    mz_row,
    mz_star,
    proj_im_mz_star,
    sigma,
    sigma_pow,
    verify_powers,
)
from .toeplitz import (
    ClassificationReport,
    PluriharmonicSymbol,
    Verdict,
    analytic_toeplitz,
    canonicalize,
    classify,
    coanalytic_toeplitz,
    recover_symbol,
    toeplitz_op,
)

__version__ = "0.1.0"
