"""The multiplication tuple M_z on H_m and the operators built from it.

All constructors take a :class:`SpaceParams` and a window.  Windows are the
input windows of the returned operator; constructors raise
:class:`DegreeOverflow` when the section would leave the workspace ``D``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence

from .opcore import (
    GradedOperator,
    OperatorReport,
    WindowMismatch,
    adjoint,
    compose,
    diagonal,
    direct_sum_n,
    identity,
    lincomb,
    report,
    restrict,
    zero_operator,
)
from .space import DegreeOverflow, SpaceParams, basis_enumerate, gamma, homogeneous_indices, unit

__all__ = [
    "coordinate",
    "coordinate_star",
    "mz_power",
    "mz_row",
    "mz_star",
    "mz_mz_star",
    "pinv_mz_mz_star",
    "delta_op",
    "delta_cap",
    "sigma",
    "sigma_pow",
    "sigma_pow_multinomial",
    "mz_star_power",
    "alternating_coefficients",
    "delta_cap_via_sigma",
    "proj_im_mz_star",
    "proj_im_mz",
    "cauchy_dual",
    "graded_projection",
    "homogeneous_component",
    "fejer_sum",
    "bh_lhs",
    "bh_rhs",
    "bh_residual",
    "verify_powers",
]


def _need(params: SpaceParams, top: int, what: str):
    if top > params.D:
        raise DegreeOverflow(f"{what} needs degree {top} but workspace D={params.D}")


def _shift(alpha, i, by):
    return alpha[:i] + (alpha[i] + by,) + alpha[i + 1:]


# --- multiplication operators ---------------------------------------------------


def mz_power(params: SpaceParams, gamma_: Sequence[int], d_in: int) -> GradedOperator:
    """M_z^gamma = multiplication by z^gamma on degrees <= d_in."""
    g = tuple(gamma_)
    k = sum(g)
    _need(params, d_in + k, "mz_power")
    one = params.one()
    cols = {}
    for beta in basis_enumerate(params.n, d_in):
        cols[(0, beta)] = {(0, tuple(a + b for a, b in zip(g, beta))): one}
    return GradedOperator(params, 1, 1, d_in, d_in + k, cols, (k, k), validate=False)


def coordinate(params: SpaceParams, i: int, d_in: int) -> GradedOperator:
    """M_{z_i} (0-based ``i``)."""
    return mz_power(params, unit(params.n, i), d_in)


def coordinate_star(params: SpaceParams, i: int, d_in: int) -> GradedOperator:
    """M_{z_i}^*: z^alpha -> alpha_i / (m + |alpha| - 1) z^(alpha - e_i)."""
    _need(params, d_in, "coordinate_star")
    m = params.m
    cols = {}
    for alpha in basis_enumerate(params.n, d_in):
        if alpha[i]:
            w = Fraction(alpha[i], m + sum(alpha) - 1)
            cols[(0, alpha)] = {(0, _shift(alpha, i, -1)): params.scalar(w)}
    return GradedOperator(params, 1, 1, d_in, max(d_in - 1, 0), cols, (-1, -1),
                          validate=False)


def mz_row(params: SpaceParams, d_in: int) -> GradedOperator:
    """Row operator H^n -> H, (f_i) -> sum_i z_i f_i."""
    _need(params, d_in + 1, "mz_row")
    one = params.one()
    cols = {}
    for i in range(params.n):
        for beta in basis_enumerate(params.n, d_in):
            cols[(i, beta)] = {(0, _shift(beta, i, 1)): one}
    return GradedOperator(params, params.n, 1, d_in, d_in + 1, cols, (1, 1), validate=False)


def mz_star(params: SpaceParams, d_in: int) -> GradedOperator:
    """Column operator H -> H^n, f -> (M_{z_i}^* f)_i.

    Coincides with ``adjoint(mz_row(params, d_in - 1))``.
    """
    _need(params, d_in, "mz_star")
    m = params.m
    cols = {}
    for alpha in basis_enumerate(params.n, d_in):
        k = sum(alpha)
        col = {}
        for i in range(params.n):
            if alpha[i]:
                col[(i, _shift(alpha, i, -1))] = params.scalar(Fraction(alpha[i], m + k - 1))
        cols[(0, alpha)] = col
    return GradedOperator(params, 1, params.n, d_in, max(d_in - 1, 0), cols, (-1, -1),
                          validate=False)


def mz_mz_star(params: SpaceParams, d: int) -> GradedOperator:
    """M_z M_z^* on degrees <= d, as the composition of the two sections."""
    return compose(mz_row(params, max(d - 1, 0)), mz_star(params, d))


def pinv_mz_mz_star(params: SpaceParams, d: int) -> GradedOperator:
    """Pseudo-inverse of M_z M_z^* = sum_j j/(m+j-1) P_j; zero on constants."""
    m = params.m
    return diagonal(params, d, lambda k: Fraction(m + k - 1, k) if k else 0)


# --- diagonal operators --------------------------------------------------------


def delta_op(params: SpaceParams, d: int) -> GradedOperator:
    """delta: fixes constants and scales degree k >= 1 by (m + k - 1) / k."""
    _need(params, d, "delta_op")
    m = params.m
    return diagonal(params, d, lambda k: Fraction(m + k - 1, k) if k else 1)


def delta_cap(params: SpaceParams, d: int) -> GradedOperator:
    """Delta: scales degree k by (m + k) / (k + 1)."""
    _need(params, d, "delta_cap")
    m = params.m
    return diagonal(params, d, lambda k: Fraction(m + k, k + 1))


# --- sigma -----------------------------------------------------------------------


def _check_scalar(T: GradedOperator, what: str):
    if T.arity_in != 1 or T.arity_out != 1:
        raise WindowMismatch(f"{what} needs an operator on the scalar space")


def sigma(T: GradedOperator) -> GradedOperator:
    """sigma(T) = sum_i M_{z_i} T M_{z_i}^*; the input window of T is kept."""
    _check_scalar(T, "sigma")
    params = T.params
    if T.d_out + 1 > params.D:
        raise WindowMismatch(f"sigma needs degree {T.d_out + 1} but D={params.D}")
    terms = []
    for i in range(params.n):
        inner = compose(T, coordinate_star(params, i, T.d_in))
        terms.append(compose(coordinate(params, i, T.d_out), inner))
    return lincomb([1] * len(terms), terms)


def sigma_pow(T: GradedOperator, j: int) -> GradedOperator:
    """j-fold iterate of sigma."""
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    out = T
    for _ in range(j):
        out = sigma(out)
    return out


def mz_star_power(params: SpaceParams, gamma_: Sequence[int], d_in: int) -> GradedOperator:
    """M_z^{*gamma}: z^beta -> rho(beta - gamma) / rho(beta) z^(beta - gamma) for beta >= gamma."""
    g = tuple(gamma_)
    k = sum(g)
    _need(params, d_in, "mz_star_power")
    rho = params.rho
    cols = {}
    for beta in basis_enumerate(params.n, d_in):
        low = tuple(b - a for a, b in zip(g, beta))
        if min(low) >= 0:
            cols[(0, beta)] = {(0, low): params.scalar(rho(low) / rho(beta))}
    return GradedOperator(params, 1, 1, d_in, max(d_in - k, 0), cols, (-k, -k),
                          validate=False)


def sigma_pow_multinomial(T: GradedOperator, j: int) -> GradedOperator:
    """sum_{|alpha|=j} gamma_alpha M_z^alpha T M_z^{*alpha}, the expanded form of sigma^j."""
    _check_scalar(T, "sigma_pow_multinomial")
    params = T.params
    if j == 0:
        return T
    if T.d_out + j > params.D:
        raise WindowMismatch(f"sigma^{j} needs degree {T.d_out + j} but D={params.D}")
    coeffs, terms = [], []
    for alpha in homogeneous_indices(params.n, j):
        inner = compose(T, mz_star_power(params, alpha, T.d_in))
        coeffs.append(gamma(alpha))
        terms.append(compose(mz_power(params, alpha, T.d_out), inner))
    return lincomb(coeffs, terms)


def alternating_coefficients(m: int) -> list[int]:
    """(-1)^j binom(m, j+1) for j = 0..m-1."""
    return [(-1) ** j * comb(m, j + 1) for j in range(m)]


def _alternating_sum(T: GradedOperator) -> GradedOperator:
    m = T.params.m
    coeffs = alternating_coefficients(m)
    powers = [T]
    for _ in range(1, m):
        powers.append(sigma(powers[-1]))
    return lincomb(coeffs, powers)


def delta_cap_via_sigma(params: SpaceParams, d: int) -> GradedOperator:
    """Delta assembled as sum_j (-1)^j binom(m, j+1) sigma^j(I)."""
    _need(params, d + params.m - 1, "delta_cap_via_sigma")
    return _alternating_sum(identity(params, d))


# --- projections and the Cauchy dual ----------------------------------------------


def proj_im_mz_star(params: SpaceParams, d: int) -> GradedOperator:
    """Orthogonal projection of H^n onto Im M_z^*, as M_z^* pinv(M_z M_z^*) M_z."""
    _need(params, d + 1, "proj_im_mz_star")
    inner = compose(pinv_mz_mz_star(params, d + 1), mz_row(params, d))
    return compose(mz_star(params, d + 1), inner)


def proj_im_mz(params: SpaceParams, d: int) -> GradedOperator:
    """P_{Im M_z} realised as delta M_z M_z^*."""
    return compose(delta_op(params, d), mz_mz_star(params, d))


def cauchy_dual(params: SpaceParams, d: int) -> GradedOperator:
    """M_z' = delta M_z on tuples of degree <= d."""
    _need(params, d + 1, "cauchy_dual")
    return compose(delta_op(params, d + 1), mz_row(params, d))


def graded_projection(params: SpaceParams, j: int, d: int | None = None) -> GradedOperator:
    """P_{H_j} on the window ``d`` (default ``params.D``); zero for j < 0."""
    if d is None:
        d = params.D
    if j < 0 or j > d:
        return zero_operator(params, d)
    return diagonal(params, d, lambda k: 1 if k == j else 0)


# --- homogeneous components --------------------------------------------------------


def homogeneous_component(T: GradedOperator, k: int) -> GradedOperator:
    """T_k: the entries of T shifting degree by exactly k (= sum_j P_{j+k} T P_j)."""
    cols = {}
    for row, col, v in T.entries():
        if sum(row[1]) - sum(col[1]) == k:
            cols.setdefault(col, {})[row] = v
    return GradedOperator(T.params, T.arity_in, T.arity_out, T.d_in, T.d_out, cols, (k, k),
                          validate=False)


def fejer_sum(T: GradedOperator, N: int) -> GradedOperator:
    """Fejer mean sum_{|k|<=N} (1 - |k|/(N+1)) T_k."""
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    coeffs, parts = [], []
    lo, hi = T.band
    for k in range(max(-N, lo), min(N, hi) + 1):
        coeffs.append(Fraction(N + 1 - abs(k), N + 1))
        parts.append(homogeneous_component(T, k))
    if not parts:
        return zero_operator(T.params, T.d_in, T.d_out, T.arity_in, T.arity_out)
    return lincomb(coeffs, parts)


# --- the Brown-Halmos identity -------------------------------------------------------


def _bh_window(T: GradedOperator, d: int | None) -> int:
    _check_scalar(T, "the Brown-Halmos test")
    if d is None:
        d = T.d_in - 1
    if d < 0 or d + 1 > T.d_in:
        raise WindowMismatch(
            f"trusted window d={d} needs T.d_in >= {d + 1}, operator has d_in={T.d_in}"
        )
    return d


def bh_lhs(T: GradedOperator, d: int | None = None) -> GradedOperator:
    """M_z'^* T M_z' = M_z^* delta T delta M_z on tuples of degree <= d."""
    d = _bh_window(T, d)
    params = T.params
    if T.d_out > params.D:
        raise WindowMismatch(f"T.d_out={T.d_out} exceeds workspace D={params.D}")
    right = cauchy_dual(params, d)
    middle = compose(T, right)
    left = compose(mz_star(params, T.d_out), delta_op(params, T.d_out))
    return compose(left, middle)


def bh_rhs(T: GradedOperator, d: int | None = None) -> GradedOperator:
    """P (+) [sum_j (-1)^j binom(m, j+1) sigma^j(T)] P with P onto Im M_z^*."""
    d = _bh_window(T, d)
    params = T.params
    need = T.d_out + params.m
    if need > params.D:
        raise WindowMismatch(
            f"the sigma powers of T need degree {need} for m={params.m}, workspace D={params.D}"
        )
    X = _alternating_sum(restrict(T, d))
    inner = compose(direct_sum_n(X), proj_im_mz_star(params, d))
    return compose(proj_im_mz_star(params, X.d_out), inner)


def bh_residual(T: GradedOperator, d: int | None = None) -> OperatorReport:
    """Residual of the Brown-Halmos identity on tuples of degree <= d."""
    d = _bh_window(T, d)
    diff = lincomb([1, -1], [bh_lhs(T, d), bh_rhs(T, d)])
    return report(diff, d)


def verify_powers(params: SpaceParams, gamma_: Sequence[int], d: int) -> tuple[OperatorReport, OperatorReport]:
    """Brown-Halmos residuals of M_z^gamma and of M_z^{*gamma} on window d."""
    g = tuple(gamma_)
    k = sum(g)
    power = mz_power(params, g, d + 1)
    # the adjoint of the section on degrees <= d+1 is exact on degrees <= d+1+k
    power_star = restrict(adjoint(power), d + 1)
    return bh_residual(power, d), bh_residual(power_star, d)
