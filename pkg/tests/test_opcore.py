from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pluritop import (
    GradedOperator,
    Polynomial,
    QQi,
    SpaceParams,
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
from pluritop.hmops import alternating_coefficients, coordinate, mz_row, mz_star
from pluritop.opcore import ArityMismatch, tuple_inner_product
from pluritop.space import DegreeOverflow, basis_enumerate, inner_product

from strategies import gaussian_rationals, operators

P23 = SpaceParams(2, 3, 8)


def basis_vector(n, alpha):
    return Polynomial(n, {alpha: QQi(1)})


def same(A, B, d=None):
    return residual(A, B, d).is_zero


# --- apply -------------------------------------------------------------------------


def test_apply_examples():
    p = Polynomial(2, {(1, 0): QQi(3), (0, 2): QQi(1, 1)})
    assert apply(zero_operator(P23, 3), p) == Polynomial.zero(2)
    assert apply(identity(P23, 3), p) == p
    z2 = basis_vector(2, (0, 1))
    assert apply(coordinate(P23, 0, 3), z2) == basis_vector(2, (1, 1))


def test_apply_rejects_high_degree():
    with pytest.raises(DegreeOverflow):
        apply(identity(P23, 2), basis_vector(2, (3, 0)))


def test_apply_tuple():
    R = mz_row(P23, 2)
    out = apply(R, (basis_vector(2, (0, 0)), Polynomial.zero(2)))
    assert out == basis_vector(2, (1, 0))


# --- construction ------------------------------------------------------------------


def test_constructor_validates_band_and_windows():
    one = QQi(1)
    with pytest.raises(ValueError):
        GradedOperator(P23, 1, 1, 2, 3, {(0, (0, 0)): {(0, (1, 1)): one}}, (0, 1))
    with pytest.raises(WindowMismatch):
        GradedOperator(P23, 1, 1, 3, 3, {}, (0, 1))
    with pytest.raises(DegreeOverflow):
        GradedOperator(P23, 1, 1, 9, 9, {}, (0, 0))
    T = GradedOperator(P23, 1, 1, 2, 4, {(0, (1, 0)): {(0, (1, 2)): one}})
    assert T.band == (2, 2)


# --- compose / lincomb ---------------------------------------------------------------


def test_compose_examples():
    T = coordinate(P23, 1, 3)
    assert same(compose(identity(P23, 4), T), T)
    A = compose(coordinate(P23, 0, 4), coordinate(P23, 1, 3))
    B = compose(coordinate(P23, 1, 4), coordinate(P23, 0, 3))
    assert same(A, B)
    assert A.band == (2, 2) and A.d_in == 3 and A.d_out == 5


def test_compose_refuses_truncation():
    with pytest.raises(WindowMismatch):
        compose(coordinate(P23, 0, 3), coordinate(P23, 0, 3))
    with pytest.raises(ArityMismatch):
        compose(mz_row(P23, 4), identity(P23, 3))


def test_lincomb_examples():
    T = coordinate(P23, 0, 3)
    assert lincomb([1, -1], [T, T]).is_zero()
    two = lincomb([2], [identity(P23, 3)])
    assert all(v == 2 for _, _, v in two.entries())
    assert two.nnz == len(basis_enumerate(2, 3))
    assert alternating_coefficients(3) == [3, -3, 1]
    with pytest.raises(ArityMismatch):
        lincomb([1, 1], [identity(P23, 2), mz_row(P23, 2)])


def test_lincomb_keeps_all_outputs():
    A = identity(P23, 3)
    B = coordinate(P23, 0, 3)
    C = lincomb([1, 1], [A, B])
    assert C.d_in == 3 and C.d_out == 4 and C.band == (0, 1)
    assert C.nnz == A.nnz + B.nnz


# --- adjoint -----------------------------------------------------------------------


def test_adjoint_examples():
    I = identity(P23, 3)
    assert same(adjoint(I), I)
    # M_{z_1}^* z^alpha = alpha_1 / (m + |alpha| - 1) z^(alpha - e_1); m = 3
    A = adjoint(coordinate(P23, 0, 3))
    out = apply(A, basis_vector(2, (2, 1)))
    assert out == Polynomial(2, {(1, 1): QQi(Fraction(2, 5))})
    assert apply(A, basis_vector(2, (0, 0))) == Polynomial.zero(2)


def test_adjoint_windows_swap_and_involution():
    T = compose(coordinate(P23, 1, 4), coordinate(P23, 0, 3))
    A = adjoint(T)
    assert (A.d_in, A.d_out, A.band) == (T.d_out, T.d_in, (-2, -2))
    AA = adjoint(A)
    assert (AA.d_in, AA.d_out) == (T.d_in, T.d_out)
    assert sorted(AA.entries()) == sorted(T.entries())


@settings(max_examples=40, deadline=None)
@given(st.data(), st.integers(1, 3), st.integers(1, 4))
def test_adjoint_gram_identity(data, n, m):
    params = SpaceParams(n, m, 6)
    T = data.draw(operators(params, 3))
    A = adjoint(T)
    for beta in basis_enumerate(n, T.d_in):
        p = basis_vector(n, beta)
        Tp = apply(T, p)
        for alpha in basis_enumerate(n, T.d_out):
            q = basis_vector(n, alpha)
            assert inner_product(Tp, q, m) == inner_product(p, apply(A, q), m)


def test_adjoint_gram_identity_tuple_space():
    params = SpaceParams(3, 2, 5)
    R = mz_row(params, 3)
    A = adjoint(R)
    n = params.n
    for c in range(n):
        for beta in basis_enumerate(n, 3):
            p = tuple(basis_vector(n, beta) if i == c else Polynomial.zero(n) for i in range(n))
            Rp = apply(R, p)
            for alpha in basis_enumerate(n, 4):
                q = basis_vector(n, alpha)
                assert inner_product(Rp, q, 2) == tuple_inner_product(p, apply(A, q), 2)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_adjoint_reverses_composition(data):
    params = SpaceParams(2, 2, 9)
    T = data.draw(operators(params, 3, band=(-1, 2)))
    S = data.draw(operators(params, 5, band=(-2, 1)))
    lhs = adjoint(compose(S, T))
    rhs = compose(adjoint(T), adjoint(S))
    assert sorted(lhs.entries()) == sorted(rhs.entries())


# --- algebraic laws ------------------------------------------------------------------


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_compose_associative_and_distributive(data):
    params = SpaceParams(2, 3, 9)
    T = data.draw(operators(params, 2, band=(0, 1)))
    S = data.draw(operators(params, 3, band=(-1, 1)))
    S2 = data.draw(operators(params, 3, band=(-1, 1)))
    R = data.draw(operators(params, 4, band=(-2, 2)))
    a, b = data.draw(gaussian_rationals), data.draw(gaussian_rationals)
    assert same(compose(R, compose(S, T)), compose(compose(R, S), T))
    assert same(compose(lincomb([a, b], [S, S2]), T),
                lincomb([a, b], [compose(S, T), compose(S2, T)]))
    T2 = data.draw(operators(params, 2, band=(0, 1)))
    assert same(compose(S, lincomb([a, b], [T, T2])),
                lincomb([a, b], [compose(S, T), compose(S, T2)]))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_band_bookkeeping(data):
    params = SpaceParams(2, 2, 8)
    T = data.draw(operators(params, 3, band=(-1, 2)))
    lo, hi = T.band
    for beta in basis_enumerate(2, 3):
        out = apply(T, basis_vector(2, beta))
        for alpha in out:
            assert sum(beta) + lo <= sum(alpha) <= sum(beta) + hi


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_frobenius_zero_iff_operator_zero(data):
    params = SpaceParams(2, 2, 8)
    T = data.draw(operators(params, 3))
    kills_basis = all(not apply(T, basis_vector(2, b)) for b in basis_enumerate(2, 3))
    assert (frobenius_sq(T) == 0) == T.is_zero() == kills_basis


# --- frobenius ---------------------------------------------------------------------


def test_frobenius_examples():
    assert frobenius_sq(zero_operator(P23, 3)) == 0
    assert frobenius_sq(identity(P23, 3)) == len(basis_enumerate(2, 3))
    M = coordinate(SpaceParams(1, 1, 3), 0, 1)
    assert frobenius_sq(M) == 2


@pytest.mark.parametrize("n,m", [(1, 3), (2, 2), (3, 1)])
def test_frobenius_matches_orthonormal_dense(n, m):
    params = SpaceParams(n, m, 6)
    T = lincomb([QQi(1, 2), QQi(Fraction(-1, 3))],
                [coordinate(params, 0, 4), adjoint(coordinate(params, n - 1, 4))])
    dense = T.to_dense(orthonormal=True)
    assert float(frobenius_sq(T)) == pytest.approx(np.sum(np.abs(dense) ** 2), rel=1e-12)


# --- restrict / direct sum ---------------------------------------------------------


def test_restrict_examples():
    T = coordinate(P23, 0, 5)
    assert same(restrict(T, 5), T)
    assert restrict(zero_operator(P23, 4), 2).is_zero()
    R = restrict(coordinate(SpaceParams(3, 1, 6), 0, 5), 3)
    assert len({col for _, col, _ in R.entries()}) == 20
    with pytest.raises(DegreeOverflow):
        restrict(T, 6)


def test_direct_sum_examples():
    params = SpaceParams(3, 2, 6)
    assert direct_sum_n(zero_operator(params, 3)).is_zero()
    assert same(direct_sum_n(identity(params, 3)), identity(params, 3, arity=3))
    T = lincomb([1, QQi(0, 2)], [coordinate(params, 1, 3), adjoint(coordinate(params, 2, 3))])
    assert frobenius_sq(direct_sum_n(T)) == 3 * frobenius_sq(T)


def test_report_float_threshold():
    params = SpaceParams(1, 1, 3, "float")
    tiny = lincomb([1e-10], [identity(params, 3)])
    assert report(tiny).is_zero
    big = lincomb([1e-8], [identity(params, 3)])
    assert not report(big).is_zero


def test_to_dense_exact_layout():
    params = SpaceParams(2, 1, 3)
    M = mz_star(params, 2)
    dense = M.to_dense()
    assert dense.shape == (2 * 3, 6)
    assert dense[0 * 3 + 0, 1] == 1  # component 0, row z^0, column z_1
