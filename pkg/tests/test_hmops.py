from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pluritop import (
    Polynomial,
    QQi,
    SpaceParams,
    WindowMismatch,
    adjoint,
    apply,
    compose,
    frobenius_sq,
    identity,
    lincomb,
    residual,
    restrict,
)
from pluritop.hmops import (
    bh_lhs,
    bh_residual,
    bh_rhs,
    cauchy_dual,
    coordinate,
    coordinate_star,
    delta_cap,
    delta_cap_via_sigma,
    delta_op,
    fejer_sum,
    graded_projection,
    homogeneous_component,
    mz_mz_star,
    mz_power,
    mz_row,
    mz_star,
    mz_star_power,
    pinv_mz_mz_star,
    proj_im_mz,
    proj_im_mz_star,
    sigma,
    sigma_pow,
    sigma_pow_multinomial,
    verify_powers,
)
from pluritop.opcore import diagonal
from pluritop.space import DegreeOverflow, homogeneous_indices

from strategies import operators, polynomials

GRID = [(n, m) for n in (1, 2, 3) for m in (1, 2, 3, 4)]


def same(A, B, d=None):
    return residual(A, B, d).is_zero


def diag_value(T, alpha):
    return T.entry((0, alpha), (0, alpha))


def mono(alpha, c=1):
    return Polynomial(len(alpha), {tuple(alpha): QQi.coerce(c)})


# --- multiplication operators ------------------------------------------------------


def test_mz_star_examples():
    params = SpaceParams(2, 1, 4)
    out = apply(mz_star(params, 2), mono((1, 1)))
    assert out == (mono((0, 1), Fraction(1, 2)), mono((1, 0), Fraction(1, 2)))
    assert all(not p for p in apply(mz_star(params, 2), mono((0, 0))))


@pytest.mark.parametrize("n,m", GRID)
def test_mz_star_is_adjoint_of_row(n, m):
    params = SpaceParams(n, m, 5)
    assert same(mz_star(params, 4), adjoint(mz_row(params, 3)))
    for i in range(n):
        assert same(coordinate_star(params, i, 4), adjoint(coordinate(params, i, 3)))


def test_mz_power_and_star_power():
    params = SpaceParams(2, 3, 7)
    A = mz_power(params, (2, 1), 3)
    B = compose(coordinate(params, 0, 5), compose(coordinate(params, 0, 4), coordinate(params, 1, 3)))
    assert same(A, B)
    assert same(mz_star_power(params, (2, 1), 6), adjoint(mz_power(params, (2, 1), 3)))
    with pytest.raises(DegreeOverflow):
        mz_power(params, (2, 2), 4)


# --- diagonal weights ---------------------------------------------------------------


def test_delta_examples():
    assert diag_value(delta_op(SpaceParams(2, 3, 4), 4), (1, 1)) == 2
    assert diag_value(delta_op(SpaceParams(2, 3, 4), 4), (0, 0)) == 1
    assert diag_value(delta_cap(SpaceParams(2, 4, 4), 4), (2, 1)) == Fraction(7, 4)
    assert same(delta_cap(SpaceParams(3, 1, 4), 4), identity(SpaceParams(3, 1, 4), 4))


@pytest.mark.parametrize("n,m", GRID)
def test_sigma_of_identity(n, m):
    params = SpaceParams(n, m, 6)
    S = sigma(identity(params, 5))
    expected = diagonal(params, 5, lambda k: Fraction(k, m + k - 1) if k else 0)
    assert same(S, expected)


@pytest.mark.parametrize("n,m", GRID)
def test_delta_cap_via_sigma(n, m):
    d = 4
    params = SpaceParams(n, m, d + m)
    assert same(delta_cap_via_sigma(params, d), delta_cap(params, d))


@pytest.mark.parametrize("n,m,j", [(2, 1, 2), (2, 3, 2), (3, 2, 3), (1, 4, 2)])
def test_sigma_pow_multinomial_form(n, m, j):
    params = SpaceParams(n, m, 8)
    T = lincomb([1, QQi(0, 1)], [coordinate(params, 0, 3), coordinate_star(params, n - 1, 3)])
    assert same(sigma_pow(T, j), sigma_pow_multinomial(T, j))


def test_sigma_rejects_small_workspace():
    params = SpaceParams(2, 2, 4)
    with pytest.raises(WindowMismatch):
        sigma(identity(params, 4))


# --- projections -----------------------------------------------------------------------


@pytest.mark.parametrize("n,m", GRID)
def test_projection_is_orthogonal_projection(n, m):
    d = 3
    params = SpaceParams(n, m, d + 2)
    P = proj_im_mz_star(params, d)
    assert same(compose(P, P), P)
    assert same(adjoint(P), P)
    # independent construction: M_z^* delta M_z
    other = compose(mz_star(params, d + 1), compose(delta_op(params, d + 1), mz_row(params, d)))
    assert same(P, other)
    # M_z P = M_z and P M_z^* = M_z^*
    assert same(compose(mz_row(params, d), P), mz_row(params, d))
    assert same(compose(P, mz_star(params, d + 1)), mz_star(params, d + 1))


@pytest.mark.parametrize("m", [1, 2, 5])
def test_projection_is_identity_for_one_variable(m):
    params = SpaceParams(1, m, 6)
    assert same(proj_im_mz_star(params, 5), identity(params, 5))


def test_pinv_inverts_off_constants():
    params = SpaceParams(2, 3, 6)
    A = mz_mz_star(params, 5)
    prod_ = compose(pinv_mz_mz_star(params, 5), A)
    assert same(prod_, lincomb([1, -1], [identity(params, 5), graded_projection(params, 0, 5)]))


@settings(max_examples=40, deadline=None)
@given(st.data(), st.sampled_from(GRID))
def test_cauchy_dual_relations(data, nm):
    n, m = nm
    d = 3
    params = SpaceParams(n, m, d + 2)
    u = data.draw(polynomials(n, d))
    # delta M_z M_z^* u = u - u(0)
    v = apply(proj_im_mz(params, d), u)
    assert v == u - Polynomial.constant(n, u.constant_term())
    # M_z^* M_z' = P_{Im M_z^*} with M_z' = delta M_z
    Md = cauchy_dual(params, d)
    assert same(compose(mz_star(params, d + 1), Md), proj_im_mz_star(params, d))


# --- graded pieces ---------------------------------------------------------------------


def test_graded_projection_examples():
    params = SpaceParams(2, 2, 4)
    p = mono((1, 0)) + mono((1, 1)) + mono((0, 2), 3)
    assert apply(graded_projection(params, 2), p) == mono((1, 1)) + mono((0, 2), 3)
    assert graded_projection(params, -1).is_zero()
    total = lincomb([1] * 5, [graded_projection(params, j) for j in range(5)])
    assert same(total, identity(params, 4))


@settings(max_examples=30, deadline=None)
@given(st.data(), st.integers(-2, 2))
def test_homogeneous_component_matches_projection_sandwich(data, k):
    params = SpaceParams(2, 2, 8)
    T = data.draw(operators(params, 3, band=(-2, 2)))
    oracle = lincomb(
        [1] * 4,
        [compose(graded_projection(params, j + k, T.d_out), compose(T, graded_projection(params, j, 3)))
         for j in range(4)],
    )
    assert same(homogeneous_component(T, k), oracle)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_components_sum_to_operator(data):
    params = SpaceParams(3, 2, 8)
    T = data.draw(operators(params, 3, band=(-2, 2)))
    parts = [homogeneous_component(T, k) for k in range(-3, 3)]
    assert same(lincomb([1] * len(parts), parts), T)


def test_fejer_examples():
    params = SpaceParams(1, 2, 5)
    M = coordinate(params, 0, 3)
    assert same(fejer_sum(M, 1), lincomb([Fraction(1, 2)], [M]))
    assert fejer_sum(M, 0).is_zero()
    I = identity(params, 3)
    assert same(fejer_sum(I, 0), I)


@pytest.mark.parametrize("N", range(0, 8))
def test_fejer_error_closed_form(N):
    params = SpaceParams(2, 2, 8)
    T = lincomb(
        [1, QQi(2, -1), Fraction(-1, 3), QQi(0, 1)],
        [identity(params, 4), coordinate(params, 0, 4), mz_power(params, (1, 2), 4),
         restrict(adjoint(mz_power(params, (0, 2), 4)), 4)],
    )
    err = frobenius_sq(lincomb([1, -1], [fejer_sum(T, N), T]))
    closed = sum(
        (Fraction(min(abs(k), N + 1), N + 1)) ** 2 * frobenius_sq(homogeneous_component(T, k))
        for k in range(-2, 4)
    )
    assert err == closed


# --- the Brown-Halmos identity -----------------------------------------------------


def test_bh_examples():
    params = SpaceParams(1, 1, 8)
    assert bh_residual(coordinate(params, 0, 4), 3).is_zero
    assert bh_residual(identity(params, 4), 3).is_zero
    P0 = graded_projection(params, 0, 4)
    r = bh_residual(P0, 3)
    assert not r.is_zero and r.frobenius_sq == 1


@pytest.mark.parametrize("n,m", GRID)
def test_bh_multiplication_operators(n, m):
    d = 2
    params = SpaceParams(n, m, d + 3 + m)
    for k in (1, 2):
        for g in homogeneous_indices(n, k):
            r1, r2 = verify_powers(params, g, d)
            assert r1.is_zero and r2.is_zero, g


def test_bh_sides_have_tuple_shape():
    params = SpaceParams(2, 2, 8)
    T = coordinate(params, 1, 4)
    L, R = bh_lhs(T, 3), bh_rhs(T, 3)
    assert L.arity_in == L.arity_out == R.arity_in == R.arity_out == 2
    assert L.d_in == R.d_in == 3


def test_bh_window_errors():
    params = SpaceParams(2, 2, 6)
    T = identity(params, 3)
    with pytest.raises(WindowMismatch):
        bh_residual(T, 3)
    with pytest.raises(WindowMismatch):
        bh_residual(identity(SpaceParams(2, 3, 4), 4), 3)
    with pytest.raises(WindowMismatch):
        bh_residual(mz_row(params, 3), 2)


def test_bh_non_toeplitz_diagonal():
    params = SpaceParams(2, 2, 9)
    T = diagonal(params, 4, lambda k: Fraction(1, k + 1))
    assert not bh_residual(T, 3).is_zero
    assert not bh_residual(graded_projection(params, 0, 4), 3).is_zero


def test_bh_rhs_is_operator_itself_for_one_variable_and_m_one():
    params = SpaceParams(1, 1, 8)
    T = lincomb([1, QQi(2, 1)], [coordinate(params, 0, 4), graded_projection(params, 2, 4)])
    assert same(bh_rhs(T, 3), restrict(T, 3), 3)
