"""Identity suite run by ``pluritop verify``.

Each check produces a :class:`Check`: a residual report plus whether a zero
residual was expected.  Negative controls expect a nonzero residual.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import hmops
from .opcore import (
    GradedOperator,
    OperatorReport,
    adjoint,
    apply,
    compose,
    direct_sum_n,
    identity,
    lincomb,
    residual,
    restrict,
)
from .scalars import FLOAT_ZERO_TOL, QQi, abs2
from .space import (
    Polynomial,
    SpaceParams,
    basis_enumerate,
    homogeneous_indices,
    inner_product,
    kernel_polynomial,
)
from .toeplitz import (
    PluriharmonicSymbol,
    analytic_toeplitz,
    canonicalize,
    recover_symbol,
    toeplitz_op,
)

SYMBOL_DEGREE = 3


@dataclass(frozen=True)
class Check:
    name: str
    report: OperatorReport
    expect_zero: bool = True

    @property
    def passed(self) -> bool:
        return self.report.is_zero == self.expect_zero


# --- random data ----------------------------------------------------------------------


def random_rational(rng: random.Random) -> Fraction:
    """a/b with a in [-9, 9] and b in [1, 4]."""
    return Fraction(rng.randint(-9, 9), rng.randint(1, 4))


def random_polynomial(n: int, degree: int, rng: random.Random) -> Polynomial:
    """Every monomial of degree <= ``degree`` gets a random complex rational coefficient."""
    return Polynomial(n, {
        alpha: QQi(random_rational(rng), random_rational(rng))
        for alpha in basis_enumerate(n, degree)
    })


def random_symbol(n: int, degree: int, rng: random.Random) -> PluriharmonicSymbol:
    g = random_polynomial(n, degree, rng)
    h = random_polynomial(n, degree, rng)
    return PluriharmonicSymbol(g, h)


def random_symbols(n: int, count: int, seed: int, degree: int = SYMBOL_DEGREE) -> list:
    rng = random.Random(seed)
    return [random_symbol(n, degree, rng) for _ in range(count)]


def suite_params(n: int, m: int, d: int, mode: str = "exact") -> SpaceParams:
    """Workspace large enough for degree-3 symbols on trusted window d."""
    return SpaceParams(n, m, d + SYMBOL_DEGREE + 1 + m, mode)


# --- reusable checks -----------------------------------------------------------------


def multiplication_residual(T: GradedOperator, d: int) -> OperatorReport:
    """Compare T with multiplication by T(1) on degrees <= d."""
    params = T.params
    q = apply(T, Polynomial.constant(params.n, params.one()))
    top = d + max(q.degree, 0)
    M = analytic_toeplitz(q, params.with_degree(max(params.D, top)), d)
    return residual(restrict(T, d), M, d)


def symbol_distance(a: PluriharmonicSymbol, b: PluriharmonicSymbol, params: SpaceParams) -> OperatorReport:
    """Squared coefficient distance between two symbols, as a report."""
    total = Fraction(0) if params.exact else 0.0
    for pa, pb in ((a.g, b.g), (a.h, b.h)):
        diff = pa.map_coeffs(params.scalar) - pb.map_coeffs(params.scalar)
        for _, c in diff.items():
            total += abs2(c)
    is_zero = (total == 0) if params.exact else total <= FLOAT_ZERO_TOL
    return OperatorReport(is_zero, total, max(a.g.degree, a.h.degree, b.g.degree, b.h.degree))


def _value_report(value, params: SpaceParams, degree: int) -> OperatorReport:
    size = abs2(value)
    if params.exact:
        size = Fraction(size)
        return OperatorReport(size == 0, size, degree)
    return OperatorReport(size <= FLOAT_ZERO_TOL, float(size), degree)


def structural_checks(params: SpaceParams, d: int) -> list[Check]:
    """Identities between the diagonal operators, M_z and the projections."""
    n, m = params.n, params.m
    out = []
    out.append(Check("mz_star = adjoint(mz_row)",
                     residual(hmops.mz_star(params, d), adjoint(hmops.mz_row(params, d - 1)), d)))
    graded = lincomb(
        [Fraction(j, m + j - 1) for j in range(1, d + 1)],
        [hmops.graded_projection(params, j, d) for j in range(1, d + 1)],
    ) if d >= 1 else None
    if graded is not None:
        out.append(Check("M_z M_z^* = sum_j j/(m+j-1) P_j",
                         residual(hmops.mz_mz_star(params, d), graded, d)))
    out.append(Check("Delta = sum_j (-1)^j binom(m,j+1) sigma^j(1)",
                     residual(hmops.delta_cap_via_sigma(params, d), hmops.delta_cap(params, d), d)))
    out.append(Check("delta M_z = M_z (+)Delta",
                     residual(compose(hmops.delta_op(params, d + 1), hmops.mz_row(params, d)),
                              compose(hmops.mz_row(params, d),
                                      direct_sum_n(hmops.delta_cap(params, d))), d)))
    P = hmops.proj_im_mz_star(params, d)
    out.append(Check("P_{Im M_z^*} idempotent", residual(compose(P, P), P, d)))
    out.append(Check("P_{Im M_z^*} self-adjoint", residual(adjoint(P), P, d)))
    S = hmops.mz_star(params, d)
    out.append(Check("P_{Im M_z^*} fixes Im M_z^*", residual(compose(P, S), S, d)))
    if d >= 1:
        I = identity(params, d)
        out.append(Check("delta M_z M_z^* = I - P_{H_0}",
                         residual(hmops.proj_im_mz(params, d),
                                  lincomb([1, -1], [I, hmops.graded_projection(params, 0, d)]), d)))
    # (M_z^* M_z)(M_z^* delta) = M_z^* on the image of M_z
    lhs = compose(compose(hmops.mz_star(params, d + 1), hmops.mz_row(params, d)),
                  compose(hmops.mz_star(params, d), hmops.delta_op(params, d)))
    out.append(Check("M_z^* delta solves the normal equation", residual(lhs, S, d)))
    if n == 1:
        out.append(Check("n = 1: P_{Im M_z^*} = I", residual(P, identity(params, d), d)))
    return out


def powers_checks(params: SpaceParams, d: int, max_order: int = 2) -> list[Check]:
    out = []
    for k in range(max_order + 1):
        for g in homogeneous_indices(params.n, k):
            direct, adj = hmops.verify_powers(params, g, d)
            out.append(Check(f"monomial multiplier M_z^{g}", direct))
            out.append(Check(f"monomial multiplier M_z^*{g}", adj))
    return out


def symbol_checks(params: SpaceParams, d: int, s: PluriharmonicSymbol, label: str) -> list[Check]:
    """Brown-Halmos membership, recovery, inheritance and multiplication checks for one symbol."""
    T = toeplitz_op(s, params, d + 1)
    out = [Check(f"{label}: T_f satisfies Brown-Halmos", hmops.bh_residual(T, d))]
    recovered = recover_symbol(T)
    expected = canonicalize(s)
    out.append(Check(f"{label}: recovered symbol = canonical symbol",
                     symbol_distance(recovered, expected, params)))
    lo, hi = T.band
    parts = [hmops.homogeneous_component(T, k) for k in range(lo, hi + 1)]
    out.append(Check(f"{label}: sum_k T_k = T", residual(lincomb([1] * len(parts), parts), T)))
    for k, Tk in zip(range(lo, hi + 1), parts):
        out.append(Check(f"{label}: (T^*)_{-k} = (T_{k})^*",
                         residual(adjoint(Tk), hmops.homogeneous_component(adjoint(T), -k), d)))
        out.append(Check(f"{label}: T_{k} inherits Brown-Halmos", hmops.bh_residual(Tk, d)))
        if k >= 0:
            out.append(Check(f"{label}: T_{k} is multiplication by T_{k}(1)",
                             multiplication_residual(Tk, d)))
    if params.m > 1:
        Tr = restrict(T, d)
        for j in range(1, params.m):
            out.append(Check(f"{label}: sigma^{j} iterate = multinomial form",
                             residual(hmops.sigma_pow(Tr, j), hmops.sigma_pow_multinomial(Tr, j), d)))
    return out


def negative_checks(params: SpaceParams, d: int, s: PluriharmonicSymbol) -> list[Check]:
    P0 = hmops.graded_projection(params, 0, d + 1)
    T = toeplitz_op(s, params, d + 1)
    return [
        Check("negative control: P_{H_0}", hmops.bh_residual(P0, d), expect_zero=False),
        Check("negative control: T_f + P_{H_0}",
              hmops.bh_residual(lincomb([1, 1], [T, P0]), d), expect_zero=False),
    ]


def reduction_checks(params: SpaceParams, d: int, s: PluriharmonicSymbol) -> list[Check]:
    out = []
    T = toeplitz_op(s, params, d + 1)
    P0 = hmops.graded_projection(params, 0, d + 1)
    if params.m == 1:
        for name, X in (("T_f", T), ("P_{H_0}", P0)):
            P = hmops.proj_im_mz_star(params, d)
            Xr = restrict(X, d)
            expected = compose(hmops.proj_im_mz_star(params, Xr.d_out), compose(direct_sum_n(Xr), P))
            out.append(Check(f"m = 1: rhs = P((+){name})P", residual(hmops.bh_rhs(X, d), expected, d)))
    if params.n == 1 and params.m == 1:
        for name, X in (("T_f", T), ("P_{H_0}", P0)):
            classical = lincomb([1, -1], [
                compose(hmops.mz_star(params, X.d_out), compose(X, hmops.mz_row(params, d))),
                restrict(X, d),
            ])
            bh = lincomb([1, -1], [hmops.bh_lhs(X, d), hmops.bh_rhs(X, d)])
            out.append(Check(f"classical Brown-Halmos: M_z^* T M_z - T = BH residual ({name})",
                             residual(classical, bh, d)))
    return out


def kernel_checks(params: SpaceParams, count: int, seed: int) -> list[Check]:
    """<p, K(., w)> = p(w) for seeded random p and w."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        p = random_polynomial(params.n, params.D, rng).map_coeffs(params.scalar)
        w = [params.scalar(QQi(random_rational(rng), random_rational(rng))) for _ in range(params.n)]
        K = kernel_polynomial(params, w)
        diff = inner_product(p, K, params.m) - p(w)
        out.append(Check(f"reproducing kernel #{i}", _value_report(diff, params, params.D)))
    return out


def _symbol_task(args):
    params, d, s, label = args
    return symbol_checks(params, d, s, label)


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("PLURITOP_THREADS", "1")))
    except ValueError:
        return 1


def run_suite(n: int, m: int, d: int, mode: str = "exact", seed: int = 0,
              symbols: int = 3, kernel_pairs: int = 5) -> list[Check]:
    """Every identity for one (n, m, d); order of the result is deterministic."""
    params = suite_params(n, m, d, mode)
    syms = random_symbols(n, symbols, seed)
    if mode != "exact":
        syms = [PluriharmonicSymbol(s.g.map_coeffs(complex), s.h.map_coeffs(complex)) for s in syms]
    checks = []
    checks += structural_checks(params, d)
    checks += powers_checks(params, d)
    tasks = [(params, d, s, f"symbol #{i}") for i, s in enumerate(syms)]
    workers = _workers()
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_symbol_task, tasks))
    else:
        results = [_symbol_task(t) for t in tasks]
    for r in results:
        checks += r
    checks += reduction_checks(params, d, syms[0])
    checks += negative_checks(params, d, syms[0])
    checks += kernel_checks(params.with_degree(d), kernel_pairs, seed)
    return checks
