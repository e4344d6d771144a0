"""Toeplitz operators with pluriharmonic symbol f = g + conj(h).

On polynomials the operator acts as ``T p = g p + T_h^* p`` where the
co-analytic part is given coefficientwise by

    T_h^* z^alpha = sum_{beta <= alpha} rho(alpha - beta) / rho(alpha) conj(h_beta) z^(alpha - beta).

:func:`classify` decides membership in the Brown-Halmos class and, when it
holds, reads the symbol back off the operator.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .hmops import bh_residual, homogeneous_component
from .opcore import (
    GradedOperator,
    OperatorReport,
    adjoint,
    apply,
    lincomb,
    report,
    restrict,
)
from .space import DegreeOverflow, Polynomial, SpaceParams, basis_enumerate

__all__ = [
    "PluriharmonicSymbol",
    "Verdict",
    "ClassificationReport",
    "analytic_toeplitz",
    "coanalytic_toeplitz",
    "toeplitz_op",
    "canonicalize",
    "recover_symbol",
    "classify",
]


@dataclass(frozen=True, eq=False)
class PluriharmonicSymbol:
    """The pair (g, h) standing for f = g + conj(h)."""

    g: Polynomial
    h: Polynomial

    def __post_init__(self):
        if self.g.n != self.h.n:
            raise ValueError(f"g and h live in different dimensions ({self.g.n}, {self.h.n})")

    @property
    def n(self) -> int:
        return self.g.n

    @classmethod
    def zero(cls, n: int) -> "PluriharmonicSymbol":
        return cls(Polynomial.zero(n), Polynomial.zero(n))

    def __eq__(self, other):
        if not isinstance(other, PluriharmonicSymbol):
            return NotImplemented
        return self.g == other.g and self.h == other.h

    __hash__ = None

    def __repr__(self):
        return f"PluriharmonicSymbol(g={self.g!r}, h={self.h!r})"


class Verdict(str, enum.Enum):
    TOEPLITZ = "ToeplitzPluriharmonic"
    NOT_TOEPLITZ = "NotToeplitz"


@dataclass(frozen=True)
class ClassificationReport:
    bh: OperatorReport
    symbol: PluriharmonicSymbol | None
    toeplitz_match: OperatorReport | None
    verdict: Verdict


def _coerce(params: SpaceParams, p: Polynomial) -> Polynomial:
    if p.n != params.n:
        raise ValueError(f"polynomial has n={p.n}, space has n={params.n}")
    return p.map_coeffs(params.scalar)


def analytic_toeplitz(g: Polynomial, params: SpaceParams, d_in: int) -> GradedOperator:
    """Multiplication by the polynomial g on degrees <= d_in."""
    g = _coerce(params, g)
    top = max(g.degree, 0)
    if d_in + top > params.D:
        raise DegreeOverflow(f"d_in={d_in} plus deg g={top} exceeds workspace D={params.D}")
    terms = list(g.items())
    cols = {}
    for beta in basis_enumerate(params.n, d_in):
        cols[(0, beta)] = {
            (0, tuple(a + b for a, b in zip(alpha, beta))): c for alpha, c in terms
        }
    band = (g.low_degree, g.degree) if g else (0, 0)
    return GradedOperator(params, 1, 1, d_in, d_in + top, cols, band, validate=False)


def coanalytic_toeplitz(h: Polynomial, params: SpaceParams, d_in: int) -> GradedOperator:
    """T_h^* on degrees <= d_in, straight from the coefficient formula."""
    h = _coerce(params, h)
    if d_in > params.D:
        raise DegreeOverflow(f"d_in={d_in} exceeds workspace D={params.D}")
    rho = params.rho
    terms = [(beta, c.conjugate()) for beta, c in h.items()]
    cols = {}
    for alpha in basis_enumerate(params.n, d_in):
        col = {}
        r_alpha = rho(alpha)
        for beta, cbar in terms:
            low = tuple(a - b for a, b in zip(alpha, beta))
            if min(low) < 0:
                continue
            col[(0, low)] = params.scalar(rho(low) / r_alpha) * cbar
        cols[(0, alpha)] = col
    band = (-h.degree, -h.low_degree) if h else (0, 0)
    return GradedOperator(params, 1, 1, d_in, d_in, cols, band, validate=False)


def toeplitz_op(s: PluriharmonicSymbol, params: SpaceParams, d_in: int) -> GradedOperator:
    """T_f = T_g + T_h^* on degrees <= d_in."""
    return lincomb([1, 1], [analytic_toeplitz(s.g, params, d_in),
                            coanalytic_toeplitz(s.h, params, d_in)])


def canonicalize(s: PluriharmonicSymbol) -> PluriharmonicSymbol:
    """Move the constant of g into h, so that g(0) = 0."""
    c = s.g.constant_term()
    if not c:
        return s
    const = Polynomial.constant(s.n, c)
    return PluriharmonicSymbol(s.g - const, s.h + const.conj_coeffs())


def recover_symbol(T: GradedOperator) -> PluriharmonicSymbol:
    """Read (g, h) off T via g = (T - T_0)(1) and h = T^*(1)."""
    if T.arity_in != 1 or T.arity_out != 1:
        raise ValueError("recover_symbol needs an operator on the scalar space")
    n = T.params.n
    one = Polynomial.constant(n, T.params.one())
    off_diagonal = lincomb([1, -1], [T, homogeneous_component(T, 0)])
    g = apply(off_diagonal, one)
    h = apply(adjoint(T), one)
    return PluriharmonicSymbol(g, h)


def classify(T: GradedOperator, d: int | None = None) -> ClassificationReport:
    """Brown-Halmos test, symbol recovery and a consistency check on window d.

    The default window is the largest one the operator supports, ``T.d_in - 1``.
    """
    bh = bh_residual(T, d)
    d = bh.max_degree_checked
    if not bh.is_zero:
        return ClassificationReport(bh, None, None, Verdict.NOT_TOEPLITZ)
    symbol = recover_symbol(T)
    top = d + max(symbol.g.degree, 0)
    rebuilt = toeplitz_op(symbol, T.params.with_degree(max(T.params.D, top)), d)
    diff = lincomb([1, -1], [restrict(T, d), rebuilt])
    match = report(diff, d)
    verdict = Verdict.TOEPLITZ if match.is_zero else Verdict.NOT_TOEPLITZ
    return ClassificationReport(bh, symbol, match, verdict)
