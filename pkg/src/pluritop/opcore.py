"""Finite sections of graded operators on H_m and on the tuple space H_m^n.

A :class:`GradedOperator` is a sparse matrix over the monomial basis.  Rows
and columns are keyed by ``(component, alpha)``; component is 0 for scalar
spaces and ranges over ``0..n-1`` for tuple spaces.  Every operator carries an
input window ``d_in`` (columns with ``|beta| <= d_in``), an output window
``d_out`` and a degree band ``(lo, hi)``: entry ``(alpha, beta)`` may be
nonzero only if ``lo <= |alpha| - |beta| <= hi``.

Only columns inside ``d_in`` are trusted.  Identity checks therefore compare
operators after :func:`restrict` to a common window.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import FLOAT_ZERO_TOL, abs2
from .space import DegreeOverflow, Polynomial, SpaceParams, basis_enumerate

__all__ = [
    "GradedOperator",
    "OperatorReport",
    "WindowMismatch",
    "ArityMismatch",
    "DegreeOverflow",
    "apply",
    "compose",
    "lincomb",
    "adjoint",
    "frobenius_sq",
    "restrict",
    "direct_sum_n",
    "identity",
    "zero_operator",
    "report",
    "residual",
    "tuple_inner_product",
]


class WindowMismatch(ValueError):
    """Operator windows are incompatible with the requested operation."""


class ArityMismatch(ValueError):
    """Operators act between spaces of different arity."""


def _deg(key) -> int:
    return sum(key[1])


class GradedOperator:
    """Sparse banded operator section.

    ``columns`` maps a column key to a dict ``{row_key: value}``.  Zero values
    and empty columns are discarded.  When ``band`` is omitted it is inferred
    from the entries.  With ``validate`` (the default) keys, band and the
    representability condition ``d_out >= d_in + hi`` are checked; derived
    operators skip the checks, which matters for adjoints whose swapped
    windows generally violate that condition.
    """

    __slots__ = ("params", "arity_in", "arity_out", "d_in", "d_out", "band", "_cols")

    def __init__(
        self,
        params: SpaceParams,
        arity_in: int,
        arity_out: int,
        d_in: int,
        d_out: int,
        columns: dict,
        band: tuple[int, int] | None = None,
        *,
        validate: bool = True,
    ):
        cols = {}
        for col, entries in columns.items():
            kept = {r: v for r, v in entries.items() if v}
            if kept:
                cols[col] = kept
        if band is None:
            shifts = [_deg(r) - _deg(c) for c, e in cols.items() for r in e]
            band = (min(shifts), max(shifts)) if shifts else (0, 0)
        lo, hi = band
        if lo > hi:
            raise ValueError(f"empty band {band}")
        if d_in < 0 or d_out < 0:
            raise ValueError(f"negative window d_in={d_in}, d_out={d_out}")
        if max(d_in, d_out) > params.D:
            raise DegreeOverflow(f"window ({d_in}, {d_out}) exceeds workspace D={params.D}")
        if validate:
            if d_out < d_in + hi:
                raise WindowMismatch(
                    f"d_out={d_out} cannot hold outputs of band hi={hi} on d_in={d_in}"
                )
            for col, entries in cols.items():
                c, beta = col
                if not 0 <= c < arity_in or len(beta) != params.n:
                    raise ValueError(f"bad column key {col}")
                if sum(beta) > d_in:
                    raise DegreeOverflow(f"column {col} outside d_in={d_in}")
                for row in entries:
                    r, alpha = row
                    if not 0 <= r < arity_out or len(alpha) != params.n:
                        raise ValueError(f"bad row key {row}")
                    shift = sum(alpha) - sum(beta)
                    if not lo <= shift <= hi:
                        raise ValueError(f"entry {row},{col} outside band {band}")
                    if sum(alpha) > d_out:
                        raise DegreeOverflow(f"row {row} outside d_out={d_out}")
        self.params = params
        self.arity_in = arity_in
        self.arity_out = arity_out
        self.d_in = d_in
        self.d_out = d_out
        self.band = (lo, hi)
        self._cols = cols

    # access -----------------------------------------------------------------
    def column(self, col) -> dict:
        return dict(self._cols.get(col, {}))

    def entries(self):
        """Yield ``(row_key, col_key, value)`` for every stored entry."""
        for col, e in self._cols.items():
            for row, v in e.items():
                yield row, col, v

    def entry(self, row, col):
        return self._cols.get(col, {}).get(row, self.params.zero())

    @property
    def nnz(self) -> int:
        return sum(len(e) for e in self._cols.values())

    def col_keys(self) -> list:
        """All column keys of the input window, component-major, graded-lex."""
        basis = basis_enumerate(self.params.n, self.d_in)
        return [(c, b) for c in range(self.arity_in) for b in basis]

    def row_keys(self) -> list:
        basis = basis_enumerate(self.params.n, self.d_out)
        return [(c, a) for c in range(self.arity_out) for a in basis]

    def is_zero(self) -> bool:
        return not self._cols

    def to_dense(self, orthonormal: bool = False):
        """Dense numpy matrix over ``row_keys() x col_keys()``.

        Exact mode yields an object array of QQi; float mode complex128.
        With ``orthonormal=True`` the matrix is expressed in the orthonormal
        basis sqrt(rho) z^alpha (float only, since square roots are involved).
        """
        import numpy as np

        rows = {k: i for i, k in enumerate(self.row_keys())}
        cols = {k: j for j, k in enumerate(self.col_keys())}
        if orthonormal or not self.params.exact:
            out = np.zeros((len(rows), len(cols)), dtype=complex)
        else:
            out = np.full((len(rows), len(cols)), self.params.zero(), dtype=object)
        rho = self.params.rho
        for row, col, v in self.entries():
            if orthonormal:
                v = complex(v) * (float(rho(col[1])) / float(rho(row[1]))) ** 0.5
            out[rows[row], cols[col]] = v
        return out

    def __add__(self, other):
        return lincomb([1, 1], [self, other])

    def __sub__(self, other):
        return lincomb([1, -1], [self, other])

    def __neg__(self):
        return lincomb([-1], [self])

    def __matmul__(self, other):
        return compose(self, other)

    def __call__(self, p):
        return apply(self, p)

    def __repr__(self):
        return (
            f"GradedOperator(n={self.params.n}, m={self.params.m}, "
            f"{self.arity_in}->{self.arity_out}, d_in={self.d_in}, d_out={self.d_out}, "
            f"band={self.band}, nnz={self.nnz})"
        )


@dataclass(frozen=True)
class OperatorReport:
    """Summary of a residual operator on a trusted window."""

    is_zero: bool
    frobenius_sq: Fraction | float
    max_degree_checked: int


# --- constructors --------------------------------------------------------------


def zero_operator(params: SpaceParams, d_in: int, d_out: int | None = None,
                  arity_in: int = 1, arity_out: int | None = None) -> GradedOperator:
    if d_out is None:
        d_out = d_in
    if arity_out is None:
        arity_out = arity_in
    return GradedOperator(params, arity_in, arity_out, d_in, d_out, {}, (0, 0))


def identity(params: SpaceParams, d: int, arity: int = 1) -> GradedOperator:
    one = params.one()
    cols = {(c, b): {(c, b): one} for c in range(arity) for b in basis_enumerate(params.n, d)}
    return GradedOperator(params, arity, arity, d, d, cols, (0, 0), validate=False)


def diagonal(params: SpaceParams, d: int, weight, arity: int = 1) -> GradedOperator:
    """Diagonal operator multiplying the degree-k block by ``weight(k)``."""
    w = {k: params.scalar(weight(k)) for k in range(d + 1)}
    cols = {
        (c, b): {(c, b): w[sum(b)]}
        for c in range(arity)
        for b in basis_enumerate(params.n, d)
    }
    return GradedOperator(params, arity, arity, d, d, cols, (0, 0), validate=False)


# --- operations ------------------------------------------------------------------


def _as_tuple(p, arity):
    if isinstance(p, Polynomial):
        if arity != 1:
            raise ArityMismatch(f"expected a {arity}-tuple of polynomials")
        return (p,), True
    p = tuple(p)
    if len(p) != arity:
        raise ArityMismatch(f"expected {arity} components, got {len(p)}")
    return p, False


def apply(T: GradedOperator, p):
    """Matrix-vector product; ``p`` is a Polynomial (arity 1) or a tuple.

    The result is a Polynomial when ``arity_out == 1`` and a tuple otherwise.
    """
    comps, _ = _as_tuple(p, T.arity_in)
    n = T.params.n
    acc = {}
    for c, poly in enumerate(comps):
        if poly.n != n:
            raise ValueError(f"polynomial has n={poly.n}, operator has n={n}")
        if poly.degree > T.d_in:
            raise DegreeOverflow(f"input degree {poly.degree} exceeds d_in={T.d_in}")
        for beta, coef in poly.items():
            col = T._cols.get((c, beta))
            if not col:
                continue
            for row, v in col.items():
                acc[row] = acc[row] + v * coef if row in acc else v * coef
    out = [dict() for _ in range(T.arity_out)]
    for (r, alpha), v in acc.items():
        out[r][alpha] = v
    polys = tuple(Polynomial(n, o) for o in out)
    if T.arity_out == 1:
        return polys[0]
    return polys


def _check_params(a: SpaceParams, b: SpaceParams) -> SpaceParams:
    if (a.n, a.m, a.mode) != (b.n, b.m, b.mode):
        raise ValueError(f"incompatible spaces {a} and {b}")
    return a if a.D >= b.D else b


def compose(S: GradedOperator, T: GradedOperator) -> GradedOperator:
    """The product S T; requires ``S.d_in >= T.d_out`` so nothing is truncated."""
    params = _check_params(S.params, T.params)
    if S.arity_in != T.arity_out:
        raise ArityMismatch(f"cannot compose {S.arity_in}-input with {T.arity_out}-output")
    if S.d_in < T.d_out:
        raise WindowMismatch(f"S.d_in={S.d_in} < T.d_out={T.d_out}")
    scols = S._cols
    cols = {}
    for col, tcol in T._cols.items():
        acc = {}
        for k, v in tcol.items():
            scol = scols.get(k)
            if not scol:
                continue
            for r, w in scol.items():
                acc[r] = acc[r] + w * v if r in acc else w * v
        if acc:
            cols[col] = acc
    band = (S.band[0] + T.band[0], S.band[1] + T.band[1])
    return GradedOperator(params, T.arity_in, S.arity_out, T.d_in, S.d_out, cols, band,
                          validate=False)


def lincomb(coeffs: Sequence, ops: Sequence[GradedOperator]) -> GradedOperator:
    """Entrywise linear combination.

    Input windows are intersected (columns beyond the smallest ``d_in`` are
    dropped); the output window is the largest ``d_out`` so no entry is lost.
    """
    if len(coeffs) != len(ops) or not ops:
        raise ValueError("need equally many (and at least one) coefficients and operators")
    first = ops[0]
    params = first.params
    for T in ops[1:]:
        params = _check_params(params, T.params)
        if (T.arity_in, T.arity_out) != (first.arity_in, first.arity_out):
            raise ArityMismatch("operators act between different tuple spaces")
    d_in = min(T.d_in for T in ops)
    d_out = max(T.d_out for T in ops)
    band = (min(T.band[0] for T in ops), max(T.band[1] for T in ops))
    cols = {}
    for a, T in zip(coeffs, ops):
        a = params.scalar(a)
        if not a:
            continue
        for col, tcol in T._cols.items():
            if _deg(col) > d_in:
                continue
            acc = cols.setdefault(col, {})
            for r, v in tcol.items():
                acc[r] = acc[r] + a * v if r in acc else a * v
    return GradedOperator(params, first.arity_in, first.arity_out, d_in, d_out, cols, band,
                          validate=False)


def adjoint(T: GradedOperator) -> GradedOperator:
    """Adjoint in the weighted inner product: s_{beta,alpha} = rho(beta)/rho(alpha) conj(t_{alpha,beta}).

    The windows swap.  Columns of the result with degree above
    ``T.d_in + T.band[0]`` only see part of the true adjoint column.
    """
    params = T.params
    rho = params.rho
    cols = {}
    for row, col, v in T.entries():
        ratio = params.scalar(rho(col[1]) / rho(row[1]))
        cols.setdefault(row, {})[col] = ratio * v.conjugate()
    band = (-T.band[1], -T.band[0])
    return GradedOperator(params, T.arity_out, T.arity_in, T.d_out, T.d_in, cols, band,
                          validate=False)


def frobenius_sq(T: GradedOperator):
    """Squared Frobenius norm in the orthonormalised basis (exact in exact mode)."""
    rho = T.params.rho
    total = Fraction(0) if T.params.exact else 0.0
    for row, col, v in T.entries():
        ratio = rho(col[1]) / rho(row[1])
        total += abs2(v) * (ratio if T.params.exact else float(ratio))
    return total


def restrict(T: GradedOperator, d: int) -> GradedOperator:
    """Keep only the columns with ``|beta| <= d``."""
    if d > T.d_in:
        raise DegreeOverflow(f"cannot restrict d_in={T.d_in} to larger window {d}")
    if d < 0:
        raise ValueError(f"negative window {d}")
    cols = {c: e for c, e in T._cols.items() if _deg(c) <= d}
    return GradedOperator(T.params, T.arity_in, T.arity_out, d, T.d_out, cols, T.band,
                          validate=False)


def direct_sum_n(T: GradedOperator) -> GradedOperator:
    """Block-diagonal copy of a scalar operator on the n-tuple space."""
    if T.arity_in != 1 or T.arity_out != 1:
        raise ArityMismatch("direct_sum_n needs an operator on the scalar space")
    n = T.params.n
    cols = {}
    for (_, beta), e in T._cols.items():
        for c in range(n):
            cols[(c, beta)] = {(c, alpha): v for (_, alpha), v in e.items()}
    return GradedOperator(T.params, n, n, T.d_in, T.d_out, cols, T.band, validate=False)


def report(T: GradedOperator, d: int | None = None) -> OperatorReport:
    """Zero test and weighted Frobenius norm of ``T`` restricted to window ``d``."""
    if d is not None:
        T = restrict(T, d)
    fro = frobenius_sq(T)
    if T.params.exact:
        is_zero = T.is_zero()
    else:
        is_zero = fro <= FLOAT_ZERO_TOL
    return OperatorReport(is_zero, fro, T.d_in)


def residual(A: GradedOperator, B: GradedOperator, d: int | None = None) -> OperatorReport:
    """Report on ``A - B`` over the common trusted window (or ``d``)."""
    if d is None:
        d = min(A.d_in, B.d_in)
    return report(lincomb([1, -1], [restrict(A, d), restrict(B, d)]), d)


def tuple_inner_product(p: Iterable[Polynomial], q: Iterable[Polynomial], m: int):
    from .space import inner_product

    total = 0
    for a, b in zip(p, q):
        total = total + inner_product(a, b, m)
    return total
