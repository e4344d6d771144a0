"""Truncated model of the analytic function space H_m on the unit ball of C^n.

A function is stored through its Taylor coefficients ``f_alpha`` in the
monomial basis ``z^alpha``.  The monomials are orthogonal and
``||z^alpha||^2 = 1 / rho_m(alpha)`` with

    rho_m(alpha) = (m + |alpha| - 1)! / (alpha! (m - 1)!).

Multi-indices are plain tuples of non-negative ints.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Mapping, Sequence

from .scalars import QQi

__all__ = [
    "SpaceParams",
    "Polynomial",
    "DegreeOverflow",
    "basis_enumerate",
    "basis_size",
    "rho",
    "gamma",
    "weight_table",
    "inner_product",
    "kernel_truncated",
    "kernel_polynomial",
    "evaluate",
    "unit",
]

EXACT = "exact"
FLOAT = "float"


class DegreeOverflow(ValueError):
    """A degree exceeds the window it has to fit into."""


@dataclass(frozen=True)
class SpaceParams:
    """Dimension ``n``, kernel exponent ``m``, workspace degree ``D`` and mode."""

    n: int
    m: int
    D: int
    mode: str = EXACT

    def __post_init__(self):
        for name in ("n", "m", "D"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"{name} must be an int, got {v!r}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.D < 0:
            raise ValueError(f"D must be >= 0, got {self.D}")
        if self.mode not in (EXACT, FLOAT):
            raise ValueError(f"mode must be 'exact' or 'float', got {self.mode!r}")

    @property
    def exact(self) -> bool:
        return self.mode == EXACT

    def scalar(self, x):
        """Convert an int, Fraction, complex or QQi into this mode's scalar."""
        if self.mode == EXACT:
            return QQi.coerce(x)
        if isinstance(x, QQi):
            return complex(x)
        return complex(x)

    def zero(self):
        return self.scalar(0)

    def one(self):
        return self.scalar(1)

    def rho(self, alpha: tuple) -> Fraction:
        return rho(self.m, alpha)

    def with_degree(self, D: int) -> "SpaceParams":
        return SpaceParams(self.n, self.m, D, self.mode)

    def with_mode(self, mode: str) -> "SpaceParams":
        return SpaceParams(self.n, self.m, self.D, mode)


# --- multi-indices -----------------------------------------------------------


@lru_cache(maxsize=None)
def _homogeneous(n: int, k: int) -> tuple:
    """All alpha in N^n with |alpha| = k, z_1 > z_2 > ... (so (1,0) precedes (0,1))."""
    if n == 1:
        return ((k,),)
    out = []
    for first in range(k, -1, -1):
        for rest in _homogeneous(n - 1, k - first):
            out.append((first,) + rest)
    return tuple(out)


def homogeneous_indices(n: int, k: int) -> tuple:
    if k < 0:
        return ()
    return _homogeneous(n, k)


@lru_cache(maxsize=None)
def basis_enumerate(n: int, D: int) -> tuple:
    """Multi-indices with ``|alpha| <= D`` in graded-lexicographic order.

    Sorted by degree, then lexicographically with z_1 the largest variable.
    Degree blocks are contiguous, so graded projections are block diagonal.
    """
    if n < 1 or D < 0:
        raise ValueError(f"need n >= 1 and D >= 0, got n={n}, D={D}")
    return tuple(itertools.chain.from_iterable(_homogeneous(n, k) for k in range(D + 1)))


def basis_size(n: int, D: int) -> int:
    return comb(n + D, n)


def unit(n: int, i: int) -> tuple:
    """The multi-index e_i (0-based)."""
    return tuple(1 if j == i else 0 for j in range(n))


# --- weights -----------------------------------------------------------------


@lru_cache(maxsize=None)
def rho(m: int, alpha: tuple) -> Fraction:
    """rho_m(alpha) via rho(alpha + e_i) = rho(alpha) (m + |alpha|) / (alpha_i + 1)."""
    for i in range(len(alpha) - 1, -1, -1):
        if alpha[i]:
            prev = alpha[:i] + (alpha[i] - 1,) + alpha[i + 1:]
            return rho(m, prev) * (m + sum(prev)) / alpha[i]
    return Fraction(1)


def gamma(alpha: Sequence[int]) -> int:
    """Multinomial coefficient |alpha|! / alpha!."""
    return factorial(sum(alpha)) // prod(factorial(a) for a in alpha)


def weight_table(n: int, m: int, D: int) -> dict:
    return {alpha: rho(m, alpha) for alpha in basis_enumerate(n, D)}


# --- polynomials -------------------------------------------------------------


class Polynomial:
    """Finitely supported map ``alpha -> coefficient`` in ``n`` variables.

    Zero coefficients are dropped.  ``degree_bound`` defaults to the actual
    degree; every stored key satisfies ``|alpha| <= degree_bound``.
    Instances are treated as immutable.
    """

    __slots__ = ("n", "_coeffs", "degree_bound")

    def __init__(self, n: int, coeffs: Mapping | Iterable = (), degree_bound: int | None = None):
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean = {}
        for alpha, c in items:
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != n or any(a < 0 for a in alpha):
                raise ValueError(f"bad multi-index {alpha} for n={n}")
            if alpha in clean:
                c = clean[alpha] + c
            clean[alpha] = c
        clean = {a: c for a, c in clean.items() if c}
        deg = max((sum(a) for a in clean), default=0)
        if degree_bound is None:
            degree_bound = deg
        elif deg > degree_bound:
            raise DegreeOverflow(f"polynomial of degree {deg} exceeds bound {degree_bound}")
        self.n = n
        self._coeffs = clean
        self.degree_bound = degree_bound

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n, {})

    @classmethod
    def monomial(cls, alpha: Sequence[int], coeff=1) -> "Polynomial":
        alpha = tuple(alpha)
        return cls(len(alpha), {alpha: coeff})

    @classmethod
    def constant(cls, n: int, c) -> "Polynomial":
        return cls(n, {(0,) * n: c})

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def __getitem__(self, alpha):
        return self._coeffs.get(tuple(alpha), 0)

    def __iter__(self):
        return iter(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(a) for a in self._coeffs), default=-1)

    @property
    def low_degree(self) -> int:
        """Smallest degree carrying a nonzero coefficient; -1 for zero."""
        return min((sum(a) for a in self._coeffs), default=-1)

    def homogeneous_part(self, k: int) -> "Polynomial":
        return Polynomial(self.n, {a: c for a, c in self._coeffs.items() if sum(a) == k})

    def constant_term(self):
        return self._coeffs.get((0,) * self.n, 0)

    def map_coeffs(self, fn) -> "Polynomial":
        return Polynomial(self.n, {a: fn(c) for a, c in self._coeffs.items()})

    def conj_coeffs(self) -> "Polynomial":
        return self.map_coeffs(lambda c: c.conjugate())

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self._coeffs)
        for a, c in other._coeffs.items():
            out[a] = out[a] + c if a in out else c
        return Polynomial(self.n, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return self.map_coeffs(lambda c: -c)

    def scale(self, s) -> "Polynomial":
        return self.map_coeffs(lambda c: s * c)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out = {}
        for a, c in self._coeffs.items():
            for b, d in other._coeffs.items():
                key = tuple(x + y for x, y in zip(a, b))
                out[key] = out[key] + c * d if key in out else c * d
        return Polynomial(self.n, out)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._coeffs == other._coeffs

    __hash__ = None

    def __call__(self, z):
        return evaluate(self, z)

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __repr__(self):
        if not self._coeffs:
            return f"Polynomial({self.n}, {{}})"
        terms = ", ".join(f"{a}: {c}" for a, c in sorted(self._coeffs.items(), key=_grlex))
        return f"Polynomial({self.n}, {{{terms}}})"


def grlex_key(alpha):
    """Sort key realising the basis order of :func:`basis_enumerate`."""
    return sum(alpha), tuple(-a for a in alpha)


def _grlex(item):
    return grlex_key(item[0])


def _power(z, alpha):
    out = 1
    for zi, ai in zip(z, alpha):
        for _ in range(ai):
            out = out * zi
    return out


def evaluate(f: Polynomial, z: Sequence):
    """Point evaluation sum_alpha f_alpha z^alpha."""
    if len(z) != f.n:
        raise ValueError(f"point has {len(z)} coordinates, polynomial has n={f.n}")
    total = 0
    for alpha, c in f.items():
        total = total + c * _power(z, alpha)
    return total


def inner_product(f: Polynomial, g: Polynomial, m: int):
    """<f, g> = sum_alpha f_alpha conj(g_alpha) / rho_m(alpha)."""
    f._check(g)
    total = 0
    for alpha, c in f.items():
        d = g[alpha]
        if d:
            total = total + c * d.conjugate() / rho(m, alpha)
    return total


def kernel_truncated(m: int, z: Sequence, w: Sequence, D: int):
    """Partial sum sum_{k<=D} binom(m+k-1, k) <z, w>^k of K_m(z, w)."""
    if len(z) != len(w):
        raise ValueError("z and w must have the same length")
    s = 0
    for zi, wi in zip(z, w):
        s = s + zi * wi.conjugate()
    total, power = 0, 1
    for k in range(D + 1):
        total = total + comb(m + k - 1, k) * power
        power = power * s
    return total


def kernel_polynomial(params: SpaceParams, w: Sequence, D: int | None = None) -> Polynomial:
    """The truncated kernel K_m(., w) expanded in z.

    The coefficient of z^alpha is rho_m(alpha) conj(w)^alpha, since
    binom(m+k-1, k) * gamma(alpha) = rho_m(alpha) for |alpha| = k.
    """
    if D is None:
        D = params.D
    wbar = [params.scalar(wi).conjugate() for wi in w]
    coeffs = {}
    for alpha in basis_enumerate(params.n, D):
        coeffs[alpha] = params.scalar(params.rho(alpha)) * _power(wbar, alpha)
    return Polynomial(params.n, coeffs, degree_bound=D)
