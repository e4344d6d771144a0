"""Scalar fields used by the library.

Exact mode works with :class:`QQi`, complex numbers whose real and imaginary
parts are :class:`fractions.Fraction`.  Float mode uses the builtin ``complex``.
Both types support ``+ - * /``, ``conjugate()`` and truthiness, which is all
the operator code relies on.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["QQi", "abs2", "parse_rational", "format_rational", "FLOAT_ZERO_TOL"]

#: Threshold on a squared weighted Frobenius norm below which a float-mode
#: residual counts as zero (about 1e-9 per entry).
FLOAT_ZERO_TOL = 1e-18

_ZERO = Fraction(0)


def _new(re, im):
    obj = object.__new__(QQi)
    obj.re = re
    obj.im = im
    return obj


class QQi:
    """Gaussian rational ``re + i*im`` with arbitrary precision parts.

    >>> QQi(1, 2) * QQi(1, -2)
    QQi(5)
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, QQi):
            if im:
                raise TypeError("cannot combine a QQi real part with an imaginary part")
            self.re, self.im = re.re, re.im
            return
        if isinstance(re, complex):
            re, im = re.real, re.imag + im
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, x) -> "QQi":
        if isinstance(x, QQi):
            return x
        if isinstance(x, (int, Fraction)):
            return _new(Fraction(x), _ZERO)
        return cls(x)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, QQi):
            return _new(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Rational)):
            return _new(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, QQi):
            return _new(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Rational)):
            return _new(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Rational)):
            return _new(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, QQi):
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b:
                if not d:
                    return _new(a * c, _ZERO)
                return _new(a * c, a * d)
            if not d:
                return _new(a * c, b * c)
            return _new(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Rational)):
            return _new(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return _new(self.re / other, self.im / other)
        if isinstance(other, QQi):
            c, d = other.re, other.im
            if not d:
                return self / c
            den = c * c + d * d
            return self * _new(c / den, -d / den)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Rational)):
            return QQi.coerce(other) / self
        return NotImplemented

    def __neg__(self):
        return _new(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "QQi":
        return _new(self.re, -self.im)

    @property
    def real(self) -> Fraction:
        return self.re

    @property
    def imag(self) -> Fraction:
        return self.im

    def __abs__(self):
        return complex(self).__abs__()

    # comparison / hashing -------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, QQi):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return not self.im and self.re == other
        if isinstance(other, complex):
            return self.re == other.real and self.im == other.imag
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if not self.im:
            return f"QQi({self.re})"
        return f"QQi({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


def abs2(x):
    """Squared modulus; exact (a Fraction) for QQi, float for complex."""
    if isinstance(x, QQi):
        return x.re * x.re + x.im * x.im
    if isinstance(x, complex):
        return x.real * x.real + x.imag * x.imag
    return x * x


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a Fraction.

    Floats are rejected so that files never smuggle in rounded values.
    """
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a rational string: {text!r}")
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        if sep:
            q = Fraction(int(num), int(den))
        else:
            q = Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational string: {text!r}") from None
    return q


def format_rational(q) -> str:
    """Canonical ``"p/q"`` text (positive denominator); zero is ``"0"``."""
    q = Fraction(q)
    if not q:
        return "0"
    return f"{q.numerator}/{q.denominator}"
