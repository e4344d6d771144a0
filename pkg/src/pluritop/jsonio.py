"""JSON forms for polynomials, symbols, operators and reports.

Scalars are written as ``{"re": "p/q", "im": "p/q"}`` with canonical rational
strings.  Float-mode values are written as the exact rational value of the
double, so files round-trip bit for bit.  Output is deterministic: keys are
sorted and terms/entries appear in graded-lexicographic order.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .opcore import GradedOperator, OperatorReport
from .scalars import QQi, format_rational, parse_rational
from .space import Polynomial, SpaceParams, grlex_key
from .toeplitz import ClassificationReport, PluriharmonicSymbol

__all__ = [
    "FormatError",
    "dumps",
    "polynomial_to_json",
    "polynomial_from_json",
    "symbol_to_json",
    "symbol_from_json",
    "operator_to_json",
    "operator_from_json",
    "report_to_json",
    "classification_to_json",
]


class FormatError(ValueError):
    """A JSON document does not have the expected shape; the message names the field."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _scalar_parts(x) -> tuple[str, str]:
    if isinstance(x, QQi):
        return format_rational(x.re), format_rational(x.im)
    x = complex(x)
    return format_rational(Fraction(x.real)), format_rational(Fraction(x.imag))


def _parse_scalar(obj: dict, where: str, mode: str):
    parts = []
    for key in ("re", "im"):
        raw = obj.get(key, "0")
        try:
            parts.append(parse_rational(raw))
        except ValueError as exc:
            raise FormatError(f"{where}.{key}: {exc}") from None
    if mode == "exact":
        return QQi(*parts)
    return complex(float(parts[0]), float(parts[1]))


def _field(obj, key, where, kind=None):
    if not isinstance(obj, dict):
        raise FormatError(f"{where}: expected an object")
    if key not in obj:
        raise FormatError(f"{where}.{key}: missing")
    v = obj[key]
    if kind is int and (isinstance(v, bool) or not isinstance(v, int)):
        raise FormatError(f"{where}.{key}: expected an integer, got {v!r}")
    if kind is list and not isinstance(v, list):
        raise FormatError(f"{where}.{key}: expected a list")
    return v


def _multi_index(raw, n, where):
    if (not isinstance(raw, list) or len(raw) != n
            or any(isinstance(a, bool) or not isinstance(a, int) or a < 0 for a in raw)):
        raise FormatError(f"{where}: expected {n} non-negative integers, got {raw!r}")
    return tuple(raw)


_grlex = grlex_key


# --- polynomials and symbols --------------------------------------------------------


def polynomial_to_json(p: Polynomial) -> dict:
    terms = []
    for alpha in sorted(p, key=_grlex):
        re, im = _scalar_parts(p[alpha])
        terms.append({"alpha": list(alpha), "re": re, "im": im})
    return {"n": p.n, "terms": terms}


def polynomial_from_json(obj, mode: str = "exact", where: str = "polynomial") -> Polynomial:
    n = _field(obj, "n", where, int)
    if n < 1:
        raise FormatError(f"{where}.n: must be >= 1, got {n}")
    terms = _field(obj, "terms", where, list)
    coeffs = []
    for i, t in enumerate(terms):
        tw = f"{where}.terms[{i}]"
        alpha = _multi_index(_field(t, "alpha", tw), n, f"{tw}.alpha")
        coeffs.append((alpha, _parse_scalar(t, tw, mode)))
    return Polynomial(n, coeffs)


def symbol_to_json(s: PluriharmonicSymbol) -> dict:
    return {"n": s.n, "g": polynomial_to_json(s.g), "h": polynomial_to_json(s.h)}


def symbol_from_json(obj, mode: str = "exact") -> PluriharmonicSymbol:
    n = _field(obj, "n", "symbol", int)
    g = polynomial_from_json(_field(obj, "g", "symbol"), mode, "symbol.g")
    h = polynomial_from_json(_field(obj, "h", "symbol"), mode, "symbol.h")
    for name, p in (("g", g), ("h", h)):
        if p.n != n:
            raise FormatError(f"symbol.{name}.n: {p.n} does not match symbol.n={n}")
    return PluriharmonicSymbol(g, h)


# --- operators ---------------------------------------------------------------------


def operator_to_json(T: GradedOperator) -> dict:
    entries = []
    for row, col, v in sorted(T.entries(), key=lambda e: (e[1][0], _grlex(e[1][1]),
                                                          e[0][0], _grlex(e[0][1]))):
        re, im = _scalar_parts(v)
        entries.append({
            "row_comp": row[0], "row": list(row[1]),
            "col_comp": col[0], "col": list(col[1]),
            "re": re, "im": im,
        })
    return {
        "n": T.params.n, "m": T.params.m,
        "arity_in": T.arity_in, "arity_out": T.arity_out,
        "d_in": T.d_in, "d_out": T.d_out,
        "entries": entries,
    }


def operator_from_json(obj, mode: str = "exact", D: int | None = None) -> GradedOperator:
    """Load an operator; the band is inferred from the entries and validated.

    ``D`` defaults to ``max(d_in, d_out) + m``, enough workspace for the
    Brown-Halmos test of this operator.
    """
    w = "operator"
    ints = {k: _field(obj, k, w, int) for k in ("n", "m", "arity_in", "arity_out", "d_in", "d_out")}
    if ints["n"] < 1 or ints["m"] < 1:
        raise FormatError(f"{w}: n and m must be >= 1")
    if ints["arity_in"] not in (1, ints["n"]) or ints["arity_out"] not in (1, ints["n"]):
        raise FormatError(f"{w}.arity_in/arity_out: must be 1 or n")
    if ints["d_in"] < 0 or ints["d_out"] < 0:
        raise FormatError(f"{w}.d_in/d_out: must be >= 0")
    if D is None:
        D = max(ints["d_in"], ints["d_out"]) + ints["m"]
    params = SpaceParams(ints["n"], ints["m"], D, mode)
    n = ints["n"]
    cols: dict = {}
    for i, e in enumerate(_field(obj, "entries", w, list)):
        ew = f"{w}.entries[{i}]"
        rc = _field(e, "row_comp", ew, int)
        cc = _field(e, "col_comp", ew, int)
        if not 0 <= rc < ints["arity_out"]:
            raise FormatError(f"{ew}.row_comp: {rc} out of range")
        if not 0 <= cc < ints["arity_in"]:
            raise FormatError(f"{ew}.col_comp: {cc} out of range")
        row = (rc, _multi_index(_field(e, "row", ew), n, f"{ew}.row"))
        col = (cc, _multi_index(_field(e, "col", ew), n, f"{ew}.col"))
        if sum(col[1]) > ints["d_in"]:
            raise FormatError(f"{ew}.col: degree {sum(col[1])} exceeds d_in={ints['d_in']}")
        if sum(row[1]) > ints["d_out"]:
            raise FormatError(f"{ew}.row: degree {sum(row[1])} exceeds d_out={ints['d_out']}")
        bucket = cols.setdefault(col, {})
        if row in bucket:
            raise FormatError(f"{ew}: duplicate entry")
        bucket[row] = _parse_scalar(e, ew, mode)
    try:
        return GradedOperator(params, ints["arity_in"], ints["arity_out"],
                              ints["d_in"], ints["d_out"], cols)
    except ValueError as exc:
        raise FormatError(f"{w}: {exc}") from None


# --- reports ------------------------------------------------------------------------


def _number(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    return float(x)


def report_to_json(r: OperatorReport) -> dict:
    return {
        "is_zero": r.is_zero,
        "frobenius_sq": _number(r.frobenius_sq),
        "max_degree_checked": r.max_degree_checked,
    }


def classification_to_json(c: ClassificationReport) -> dict:
    return {
        "verdict": c.verdict.value,
        "bh": report_to_json(c.bh),
        "symbol": symbol_to_json(c.symbol) if c.symbol is not None else None,
        "toeplitz_match": report_to_json(c.toeplitz_match) if c.toeplitz_match else None,
    }
