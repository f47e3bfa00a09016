"""Integer Laurent polynomials in one variable ``t``.

Values are immutable; the zero polynomial has no terms.  Alexander
polynomials are compared through :func:`lp_canonical`, which picks the
representative with lowest exponent 0 and positive leading coefficient.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping


class LaurentPoly:
    """Sparse integer Laurent polynomial ``sum c_k t^k``."""

    __slots__ = ("_terms",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._terms)

    def terms(self) -> tuple[tuple[int, int], ...]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[0][0]

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[-1][0]

    @property
    def leading_coeff(self) -> int:
        return self._terms[-1][1] if self._terms else 0

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t^k``."""
        return LaurentPoly((e + k, c) for e, c in self._terms)

    def __call__(self, value):
        # Fractions or ints; negative exponents need an invertible value
        return sum((c * value**e for e, c in self._terms), 0)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly((e, -c) for e, c in self._terms)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for units")
        out = LaurentPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient ``self / other``; raises if the division leaves a remainder."""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        rem = dict(self._terms)
        lo, lead = other.max_exp, other.leading_coeff
        quot: dict[int, int] = {}
        lowest = self.min_exp - other.min_exp
        while rem:
            top = max(rem)
            shift = top - lo
            if shift < lowest or rem[top] % lead:
                raise ArithmeticError("inexact Laurent polynomial division")
            c = rem[top] // lead
            quot[shift] = c
            for e, oc in other._terms:
                k = e + shift
                v = rem.get(k, 0) - c * oc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({dict(self._terms)!r})"

    def __str__(self):
        return format_laurent(self)


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
T = LaurentPoly.monomial(1)


def lp_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def lp_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def lp_is_unit(p: LaurentPoly) -> bool:
    """True iff ``p = ±t^k``."""
    return len(p.terms()) == 1 and abs(p.terms()[0][1]) == 1


def lp_canonical(p: LaurentPoly) -> LaurentPoly:
    """Normalize ``p`` by the unit ``±t^k`` giving min exponent 0 and positive leading coefficient."""
    if p.is_zero():
        raise ValueError("no canonical unit normalization of zero")
    q = p.shift(-p.min_exp)
    return -q if q.leading_coeff < 0 else q


def format_laurent(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for i, (e, c) in enumerate(p.terms()):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = "t" if e == 1 else f"t^{e}"
            body = power if mag == 1 else f"{mag}{power}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


_TERM = re.compile(r"([+-])?(\d+)?\*?(t(?:\^\{?(-?\d+)\}?)?)?")


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the rendering produced by :func:`format_laurent` (whitespace-insensitive)."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial")
    pos, acc = 0, {}
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse Laurent polynomial at column {pos + 1}: {text!r}")
        if pos > 0 and m.group(1) is None:
            raise ValueError(f"missing sign before term at column {pos + 1}: {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) is not None else 1
        if m.group(3) is None:
            exp = 0
        elif m.group(4) is None:
            exp = 1
        else:
            exp = int(m.group(4))
        acc[exp] = acc.get(exp, 0) + sign * coeff
        pos = m.end()
    return LaurentPoly(acc)
