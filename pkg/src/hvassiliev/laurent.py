"""Sparse Laurent polynomials in one variable with exact coefficients.

A polynomial is stored as a sorted tuple of ``(exponent, coefficient)`` pairs with
no zero coefficients, so instances are hashable and compare structurally.
Coefficients are ``int`` or ``fractions.Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

Coeff = Union[int, Fraction]


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Coeff] | Iterable[tuple[int, Coeff]] = ()):
        acc: dict[int, Coeff] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            if not isinstance(c, Rational):
                raise TypeError(f"coefficient {c!r} is not an exact rational")
            acc[int(e)] = acc.get(int(e), 0) + c
        self._terms = tuple(sorted((e, _norm(c)) for e, c in acc.items() if c != 0))
        self._hash = None

    # construction helpers
    @classmethod
    def _raw(cls, terms: tuple) -> LaurentPoly:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Coeff) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coeff: Coeff = 1) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def coerce(cls, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, Rational):
            return cls.const(x)
        raise TypeError(f"cannot coerce {x!r} to LaurentPoly")

    # inspection
    @property
    def terms(self) -> tuple[tuple[int, Coeff], ...]:
        return self._terms

    def as_dict(self) -> dict[int, Coeff]:
        return dict(self._terms)

    def coeff(self, exp: int) -> Coeff:
        for e, c in self._terms:
            if e == exp:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

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

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    # arithmetic
    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(tuple((e, -c) for e, c in self._terms))

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        acc: dict[int, Coeff] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q**k``."""
        return LaurentPoly._raw(tuple((e + k, c) for e, c in self._terms))

    def inverse(self) -> LaurentPoly:
        """Inverse of a unit, i.e. a nonzero monomial."""
        if not self.is_monomial():
            raise ZeroDivisionError(f"{self} is not a unit of the Laurent polynomial ring")
        (e, c), = self._terms
        return LaurentPoly({-e: Fraction(1) / c})

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod_exact(self, other: LaurentPoly) -> LaurentPoly:
        """Quotient ``self / other``; raises ``ArithmeticError`` unless it is exact."""
        other = LaurentPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        if other.is_monomial():
            return self * other.inverse()
        # ordinary long division after clearing negative exponents
        lo_b = other.min_exp
        b = [Fraction(0)] * (other.max_exp - lo_b + 1)
        for e, c in other._terms:
            b[e - lo_b] = Fraction(c)
        lo_a = self.min_exp
        a = [Fraction(0)] * (self.max_exp - lo_a + 1)
        for e, c in self._terms:
            a[e - lo_a] = Fraction(c)
        if len(a) < len(b):
            raise ArithmeticError(f"{other} does not divide {self}")
        quot = [Fraction(0)] * (len(a) - len(b) + 1)
        for k in range(len(quot) - 1, -1, -1):
            c = a[k + len(b) - 1] / b[-1]
            quot[k] = c
            if c:
                for j, bj in enumerate(b):
                    a[k + j] -= c * bj
        if any(a):
            raise ArithmeticError(f"{other} does not divide {self}")
        return LaurentPoly({lo_a - lo_b + k: c for k, c in enumerate(quot)})

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return LaurentPoly({e: Fraction(c) / other for e, c in self._terms})
        if isinstance(other, LaurentPoly):
            return self.divmod_exact(other)
        return NotImplemented

    def subs_inverse(self) -> LaurentPoly:
        """The polynomial with ``q`` replaced by ``q**-1``."""
        return LaurentPoly({-e: c for e, c in self._terms})

    def evaluate(self, x):
        return sum((c * x**e for e, c in self._terms), Fraction(0) if isinstance(x, Rational) else 0)

    # comparison / hashing
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, Rational):
            return self._terms == LaurentPoly.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({dict(self._terms)!r})"

    def __str__(self):
        return self.format("q")

    def format(self, var: str = "q") -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if e == 0:
                body = str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


q = LaurentPoly.monomial(1)
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()
