"""Truncated Laurent series in ``eps`` with exact rational coefficients.

``order`` is the precision: every coefficient of exponent ``<= order`` is exact and
terms above it have been dropped.  ``order=None`` marks an exact finite Laurent
polynomial.  ``truncated`` records whether a nonzero term was actually discarded.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Mapping

from .laurent import LaurentPoly

DEFAULT_ORDER = 8


def _min_order(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class TruncatedSeries:
    __slots__ = ("coeffs", "order", "truncated")

    def __init__(self, coeffs: Mapping[int, Rational] | None = None, order: int | None = DEFAULT_ORDER,
                 truncated: bool = False):
        kept = {}
        for e, c in (coeffs or {}).items():
            if c == 0:
                continue
            if order is not None and e > order:
                truncated = True
                continue
            kept[int(e)] = Fraction(c)
        self.coeffs: dict[int, Fraction] = dict(sorted(kept.items()))
        self.order = order
        self.truncated = truncated

    @classmethod
    def const(cls, c, order: int | None = DEFAULT_ORDER) -> TruncatedSeries:
        return cls({0: c}, order)

    @classmethod
    def monomial(cls, exp: int, c=1, order: int | None = None) -> TruncatedSeries:
        return cls({exp: c}, order)

    @classmethod
    def zero(cls, order: int | None = None) -> TruncatedSeries:
        return cls({}, order)

    def coefficient(self, exp: int) -> Fraction:
        if self.order is not None and exp > self.order:
            raise ValueError(f"coefficient of eps^{exp} lies beyond precision {self.order}")
        return self.coeffs.get(exp, Fraction(0))

    @property
    def valuation(self) -> int | None:
        """Smallest exponent with a nonzero coefficient (``None`` for zero)."""
        return next(iter(self.coeffs), None)

    def is_zero(self) -> bool:
        return not self.coeffs

    def truncate(self, order: int | None) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs, _min_order(self.order, order), self.truncated)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self.coeffs)
        for e, c in other.coeffs.items():
            acc[e] = acc.get(e, 0) + c
        return TruncatedSeries(acc, _min_order(self.order, other.order), self.truncated or other.truncated)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries({e: -c for e, c in self.coeffs.items()}, self.order, self.truncated)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        # precision of a product is limited by each factor's precision plus the other's valuation
        order = None
        if self.order is not None:
            v = other.valuation
            order = _min_order(order, self.order + (v if v is not None else 0))
        if other.order is not None:
            v = self.valuation
            order = _min_order(order, other.order + (v if v is not None else 0))
        acc: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                if order is not None and e1 + e2 > order:
                    continue
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return TruncatedSeries(acc, order, self.truncated or other.truncated)

    __rmul__ = __mul__

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by ``eps**k``."""
        return TruncatedSeries(
            {e + k: c for e, c in self.coeffs.items()}, None if self.order is None else self.order + k, self.truncated
        )

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def items(self):
        return self.coeffs.items()

    def __repr__(self):
        return f"TruncatedSeries({self.coeffs!r}, order={self.order})"

    def __str__(self):
        if not self.coeffs:
            body = "0"
        else:
            parts = []
            for e, c in self.coeffs.items():
                mono = "" if e == 0 else ("eps" if e == 1 else f"eps^{e}")
                if not mono:
                    parts.append(str(c))
                elif c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append("-" + mono)
                else:
                    parts.append(f"{c}*{mono}")
            body = " + ".join(parts).replace("+ -", "- ")
        if self.order is not None:
            body += f" + O(eps^{self.order + 1})"
        return body


def _coerce(x) -> TruncatedSeries | None:
    if isinstance(x, TruncatedSeries):
        return x
    if isinstance(x, Rational):
        return TruncatedSeries({0: x}, None)
    return None


def exp_substitute(p: LaurentPoly, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Replace ``q`` by ``exp(eps)`` and expand to precision ``order``."""
    coeffs = {}
    for j in range(order + 1):
        total = sum(Fraction(c) * Fraction(k) ** j for k, c in p.terms)
        coeffs[j] = total / factorial(j)
    return TruncatedSeries(coeffs, order, truncated=any(k != 0 for k, _ in p.terms))
