"""Elements of the Vassiliev algebra, represented through the braid group algebra.

An :class:`AlgebraElement` is a finite sum ``sum_k c_k(eps) * b_k`` with ``b_k`` in
``Br_m`` and coefficients :class:`~hvassiliev.series.TruncatedSeries`.  Terms are
keyed by the Artin signature of ``b_k``, so equal braids always merge; a reduced
representative word is kept next to each key for evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .braid import SING, ArtinSignature, BraidWord, append_sigma, embed_letters, fg_reduce, \
    signature_of_letters
from .errors import AmbientMismatch, ResourceError, WordError
from .series import TruncatedSeries
from .singular import SingularWord

MAX_SINGULAR_LETTERS = 20

Word = tuple[tuple[int, int], ...]


def _reduce_word(word: Iterable[tuple[int, int]]) -> Word:
    signed = fg_reduce(i * e for i, e in word)
    return tuple((abs(x), 1 if x > 0 else -1) for x in signed)


@dataclass
class AlgebraElement:
    """Formal combination of classical braids on ``m`` strands.

    ``genus`` records how many leading strands are handle strands; keys built from
    embedded handlebody words keep those strands straight.
    """

    m: int
    terms: dict[ArtinSignature, tuple[Word, TruncatedSeries]] = field(default_factory=dict)
    genus: int = 0

    @classmethod
    def zero(cls, m: int, genus: int = 0) -> AlgebraElement:
        return cls(m, {}, genus)

    @classmethod
    def from_word(cls, word: Sequence[tuple[int, int]], m: int, coeff=None, genus: int = 0) -> AlgebraElement:
        word = _reduce_word(word)
        coeff = TruncatedSeries.const(1, None) if coeff is None else _as_series(coeff)
        if coeff.is_zero():
            return cls.zero(m, genus)
        return cls(m, {signature_of_letters(word, m): (word, coeff)}, genus)

    @classmethod
    def identity(cls, m: int, genus: int = 0) -> AlgebraElement:
        return cls.from_word((), m, genus=genus)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word: Sequence[tuple[int, int]]) -> TruncatedSeries:
        key = signature_of_letters(word, self.m)
        entry = self.terms.get(key)
        return entry[1] if entry else TruncatedSeries.zero()

    def _check(self, other: AlgebraElement) -> None:
        if self.m != other.m:
            raise AmbientMismatch(f"algebra elements on {self.m} and {other.m} strands")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        terms = dict(self.terms)
        for key, (word, c) in other.terms.items():
            if key in terms:
                w0, c0 = terms[key]
                total = c0 + c
                if total.is_zero():
                    del terms[key]
                else:
                    terms[key] = (w0, total)
            else:
                terms[key] = (word, c)
        return AlgebraElement(self.m, terms, min(self.genus, other.genus))

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.m, {k: (w, -c) for k, (w, c) in self.terms.items()}, self.genus)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, c) -> AlgebraElement:
        c = _as_series(c)
        terms = {}
        for k, (w, c0) in self.terms.items():
            prod = c0 * c
            if not prod.is_zero():
                terms[k] = (w, prod)
        return AlgebraElement(self.m, terms, self.genus)

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        terms: dict[ArtinSignature, tuple[Word, TruncatedSeries]] = {}
        for k1, (w1, c1) in self.terms.items():
            for k2, (w2, c2) in other.terms.items():
                key = k1.compose(k2)
                c = c1 * c2
                if key in terms:
                    w0, c0 = terms[key]
                    terms[key] = (w0, c0 + c)
                else:
                    terms[key] = (_reduce_word(w1 + w2), c)
        terms = {k: v for k, v in terms.items() if not v[1].is_zero()}
        return AlgebraElement(self.m, terms, min(self.genus, other.genus))

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if self.m != other.m or self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[k][1] == other.terms[k][1] for k in self.terms)

    def min_eps_exponent(self) -> int | None:
        vals = [c.valuation for _, c in self.terms.values()]
        return min(vals) if vals else None

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for word, c in self.terms.values():
            w = " ".join(f"s{i}" + ("" if e == 1 else "^-1") for i, e in word) or "e"
            parts.append(f"({c})*[{w}]")
        return " + ".join(parts)


def _as_series(c) -> TruncatedSeries:
    if isinstance(c, TruncatedSeries):
        return c
    return TruncatedSeries.const(c, None)


algebra_add = AlgebraElement.__add__
algebra_mul = AlgebraElement.__mul__


def expand(w: SingularWord | BraidWord, order: int | None = None) -> AlgebraElement:
    """Image of a monoid word under ``a_i -> eps^-1 (s_i - s_i^-1)``.

    The word is embedded into ``SB_{g+n}`` first.  With ``l`` singular letters the
    result has at most ``2**l`` terms, all with coefficient in ``eps^-l * Z``.
    """
    if isinstance(w, BraidWord):
        w = SingularWord.from_braid(w)
    if not w.monoid:
        raise WordError("expand is defined on monoid words only")
    l = w.singular_count
    if l > MAX_SINGULAR_LETTERS:
        raise ResourceError(f"{l} singular letters exceed the expansion bound {MAX_SINGULAR_LETTERS}")
    m = w.genus + w.strands
    letters = embed_letters(w.letters, w.genus)
    # partial terms: key -> [images, word, integer coefficient]
    start = [(j,) for j in range(1, m + 1)]
    partial: dict[tuple, list] = {tuple(start): [start, [], 1]}
    for let in letters:
        if let.kind != SING:
            nxt = {}
            for images, word, c in partial.values():
                images = list(images)
                append_sigma(images, let.index, let.exp)
                nxt[tuple(images)] = [images, word + [(let.index, let.exp)], c]
            partial = nxt
            continue
        nxt = {}
        for images, word, c in partial.values():
            for e, sign in ((1, 1), (-1, -1)):
                imgs = list(images)
                append_sigma(imgs, let.index, e)
                key = tuple(imgs)
                if key in nxt:
                    nxt[key][2] += sign * c
                else:
                    nxt[key] = [imgs, word + [(let.index, e)], sign * c]
        partial = {k: v for k, v in nxt.items() if v[2] != 0}
    terms = {}
    for key, (images, word, c) in partial.items():
        coeff = TruncatedSeries({-l: c}, order)
        if coeff.is_zero():
            continue
        terms[ArtinSignature(m, key)] = (_reduce_word(word), coeff)
    return AlgebraElement(m, terms, w.genus)


def v_g_map(w: BraidWord) -> AlgebraElement:
    """The braid ``w`` as a single algebra term with coefficient 1."""
    letters = embed_letters(w.letters, w.genus)
    return AlgebraElement.from_word([(x.index, x.exp) for x in letters], w.genus + w.strands, genus=w.genus)


def skein_check(i: int, m: int, order: int | None = None) -> bool:
    """Check ``s_i - s_i^-1 = eps * a_i`` after expansion."""
    from .singular import a

    diff = AlgebraElement.from_word([(i, 1)], m) - AlgebraElement.from_word([(i, -1)], m)
    rhs = expand(SingularWord((a(i),), 0, m), order).scale(TruncatedSeries.monomial(1))
    return diff == rhs


def generator_round_trip(j: int, m: int) -> bool:
    """``eps^-1 (s_j - s_j^-1)`` equals ``expand(a_j)`` exactly."""
    from .singular import a

    diff = AlgebraElement.from_word([(j, 1)], m) - AlgebraElement.from_word([(j, -1)], m)
    return diff.scale(TruncatedSeries.monomial(-1)) == expand(SingularWord((a(j),), 0, m))
