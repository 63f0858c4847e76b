"""Braid words in handlebodies and the classical braid group.

A handlebody braid group ``Br_n^g`` sits inside ``Br_{g+n}`` as the braids that
leave the first ``g`` strands straight.  Words carry abstract ``t_k`` letters
(loops of the first moving strand around the k-th handle) and are expanded to
classical Artin letters only when embedded.

The word problem is solved with the Artin action on the free group
``F(x_1, ..., x_m)``.  The action of ``s_i`` is fixed project-wide as::

    x_i     -> x_i x_{i+1} x_i^-1
    x_{i+1} -> x_i

and the signature of a word ``w`` lists the images of all ``x_j`` under the
automorphism ``phi_w`` where ``phi_{uv} = phi_u o phi_v``.  Free-group words are
tuples of nonzero ints, ``j`` for ``x_j`` and ``-j`` for its inverse.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import AmbientMismatch, IndexOutOfRange, ResourceError, WordError
from .report import Report

SIGMA = "s"
TAU = "t"
SING = "a"

MAX_IMAGE_LENGTH = int(os.environ.get("HVASSILIEV_MAX_IMAGE", 10**6))


class Letter(NamedTuple):
    kind: str
    index: int
    exp: int = 1

    def inverse(self) -> Letter:
        return Letter(self.kind, self.index, -self.exp)

    def __str__(self):
        return f"{self.kind}{self.index}" + ("" if self.exp == 1 else f"^{self.exp}")


def s(i: int, exp: int = 1) -> Letter:
    return Letter(SIGMA, i, exp)


def t(k: int, exp: int = 1) -> Letter:
    return Letter(TAU, k, exp)


def check_letter_bounds(letters: Sequence[Letter], genus: int, strands: int) -> None:
    for pos, let in enumerate(letters):
        if let.kind in (SIGMA, SING):
            if not 1 <= let.index < strands:
                raise IndexOutOfRange(pos, let)
        elif let.kind == TAU:
            if not 1 <= let.index <= genus:
                raise IndexOutOfRange(pos, let)
        else:
            raise WordError(f"unknown letter kind {let.kind!r} at position {pos}")


@dataclass(frozen=True)
class BraidWord:
    """A word in ``Br_n^g``; ``genus=0`` gives the classical group ``Br_n``."""

    letters: tuple[Letter, ...]
    genus: int = 0
    strands: int = 1

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(Letter(*x) for x in self.letters))
        if self.genus < 0 or self.strands < 1:
            raise WordError(f"bad ambient (g={self.genus}, n={self.strands})")
        for pos, let in enumerate(self.letters):
            if let.kind not in (SIGMA, TAU):
                raise WordError(f"letter {let} at position {pos} is not a braid generator")
            if let.exp not in (1, -1):
                raise WordError(f"letter {let} at position {pos} must have exponent +1 or -1")
        check_letter_bounds(self.letters, self.genus, self.strands)

    @property
    def ambient(self) -> tuple[int, int]:
        return (self.genus, self.strands)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.ambient != other.ambient:
            raise AmbientMismatch(f"cannot concatenate words over {self.ambient} and {other.ambient}")
        return BraidWord(self.letters + other.letters, self.genus, self.strands)

    def with_strands(self, strands: int) -> BraidWord:
        return BraidWord(self.letters, self.genus, strands)

    def __str__(self):
        return " ".join(str(x) for x in self.letters)


def classical(letters: Iterable, m: int) -> BraidWord:
    """Classical word on ``m`` strands; items may be Letters or signed ints ``+-i``."""
    out = []
    for x in letters:
        if isinstance(x, int):
            out.append(s(abs(x), 1 if x > 0 else -1))
        else:
            out.append(Letter(*x))
    return BraidWord(tuple(out), 0, m)


def validate_word(w: BraidWord) -> BraidWord:
    check_letter_bounds(w.letters, w.genus, w.strands)
    return w


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[Letter] = []
    for let in w.letters:
        if stack and stack[-1].kind == let.kind and stack[-1].index == let.index and stack[-1].exp == -let.exp:
            stack.pop()
        else:
            stack.append(let)
    return BraidWord(tuple(stack), w.genus, w.strands)


def invert_word(w: BraidWord) -> BraidWord:
    return BraidWord(tuple(x.inverse() for x in reversed(w.letters)), w.genus, w.strands)


def tau_expansion(k: int, g: int, exp: int = 1) -> tuple[Letter, ...]:
    """Classical letters of ``t_k`` (or its inverse) for genus ``g``."""
    if not 1 <= k <= g:
        raise IndexOutOfRange(0, t(k), f"tau index {k} outside 1..{g}")
    head = [s(j) for j in range(g, k, -1)]
    tail = [s(j, -1) for j in range(k + 1, g + 1)]
    word = head + [s(k), s(k)] + tail
    if exp == -1:
        word = [x.inverse() for x in reversed(word)]
    return tuple(word)


def embed_letters(letters: Sequence[Letter], g: int) -> list[Letter]:
    out: list[Letter] = []
    for let in letters:
        if let.kind == TAU:
            out.extend(tau_expansion(let.index, g, let.exp))
        else:
            out.append(Letter(let.kind, let.index + g, let.exp))
    return out


def embed_handlebody(w: BraidWord) -> BraidWord:
    """Image of ``w`` in ``Br_{g+n}``."""
    return BraidWord(tuple(embed_letters(w.letters, w.genus)), 0, w.genus + w.strands)


# --- free group and the Artin action -------------------------------------------------

def fg_mul(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    k = 0
    n = min(len(u), len(v))
    while k < n and u[-1 - k] == -v[k]:
        k += 1
    return u[: len(u) - k] + v[k:]


def fg_inv(u: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(u))


def fg_reduce(u: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for x in u:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


@dataclass(frozen=True)
class ArtinSignature:
    m: int
    images: tuple[tuple[int, ...], ...]

    @classmethod
    def identity(cls, m: int) -> ArtinSignature:
        return cls(m, tuple((j,) for j in range(1, m + 1)))

    def is_identity(self) -> bool:
        return self == ArtinSignature.identity(self.m)

    def apply(self, word: Sequence[int]) -> tuple[int, ...]:
        """Image of a free-group word under this automorphism."""
        out: tuple[int, ...] = ()
        for x in word:
            img = self.images[abs(x) - 1]
            out = fg_mul(out, img if x > 0 else fg_inv(img))
        return out

    def compose(self, other: ArtinSignature) -> ArtinSignature:
        """Signature of the concatenation ``self_word * other_word``."""
        if self.m != other.m:
            raise AmbientMismatch("signatures on different strand counts")
        images = tuple(self.apply(img) for img in other.images)
        _check_length(images)
        return ArtinSignature(self.m, images)

    def format(self) -> str:
        def fmt(u):
            return " ".join(f"x{x}" if x > 0 else f"x{-x}^-1" for x in u) or "1"
        return "(" + ", ".join(fmt(u) for u in self.images) + ")"


def _check_length(images) -> None:
    total = sum(len(u) for u in images)
    if total > MAX_IMAGE_LENGTH:
        raise ResourceError(f"Artin signature length {total} exceeds bound {MAX_IMAGE_LENGTH}")


def append_sigma(images: list[tuple[int, ...]], i: int, exp: int) -> None:
    """In-place right multiplication of a signature by ``s_i^exp`` (1-based ``i``)."""
    a, b = images[i - 1], images[i]
    if exp == 1:
        images[i - 1] = fg_mul(fg_mul(a, b), fg_inv(a))
        images[i] = a
    else:
        images[i - 1] = b
        images[i] = fg_mul(fg_mul(fg_inv(b), a), b)


def signature_of_letters(letters: Iterable[tuple[int, int]], m: int) -> ArtinSignature:
    """Signature of a classical word given as ``(index, exp)`` pairs."""
    images = [(j,) for j in range(1, m + 1)]
    total = m
    for i, e in letters:
        before = len(images[i - 1]) + len(images[i])
        append_sigma(images, i, e)
        total += len(images[i - 1]) + len(images[i]) - before
        if total > MAX_IMAGE_LENGTH:
            raise ResourceError(f"Artin signature length exceeds bound {MAX_IMAGE_LENGTH}")
    return ArtinSignature(m, tuple(images))


def artin_signature(w: BraidWord) -> ArtinSignature:
    """Canonical form of a word; handlebody words are embedded first."""
    if w.genus:
        w = embed_handlebody(w)
    return signature_of_letters(((x.index, x.exp) for x in w.letters), w.strands)


def words_equal(u: BraidWord, v: BraidWord) -> bool:
    if u.ambient != v.ambient:
        raise AmbientMismatch(f"ambients differ: {u.ambient} vs {v.ambient}")
    return artin_signature(u) == artin_signature(v)


def writhe(w: BraidWord) -> int:
    total = 0
    for let in w.letters:
        total += 2 * let.exp if let.kind == TAU else let.exp
    return total


def permutation(w: BraidWord) -> list[int]:
    """Where each moving strand ends: ``perm[start] = end`` (0-based over n strands)."""
    pos = list(range(w.strands))  # pos[p] = strand currently at position p
    for let in w.letters:
        if let.kind == SIGMA:
            i = let.index - 1
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
    perm = [0] * w.strands
    for p, strand in enumerate(pos):
        perm[strand] = p
    return perm


def closure_components(w: BraidWord) -> int:
    perm = permutation(w)
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if not seen[start]:
            cycles += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles + w.genus


def forget_strands(letters: Sequence[tuple[int, int]], m: int, drop: Iterable[int]) -> list[tuple[int, int]]:
    """Delete strands (1-based starting positions) from a classical word.

    Crossings involving a deleted strand disappear, the others are renumbered.
    Defined when every deleted strand ends where it started.
    """
    drop = set(drop)
    strand_at = list(range(1, m + 1))
    out: list[tuple[int, int]] = []
    for i, e in letters:
        a, b = strand_at[i - 1], strand_at[i]
        if a not in drop and b not in drop:
            shift = sum(1 for p in range(i - 1) if strand_at[p] in drop)
            out.append((i - shift, e))
        strand_at[i - 1], strand_at[i] = b, a
    for p, strand in enumerate(strand_at, start=1):
        if strand in drop and strand != p:
            raise WordError(f"strand {strand} does not return to its position")
    return out


# --- relations of the handlebody presentation ----------------------------------------

def _hw(letters, g, n) -> BraidWord:
    return BraidWord(tuple(letters), g, n)


def tau_interval_classical(i: int, m: int) -> list[Letter]:
    out: list[Letter] = []
    for k in range(i, m + 1):
        out.extend(tau_expansion(k, m))
    return out


def presentation2_relations(g: int, n: int) -> list[tuple[str, BraidWord, BraidWord]]:
    """All instances of the defining relations of ``Br_n^g``."""
    rels = []
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append((f"s{i} s{j} = s{j} s{i}", _hw([s(i), s(j)], g, n), _hw([s(j), s(i)], g, n)))
    for i in range(1, n - 1):
        rels.append((
            f"s{i} s{i+1} s{i} = s{i+1} s{i} s{i+1}",
            _hw([s(i), s(i + 1), s(i)], g, n),
            _hw([s(i + 1), s(i), s(i + 1)], g, n),
        ))
    for k in range(1, g + 1):
        for i in range(2, n):
            rels.append((f"t{k} s{i} = s{i} t{k}", _hw([t(k), s(i)], g, n), _hw([s(i), t(k)], g, n)))
    if n >= 2:
        for k in range(1, g + 1):
            rels.append((
                f"t{k} s1 t{k} s1 = s1 t{k} s1 t{k}",
                _hw([t(k), s(1), t(k), s(1)], g, n),
                _hw([s(1), t(k), s(1), t(k)], g, n),
            ))
        for k in range(1, g):
            for l in range(1, g - k + 1):
                kl = k + l
                rels.append((
                    f"t{k} s1^-1 t{kl} s1 = s1^-1 t{kl} s1 t{k}",
                    _hw([t(k), s(1, -1), t(kl), s(1)], g, n),
                    _hw([s(1, -1), t(kl), s(1), t(k)], g, n),
                ))
    return rels


def remark_relations(g: int, n: int) -> list[tuple[str, BraidWord, BraidWord, BraidWord]]:
    """Instances ``(label, lhs, rhs_symmetric, rhs_printed)`` of the relation for
    ``t_{i,m}`` and ``s_{m+1}`` in ``Br_{g+n}``, with ``t_{i,m}`` read in genus ``m``."""
    m_tot = g + n
    out = []
    for m in range(1, g + 1):
        if m + 1 >= m_tot:
            continue
        for i in range(1, m + 1):
            T = tau_interval_classical(i, m)
            sm = [s(m + 1)]
            lhs = classical(T + sm + T + sm, m_tot)
            sym = classical(sm + T + sm + T, m_tot)
            printed = classical(sm + T + sm, m_tot)
            out.append((f"t[{i},{m}] s{m+1} t[{i},{m}] s{m+1}", lhs, sym, printed))
    return out


def relation_suite_braid(g: int, n: int) -> Report:
    rep = Report(f"relations2 g={g} n={n}")
    for label, lhs, rhs in presentation2_relations(g, n):
        rep.add(label, words_equal(lhs, rhs))
    printed = {}
    for label, lhs, sym, pr in remark_relations(g, n):
        rep.add("remark " + label, words_equal(lhs, sym))
        printed[label] = words_equal(lhs, pr)
    rep.info["remark_printed_form_holds"] = printed
    return rep
