"""Singular braid monoids ``SB_n^g`` inside ``SB_{g+n}``.

Words mix ``s_i^{+-1}``, ``t_k^{+-1}`` and singular letters ``a_i`` (a transverse
double point between strands i and i+1).  Equality of monoid words is decided by
expanding every ``a_i`` into ``eps^-1 (s_i - s_i^-1)`` (see :mod:`.vassiliev`);
that map is injective on the singular braid monoid, a theorem external to this
package.  :func:`rewrite_derivation` gives independent positive certificates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .braid import (
    SIGMA,
    SING,
    TAU,
    BraidWord,
    Letter,
    artin_signature,
    check_letter_bounds,
    embed_letters,
    s,
    t,
    tau_expansion,
)
from .errors import AmbientMismatch, IndexOutOfRange, WordError
from .report import Report


def a(i: int, exp: int = 1) -> Letter:
    return Letter(SING, i, exp)


@dataclass(frozen=True)
class SingularWord:
    letters: tuple[Letter, ...]
    genus: int = 0
    strands: int = 1
    monoid: bool = True

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(Letter(*x) for x in self.letters))
        for pos, let in enumerate(self.letters):
            if let.kind in (SIGMA, TAU) and let.exp not in (1, -1):
                raise WordError(f"letter {let} at position {pos} must have exponent +1 or -1")
            if let.kind == SING:
                if let.exp == 0:
                    raise WordError(f"singular letter at position {pos} has exponent 0")
                if self.monoid and let.exp != 1:
                    raise WordError(f"monoid words admit only a_i with exponent +1 (position {pos})")
        check_letter_bounds(self.letters, self.genus, self.strands)

    @classmethod
    def from_braid(cls, w: BraidWord) -> SingularWord:
        return cls(w.letters, w.genus, w.strands)

    @property
    def ambient(self) -> tuple[int, int]:
        return (self.genus, self.strands)

    @property
    def singular_count(self) -> int:
        return sum(1 for x in self.letters if x.kind == SING)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: SingularWord) -> SingularWord:
        if isinstance(other, BraidWord):
            other = SingularWord.from_braid(other)
        if self.ambient != other.ambient:
            raise AmbientMismatch(f"cannot concatenate words over {self.ambient} and {other.ambient}")
        return SingularWord(self.letters + other.letters, self.genus, self.strands, self.monoid and other.monoid)

    def __str__(self):
        return " ".join(str(x) for x in self.letters)


def classical_singular(letters: Sequence, m: int) -> SingularWord:
    return SingularWord(tuple(Letter(*x) for x in letters), 0, m)


def embed_singular(w: SingularWord) -> SingularWord:
    return SingularWord(tuple(embed_letters(w.letters, w.genus)), 0, w.genus + w.strands, w.monoid)


def degree(w: SingularWord) -> int:
    return sum(x.exp for x in w.letters if x.kind == SING)


def _require_monoid(w: SingularWord) -> None:
    if not w.monoid:
        raise WordError("operation defined on monoid words only")


def desingularize_h(w: SingularWord) -> BraidWord:
    """Delete every singular letter."""
    _require_monoid(w)
    return BraidWord(tuple(x for x in w.letters if x.kind != SING), w.genus, w.strands)


def desingularize_h_prime(w: SingularWord) -> BraidWord:
    """Replace every ``a_i`` by ``s_i``."""
    _require_monoid(w)
    return BraidWord(tuple(s(x.index) if x.kind == SING else x for x in w.letters), w.genus, w.strands)


def tau_interval(i: int, m: int, genus: int | None = None, strands: int = 1) -> SingularWord:
    """The product ``t_i t_{i+1} ... t_m``."""
    if i > m:
        raise WordError(f"empty tau interval [{i}, {m}]")
    genus = m if genus is None else genus
    if not 1 <= i or m > genus:
        raise IndexOutOfRange(0, t(m), f"tau interval [{i}, {m}] outside genus {genus}")
    return SingularWord(tuple(t(k) for k in range(i, m + 1)), genus, strands)


def singular_words_equal(u: SingularWord, v: SingularWord) -> bool:
    from .vassiliev import expand

    if u.ambient != v.ambient:
        raise AmbientMismatch(f"ambients differ: {u.ambient} vs {v.ambient}")
    _require_monoid(u)
    _require_monoid(v)
    return expand(u) == expand(v)


# --- presentation of SB_m and rewriting -----------------------------------------------

def presentation1_relations(m: int) -> list[tuple[str, SingularWord, SingularWord]]:
    """All instances of the defining relations of ``SB_m``."""
    rels: list[tuple[str, tuple, tuple]] = []
    idx = range(1, m)
    for i in idx:
        for j in idx:
            if j > i + 1:
                rels.append((f"s{i} s{j} = s{j} s{i}", (s(i), s(j)), (s(j), s(i))))
                rels.append((f"a{i} a{j} = a{j} a{i}", (a(i), a(j)), (a(j), a(i))))
            if abs(i - j) != 1:
                rels.append((f"a{i} s{j} = s{j} a{i}", (a(i), s(j)), (s(j), a(i))))
    for i in range(1, m - 1):
        rels.append((f"s{i} s{i+1} s{i} = s{i+1} s{i} s{i+1}", (s(i), s(i + 1), s(i)), (s(i + 1), s(i), s(i + 1))))
        rels.append((f"s{i} s{i+1} a{i} = a{i+1} s{i} s{i+1}", (s(i), s(i + 1), a(i)), (a(i + 1), s(i), s(i + 1))))
        rels.append((f"s{i+1} s{i} a{i+1} = a{i} s{i+1} s{i}", (s(i + 1), s(i), a(i + 1)), (a(i), s(i + 1), s(i))))
    for i in idx:
        rels.append((f"s{i} s{i}^-1 = 1", (s(i), s(i, -1)), ()))
        rels.append((f"s{i}^-1 s{i} = 1", (s(i, -1), s(i)), ()))
    return [(name, classical_singular(l, m), classical_singular(r, m)) for name, l, r in rels]


@dataclass
class Derivation:
    """A chain ``words[0] -> words[1] -> ...`` with the rule used at each step."""

    words: list[tuple[Letter, ...]]
    rules: list[str] = field(default_factory=list)

    def __len__(self):
        return len(self.rules)

    def format(self) -> str:
        lines = [" ".join(map(str, self.words[0])) or "1"]
        for rule, w in zip(self.rules, self.words[1:]):
            lines.append(f"  [{rule}] -> " + (" ".join(map(str, w)) or "1"))
        return "\n".join(lines)


def _rewrite_rules(m: int) -> list[tuple[str, tuple, tuple]]:
    rules = []
    for name, l, r in presentation1_relations(m):
        if l.letters and r.letters:
            rules.append((name, l.letters, r.letters))
            rules.append((name + " (reversed)", r.letters, l.letters))
    return rules


def _neighbors(word: tuple, rules, m: int, insert_inverses: bool):
    n = len(word)
    for name, lhs, rhs in rules:
        k = len(lhs)
        for p in range(n - k + 1):
            if word[p : p + k] == lhs:
                yield word[:p] + rhs + word[p + k :], f"{name} @{p}"
    for p in range(n - 1):
        x, y = word[p], word[p + 1]
        if x.kind == SIGMA and y.kind == SIGMA and x.index == y.index and x.exp == -y.exp:
            yield word[:p] + word[p + 2 :], f"free cancel {x} {y} @{p}"
    if insert_inverses:
        for p in range(n + 1):
            for i in range(1, m):
                for e in (1, -1):
                    yield word[:p] + (s(i, e), s(i, -e)) + word[p:], f"free insert {s(i, e)} {s(i, -e)} @{p}"


def rewrite_derivation(
    u: SingularWord,
    v: SingularWord,
    depth: int = 8,
    insert_inverses: bool = False,
) -> Derivation | None:
    """Bidirectional breadth-first search for a chain of relation applications.

    Words are embedded into ``SB_{g+n}`` first.  Returns ``None`` when no chain of
    length at most ``depth`` exists among the explored moves; that does not imply
    the words differ.
    """
    if u.ambient != v.ambient:
        raise AmbientMismatch(f"ambients differ: {u.ambient} vs {v.ambient}")
    src = embed_singular(u).letters
    dst = embed_singular(v).letters
    m = u.genus + u.strands
    if src == dst:
        return Derivation([src])
    rules = _rewrite_rules(m)
    # parent maps: word -> (previous word, rule) on each side
    fwd: dict[tuple, tuple | None] = {src: None}
    bwd: dict[tuple, tuple | None] = {dst: None}
    fq, bq = [src], [dst]
    used = 0
    while used < depth and fq and bq:
        grow_fwd = len(fq) <= len(bq)
        frontier, seen, other = (fq, fwd, bwd) if grow_fwd else (bq, bwd, fwd)
        nxt = []
        for w in frontier:
            for nw, rule in _neighbors(w, rules, m, insert_inverses):
                if nw in seen:
                    continue
                seen[nw] = (w, rule)
                if nw in other:
                    return _join(nw, fwd, bwd)
                nxt.append(nw)
        used += 1
        if grow_fwd:
            fq = nxt
        else:
            bq = nxt
    return None


def _join(meet, fwd, bwd) -> Derivation:
    head = []
    rules_head = []
    w = meet
    while fwd[w] is not None:
        prev, rule = fwd[w]
        head.append(w)
        rules_head.append(rule)
        w = prev
    head.append(w)
    head.reverse()
    rules_head.reverse()
    words = head
    rules = rules_head
    w = meet
    while bwd[w] is not None:
        prev, rule = bwd[w]
        words.append(prev)
        rules.append(rule)
        w = prev
    return Derivation(words, rules)


def verify_derivation(d: Derivation, m: int) -> bool:
    """Re-check that each step is a single admissible move (including insertions)."""
    rules = _rewrite_rules(m)
    for w, nw in zip(d.words, d.words[1:]):
        if not any(x == nw for x, _ in _neighbors(w, rules, m, True)):
            if not any(x == w for x, _ in _neighbors(nw, rules, m, True)):
                return False
    return True


# --- Proposition-1 type identities ----------------------------------------------------

def equation3_words(g: int) -> tuple[SingularWord, SingularWord]:
    """``s_g s_{g+1}^2 s_g a_{g+1}`` and ``a_{g+1} s_g s_{g+1}^2 s_g`` in ``SB_{g+2}``."""
    core = (s(g), s(g + 1), s(g + 1), s(g))
    m = g + 2
    return classical_singular(core + (a(g + 1),), m), classical_singular((a(g + 1),) + core, m)


def proposition1_words(g: int, n: int, i: int) -> tuple[SingularWord, SingularWord]:
    if not 1 <= i <= g:
        raise WordError(f"need 1 <= i <= g, got i={i}, g={g}")
    T: list[Letter] = []
    for k in range(i, g + 1):
        T.extend(tau_expansion(k, g))
    m = g + n
    lhs = T + [s(g + 1)] + T + [a(g + 1)]
    rhs = [a(g + 1)] + T + [s(g + 1)] + T
    return classical_singular(lhs, m), classical_singular(rhs, m)


def corollary1_words(g: int, n: int, i: int) -> tuple[SingularWord, SingularWord]:
    if not 1 <= i <= g:
        raise WordError(f"need 1 <= i <= g, got i={i}, g={g}")
    T = [t(k) for k in range(i, g + 1)]
    lhs = T + [s(1)] + T + [a(1)]
    rhs = [a(1)] + T + [s(1)] + T
    return SingularWord(tuple(lhs), g, n), SingularWord(tuple(rhs), g, n)


def proposition1_check(g: int, n: int, i: int, depth: int = 8) -> Report:
    if i > g:
        raise WordError(f"need i <= g, got i={i}, g={g}")
    if n < 2:
        raise WordError("the identities involve s_1 and a_1, so n >= 2")
    rep = Report(f"prop1 g={g} n={n} i={i}")
    lhs, rhs = proposition1_words(g, n, i)
    rep.add("proposition 1 (expansion oracle)", singular_words_equal(lhs, rhs))
    cl, cr = corollary1_words(g, n, i)
    rep.add("corollary 1 (expansion oracle)", singular_words_equal(cl, cr))
    rep.add("corollary 1 embeds onto proposition 1", embed_singular(cl) == lhs and embed_singular(cr) == rhs)
    e3l, e3r = equation3_words(g)
    d3 = rewrite_derivation(e3l, e3r, depth=depth)
    rep.add("equation (3) derivation", d3 is not None and verify_derivation(d3, g + 2))
    rep.info["equation3_derivation_length"] = None if d3 is None else len(d3)
    d = rewrite_derivation(lhs, rhs, depth=depth)
    rep.info["proposition1_derivation_length"] = None if d is None else len(d)
    if d is not None:
        rep.info["proposition1_derivation"] = d.format()
    return rep


def relation_instances_hold_under_h(m: int) -> Report:
    """Necessary conditions: both desingularizations respect every relation of ``SB_m``."""
    rep = Report(f"relations1 h/h' m={m}")
    for name, lhs, rhs in presentation1_relations(m):
        rep.add(f"h: {name}", artin_signature(desingularize_h(lhs)) == artin_signature(desingularize_h(rhs)))
        rep.add(
            f"h': {name}",
            artin_signature(desingularize_h_prime(lhs)) == artin_signature(desingularize_h_prime(rhs)),
        )
    return rep
