"""Text syntax for words: ``s<i>``, ``t<k>``, ``a<i>`` with optional ``^<int>``.

Tokens are whitespace separated.  ``s1^3`` expands to ``s1 s1 s1`` and ``s2^-2`` to
``s2^-1 s2^-1``; ``^0`` contributes nothing.  The empty string and ``e`` both denote
the identity.
"""

from __future__ import annotations

import re

from .braid import SING, BraidWord, Letter
from .errors import IndexOutOfRange, WordError
from .singular import SingularWord

_TOKEN = re.compile(r"([sta])(\d+)(?:\^([+-]?\d+))?\Z")
MAX_REPEAT = 10_000


class ParseError(WordError):
    def __init__(self, position: int, message: str):
        self.position = position
        super().__init__(f"column {position + 1}: {message}")


def _tokens(text: str):
    for m in re.finditer(r"\S+", text):
        yield m.start(), m.group()


def parse_word(text: str, g: int = 0, n: int = 1, allow_singular: bool = False) -> BraidWord | SingularWord:
    """Parse ``text`` into a word of ``Br_n^g`` (or ``SB_n^g`` when ``allow_singular``).

    A :class:`SingularWord` is returned only when the text contains ``a`` letters.
    """
    letters: list[Letter] = []
    columns: list[int] = []
    for col, tok in _tokens(text):
        if tok == "e":
            continue
        m = _TOKEN.match(tok)
        if m is None:
            raise ParseError(col, f"unrecognized token {tok!r}")
        kind, idx, exp = m.group(1), int(m.group(2)), int(m.group(3) or 1)
        if idx < 1:
            raise ParseError(col, f"index in {tok!r} must be positive")
        if kind == SING:
            if not allow_singular:
                raise ParseError(col, f"singular letter {tok!r} not allowed here")
            if exp < 0:
                raise ParseError(col, f"singular letter {tok!r} with negative exponent in a monoid word")
        if abs(exp) > MAX_REPEAT:
            raise ParseError(col, f"exponent in {tok!r} exceeds {MAX_REPEAT}")
        one = 1 if exp > 0 else -1
        for _ in range(abs(exp)):
            letters.append(Letter(kind, idx, one))
            columns.append(col)
    try:
        if any(x.kind == SING for x in letters):
            return SingularWord(tuple(letters), g, n)
        return BraidWord(tuple(letters), g, n)
    except IndexOutOfRange as exc:
        col = columns[exc.position]
        raise IndexOutOfRange(exc.position, exc.letter,
                              f"column {col + 1}: {exc.letter} out of range for genus {g}, {n} strands") from None


def print_word(w: BraidWord | SingularWord) -> str:
    """Canonical spelling: one token per letter, single spaces, ``^-1`` for inverses."""
    return " ".join(f"{x.kind}{x.index}" + ("" if x.exp == 1 else f"^{x.exp}") for x in w.letters)
