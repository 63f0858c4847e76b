"""Hypothesis strategies for words."""

from hypothesis import strategies as st

from hvassiliev.braid import BraidWord, s, t
from hvassiliev.singular import SingularWord, a


def signed_words(m, max_len=12):
    gens = [i * e for i in range(1, m) for e in (1, -1)]
    return st.lists(st.sampled_from(gens), max_size=max_len)


@st.composite
def classical_words(draw, m_min=2, m_max=6, max_len=12):
    m = draw(st.integers(m_min, m_max))
    word = draw(signed_words(m, max_len))
    return BraidWord(tuple(s(abs(x), 1 if x > 0 else -1) for x in word), 0, m)


@st.composite
def handlebody_words(draw, g_max=2, n_max=3, max_len=10, g=None, n=None):
    g = draw(st.integers(0, g_max)) if g is None else g
    n = draw(st.integers(1, n_max)) if n is None else n
    letters = [s(i, e) for i in range(1, n) for e in (1, -1)] + [t(k, e) for k in range(1, g + 1) for e in (1, -1)]
    if not letters:
        return BraidWord((), g, n)
    return BraidWord(tuple(draw(st.lists(st.sampled_from(letters), max_size=max_len))), g, n)


@st.composite
def monoid_words(draw, m_min=2, m_max=5, max_len=8, max_sing=3, g=0):
    m = draw(st.integers(m_min, m_max))
    braid = [s(i, e) for i in range(1, m) for e in (1, -1)] + [t(k, e) for k in range(1, g + 1) for e in (1, -1)]
    sing = [a(i) for i in range(1, m)]
    letters = draw(st.lists(st.sampled_from(braid), max_size=max_len))
    for x in draw(st.lists(st.sampled_from(sing), max_size=max_sing)):
        pos = draw(st.integers(0, len(letters)))
        letters.insert(pos, x)
    return SingularWord(tuple(letters), g, m)
