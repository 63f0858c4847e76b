import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hvassiliev.braid import BraidWord, artin_signature, free_reduce, s, t
from hvassiliev.errors import WordError
from hvassiliev.singular import (
    SingularWord,
    a,
    classical_singular,
    degree,
    desingularize_h,
    desingularize_h_prime,
    embed_singular,
    equation3_words,
    presentation1_relations,
    proposition1_check,
    relation_instances_hold_under_h,
    rewrite_derivation,
    singular_words_equal,
    tau_interval,
    verify_derivation,
)
from strategies import handlebody_words, monoid_words


def test_embed_singular_examples():
    assert embed_singular(SingularWord((a(1),), 1, 2)).letters == (a(2),)
    assert embed_singular(SingularWord((t(1), a(1)), 1, 2)).letters == (s(1), s(1), a(2))
    w = embed_singular(SingularWord((a(2),), 0, 3))
    assert w.letters == (a(2),) and w.strands == 3 and w.monoid


def test_degree_examples():
    assert degree(SingularWord((a(1),), 0, 2)) == 1
    assert degree(SingularWord((s(1), t(1), s(2, -1)), 1, 3)) == 0
    assert degree(SingularWord((a(1), a(2), a(1)), 0, 3)) == 3
    assert degree(SingularWord((a(1), a(1, -1), a(1, -1)), 0, 2, monoid=False)) == -1


def test_negative_a_rejected_in_monoid():
    with pytest.raises(WordError):
        SingularWord((a(1, -1),), 0, 2)
    with pytest.raises(WordError):
        desingularize_h(SingularWord((a(1, -1),), 0, 2, monoid=False))


def test_desingularization_examples():
    assert desingularize_h(SingularWord((s(1), a(2), s(3)), 0, 4)).letters == (s(1), s(3))
    assert desingularize_h(SingularWord((a(1), a(1)), 0, 2)).letters == ()
    assert desingularize_h_prime(SingularWord((a(1),), 0, 2)).letters == (s(1),)
    w = desingularize_h_prime(SingularWord((s(1, -1), a(1)), 0, 2))
    assert w.letters == (s(1, -1), s(1)) and free_reduce(w).letters == ()
    pure = SingularWord((s(1), s(2, -1)), 0, 3)
    assert desingularize_h(pure).letters == pure.letters == desingularize_h_prime(pure).letters


def test_tau_interval_examples():
    assert tau_interval(1, 1).letters == (t(1),)
    assert tau_interval(1, 3).letters == (t(1), t(2), t(3))
    assert tau_interval(2, 2).letters == (t(2),)
    with pytest.raises(WordError):
        tau_interval(3, 2)


def test_singular_words_equal_examples():
    assert singular_words_equal(classical_singular((a(1), s(3)), 4), classical_singular((s(3), a(1)), 4))
    assert singular_words_equal(classical_singular((s(1), s(2), a(1)), 3), classical_singular((a(2), s(1), s(2)), 3))
    assert not singular_words_equal(classical_singular((a(1),), 3), classical_singular((a(2),), 3))


def test_rewrite_derivation_examples():
    d = rewrite_derivation(classical_singular((s(1), s(1, -1)), 2), classical_singular((), 2), depth=1)
    assert d is not None and len(d) == 1
    d = rewrite_derivation(classical_singular((s(1), s(2), a(1)), 3), classical_singular((a(2), s(1), s(2)), 3))
    assert d is not None and len(d) == 1
    lhs, rhs = equation3_words(1)
    d = rewrite_derivation(lhs, rhs)
    assert d is not None and verify_derivation(d, 3)
    assert d.words[0] == lhs.letters and d.words[-1] == rhs.letters


def test_not_found_is_not_inequality():
    u, v = equation3_words(1)
    assert rewrite_derivation(u, v, depth=1) is None
    assert singular_words_equal(u, v)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_proposition1_all_i(g):
    for i in range(1, g + 1):
        rep = proposition1_check(g, 2, i)
        assert rep.passed, rep.failures


def test_proposition1_examples():
    assert proposition1_check(1, 2, 1).passed
    assert proposition1_check(2, 2, 1).passed
    assert proposition1_check(2, 2, 2).passed
    with pytest.raises(WordError):
        proposition1_check(1, 2, 2)


@pytest.mark.parametrize("m", range(2, 7))
def test_presentation1_under_oracle_and_h(m):
    for name, lhs, rhs in presentation1_relations(m):
        assert singular_words_equal(lhs, rhs), name
    assert relation_instances_hold_under_h(m).passed


def test_derivations_of_relations_are_length_one():
    for name, lhs, rhs in presentation1_relations(4):
        d = rewrite_derivation(lhs, rhs, depth=2)
        assert d is not None and len(d) == 1, name


@settings(max_examples=200, deadline=None)
@given(monoid_words(), st.data())
def test_degree_is_additive(u, data):
    v = data.draw(monoid_words(m_min=u.strands, m_max=u.strands))
    assert degree(u * v) == degree(u) + degree(v)
    assert degree(embed_singular(u)) == degree(u)


def test_h_right_inverse_500():
    rng = random.Random(11)
    for _ in range(500):
        g, n = rng.randint(0, 2), rng.randint(1, 4)
        letters = [s(i, e) for i in range(1, n) for e in (1, -1)] + [t(k, e) for k in range(1, g + 1) for e in (1, -1)]
        w = BraidWord(tuple(rng.choice(letters) for _ in range(rng.randint(0, 10))) if letters else (), g, n)
        assert desingularize_h(SingularWord.from_braid(w)) == w


@settings(max_examples=50, deadline=None)
@given(handlebody_words(g_max=2, n_max=3))
def test_degree_embedding_commutes(w):
    sw = SingularWord.from_braid(w)
    assert degree(embed_singular(sw)) == degree(sw) == 0
    assert artin_signature(desingularize_h(sw)) == artin_signature(w)
