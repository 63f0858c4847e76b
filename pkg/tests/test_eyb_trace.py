import json
import random
from fractions import Fraction

import pytest
import sympy as sp

from hvassiliev import trace as trace_mod
from hvassiliev.braid import BraidWord, classical, embed_handlebody, invert_word, presentation2_relations, s, t, words_equal
from hvassiliev.errors import OperatorError, ResourceError, WordError
from hvassiliev.eyb import (
    EYBOperator,
    corrupted,
    eyb_axioms_check,
    identity,
    identity_operator,
    load_operator,
    mat_mul,
    operator_from_dict,
    operator_to_dict,
    save_operator,
)
from hvassiliev.laurent import ONE, LaurentPoly, q
from hvassiliev.singular import a, classical_singular
from hvassiliev.trace import (
    markov_axioms_test,
    phi_collapse,
    raw_trace_exact,
    relation_suite_tensor,
    rho,
    trace_on_algebra,
    trace_TS,
    trace_TSi,
)
from hvassiliev.vassiliev import AlgebraElement, expand, v_g_map
from oracles import a_to_q, dense_trace, kauffman_invariant, laurent_to_sympy


def rand_word(rng, m, length):
    return [rng.choice([1, -1]) * rng.randint(1, m - 1) for _ in range(length)] if m > 1 else []


# --- operator ------------------------------------------------------------------------------

def test_jones_operator_passes_axioms(op):
    rep = eyb_axioms_check(op)
    assert rep.passed and len(rep.items) == 7
    assert op.unknot_value == -q - q.inverse()


def test_hecke_relation(op):
    diff = {k: v for k, v in op.R.items()}
    for k, v in op.R_inv.items():
        diff[k] = diff.get(k, LaurentPoly()) - v
    diff = {k: v for k, v in diff.items() if v}
    assert diff == {(i, i): q.inverse() - q for i in range(4)}


def test_corrupted_operator_fails(op):
    rep = eyb_axioms_check(corrupted(op))
    assert "yang-baxter" in rep.failures


def test_identity_operator_needs_beta_dim():
    bad = eyb_axioms_check(identity_operator(2, beta=1))
    assert "yang-baxter" not in bad.failures
    assert "Tr_2((I x mu) R) = alpha beta I" in bad.failures
    assert eyb_axioms_check(identity_operator(2)).passed
    assert eyb_axioms_check(identity_operator(3)).passed


def test_operator_file_round_trip(op, tmp_path):
    path = tmp_path / "jones.json"
    save_operator(op, path)
    back = load_operator(path)
    assert back.convention_id == op.convention_id
    data = json.loads(path.read_text())
    del data["R_inv"]
    back = operator_from_dict(data)
    assert back.R_inv == op.R_inv


def test_bundled_operator_file_matches(op):
    from importlib.resources import files

    path = files("hvassiliev") / "operators" / "jones-sl2.json"
    assert load_operator(path).convention_id == op.convention_id


def test_operator_file_errors(op, tmp_path):
    data = operator_to_dict(corrupted(op))
    with pytest.raises(OperatorError):
        operator_from_dict(data)
    with pytest.raises(OperatorError):
        operator_from_dict({"dim": 2, "R": [[0, 0, "1:x"]], "mu": [], "alpha": "0:1", "beta": "0:1"})
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(OperatorError):
        load_operator(bad)
    singular_R = dict(operator_to_dict(op), R=[[0, 0, "0:1"]], R_inv=[])
    with pytest.raises(OperatorError):
        operator_from_dict(singular_R)


# --- rho ------------------------------------------------------------------------------------

def test_rho_examples(op):
    assert rho(classical([], 2), op) == identity(4)
    assert rho(classical([1], 2), op) == op.R
    assert rho(classical([1, -1], 2), op) == identity(4)


def test_rho_is_a_representation(op):
    rng = random.Random(2)
    for _ in range(200):
        m = rng.randint(2, 4)
        u, v = rand_word(rng, m, rng.randint(0, 4)), rand_word(rng, m, rng.randint(0, 4))
        assert rho(classical(u + v, m), op) == mat_mul(rho(classical(u, m), op), rho(classical(v, m), op))


@pytest.mark.parametrize("m", range(2, 7))
def test_tensor_relations1(op, m):
    rep = relation_suite_tensor(m, op)
    assert rep.passed, rep.failures


def test_singular_letter_acts_as_difference(op):
    lhs = rho(classical_singular((a(1),), 2), op)
    assert lhs == {(i, i): q.inverse() - q for i in range(4)}


def test_resource_bound(op):
    with pytest.raises(ResourceError):
        trace_TS(classical([1], 13), op)


# --- trace_TS -------------------------------------------------------------------------------

def test_trace_examples(op):
    assert trace_TS(classical([], 1), op) == ONE
    assert trace_TS(classical([1], 2), op) == ONE
    assert trace_TS(classical([-1], 2), op) == ONE


@pytest.mark.parametrize("word", [[1, 1, 1], [1, 1], [-1, -1, -1], [1, -2, 1, -2], [1, 1, 2, -1, 2], [1, 2, 3]])
def test_trace_matches_kauffman_oracle(op, word):
    m = max(abs(x) for x in word) + 1
    expected = LaurentPoly(a_to_q(kauffman_invariant(word, m)))
    assert trace_TS(classical(word, m), op) == expected


def test_trace_matches_dense_oracle(op):
    rng = random.Random(4)
    for _ in range(15):
        m = rng.randint(1, 4)
        w = rand_word(rng, m, rng.randint(0, 6))
        got = laurent_to_sympy(trace_TS(classical(w, m), op))
        assert sp.expand(got - dense_trace(op, w, m)) == 0


def test_fast_path_equals_exact_path(op):
    rng = random.Random(8)
    for _ in range(40):
        m = rng.randint(2, 6)
        letters = [(rng.choice("+-a"), rng.randint(1, m - 1)) for _ in range(rng.randint(0, 12))]
        assert trace_mod._engine(op, m).raw_trace(letters) == raw_trace_exact(letters, m, op)


def test_overflow_guard_falls_back(op, monkeypatch):
    letters = [("+", 1), ("-", 2), ("a", 1)] * 4
    expected = raw_trace_exact(letters, 3, op)
    monkeypatch.setattr(trace_mod, "_INT_LIMIT", 8)
    assert trace_mod._engine(op, 3).raw_trace(letters) is None
    trace_mod._raw_trace_cached.cache_clear()
    assert trace_mod._raw_trace_cached(op, tuple(letters), 3) == expected
    trace_mod._raw_trace_cached.cache_clear()


def test_rational_operator_uses_exact_path(op):
    c = Fraction(1, 2)
    scaled = EYBOperator(
        2,
        {k: v * LaurentPoly.const(c) for k, v in op.R.items()},
        {k: v * LaurentPoly.const(1 / c) for k, v in op.R_inv.items()},
        op.mu,
        op.alpha * LaurentPoly.const(c),
        op.beta,
        name="scaled",
    )
    assert eyb_axioms_check(scaled).passed
    w = classical([1, 1, 1, -2, 1], 3)
    assert trace_TS(w, scaled) == trace_TS(w, op)


def test_conjugation_invariance(op):
    rng = random.Random(9)
    for _ in range(100):
        m = rng.randint(2, 5)
        g = classical(rand_word(rng, m, rng.randint(0, 4)), m)
        x = classical(rand_word(rng, m, rng.randint(0, 6)), m)
        assert trace_TS(g * x * invert_word(g), op) == trace_TS(x, op)


def test_split_unknot_scales_by_unknot_value(op):
    x = classical([1, 1, 1], 2)
    assert trace_TS(x.with_strands(3), op) == op.unknot_value * trace_TS(x, op)


def test_trace_rejects_singular_words(op):
    with pytest.raises(WordError):
        trace_TS(classical_singular((a(1),), 2), op)


# --- collapse and handlebody traces ---------------------------------------------------------

def test_phi_collapse_examples():
    w = BraidWord((t(1), s(1), t(2)), 2, 2)
    assert phi_collapse(w, 2) == BraidWord((s(1),), 0, 2)
    assert phi_collapse(BraidWord((t(2),), 2, 2), 1) == BraidWord((t(1),), 1, 2)
    assert phi_collapse(w, 0) == w
    with pytest.raises(WordError):
        phi_collapse(w, 3)


@pytest.mark.parametrize("g", range(4))
@pytest.mark.parametrize("n", range(1, 4))
def test_phi_well_defined(g, n):
    for label, lhs, rhs in presentation2_relations(g, n):
        for i in range(g + 1):
            assert words_equal(phi_collapse(lhs, i), phi_collapse(rhs, i)), (label, i)


def test_trace_TSi_examples(op):
    for n in (1, 2, 3):
        w = BraidWord((t(1),), 1, n)
        value = trace_TSi(w, 1, op)
        assert value == op.unknot_value ** (n - 1)
        assert sp.expand(laurent_to_sympy(value) - dense_trace(op, [], n)) == 0
    hopf = LaurentPoly(a_to_q(kauffman_invariant([1, 1], 2)))
    assert trace_TSi(BraidWord((t(1),), 1, 1), 0, op) == hopf
    w = BraidWord((s(1), s(2, -1), s(1)), 0, 3)
    assert trace_TSi(w, 0, op) == trace_TS(embed_handlebody(w), op)


def test_trace_on_algebra_examples(op):
    w = BraidWord((t(1), s(1)), 1, 2)
    value = trace_on_algebra(v_g_map(w), op, 0)
    assert value.terms == {0: trace_TSi(w, 0, op)}
    value = trace_on_algebra(v_g_map(w), op, 1)
    assert value.terms == {0: trace_TSi(w, 1, op)}
    x = trace_on_algebra(expand(classical_singular((a(1),), 2)), op)
    diff = trace_TS(classical([1], 2), op) - trace_TS(classical([-1], 2), op)
    assert x.terms == ({-1: diff} if diff else {})
    assert trace_on_algebra(AlgebraElement.zero(3), op).is_zero()


def test_forgetting_handle_strands_matches_collapse(op):
    rng = random.Random(12)
    for _ in range(40):
        g, n = rng.randint(1, 2), rng.randint(1, 3)
        letters = [s(i, e) for i in range(1, n) for e in (1, -1)] + [t(k, e) for k in range(1, g + 1) for e in (1, -1)]
        w = BraidWord(tuple(rng.choice(letters) for _ in range(rng.randint(0, 6))), g, n)
        for i in range(g + 1):
            assert trace_on_algebra(v_g_map(w), op, i).terms.get(0) == trace_TSi(w, i, op)


def test_markov_axioms_small(op):
    rep = markov_axioms_test(op, trials=10, seed=1, n_max=3, g_max=1)
    assert rep.passed and rep.info["seed"] == 1
    assert trace_TS(classical([1], 3), op) == trace_TS(classical([2], 3), op)


def test_markov_report_for_identity_operator():
    # with beta = dim every closed braid has trace 1
    rep = markov_axioms_test(identity_operator(2), trials=3, seed=0, n_max=2, g_max=0)
    assert rep.passed and len(rep.items) == 6
