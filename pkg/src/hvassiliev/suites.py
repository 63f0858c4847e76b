"""Named verification suites used by ``hvassiliev check`` and the acceptance tests."""

from __future__ import annotations

import random

from .braid import presentation2_relations, relation_suite_braid, s, t, words_equal
from .eyb import EYBOperator, corrupted, eyb_axioms_check, jones_operator
from .invariants import degree_vanishing_check, nonzero_witness, trace_Ti
from .report import Report
from .singular import (
    SingularWord,
    a,
    presentation1_relations,
    proposition1_check,
    relation_instances_hold_under_h,
    singular_words_equal,
)
from .trace import markov_axioms_test, phi_collapse, relation_suite_tensor

SUITES = ("relations1", "relations2", "prop1", "markov", "eyb", "vanishing")


def merge(name: str, reports: list[Report]) -> Report:
    out = Report(name)
    for rep in reports:
        for label, ok in rep.items:
            out.add(f"{rep.name}: {label}", ok)
        if rep.info:
            out.info[rep.name] = rep.info
    return out


def relations1(m_max: int = 6, op: EYBOperator | None = None) -> Report:
    """Presentation of ``SB_m`` under the expansion oracle, both desingularizations and ``rho``."""
    op = op or jones_operator()
    reports = []
    for m in range(2, m_max + 1):
        rep = Report(f"relations1 expansion m={m}")
        for label, lhs, rhs in presentation1_relations(m):
            rep.add(label, singular_words_equal(lhs, rhs))
        reports += [rep, relation_instances_hold_under_h(m), relation_suite_tensor(m, op)]
    return merge(f"relations1 m<={m_max}", reports)


def relations2(g_max: int = 3, n_max: int = 4) -> Report:
    """Presentation of ``Br_n^g`` and the handle relation, plus well-definedness of the collapse."""
    reports = []
    for g in range(g_max + 1):
        for n in range(1, n_max + 1):
            reports.append(relation_suite_braid(g, n))
            rep = Report(f"collapse g={g} n={n}")
            for label, lhs, rhs in presentation2_relations(g, n):
                for i in range(g + 1):
                    rep.add(f"phi_{i} {label}", words_equal(phi_collapse(lhs, i), phi_collapse(rhs, i)))
            reports.append(rep)
    return merge(f"relations2 g<={g_max} n<={n_max}", reports)


def prop1(g_max: int = 3, n: int = 2, depth: int = 8) -> Report:
    reports = [proposition1_check(g, n, i, depth) for g in range(1, g_max + 1) for i in range(1, g + 1)]
    return merge(f"prop1 g<={g_max} n={n}", reports)


def markov(op: EYBOperator | None = None, trials: int = 100, seed: int = 0, n_max: int = 4, g_max: int = 2) -> Report:
    op = op or jones_operator()
    return markov_axioms_test(op, trials, seed, n_max, g_max)


def eyb(op: EYBOperator | None = None, control: bool = True) -> Report:
    op = op or jones_operator()
    rep = eyb_axioms_check(op)
    if control:
        bad = eyb_axioms_check(corrupted(op))
        rep.add("negative control: corrupted R fails", not bad.passed)
        rep.info["control_failures"] = bad.failures
    return rep


def singular_corpus(g_max: int = 2, n_max: int = 3, l_max: int = 4, per_cell: int = 3, seed: int = 0,
                    max_braid: int = 3) -> list[SingularWord]:
    """Random monoid words: ``l`` double points mixed with up to ``max_braid`` braid letters."""
    rng = random.Random(seed)
    out = []
    for g in range(g_max + 1):
        for n in range(2, n_max + 1):
            braid = [s(j, e) for j in range(1, n) for e in (1, -1)] + [t(k, e) for k in range(1, g + 1) for e in (1, -1)]
            for l in range(1, l_max + 1):
                for _ in range(per_cell):
                    letters = [a(rng.randint(1, n - 1)) for _ in range(l)]
                    for _ in range(rng.randint(0, max_braid)):
                        letters.insert(rng.randint(0, len(letters)), rng.choice(braid))
                    out.append(SingularWord(tuple(letters), g, n))
    return out


def vanishing(op: EYBOperator | None = None, g_max: int = 2, n_max: int = 3, l_max: int = 4, d_max: int = 3,
              order: int = 6, per_cell: int = 3, seed: int = 0, witness: bool = True) -> Report:
    """Extended ``L_{i,d}`` is 0 for ``l > d`` and ``T_i`` has no pole on expanded singular words."""
    op = op or jones_operator()
    rep = Report(f"vanishing g<={g_max} n<={n_max} l<={l_max} d<={d_max} D={order}")
    corpus = singular_corpus(g_max, n_max, l_max, per_cell, seed)
    checked = 0
    for w in corpus:
        for i in range(w.genus + 1):
            for d in range(0, min(d_max, w.singular_count - 1) + 1):
                sub = degree_vanishing_check(w, i, d, op, order)
                checked += 1
                if not sub.passed:
                    rep.add(sub.name, False)
            val = trace_Ti(w, i, op, order).valuation
            if val is not None and val < 0:
                rep.add(f"pole in T_{i}([{w}])", False)
    rep.add(f"all {checked} checks on {len(corpus)} words vanish without poles", not rep.failures)
    rep.info.update(seed=seed, words=len(corpus), checks=checked, order=order)
    if witness:
        found = nonzero_witness(op, l=2)
        rep.add("nonzero witness at l = d = 2", found is not None)
        if found:
            rep.info["witness"] = f"[{found[0]}] value {found[1]}"
    return rep


def run_suite(name: str, g: int | None = None, n: int | None = None, depth: int = 8, seed: int = 0,
              op: EYBOperator | None = None, trials: int = 100) -> Report:
    if name == "relations1":
        return relations1(n or 6, op)
    if name == "relations2":
        return relations2(3 if g is None else g, n or 4)
    if name == "prop1":
        return prop1(3 if g is None else g, n or 2, depth)
    if name == "markov":
        return markov(op, trials, seed, n or 4, 2 if g is None else g)
    if name == "eyb":
        return eyb(op)
    if name == "vanishing":
        return vanishing(op, 2 if g is None else g, n or 3, seed=seed)
    raise KeyError(name)

