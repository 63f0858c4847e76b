"""Tensor representations of braid words and Turaev-type Markov traces.

Two evaluation paths exist.  :func:`rho` and :func:`raw_trace_exact` apply local
operators to basis vectors with exact :class:`LaurentPoly` entries; they are the
reference.  :class:`_Engine` computes the same trace with integer arrays, one
weight sector at a time, and falls back to the exact path when entries could
overflow ``int64``.

``trace_TS`` is normalized by the unknot value ``beta^-1 tr(mu)``, so the
1-strand identity has trace 1 and stabilization of either sign leaves the trace
unchanged (``z = 1``).
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np
from scipy import sparse

from .braid import SING, TAU, BraidWord, Letter, embed_handlebody, forget_strands, s, t
from .eyb import EYBOperator, Matrix, mat_equal
from .errors import ResourceError, WordError
from .laurent import ONE, LaurentPoly
from .report import Report
from .series import TruncatedSeries
from .vassiliev import AlgebraElement

MAX_STATES = int(os.environ.get("HVASSILIEV_MAX_STATES", 4096))
_INT_LIMIT = 2**62

Word = Sequence[tuple[int, int]]


def _check_states(op: EYBOperator, m: int) -> int:
    n = op.dim**m
    if n > MAX_STATES:
        raise ResourceError(f"tensor space of dimension {op.dim}^{m} = {n} exceeds bound {MAX_STATES}")
    return n


def _letter_kind(kind: str, exp: int) -> str:
    if kind == SING:
        return "a"
    return "+" if exp == 1 else "-"


def _as_classical(w) -> tuple[list[tuple[str, int]], int]:
    """Normalize input to ``([(kind, index)], m)`` with kind in ``'+', '-', 'a'``."""
    if isinstance(w, BraidWord):
        if w.genus:
            w = embed_handlebody(w)
        return [(_letter_kind(x.kind, x.exp), x.index) for x in w.letters], w.strands
    letters = getattr(w, "letters", None)
    if letters is not None:  # classical SingularWord
        if getattr(w, "genus", 0):
            raise WordError("embed handlebody words before evaluating them")
        return [(_letter_kind(x.kind, x.exp), x.index) for x in letters], w.strands
    raise TypeError(f"cannot evaluate {w!r}")


# --- exact reference path --------------------------------------------------------------

def _apply_exact(vec: dict, table, i: int) -> dict:
    out: dict[tuple, LaurentPoly] = {}
    for state, coeff in vec.items():
        for (a2, b2), v in table.get((state[i - 1], state[i]), ()):
            new = state[: i - 1] + (a2, b2) + state[i + 1 :]
            val = coeff * v
            out[new] = out[new] + val if new in out else val
    return {k: v for k, v in out.items() if v}


def _states(dim: int, m: int):
    return list(itertools.product(range(dim), repeat=m))


def _index(state: tuple, dim: int) -> int:
    idx = 0
    for d in state:
        idx = idx * dim + d
    return idx


def rho_letters(letters: Sequence[tuple[str, int]], m: int, op: EYBOperator) -> Matrix:
    _check_states(op, m)
    tables = {k: op.local_table(k) for k in ("+", "-", "a")}
    out: Matrix = {}
    for col in _states(op.dim, m):
        vec = {col: ONE}
        for kind, i in reversed(letters):
            vec = _apply_exact(vec, tables[kind], i)
        c = _index(col, op.dim)
        for row, v in vec.items():
            out[(_index(row, op.dim), c)] = v
    return out


def rho(w, op: EYBOperator) -> Matrix:
    """Matrix of a classical word on the ``m``-fold tensor power (``rho(uv) = rho(u) rho(v)``).

    Singular letters act as ``R - R_inv``.
    """
    letters, m = _as_classical(w)
    return rho_letters(letters, m, op)


def _mu_weight(state: tuple, op: EYBOperator) -> LaurentPoly:
    out = ONE
    for d in state:
        out = out * op.mu[d]
    return out


def raw_trace_exact(letters: Sequence[tuple[str, int]], m: int, op: EYBOperator) -> LaurentPoly:
    """``Tr(mu^{(x) m} rho(w))`` on the exact path."""
    _check_states(op, m)
    tables = {k: op.local_table(k) for k in ("+", "-", "a")}
    total = LaurentPoly()
    for b in _states(op.dim, m):
        vec = {b: ONE}
        for kind, i in reversed(letters):
            vec = _apply_exact(vec, tables[kind], i)
        if b in vec:
            total = total + _mu_weight(b, op) * vec[b]
    return total


# --- fast path ---------------------------------------------------------------------------

class _Engine:
    """Per ``(operator, m)`` precomputation: weight sectors, pair indexing and the
    sparse matrices by which each letter right-multiplies the running product."""

    def __init__(self, op: EYBOperator, m: int):
        self.op = op
        self.m = m
        d = op.dim
        self.states = _states(d, m)
        self.tables = {k: op.local_table(k) for k in ("+", "-", "a")}
        # connected components of basis states under all local moves
        parent = list(range(len(self.states)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for table in self.tables.values():
            for i in range(1, m):
                for idx, st in enumerate(self.states):
                    for (a2, b2), _ in table.get((st[i - 1], st[i]), ()):
                        j = _index(st[: i - 1] + (a2, b2) + st[i + 1 :], d)
                        ra, rb = find(idx), find(j)
                        if ra != rb:
                            parent[ra] = rb
        sectors: dict[int, list[int]] = {}
        for idx in range(len(self.states)):
            sectors.setdefault(find(idx), []).append(idx)
        self.sector_of = {}
        self.pair_index: dict[tuple[int, int], int] = {}
        for members in sectors.values():
            for r in members:
                self.sector_of[r] = members
                for c in members:
                    self.pair_index[(r, c)] = len(self.pair_index)
        self.npairs = len(self.pair_index)
        self.emax = max(
            (abs(e) for table in self.tables.values() for outs in table.values() for _, v in outs for e, _ in v.terms),
            default=0,
        )
        self._mats: dict[tuple[str, int], tuple[list[tuple[int, sparse.csr_matrix]], int]] = {}
        # group diagonal pairs by the mu weight of their state
        groups: dict[tuple, list[int]] = {}
        for idx, st in enumerate(self.states):
            groups.setdefault(tuple(sorted(st)), []).append(self.pair_index[(idx, idx)])
        self.diag_groups = [(_mu_weight(key, op), np.array(rows)) for key, rows in groups.items()]

    def letter_mats(self, kind: str, i: int):
        key = (kind, i)
        if key not in self._mats:
            d = self.op.dim
            table = self.tables[kind]
            coo: dict[int, tuple[list, list, list]] = {}
            for cp, st in enumerate(self.states):
                for (a2, b2), v in table.get((st[i - 1], st[i]), ()):
                    c = _index(st[: i - 1] + (a2, b2) + st[i + 1 :], d)
                    for r in self.sector_of[cp]:
                        dst = self.pair_index[(r, cp)]
                        src = self.pair_index[(r, c)]
                        for e, coeff in v.terms:
                            if not isinstance(coeff, int):
                                raise TypeError("fast path needs integer coefficients")
                            rows, cols, vals = coo.setdefault(e, ([], [], []))
                            rows.append(dst)
                            cols.append(src)
                            vals.append(coeff)
            mats = []
            norm = np.zeros(self.npairs, dtype=np.int64)
            for e, (rows, cols, vals) in sorted(coo.items()):
                P = sparse.csr_matrix(
                    (np.array(vals, dtype=np.int64), (np.array(rows), np.array(cols))),
                    shape=(self.npairs, self.npairs),
                )
                P.sum_duplicates()
                norm += np.asarray(abs(P).sum(axis=1)).ravel().astype(np.int64)
                mats.append((e, P))
            self._mats[key] = (mats, int(norm.max()) if len(norm) else 0)
        return self._mats[key]

    def raw_trace(self, letters: Sequence[tuple[str, int]]) -> LaurentPoly | None:
        """Same value as :func:`raw_trace_exact`, or ``None`` if int64 could overflow."""
        k = len(letters)
        off = self.emax * k
        K = 2 * off + 1
        M = np.zeros((self.npairs, K), dtype=np.int64)
        for idx in range(len(self.states)):
            M[self.pair_index[(idx, idx)], off] = 1
        bound = 1
        for kind, i in letters:
            mats, norm = self.letter_mats(kind, i)
            if bound * norm >= _INT_LIMIT:
                bound = int(np.abs(M).max())
                if bound * norm >= _INT_LIMIT:
                    return None
            new = np.zeros_like(M)
            for e, P in mats:
                prod = P @ M
                if e > 0:
                    new[:, e:] += prod[:, :-e]
                elif e < 0:
                    new[:, :e] += prod[:, -e:]
                else:
                    new += prod
            M = new
            bound *= norm
        total = LaurentPoly()
        for weight, rows in self.diag_groups:
            row = M[rows].sum(axis=0)
            nz = np.nonzero(row)[0]
            poly = LaurentPoly({int(j) - off: int(row[j]) for j in nz})
            total = total + weight * poly
        return total


@lru_cache(maxsize=64)
def _engine(op: EYBOperator, m: int) -> _Engine:
    return _Engine(op, m)


def _integral(op: EYBOperator) -> bool:
    return all(
        isinstance(c, int) for M in (op.R, op.R_inv) for v in M.values() for _, c in v.terms
    )


@lru_cache(maxsize=200_000)
def _raw_trace_cached(op: EYBOperator, letters: tuple, m: int) -> LaurentPoly:
    _check_states(op, m)
    if _integral(op):
        value = _engine(op, m).raw_trace(letters)
        if value is not None:
            return value
    return raw_trace_exact(letters, m, op)


def raw_trace(w, op: EYBOperator) -> LaurentPoly:
    letters, m = _as_classical(w)
    return _raw_trace_cached(op, tuple(letters), m)


# --- Markov traces -----------------------------------------------------------------------

def trace_TS(w, op: EYBOperator) -> LaurentPoly:
    """Normalized Turaev trace ``alpha^-w beta^-m Tr(mu^m rho(w)) / (beta^-1 tr mu)``."""
    letters, m = _as_classical(w)
    if any(kind == "a" for kind, _ in letters):
        raise WordError("trace_TS takes braid words; expand singular words first")
    wr = sum(1 if kind == "+" else -1 for kind, _ in letters)
    raw = _raw_trace_cached(op, tuple(letters), m)
    return _normalize(raw, wr, m, op)


def _normalize(raw: LaurentPoly, writhe: int, m: int, op: EYBOperator) -> LaurentPoly:
    value = (op.alpha ** (-writhe)) * (op.beta ** (-m)) * raw
    return value.divmod_exact(op.unknot_value)


def phi_collapse(w: BraidWord, i: int) -> BraidWord:
    """Send ``t_1 .. t_i`` to the identity and ``t_j`` to ``t_{j-i}``."""
    if not 0 <= i <= w.genus:
        raise WordError(f"collapse level {i} outside 0..{w.genus}")
    out = []
    for x in w.letters:
        if x.kind == TAU:
            if x.index > i:
                out.append(Letter(TAU, x.index - i, x.exp))
        else:
            out.append(x)
    return BraidWord(tuple(out), w.genus - i, w.strands)


def trace_TSi(w: BraidWord, i: int, op: EYBOperator) -> LaurentPoly:
    return trace_TS(embed_handlebody(phi_collapse(w, i)), op)


@dataclass
class MixedTrace:
    """``sum_k eps^k P_k(q)``: a trace value before ``q`` is tied to ``eps``."""

    terms: dict[int, LaurentPoly]
    order: int | None = None

    def is_zero(self) -> bool:
        return not any(self.terms.values())

    def substitute(self, order: int) -> TruncatedSeries:
        """Apply ``q = exp(eps)`` and return the series to precision ``order``."""
        from .series import exp_substitute

        total = TruncatedSeries.zero(order)
        for k, poly in self.terms.items():
            if not poly:
                continue
            need = order - k
            if need < 0:
                continue
            total = total + exp_substitute(poly, need).shift(k)
        if self.order is not None:
            total = total.truncate(self.order)
        return total.truncate(order)


def trace_on_algebra(x: AlgebraElement, op: EYBOperator, i: int = 0) -> MixedTrace:
    """Linear extension of ``T_{S,i}`` over the terms of ``x``.

    The first ``i`` (handle) strands of each representative are deleted, which is
    the classical form of the collapse ``t_1 .. t_i -> e``.
    """
    if not 0 <= i <= x.genus:
        raise WordError(f"collapse level {i} outside 0..{x.genus}")
    terms: dict[int, LaurentPoly] = {}
    order = None
    for word, coeff in x.terms.values():
        reduced = forget_strands(word, x.m, range(1, i + 1)) if i else list(word)
        value = trace_TS(BraidWord(tuple(s(j, e) for j, e in reduced), 0, x.m - i), op)
        for k, c in coeff.items():
            terms[k] = terms.get(k, LaurentPoly()) + value * c
        if coeff.order is not None:
            order = coeff.order if order is None else min(order, coeff.order)
    return MixedTrace({k: v for k, v in terms.items() if v}, order)


# --- verification harnesses --------------------------------------------------------------

def random_handlebody_word(rng: random.Random, g: int, n: int, max_len: int = 12) -> BraidWord:
    gens = [s(i, e) for i in range(1, n) for e in (1, -1)] + [t(k, e) for k in range(1, g + 1) for e in (1, -1)]
    if not gens:
        return BraidWord((), g, n)
    length = rng.randint(0, max_len)
    return BraidWord(tuple(rng.choice(gens) for _ in range(length)), g, n)


def markov_axioms_test(op: EYBOperator, trials: int = 100, seed: int = 0, n_max: int = 4, g_max: int = 2,
                       max_len: int = 12) -> Report:
    """Commutativity and both-sign stabilization of ``T_{S,i}`` with ``z = 1``."""
    rep = Report(f"markov axioms {op.name}")
    rep.info["seed"] = seed
    rng = random.Random(seed)
    for g in range(g_max + 1):
        for n in range(1, n_max + 1):
            for i in range(g + 1):
                ok_comm = ok_plus = ok_minus = True
                for _ in range(trials):
                    x = random_handlebody_word(rng, g, n, max_len)
                    y = random_handlebody_word(rng, g, n, max_len)
                    ok_comm &= trace_TSi(x * y, i, op) == trace_TSi(y * x, i, op)
                    base = trace_TSi(x, i, op)
                    big = x.with_strands(n + 1)
                    for e in (1, -1):
                        stab = BraidWord(big.letters + (s(n, e),), g, n + 1)
                        ok = trace_TSi(stab, i, op) == op.z * base
                        if e == 1:
                            ok_plus &= ok
                        else:
                            ok_minus &= ok
                label = f"g={g} n={n} i={i}"
                rep.add(f"{label} T(xy) = T(yx)", ok_comm)
                rep.add(f"{label} T(x s_n) = z T(x)", ok_plus)
                rep.add(f"{label} T(x s_n^-1) = z T(x)", ok_minus)
    return rep


def relation_suite_tensor(m: int, op: EYBOperator) -> Report:
    """Every relation of ``SB_m`` holds for ``rho`` with ``a_i -> R_i - R_i^-1``."""
    from .singular import presentation1_relations

    rep = Report(f"relations1 tensor m={m} {op.name}")
    for name, lhs, rhs in presentation1_relations(m):
        rep.add(name, mat_equal(rho(lhs, op), rho(rhs, op)))
    return rep
