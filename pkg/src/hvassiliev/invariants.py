"""Finite-type invariants from the traces ``T_{S,i}``.

After ``q = exp(eps)`` a trace becomes a power series ``T_i = sum_d T_{i,d}`` and
``L_{i,d}`` is the coefficient of ``eps^d`` (times ``z^{1-n}``).  On a singular word
with ``l`` double points the expansion carries ``eps^-l``, so the extended degree-d
invariant is the coefficient of ``eps^{d-l}``; it vanishes for ``l > d`` exactly
when the series has no pole.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .braid import SIGMA, BraidWord, closure_components, free_reduce, invert_word, s, t, writhe
from .eyb import EYBOperator
from .laurent import ONE
from .report import Report
from .series import DEFAULT_ORDER, TruncatedSeries, exp_substitute
from .singular import SingularWord, a, degree
from .trace import random_handlebody_word, trace_on_algebra, trace_TSi
from .vassiliev import AlgebraElement, expand

__all__ = [
    "InvariantResult",
    "exp_substitute",
    "trace_Ti",
    "homogeneous_part",
    "link_invariant",
    "extended_invariant",
    "degree_vanishing_check",
    "markov_moves_harness",
    "unknot_union_check",
    "unknot_factor",
    "separation_check",
    "nonzero_witness",
]


def trace_Ti(x, i: int, op: EYBOperator, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``T_i`` to precision ``order``.

    ``x`` may be a braid word, a monoid word (expanded first) or an algebra element.
    Every returned coefficient up to ``eps^order`` is exact.
    """
    if isinstance(x, BraidWord):
        return exp_substitute(trace_TSi(x, i, op), order)
    if isinstance(x, SingularWord):
        if x.singular_count == 0:
            return trace_Ti(BraidWord(x.letters, x.genus, x.strands), i, op, order)
        x = expand(x)
    if isinstance(x, AlgebraElement):
        return trace_on_algebra(x, op, i).substitute(order)
    raise TypeError(f"cannot take the trace of {type(x).__name__}")


def homogeneous_part(t: TruncatedSeries, d: int) -> TruncatedSeries:
    """The monomial ``c eps^d`` of ``t``."""
    if t.order is not None and d > t.order:
        raise ValueError(f"degree {d} exceeds the truncation order {t.order}")
    return TruncatedSeries.monomial(d, t.coefficient(d))


def _z_factor(op: EYBOperator, n: int, order: int) -> TruncatedSeries | None:
    if op.z == ONE:
        return None
    return exp_substitute(op.z ** (1 - n), order)


@dataclass
class InvariantResult:
    genus: int
    strands: int
    word: str
    i: int
    d: int
    value: Fraction
    order: int
    writhe: int
    components: int
    series: TruncatedSeries = field(repr=False, default=None)
    convention_id: str = ""


def link_invariant(w: BraidWord, i: int, d: int, op: EYBOperator, order: int = DEFAULT_ORDER) -> InvariantResult:
    """``L_{i,d}`` of the closure of ``w``."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d > order:
        raise ValueError(f"degree {d} exceeds the truncation order {order}")
    series = trace_Ti(w, i, op, order)
    zf = _z_factor(op, w.strands, order)
    if zf is not None:
        series = series * zf
    return InvariantResult(
        genus=w.genus,
        strands=w.strands,
        word=str(w),
        i=i,
        d=d,
        value=series.coefficient(d),
        order=order,
        writhe=writhe(w),
        components=closure_components(w),
        series=series,
        convention_id=op.convention_id,
    )


def extended_invariant(s_word: SingularWord, i: int, d: int, op: EYBOperator,
                       order: int = DEFAULT_ORDER) -> tuple[Fraction, TruncatedSeries]:
    """Extended ``L_{i,d}`` on a singular word: the coefficient of ``eps^{d-l}``."""
    l = degree(s_word)
    series = trace_Ti(s_word, i, op, order)
    return series.coefficient(d - l), series


def degree_vanishing_check(s_word: SingularWord, i: int, d: int, op: EYBOperator,
                           order: int = DEFAULT_ORDER) -> Report:
    l = degree(s_word)
    value, series = extended_invariant(s_word, i, d, op, order)
    rep = Report(f"vanishing [{s_word}] g={s_word.genus} n={s_word.strands} i={i} d={d}")
    val = series.valuation
    rep.add("no pole: eps-valuation >= 0", val is None or val >= 0)
    if l > d:
        rep.add(f"L_{{{i},{d}}} = 0 for l = {l} > d", value == 0)
    rep.info.update(l=l, d=d, i=i, value=value, valuation=val, order=order)
    return rep


# --- Markov moves ---------------------------------------------------------------------------

def _can_destabilize(w: BraidWord) -> bool:
    if w.strands < 2 or not w.letters:
        return False
    last = w.letters[-1]
    if last.kind != SIGMA or last.index != w.strands - 1:
        return False
    return all(not (x.kind == SIGMA and x.index == w.strands - 1) for x in w.letters[:-1])


def random_markov_move(w: BraidWord, rng: random.Random, max_total: int = 6,
                       conj_len: int = 2) -> tuple[str, BraidWord]:
    """One random Markov move inside ``Br^g``: conjugation, rotation, (de)stabilization."""
    options = ["conjugate", "rotate"]
    if w.genus + w.strands < max_total:
        options += ["stabilize+", "stabilize-"]
    if _can_destabilize(w):
        options += ["destabilize"] * 2
    move = rng.choice(options)
    if move == "conjugate":
        c = random_handlebody_word(rng, w.genus, w.strands, conj_len)
        return move, free_reduce(c * w * invert_word(c))
    if move == "rotate":
        if not w.letters:
            return move, w
        return move, BraidWord(w.letters[1:] + w.letters[:1], w.genus, w.strands)
    if move.startswith("stabilize"):
        e = 1 if move.endswith("+") else -1
        big = w.with_strands(w.strands + 1)
        return move, BraidWord(big.letters + (s(w.strands, e),), w.genus, w.strands + 1)
    return move, BraidWord(w.letters[:-1], w.genus, w.strands - 1)


def markov_moves_harness(w: BraidWord, moves: int, seed: int, op: EYBOperator, i: int = 0,
                         order: int = 4, max_total: int = 6, kinds: Iterable[str] | None = None) -> Report:
    """Apply ``moves`` random Markov moves and compare ``L_{i,d}`` for every ``d <= order``.

    ``kinds`` restricts the move set (e.g. ``{"conjugate"}``).
    """
    rng = random.Random(seed)
    kinds = set(kinds) if kinds is not None else None
    base = link_invariant(w, i, 0, op, order).series
    rep = Report(f"markov moves [{w}] g={w.genus} n={w.strands} i={i}")
    rep.info.update(seed=seed, moves=moves, order=order, i=i)
    history = []
    current = w
    ok = True
    for step in range(moves):
        while True:
            move, nxt = random_markov_move(current, rng, max_total)
            if kinds is None or move in kinds:
                break
        current = nxt
        series = link_invariant(current, i, 0, op, order).series
        same = series == base
        history.append((move, current.strands, len(current), same))
        if not same:
            ok = False
            rep.add(f"step {step} {move}: [{current}]", False)
    rep.add(f"L_{{{i},d}} constant for d <= {order} over {moves} moves", ok)
    rep.info["history"] = history
    rep.info["final_word"] = str(current)
    return rep


# --- unlinked union with an unknot ------------------------------------------------------------

def unknot_factor(op: EYBOperator, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``beta^-1 tr(mu)`` after substitution: the factor by which a split unknot scales ``T``."""
    return exp_substitute(op.unknot_value, order)


def unknot_union_check(w: BraidWord, i: int, d: int, op: EYBOperator, order: int = DEFAULT_ORDER) -> Report:
    """Compare ``z L(L u O)`` with ``L(L)`` where ``L u O`` is the closure of ``w`` on one more strand.

    Also records whether ``T(L u O) = (beta^-1 tr mu) T(L)`` holds for the whole series.
    """
    base = link_invariant(w, i, d, op, order)
    union = link_invariant(w.with_strands(w.strands + 1), i, d, op, order)
    z = exp_substitute(op.z, order)
    lhs = (z * union.series).coefficient(d)
    rep = Report(f"unknot union [{w}] g={w.genus} n={w.strands} i={i} d={d}")
    rep.add(f"z L_{{{i},{d}}}(L u O) = L_{{{i},{d}}}(L)", lhs == base.value)
    factor = unknot_factor(op, order)
    rep.info.update(
        lhs=lhs,
        rhs=base.value,
        ratio_series=str(factor),
        split_factor_relation=union.series == (factor * base.series).truncate(order),
    )
    return rep


# --- smoke tests -----------------------------------------------------------------------------

def separation_check(op: EYBOperator, d_max: int = 4, order: int | None = None) -> Report:
    """Find the degrees ``d <= d_max`` at which ``L_{0,d}`` tells the trefoil from the unknot."""
    order = d_max if order is None else order
    trefoil = BraidWord((s(1),) * 3, 0, 2)
    unknot = BraidWord((), 0, 1)
    rep = Report("separation trefoil / unknot")
    separating = []
    values = {}
    for d in range(d_max + 1):
        lt = link_invariant(trefoil, 0, d, op, order).value
        lu = link_invariant(unknot, 0, d, op, order).value
        values[d] = (lt, lu)
        if lt != lu:
            separating.append(d)
    rep.add(f"some L_{{0,d}} with d <= {d_max} separates", bool(separating))
    rep.info.update(separating_degrees=separating, values=values)
    return rep


def nonzero_witness(op: EYBOperator, l: int = 2, max_len: int = 4, g_max: int = 1, n_max: int = 3,
                    order: int = 4) -> tuple[SingularWord, Fraction] | None:
    """Search short monoid words with ``l`` double points whose extended ``L_{0,l}`` is nonzero."""
    import itertools

    for g in range(g_max + 1):
        for n in range(2, n_max + 1):
            letters = [s(j, e) for j in range(1, n) for e in (1, -1)] + [t(k, e) for k in range(1, g + 1) for e in (1, -1)]
            sing = [a(j) for j in range(1, n)]
            for extra in range(max_len - l + 1):
                for sl in itertools.product(sing, repeat=l):
                    for bl in itertools.product(letters, repeat=extra):
                        for cut in range(extra + 1):
                            word = SingularWord(tuple(bl[:cut]) + tuple(sl) + tuple(bl[cut:]), g, n)
                            value, _ = extended_invariant(word, 0, l, op, order)
                            if value != 0:
                                return word, value
    return None
