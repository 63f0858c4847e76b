"""Enhanced Yang-Baxter operators ``(R, mu, alpha, beta)``.

Matrices are sparse dicts ``{(row, col): LaurentPoly}``.  The basis of ``V (x) V``
is ``e_a (x) e_b -> a * dim + b`` with 0-based digits.  An operator is accepted as
enhanced when

* ``(R (x) I)(I (x) R)(R (x) I) = (I (x) R)(R (x) I)(I (x) R)``,
* ``R R_inv = R_inv R = I``,
* ``R`` commutes with ``mu (x) mu``,
* ``Tr_2((I (x) mu) R) = alpha beta I`` and ``Tr_2((I (x) mu) R_inv) = alpha^-1 beta I``.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import OperatorError
from .laurent import ONE, LaurentPoly, q
from .report import Report

Matrix = dict[tuple[int, int], LaurentPoly]


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    rows: dict[int, list[tuple[int, LaurentPoly]]] = {}
    for (k, j), v in B.items():
        rows.setdefault(k, []).append((j, v))
    out: dict[tuple[int, int], LaurentPoly] = {}
    for (i, k), u in A.items():
        for j, v in rows.get(k, ()):
            key = (i, j)
            out[key] = out[key] + u * v if key in out else u * v
    return {k: v for k, v in out.items() if v}


def mat_add(A: Matrix, B: Matrix, sign: int = 1) -> Matrix:
    out = dict(A)
    for k, v in B.items():
        out[k] = out[k] + v * sign if k in out else v * sign
    return {k: v for k, v in out.items() if v}


def identity(n: int) -> Matrix:
    return {(i, i): ONE for i in range(n)}


def kron(A: Matrix, dim_a: int, B: Matrix, dim_b: int) -> Matrix:
    out = {}
    for (i, j), u in A.items():
        for (k, l), v in B.items():
            out[(i * dim_b + k, j * dim_b + l)] = u * v
    return out


def diag(entries) -> Matrix:
    return {(i, i): LaurentPoly.coerce(x) for i, x in enumerate(entries) if LaurentPoly.coerce(x)}


def mat_equal(A: Matrix, B: Matrix) -> bool:
    return {k: v for k, v in A.items() if v} == {k: v for k, v in B.items() if v}


def partial_trace_second(M: Matrix, dim: int) -> Matrix:
    out: dict[tuple[int, int], LaurentPoly] = {}
    for (r, c), v in M.items():
        a, x = divmod(r, dim)
        b, y = divmod(c, dim)
        if x == y:
            out[(a, b)] = out[(a, b)] + v if (a, b) in out else v
    return {k: v for k, v in out.items() if v}


def scalar(c: LaurentPoly, n: int) -> Matrix:
    return {(i, i): c for i in range(n)} if c else {}


@dataclass(frozen=True, eq=False)
class EYBOperator:
    dim: int
    R: Matrix
    R_inv: Matrix
    mu: tuple[LaurentPoly, ...]
    alpha: LaurentPoly
    beta: LaurentPoly
    name: str = "custom"
    z: LaurentPoly = field(default=ONE)

    def __post_init__(self):
        if self.dim < 2:
            raise OperatorError("dim must be at least 2")
        if len(self.mu) != self.dim:
            raise OperatorError("mu must have dim diagonal entries")
        n = self.dim * self.dim
        for M in (self.R, self.R_inv):
            for (r, c) in M:
                if not (0 <= r < n and 0 <= c < n):
                    raise OperatorError(f"matrix index {(r, c)} outside {n}x{n}")

    @property
    def mu_matrix(self) -> Matrix:
        return diag(self.mu)

    @property
    def unknot_value(self) -> LaurentPoly:
        """``beta^-1 tr(mu)``: the unnormalized trace of the 1-strand identity."""
        return self.beta.inverse() * sum(self.mu, LaurentPoly())

    @property
    def convention_id(self) -> str:
        return hashlib.sha256(json.dumps(operator_to_dict(self), sort_keys=True).encode()).hexdigest()[:12]

    def local_table(self, kind: str) -> dict[tuple[int, int], list[tuple[tuple[int, int], LaurentPoly]]]:
        """Column action of ``R`` (``'+'``), ``R_inv`` (``'-'``) or ``R - R_inv`` (``'a'``)."""
        M = {"+": self.R, "-": self.R_inv, "a": mat_add(self.R, self.R_inv, -1)}[kind]
        d = self.dim
        table: dict[tuple[int, int], list] = {}
        for (r, c), v in sorted(M.items()):
            table.setdefault(divmod(c, d), []).append((divmod(r, d), v))
        return table


def jones_operator() -> EYBOperator:
    """The 2-dimensional operator of the Jones polynomial.

    ``R(e_i e_j)`` is ``-q e_i e_i`` for ``i = j``, ``e_j e_i`` for ``i < j`` and
    ``e_j e_i + (q^-1 - q) e_i e_j`` for ``i > j``; ``mu = diag(q, q^-1)``,
    ``alpha = q^2``, ``beta = -1``.
    """
    qi = q.inverse()
    R = {
        (0, 0): -q,
        (2, 1): ONE,
        (1, 2): ONE,
        (2, 2): qi - q,
        (3, 3): -q,
    }
    R_inv = {
        (0, 0): -qi,
        (2, 1): ONE,
        (1, 1): q - qi,
        (1, 2): ONE,
        (3, 3): -qi,
    }
    return EYBOperator(2, R, R_inv, (q, qi), q ** 2, -ONE, name="jones-sl2")


def identity_operator(dim: int = 2, beta=None) -> EYBOperator:
    beta = LaurentPoly.coerce(dim if beta is None else beta)
    I = identity(dim * dim)
    return EYBOperator(dim, I, dict(I), tuple(ONE for _ in range(dim)), ONE, beta, name=f"identity-{dim}")


def corrupted(op: EYBOperator, entry: tuple[int, int] | None = None, delta: LaurentPoly = ONE) -> EYBOperator:
    """Copy of ``op`` with one entry of ``R`` perturbed (``R_inv`` left untouched)."""
    R = dict(op.R)
    entry = entry or min(R)
    R[entry] = R.get(entry, LaurentPoly()) + delta
    return EYBOperator(op.dim, {k: v for k, v in R.items() if v}, op.R_inv, op.mu, op.alpha, op.beta,
                       name=op.name + "-corrupted")


def eyb_axioms_check(op: EYBOperator) -> Report:
    d = op.dim
    n = d * d
    rep = Report(f"eyb {op.name}")
    I = identity(d)
    R1 = kron(op.R, n, I, d)
    R2 = kron(I, d, op.R, n)
    lhs = mat_mul(mat_mul(R1, R2), R1)
    rhs = mat_mul(mat_mul(R2, R1), R2)
    rep.add("yang-baxter", mat_equal(lhs, rhs))
    rep.add("R R_inv = I", mat_equal(mat_mul(op.R, op.R_inv), identity(n)))
    rep.add("R_inv R = I", mat_equal(mat_mul(op.R_inv, op.R), identity(n)))
    mumu = kron(op.mu_matrix, d, op.mu_matrix, d)
    rep.add("R commutes with mu (x) mu", mat_equal(mat_mul(op.R, mumu), mat_mul(mumu, op.R)))
    units = op.alpha.is_monomial() and op.beta.is_monomial()
    rep.add("alpha, beta invertible", units)
    Imu = kron(I, d, op.mu_matrix, d)
    pt_plus = partial_trace_second(mat_mul(Imu, op.R), d)
    pt_minus = partial_trace_second(mat_mul(Imu, op.R_inv), d)
    rep.add("Tr_2((I x mu) R) = alpha beta I", mat_equal(pt_plus, scalar(op.alpha * op.beta, d)))
    if units:
        ok = mat_equal(pt_minus, scalar(op.alpha.inverse() * op.beta, d))
    else:
        ok = False
    rep.add("Tr_2((I x mu) R_inv) = alpha^-1 beta I", ok)
    rep.info["convention_id"] = op.convention_id
    return rep


# --- operator definition files ---------------------------------------------------------

def poly_to_text(p: LaurentPoly) -> str:
    return " ".join(f"{e}:{c}" for e, c in p.terms) or "0:0"


def poly_from_text(text: str) -> LaurentPoly:
    terms = {}
    for tok in str(text).replace(",", " ").split():
        try:
            e, c = tok.split(":")
            terms[int(e)] = terms.get(int(e), 0) + Fraction(c)
        except ValueError as exc:
            raise OperatorError(f"bad polynomial term {tok!r}; expected exponent:coefficient") from exc
    return LaurentPoly(terms)


def operator_to_dict(op: EYBOperator) -> dict:
    return {
        "format": "hvassiliev-eyb",
        "version": 1,
        "name": op.name,
        "dim": op.dim,
        "R": [[r, c, poly_to_text(v)] for (r, c), v in sorted(op.R.items())],
        "R_inv": [[r, c, poly_to_text(v)] for (r, c), v in sorted(op.R_inv.items())],
        "mu": [poly_to_text(x) for x in op.mu],
        "alpha": poly_to_text(op.alpha),
        "beta": poly_to_text(op.beta),
    }


def _invert(R: Matrix, n: int) -> Matrix:
    import sympy as sp

    x = sp.Symbol("q")
    M = sp.zeros(n, n)
    for (r, c), v in R.items():
        M[r, c] = sum(sp.Rational(c_.numerator, c_.denominator) * x**e for e, c_ in
                      ((e, Fraction(c0)) for e, c0 in v.terms))
    if sp.simplify(M.det()) == 0:
        raise OperatorError("R is not invertible")
    inv = sp.simplify(M.inv())
    out: Matrix = {}
    for r in range(n):
        for c in range(n):
            entry = sp.factor(inv[r, c])
            if entry == 0:
                continue
            num, den = sp.fraction(sp.together(entry))
            den_poly = sp.Poly(den, x)
            if len(den_poly.terms()) != 1:
                raise OperatorError("R_inv has entries outside the Laurent polynomial ring")
            (k,), dc = den_poly.terms()[0]
            num_poly = sp.Poly(sp.expand(num), x)
            terms = {}
            for (e,), cc in num_poly.terms():
                cc = sp.Rational(cc) / sp.Rational(dc)
                terms[e - k] = Fraction(int(cc.p), int(cc.q))
            out[(r, c)] = LaurentPoly(terms)
    return out


def operator_from_dict(data: dict, validate: bool = True) -> EYBOperator:
    try:
        dim = int(data["dim"])
        R = {(int(r), int(c)): poly_from_text(v) for r, c, v in data["R"]}
        R = {k: v for k, v in R.items() if v}
        if data.get("R_inv"):
            R_inv = {(int(r), int(c)): poly_from_text(v) for r, c, v in data["R_inv"]}
            R_inv = {k: v for k, v in R_inv.items() if v}
        else:
            R_inv = _invert(R, dim * dim)
        mu = tuple(poly_from_text(x) for x in data["mu"])
        alpha = poly_from_text(data["alpha"])
        beta = poly_from_text(data["beta"])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, OperatorError):
            raise
        raise OperatorError(f"malformed operator definition: {exc}") from exc
    op = EYBOperator(dim, R, R_inv, mu, alpha, beta, name=str(data.get("name", "custom")))
    if validate:
        rep = eyb_axioms_check(op)
        if not rep.passed:
            raise OperatorError(f"operator {op.name} fails axioms: {', '.join(rep.failures)}")
    return op


def load_operator(path: str | Path) -> EYBOperator:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise OperatorError(f"{path}: not valid JSON ({exc})") from exc
    return operator_from_dict(data)


def save_operator(op: EYBOperator, path: str | Path) -> None:
    Path(path).write_text(json.dumps(operator_to_dict(op), indent=2) + "\n")
