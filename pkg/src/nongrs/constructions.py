"""Evaluation codes: GRS, extended GRS, C_k(S, v, inf) and relatives.

Throughout, ``S = (a_1, ..., a_n)`` is an ordered list of distinct field
elements, ``v`` a vector of nonzero column multipliers and
``u_i = prod_{j != i} (a_i - a_j)^{-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .code import LinearCode
from .errors import ValidationError
from .field import FieldSpec
from .matrix import Matrix, power_rows


class EvaluationSet:
    """Distinct evaluation points a_1..a_n with their weights u_i and sum."""

    def __init__(self, field: FieldSpec, elements: Iterable):
        elems = tuple(field.element(a) for a in elements)
        if len(set(elems)) != len(elems):
            seen, dup = set(), None
            for a in elems:
                if a in seen:
                    dup = a
                    break
                seen.add(a)
            raise ValidationError(f"evaluation set has repeated element {dup}")
        if not elems:
            raise ValidationError("evaluation set is empty")
        self.field = field
        self.elements = elems
        self.u = tuple(
            field.inv(field.prod(field.sub(a, b) for b in elems if b != a)) for a in elems)
        self.sigma = field.total(elems)

    @classmethod
    def full(cls, field: FieldSpec) -> "EvaluationSet":
        """All of F_q, in encoding order."""
        return cls(field, range(field.q))

    @classmethod
    def nonzero(cls, field: FieldSpec) -> "EvaluationSet":
        """F_q^*, in encoding order."""
        return cls(field, range(1, field.q))

    @classmethod
    def excluding(cls, field: FieldSpec, removed: Iterable) -> "EvaluationSet":
        drop = {field.element(a) for a in removed}
        return cls(field, [a for a in range(field.q) if a not in drop])

    @property
    def n(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self) -> str:
        return f"EvaluationSet(GF({self.field.q}), {list(self.elements)})"

    def power_sum(self, ell: int) -> int:
        """sum_i a_i^ell u_i."""
        F = self.field
        return F.total(F.mul(F.pow(a, ell), u) for a, u in zip(self.elements, self.u))

    def to_json(self) -> list[int]:
        return list(self.elements)


class ScalingVector:
    """Nonzero column multipliers v_1..v_n."""

    def __init__(self, field: FieldSpec, values: Iterable):
        vals = tuple(field.element(x) for x in values)
        if any(x == 0 for x in vals):
            raise ValidationError("scaling vector entries must be nonzero")
        self.field = field
        self.values = vals

    @classmethod
    def ones(cls, field: FieldSpec, n: int) -> "ScalingVector":
        return cls(field, [1] * n)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ScalingVector) and self.values == other.values

    def __repr__(self) -> str:
        return f"ScalingVector({list(self.values)})"

    def dual_scaling(self, S: EvaluationSet) -> tuple[int, ...]:
        """v'_i = u_i / v_i."""
        F = self.field
        return tuple(F.div(u, v) for u, v in zip(S.u, self.values))

    def to_json(self) -> list[int]:
        return list(self.values)


class Polynomial:
    """Dense univariate polynomial f_0 + f_1 x + ... with field coefficients."""

    def __init__(self, field: FieldSpec, coeffs: Sequence[int]):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> int:
        # negative indices are zero by convention
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def in_span_below(self, k: int) -> bool:
        """Membership in F_q[x]_k (degree < k)."""
        return self.degree < k

    def in_v(self, k: int) -> bool:
        """Membership in V_k: degree <= k with no x^{k-1} term."""
        return self.degree <= k and self.coefficient(k - 1) == 0


def as_scaling(S: EvaluationSet, v) -> ScalingVector:
    if v is None or (isinstance(v, str) and v == "ones"):
        return ScalingVector.ones(S.field, S.n)
    if not isinstance(v, ScalingVector):
        v = ScalingVector(S.field, v)
    if v.field != S.field:
        raise ValidationError("scaling vector and evaluation set live in different fields")
    if len(v) != S.n:
        raise ValidationError(f"scaling vector has length {len(v)}, expected {S.n}")
    return v


def check_ck_window(n: int, k: int, q: int) -> None:
    if not 3 <= k <= n - 2 <= q - 2:
        raise ValidationError(f"parameters must satisfy 3 <= k <= n-2 <= q-2 (n={n}, k={k}, q={q})")


def _with_last_column(F: FieldSpec, body: np.ndarray, last: Sequence[int]) -> Matrix:
    col = np.asarray(last, dtype=np.int64).reshape(-1, 1)
    return Matrix(F, np.hstack([body, col]))


def grs(S: EvaluationSet, v=None, k: int = 1) -> LinearCode:
    """GRS_k(S, v): rows (v_j a_j^i) for i < k."""
    F = S.field
    v = as_scaling(S, v)
    if not 1 <= k <= S.n <= F.q:
        raise ValidationError(f"GRS needs 1 <= k <= n <= q (k={k}, n={S.n})")
    return LinearCode(Matrix(F, power_rows(F, S.elements, range(k), v.values)), check=False)


def egrs(S: EvaluationSet, v=None, k: int = 1) -> LinearCode:
    """GRS_k(S, v, inf): the GRS generator with column (0, ..., 0, 1)^T appended."""
    F = S.field
    v = as_scaling(S, v)
    if not 1 <= k <= S.n <= F.q:
        raise ValidationError(f"EGRS needs 1 <= k <= n <= q (k={k}, n={S.n})")
    body = power_rows(F, S.elements, range(k), v.values)
    return LinearCode(_with_last_column(F, body, [0] * (k - 1) + [1]), check=False)


def ck_generator(S: EvaluationSet, v=None, k: int = 3) -> Matrix:
    """Rows v*a^0, ..., v*a^{k-2} (last entry 0) and v*a^k (last entry 1).

    No parameter-window check; :func:`ck_infty` is the validated entry point.
    """
    F = S.field
    v = as_scaling(S, v)
    body = power_rows(F, S.elements, [*range(k - 1), k], v.values)
    return _with_last_column(F, body, [0] * (k - 1) + [1])


def ck_infty(S: EvaluationSet, v=None, k: int = 3) -> LinearCode:
    """C_k(S, v, inf), an [n+1, k] code."""
    check_ck_window(S.n, k, S.field.q)
    return LinearCode(ck_generator(S, v, k), check=False)


def ck_infty_parity(S: EvaluationSet, v=None, k: int = 3) -> Matrix:
    """The (n-k+1) x (n+1) parity-check matrix with rows v'*a^t for t <= n-k;
    last column 0, ..., 0, -1, -sum(a)."""
    F = S.field
    v = as_scaling(S, v)
    n = S.n
    check_ck_window(n, k, F.q)
    body = power_rows(F, S.elements, range(n - k + 1), v.dual_scaling(S))
    last = [0] * (n - k - 1) + [F.neg(1), F.neg(S.sigma)]
    return _with_last_column(F, body, last)


def ck_dual_codeword(S: EvaluationSet, v, k: int, g: Polynomial) -> list[int]:
    """(v'_i g(a_i), -g_{n-k-1} - g_{n-k} sum(a)) for g of degree <= n-k."""
    F = S.field
    v = as_scaling(S, v)
    n = S.n
    if g.degree > n - k:
        raise ValidationError(f"g must have degree <= {n - k}")
    head = [F.mul(w, g(a)) for w, a in zip(v.dual_scaling(S), S.elements)]
    tail = F.neg(F.add(g.coefficient(n - k - 1), F.mul(g.coefficient(n - k), S.sigma)))
    return head + [tail]


def ck_codeword(S: EvaluationSet, v, k: int, f: Polynomial) -> list[int]:
    """(v_1 f(a_1), ..., v_n f(a_n), f_k) for f in V_k."""
    F = S.field
    v = as_scaling(S, v)
    if not f.in_v(k):
        raise ValidationError(f"f is not in V_{k}")
    return [F.mul(w, f(a)) for w, a in zip(v.values, S.elements)] + [f.coefficient(k)]


def ck_mu(S: EvaluationSet, v=None, k: int = 3, mu: int = 1) -> LinearCode:
    """Delete row ``mu`` (1-based) of the EGRS_{k+1} generator.

    ``mu = k`` removes the x^{k-1} row and gives C_k(S, v, inf) itself;
    deleting row k+1 would give a plain GRS code and is rejected.
    """
    F = S.field
    check_ck_window(S.n, k, F.q)
    if not 1 <= mu <= k:
        raise ValidationError(f"mu must satisfy 1 <= mu <= k (mu={mu}, k={k})")
    full = egrs(S, v, k + 1).generator.entries
    keep = [i for i in range(k + 1) if i != mu - 1]
    return LinearCode(Matrix(F, full[keep]), check=False)


@dataclass(frozen=True)
class AlmostSelfDual:
    scaling: ScalingVector
    code: LinearCode
    lam: int


def asd_char2(S: EvaluationSet, k: int) -> AlmostSelfDual:
    """Almost self-dual C_k(S, v, inf) over F_{2^m}: v_i = (lambda u_i)^{q/2}
    with lambda = (sum a_i)^{-1}."""
    F = S.field
    if F.p != 2 or F.q < 8:
        raise ValidationError("the characteristic-2 recipe needs q = 2^m >= 8")
    if S.n != 2 * k:
        raise ValidationError(f"|S| must equal 2k = {2 * k}, got {S.n}")
    if not 3 <= k <= F.q // 2:
        raise ValidationError(f"need 3 <= k <= q/2 (k={k})")
    if S.sigma == 0:
        raise ValidationError("the elements of S sum to zero")
    lam = F.inv(S.sigma)
    v = ScalingVector(F, [F.pow(F.mul(lam, u), F.q // 2) for u in S.u])
    return AlmostSelfDual(v, ck_infty(S, v, k), lam)


def asd_subfield(S: EvaluationSet, k: int, r: int, v=None) -> AlmostSelfDual:
    """Almost self-dual C_k(S, v, inf) over F_{p^m} with S inside F_{p^r},
    r | m and m/r even: v_i = (lambda u_i)^{1/2}, lambda = (-sum a_i)^{-1}.

    Square roots default to the smaller encoding; pass ``v`` to fix other
    roots (each entry must still square to lambda u_i).
    """
    F = S.field
    if r < 1 or F.m % r or (F.m // r) % 2:
        raise ValidationError(f"need r | m and m/r even (r={r}, m={F.m})")
    if S.n != 2 * k:
        raise ValidationError(f"|S| must equal 2k = {2 * k}, got {S.n}")
    if not 3 <= k <= F.p**r // 2:
        raise ValidationError(f"need 3 <= k <= p^r/2 (k={k}, p^r={F.p ** r})")
    outside = [a for a in S.elements if not F.in_subfield(a, r)]
    if outside:
        raise ValidationError(f"elements {outside} are not in the subfield F_{F.p}^{r}")
    if S.sigma == 0:
        raise ValidationError("the elements of S sum to zero")
    lam = F.inv(F.neg(S.sigma))
    targets = [F.mul(lam, u) for u in S.u]
    if v is None:
        roots = [F.sqrt(t) for t in targets]
        if any(x is None for x in roots):  # pragma: no cover - excluded by the subfield condition
            raise AssertionError("lambda*u_i is not a square")
        v = ScalingVector(F, roots)
    else:
        v = as_scaling(S, v)
        bad = [i for i, (x, t) in enumerate(zip(v.values, targets)) if F.mul(x, x) != t]
        if bad:
            raise ValidationError(f"v_i^2 != lambda*u_i at positions {bad}")
    return AlmostSelfDual(v, ck_infty(S, v, k), lam)
