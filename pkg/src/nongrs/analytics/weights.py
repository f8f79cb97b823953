"""Closed-form weight distributions of MDS and near-MDS codes.

Tabulated distributions for the [q, 5] and [q, 6] codes built on F_q^* are
stored as short polynomial strings in ``q`` and ``p`` and are evaluated with
exact integer division, so a mistyped constant surfaces as an error instead
of a silently wrong count.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import comb

from ..code import DEFAULT_MAX_SUBSETS, MDS, NMDS, WeightDistribution
from ..constructions import EvaluationSet, check_ck_window
from ..errors import InexactDivision, ValidationError
from .subsets import FQ, FQSTAR, is_power_of, subset_sum_bruteforce, subset_sum_closed

FORMULA = "formula"
CLASSICAL_MDS = "classical MDS formula"


def mds_wdist(N: int, k: int, q: int) -> WeightDistribution:
    """Weight distribution of any [N, k] MDS code over F_q."""
    if not 0 <= k <= N:
        raise ValidationError(f"need 0 <= k <= N (N={N}, k={k})")
    d = N - k + 1
    counts = [0] * (N + 1)
    counts[0] = 1
    for w in range(d, N + 1):
        counts[w] = comb(N, w) * sum((-1) ** j * comb(w, j) * (q ** (w - d + 1 - j) - 1)
                                     for j in range(w - d + 1))
    return WeightDistribution(tuple(counts))


def _cascade(N: int, k: int, q: int, a_min: int, co: int) -> list[int]:
    """Counts for weights co..N of an NMDS code seen from dimension k, where
    the lowest nonzero weight co = N - k carries ``a_min`` words."""
    counts = [0] * (N + 1)
    counts[0] = 1
    counts[co] = a_min
    for s in range(1, N - co + 1):
        head = sum((-1) ** i * comb(co + s, i) * (q ** (s - i) - 1) for i in range(s))
        counts[co + s] = comb(N, co + s) * head + (-1) ** s * comb(N - co, s) * a_min
    return counts


def nmds_wdist_from_Amin(N: int, k: int, q: int,
                         A_min: int) -> tuple[WeightDistribution, WeightDistribution]:
    """Distributions of an [N, k] NMDS code and its dual from the number of
    minimum-weight codewords (weight N - k), which the dual shares at weight k."""
    if not 1 <= k < N:
        raise ValidationError(f"need 1 <= k < N (N={N}, k={k})")
    if A_min < 0:
        raise ValidationError("A_min must be nonnegative")
    # C(N, k-s) = C(N, N-k+s), so both sides run the same recursion with
    # the roles of k and N - k exchanged
    code = _cascade(N, k, q, A_min, N - k)
    dual = _cascade(N, N - k, q, A_min, k)
    return WeightDistribution(tuple(code)), WeightDistribution(tuple(dual))


@dataclass(frozen=True)
class CkDistribution:
    """Distributions of C_k(S, v, inf) and its dual with their provenance."""

    kind: str
    code: WeightDistribution
    dual: WeightDistribution
    zero_sum_count: int
    method: str

    def to_json(self) -> dict:
        return {"class": self.kind, "method": self.method,
                "zero_sum_subsets": str(self.zero_sum_count),
                "code": self.code.to_json(), "dual": self.dual.to_json()}


def ck_wdist_formula(S: EvaluationSet, k: int,
                     max_subsets: int = DEFAULT_MAX_SUBSETS
                     ) -> tuple[WeightDistribution, WeightDistribution]:
    """Distributions of the NMDS code C_k(S, v, inf) and its dual.

    The number of minimum-weight words is (q-1) times the number of k-subsets
    of S summing to zero; S must have at least one such subset.
    """
    F = S.field
    check_ck_window(S.n, k, F.q)
    zs = subset_sum_bruteforce(S, k, 0, max_subsets=max_subsets).count
    if zs == 0:
        raise ValidationError(f"S is {k}-zero-sum free, so the code is MDS; use mds_wdist")
    return nmds_wdist_from_Amin(S.n + 1, k, F.q, (F.q - 1) * zs)


def ck_distribution(S: EvaluationSet, k: int,
                    max_subsets: int = DEFAULT_MAX_SUBSETS) -> CkDistribution:
    """Formula distribution for either outcome (MDS or NMDS)."""
    F = S.field
    check_ck_window(S.n, k, F.q)
    N = S.n + 1
    zs = subset_sum_bruteforce(S, k, 0, max_subsets=max_subsets).count
    if zs == 0:
        return CkDistribution(MDS, mds_wdist(N, k, F.q), mds_wdist(N, N - k, F.q), 0,
                              CLASSICAL_MDS)
    code, dual = nmds_wdist_from_Amin(N, k, F.q, (F.q - 1) * zs)
    return CkDistribution(NMDS, code, dual, zs, FORMULA)


def _closed_form(q: int, p: int, k: int, domain: str
                 ) -> tuple[WeightDistribution, WeightDistribution]:
    n = q - 1 if domain == FQSTAR else q
    check_ck_window(n, k, q)
    zs = subset_sum_closed(q, p, k, domain).count
    if zs == 0:
        raise ValidationError(f"no {k}-subset of {domain} sums to zero for q={q}")
    return nmds_wdist_from_Amin(n + 1, k, q, (q - 1) * zs)


def ck_wdist_fqstar(q: int, p: int, k: int) -> tuple[WeightDistribution, WeightDistribution]:
    """C_k(F_q^*, v, inf) and its dual, with the zero-sum count in closed form."""
    if not is_power_of(q, p):
        raise ValidationError(f"{q} is not a power of {p}")
    if k == q - 2 or (p == 2 and k == q - 3):
        raise ValidationError(f"k={k} is excluded for S = F_q^*, q={q}")
    return _closed_form(q, p, k, FQSTAR)


def ck_wdist_fq(q: int, p: int, k: int) -> tuple[WeightDistribution, WeightDistribution]:
    """C_k(F_q, v, inf) and its dual, with the zero-sum count in closed form."""
    if not is_power_of(q, p):
        raise ValidationError(f"{q} is not a power of {p}")
    if p == 2 and k == q - 2:
        raise ValidationError(f"k={k} is excluded for S = F_q, q={q}")
    return _closed_form(q, p, k, FQ)


# -- tabulated distributions --------------------------------------------------

_TERM = re.compile(r"([+-])?(\d*)(p?)(?:q(?:\^(\d+))?)?")


def _parse_poly(text: str) -> dict[tuple[int, int], int]:
    """'9pq^2-65pq+154' -> {(q_exp, p_exp): coeff}."""
    poly: dict[tuple[int, int], int] = {}
    s = text.replace(" ", "")
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
        sign, digits, has_p, qexp = m.groups()
        has_q = "q" in m.group(0)
        if not (digits or has_p or has_q):
            raise ValueError(f"empty term in {text!r}")
        coef = int(digits) if digits else 1
        key = (int(qexp) if qexp else int(has_q), int(bool(has_p)))
        poly[key] = poly.get(key, 0) + (-coef if sign == "-" else coef)
        pos = m.end()
    return poly


def _eval_poly(poly: dict[tuple[int, int], int], q: int, p: int) -> int:
    return sum(c * q**i * p**j for (i, j), c in poly.items())


_FACTOR = re.compile(r"\(([^()]*)\)(?:\^(\d+))?")


def eval_rational(expr: str, q: int, p: int, what: str) -> int:
    """Evaluate '(q-1)^2(q-2)(9q-32)/24' at (q, p) with exact division."""
    num_text, _, den_text = expr.partition("/")
    num_text = num_text.replace(" ", "")
    num, pos = 1, 0
    for m in _FACTOR.finditer(num_text):
        if m.start() != pos:
            raise ValueError(f"unexpected text in {expr!r}")
        num *= _eval_poly(_parse_poly(m.group(1)), q, p) ** int(m.group(2) or 1)
        pos = m.end()
    if pos != len(num_text):
        raise ValueError(f"unexpected text in {expr!r}")
    den = _eval_poly(_parse_poly(den_text), q, p) if den_text.strip() else 1
    quot, rem = divmod(num, den)
    if rem:
        raise InexactDivision(f"{what}: {num} is not divisible by {den}")
    return quot


@dataclass(frozen=True)
class WeightTable:
    """Counts A_{q-j} as expressions in q and p, keyed by j."""

    name: str
    k: int
    characteristics: str
    rows: dict[int, str] = field(default_factory=dict)

    def applies_to(self, p: int) -> bool:
        c = self.characteristics
        if c.startswith(">="):
            return p >= int(c[2:])
        return p in {int(x) for x in c.split(",")}


TABLES: dict[str, WeightTable] = {t.name: t for t in [
    WeightTable("I", 5, "2", {
        5: "(q-1)^2(q-2)(q-4)(q-8)/120",
        4: "(q-1)^2(q-2)(9q-32)/24",
        3: "(q-1)^2(q-2)(q^2-4q+32)/12",
        2: "(q-1)^2(2q^3+11q^2-20q+64)/12",
        1: "(q-1)(9q^4+9q^3+38q^2-24q+64)/24",
        0: "(q-1)(44q^4+25q^3+5q^2-10q+56)/120",
    }),
    WeightTable("II", 5, "3,5", {
        5: "(q-1)^2(pq^3-14pq^2+71pq-154p+120)/120p",
        4: "(q-1)^2(9pq^2-65pq+154p-120)/24p",
        3: "(q-1)^2(pq^3-6pq^2+55pq-154p+120)/12p",
        2: "(q-1)^2(2pq^3+11pq^2-35pq+154p-120)/12p",
        1: "(q-1)(9pq^4+9pq^3+53pq^2-129pq+120q+154p-120)/24p",
        0: "(q-1)(44pq^4+25pq^3-10pq^2+95pq-120q-34p+120)/120p",
    }),
    WeightTable("III", 5, ">=7", {
        5: "(q-1)^2(q-7)(q^2-7q+22)/120",
        4: "(q-1)^2(9q^2-65q+154)/24",
        3: "(q-1)^2(q^3-6q^2+55q-154)/12",
        2: "(q-1)^2(2q^3+11q^2-35q+154)/12",
        1: "(q-1)(9q^4+9q^3+53q^2-129q+154)/24",
        0: "(q-1)(44q^4+25q^3-10q^2+95q-34)/120",
    }),
    WeightTable("IV", 6, "2", {
        6: "(q-1)^2(q-2)(q-4)(q-6)(q-8)/720",
        5: "(q-1)^2(q-2)(q-4)(11q-48)/120",
        4: "(q-1)^2(q-2)(q^3-8q^2+74q-192)/48",
        3: "(q-1)^2(q-2)(2q^3+15q^2-44q+192)/36",
        2: "(q-1)^2(9q^4+16q^3+96q^2-160q+384)/48",
        1: "(q-1)(44q^5+71q^4+35q^3+250q^2-184q+384)/120",
        0: "(q-1)(265q^5+129q^4+100q^3+30q^2-140q+336)/720",
    }),
    WeightTable("V", 6, "3", {
        6: "(q-1)^2(q-3)(q-6)(q^2-11q+38)/720",
        5: "(q-1)^2(q-3)(11q^2-96q+228)/120",
        4: "(q-1)^2(q-3)(q^3-7q^2+84q-228)/48",
        3: "(q-1)^2(2q^4+11q^3-89q^2+420q-684)/36",
        2: "(q-1)^2(9q^4+16q^3+111q^2-300q+684)/48",
        1: "(q-1)(44q^5+71q^4+20q^3+405q^2-624q+684)/120",
        0: "(q-1)(265q^5+129q^4+115q^3-125q^2+300q+36)/720",
    }),
    WeightTable("VI", 6, "5", {
        6: "(q-1)^2(q-5)(q^3-15q^2+80q-180)/720",
        5: "(q-1)^2(11q^3-129q^2+556q-900)/120",
        4: "(q-1)^2(q^4-10q^3+105q^2-520q+900)/48",
        3: "(q-1)^2(2q^4+11q^3-89q^2+460q-900)/36",
        2: "(q-1)^2(9q^4+16q^3+111q^2-340q+900)/48",
        1: "(q-1)(44q^5+71q^4+20q^3+445q^2-880q+900)/120",
        0: "(q-1)(265q^5+129q^4+115q^3-165q^2+556q-180)/720",
    }),
    WeightTable("VII", 6, ">=7", {
        6: "(q-1)^2(q^4-20q^3+155q^2-580q+1044)/720",
        5: "(q-1)^2(11q^3-129q^2+556q-1044)/120",
        4: "(q-1)^2(q^4-10q^3+105q^2-520q+1044)/48",
        3: "(q-1)^2(2q^4+11q^3-89q^2+460q-1044)/36",
        2: "(q-1)^2(9q^4+16q^3+111q^2-340q+1044)/48",
        1: "(q-1)(44q^5+71q^4+20q^3+445q^2-1024q+1044)/120",
        0: "(q-1)(265q^5+129q^4+115q^3-165q^2+700q-324)/720",
    }),
]}


def table_for(p: int, k: int, tables: dict[str, WeightTable] | None = None) -> WeightTable:
    tables = TABLES if tables is None else tables
    for t in tables.values():
        if t.k == k and t.applies_to(p):
            return t
    raise ValidationError(f"no table for k={k}, p={p}")


def table_wdist(q: int, p: int, k: int, table: str | None = None,
                tables: dict[str, WeightTable] | None = None) -> WeightDistribution:
    """Tabulated distribution of the [q, k] code on F_q^* (k in {5, 6}, q > 8)."""
    tables = TABLES if tables is None else tables
    if not is_power_of(q, p):
        raise ValidationError(f"{q} is not a power of {p}")
    if q <= 8:
        raise ValidationError(f"tables need q > 8, got q={q}")
    if table is None:
        t = table_for(p, k, tables)
    else:
        if table not in tables:
            raise ValidationError(f"unknown table {table!r}")
        t = tables[table]
        if t.k != k or not t.applies_to(p):
            raise ValidationError(f"table {table} does not cover k={k}, p={p}")
    counts = [0] * (q + 1)
    counts[0] = 1
    for j, expr in t.rows.items():
        counts[q - j] = eval_rational(expr, q, p, f"table-{t.name} q={q} weight q-{j}")
    return WeightDistribution(tuple(counts))
