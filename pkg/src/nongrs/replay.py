"""Reference fixtures replayed by ``nongrs paper-check``.

Each check returns ``(name, passed, detail)``.  Tables are looked up through
``weights.TABLES`` at call time so that a corrupted entry is reported under
its own name.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import code as codes
from .analytics import structure, subsets, weights
from .code import dual, weight_distribution_exhaustive
from .constructions import (EvaluationSet, Polynomial, asd_char2, asd_subfield, ck_infty,
                           ck_mu)
from .errors import NongrsError
from .field import build_field


@dataclass(frozen=True)
class FixtureResult:
    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


# -- reference instances ---------------------------------------------------------


def f16_instance():
    F = build_field(2, 4)
    return F, EvaluationSet(F, [F.power(e) for e in (1, 3, 5, 8, 9, 11, 13)]), 5


def f8_instance():
    F = build_field(2, 3)
    return F, EvaluationSet(F, [F.power(e) for e in (0, 1, 2, 3, 4, 6)]), 3


F625_MODULUS = (2, 4, 4, 0, 1)
F625_SET_LOGS = (0, 26, 52, 78, 104, 130, 182)  # followed by the element 2, w^494, w^598
F625_V_LOGS = (247, 260, 208, 247, 143, 39, 195, 26, 390, 65)
F625_WITNESS_LOGS = (0, 52, 78, 494, 598)


def f625_instance():
    F = build_field(5, 4, F625_MODULUS)
    elems = [F.power(e) for e in F625_SET_LOGS] + [2, F.power(494), F.power(598)]
    return F, EvaluationSet(F, elems), 5


ROW_DELETION = {
    13: ((4, 6, 10, 11), 4, {1: (6, 1), 2: (6, 4), 3: (6, 3)}),
    17: ((8, 16), 5, {1: (11, 1), 2: (11, 5), 3: (11, 4), 4: (11, 4)}),
}

F9_STAR_K4 = "1+48z^5+480z^6+1152z^7+2616z^8+2264z^9"
F9_K6 = "1+96z^4+1440z^5+8160z^6+38400z^7+115200z^8+204464z^9+163680z^10"
F16_WDIST = (1, 0, 0, 0, 1050, 10080, 78120, 333600, 625725)


# -- checks ------------------------------------------------------------------------


def _check_f16():
    F, S, k = f16_instance()
    C = ck_infty(S, None, k)
    wd = weight_distribution_exhaustive(C)
    verdict = structure.classify_ck(S, None, k)
    ev = structure.nongrs_verdict(S, None, k)
    ok = (wd.counts == F16_WDIST and wd.min_distance() == 4 and codes.mds_by_columns(C)
          and verdict.code_class.kind == codes.MDS and verdict.freeness is not None
          and ev.fired and ev.measured == 1)
    return ok, f"d={wd.min_distance()} class={verdict.code_class.kind} d((C^perp)^2)={ev.measured}"


def _check_f9(fq: bool):
    F = build_field(3, 2)
    if fq:
        S, k, want = EvaluationSet.full(F), 6, F9_K6
        formula = weights.ck_wdist_fq(9, 3, k)[0]
    else:
        S, k, want = EvaluationSet.nonzero(F), 4, F9_STAR_K4
        formula = weights.ck_wdist_fqstar(9, 3, k)[0]
    exhaustive = weight_distribution_exhaustive(ck_infty(S, None, k))
    ok = formula.enumerator() == want and exhaustive.enumerator() == want
    return ok, f"formula={formula.enumerator()} exhaustive={exhaustive.enumerator()}"


def _check_f8():
    F, S, k = f8_instance()
    asd = asd_char2(S, k)
    want_v = tuple(F.power(e) for e in (3, 1, 0, 0, 3, 1))
    so = structure.so_check(S, asd.scaling, k)
    cls = codes.classify(asd.code)
    ok = (asd.scaling.values == want_v and asd.lam == F.power(2) and so.ggt_zero
          and so.certificate is not None and so.certificate.g.coeffs == (F.power(2),)
          and asd.code.is_subcode_of(dual(asd.code))
          and (cls.kind, cls.length, cls.dimension, cls.d) == (codes.NMDS, 7, 3, 4))
    return ok, f"v={[F.log(x) for x in asd.scaling]} lambda=w^{F.log(asd.lam)} {cls.kind} d={cls.d}"


def _check_f625():
    F, S, k = f625_instance()
    asd = asd_subfield(S, k, 2)
    # the listed root choice must be accepted as a valid alternative
    listed = asd_subfield(S, k, 2, v=[F.power(e) for e in F625_V_LOGS])
    d, how = codes.min_distance(asd.code, "dependence")
    verdict = structure.classify_ck(S, asd.scaling, k)
    witness = [F.power(e) for e in F625_WITNESS_LOGS]
    ok = (asd.code.is_self_orthogonal() and listed.code.is_self_orthogonal()
          and (asd.code.length, asd.code.dimension) == (11, 5) and d == 6
          and verdict.code_class.kind == codes.NMDS
          and set(witness) <= set(S.elements) and F.total(witness) == 0)
    return ok, f"[11,5] d={d} ({how}) {verdict.code_class.kind}"


def _check_row_deletion(q: int):
    removed, k, want = ROW_DELETION[q]
    F = build_field(q)
    S = EvaluationSet.excluding(F, removed)
    got = {}
    for mu in want:
        C = ck_mu(S, None, k, mu)
        d, _ = codes.min_distance(C)
        dd, _ = codes.dual_distance(C, "dependence")
        got[mu] = (d, dd)
    ok = got == want
    if q == 13:
        same = (weight_distribution_exhaustive(ck_mu(S, None, k, 2))
                == weight_distribution_exhaustive(ck_infty(S, None, k)))
        ok = ok and same
    return ok, " ".join(f"mu={mu}:{got[mu]}" for mu in sorted(got))


def _check_table(name: str, q: int, p: int):
    t = weights.TABLES[name]
    tab = weights.table_wdist(q, p, t.k, name)
    cor = weights.ck_wdist_fqstar(q, p, t.k)[0]
    ok = tab == cor and tab.total() == q ** t.k
    if name == "I" and q == 16:
        F = build_field(2, 4)
        ok = ok and tab == weight_distribution_exhaustive(ck_infty(EvaluationSet.nonzero(F), None, 5))
    return ok, tab.enumerator()


def _check_subset_counts(qs):
    bad = []
    for q in qs:
        p, m = _prime_power(q)
        F = build_field(p, m)
        for S, dom in ((EvaluationSet.nonzero(F), subsets.FQSTAR), (EvaluationSet.full(F), subsets.FQ)):
            for ell in range(S.n + 1):
                if (subsets.subset_sum_closed(q, p, ell, dom).count
                        != subsets.subset_sum_bruteforce(S, ell, 0, method="dp").count):
                    bad.append((q, dom, ell))
    return not bad, f"mismatches={bad}"


def _log(q: int, p: int) -> int:
    m = 0
    while q > 1:
        q //= p
        m += 1
    return m


def _check_structure_sweep(seed: int = 0):
    rng = random.Random(seed)
    bad = []
    for q in (11, 13):
        F = build_field(q)
        for n in range(5, 11):
            for k in range(3, n - 1):
                S = EvaluationSet(F, rng.sample(range(q), n))
                rep = structure.schur_square_structure(S, k, distances=False)
                v = [rng.randrange(1, q) for _ in range(n)]
                cls = structure.classify_ck(S, v, k, cross_check=True)
                if not rep.ok or not structure.nongrs_verdict(S, v, k).fired:
                    bad.append((q, n, k))
                if cls.cross_check.kind not in (codes.MDS, codes.NMDS):
                    bad.append((q, n, k, cls.cross_check.kind))
    return not bad, f"violations={bad}"


def random_so_instance(rng: random.Random, F, n: int, k: int, positive: bool):
    """Random (S, v); with ``positive`` v is derived from a random g meeting the
    boundary condition, so G G^T = 0 whenever that succeeds."""
    q = F.q
    S = EvaluationSet(F, rng.sample(range(q), n))
    if positive and n - 2 * k >= 0:
        top = n - 2 * k
        for _ in range(20):
            coeffs = [rng.randrange(q) for _ in range(top + 1)]
            if S.sigma == 0 and top == 0:
                break
            # solve the boundary condition for one coefficient
            if S.sigma:
                rest = coeffs[top - 1] if top >= 1 else 0
                coeffs[top] = F.div(F.neg(F.add(1, rest)), S.sigma)
            else:
                coeffs[top - 1] = F.neg(1)
            v = structure.scaling_from_certificate(S, k, Polynomial(F, coeffs))
            if v is not None:
                return S, list(v.values)
    return S, [rng.randrange(1, q) for _ in range(n)]


def _check_certificates(seed: int = 0, count: int = 60):
    rng = random.Random(seed)
    agree = found = 0
    for q in (7, 8, 9, 11, 13, 16):
        F = build_field(*_prime_power(q))
        for i in range(count):
            n = rng.randrange(6, min(q, 10) + 1)
            k = rng.randrange(3, n - 1)
            S, v = random_so_instance(rng, F, n, k, positive=i % 2 == 0)
            rep = structure.so_check(S, v, k)  # raises on disagreement
            agree += 1
            found += rep.certificate is not None
    return found > 0, f"instances={agree} certificates={found}"


def _prime_power(q: int) -> tuple[int, int]:
    p = next(r for r in range(2, q + 1) if q % r == 0)
    return p, _log(q, p)


def _table_checks() -> list[tuple[str, Callable]]:
    out = []
    for q in range(9, 65):
        p, m = _prime_power(q)
        if p ** m != q:
            continue
        for name, t in weights.TABLES.items():
            if t.applies_to(p):
                out.append((f"table-{name} q={q}", lambda name=name, q=q, p=p: _check_table(name, q, p)))
    return out


def fixtures() -> list[tuple[str, Callable]]:
    return [
        ("f16 k=5 MDS non-GRS", _check_f16),
        ("f9* k=4 distribution", lambda: _check_f9(False)),
        ("f9 k=6 distribution", lambda: _check_f9(True)),
        ("f8 char-2 almost self-dual", _check_f8),
        ("f625 subfield almost self-dual", _check_f625),
        ("row deletion q=13", lambda: _check_row_deletion(13)),
        ("row deletion q=17", lambda: _check_row_deletion(17)),
        *_table_checks(),
        ("subset-sum closed form", lambda: _check_subset_counts((5, 7, 8, 9, 11, 13))),
        ("schur/classification sweep", _check_structure_sweep),
        ("certificate vs GG^T", _check_certificates),
    ]


def run_fixtures(selected: Callable[[str], bool] | None = None) -> list[FixtureResult]:
    results = []
    for name, fn in fixtures():
        if selected is not None and not selected(name):
            continue
        try:
            ok, detail = fn()
        except (NongrsError, AssertionError, ArithmeticError) as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(FixtureResult(name, bool(ok), detail))
    return results


__all__ = ["FixtureResult", "fixtures", "run_fixtures", "f16_instance", "f8_instance",
           "f625_instance", "random_so_instance"]
