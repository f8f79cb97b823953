from __future__ import annotations

import random
from itertools import combinations

import pytest

from nongrs.analytics.structure import (LARGE_K, SMALL_K, classify_ck, nongrs_verdict,
                                        scaling_from_certificate, schur_evidence,
                                        schur_square_structure, so_certificate, so_check)
from nongrs.code import MDS, NMDS, classify, schur_square
from nongrs.constructions import EvaluationSet, Polynomial, asd_char2, ck_infty, egrs, grs
from nongrs.field import build_field
from nongrs.replay import random_so_instance


def test_schur_examples():
    F = build_field(11)
    S = EvaluationSet(F, range(1, 9))
    rep = schur_square_structure(S, 3)
    assert rep.square.case == "2k<n" and rep.square.matches and rep.square.dimension == 6
    assert schur_square(ck_infty(S, None, 3)).same_code(ck_infty(S, None, 6))
    rep = schur_square_structure(S, 5)
    assert rep.square.dimension == 9 and rep.square.matches
    rep = schur_square_structure(S, 6)
    assert rep.dual_square.case == "2k>n+1" and rep.dual_square.matches
    assert rep.dual_unit_vector == 8 and rep.dual_square.distance == 1
    rep = schur_square_structure(S, 4)
    assert rep.square.case == "n=2k" and rep.ok


@pytest.mark.parametrize("q", [11, 13])
def test_schur_sweep(q):
    rng = random.Random(q)
    F = build_field(q)
    for n in range(5, 11):
        for k in range(3, n - 1):
            S = EvaluationSet(F, rng.sample(range(q), n))
            rep = schur_square_structure(S, k, distances=False)
            assert rep.ok, (n, k, rep)


def test_nongrs_examples():
    F16 = build_field(2, 4)
    S = EvaluationSet(F16, [F16.power(e) for e in (1, 3, 5, 8, 9, 11, 13)])
    ev = nongrs_verdict(S, None, 5)
    assert (ev.regime, ev.measured, ev.fired) == (LARGE_K, 1, True)
    F11 = build_field(11)
    S = EvaluationSet(F11, range(1, 9))
    ev = nongrs_verdict(S, None, 3)
    assert (ev.regime, ev.measured, ev.threshold, ev.fired) == (SMALL_K, 6, 5, True)
    control = schur_evidence(grs(EvaluationSet(F11, range(9)), None, 3))
    assert (control.measured, control.fired) == (5, False)


def test_nongrs_never_fails_and_controls_never_fire():
    rng = random.Random(7)
    for q in (11, 13, 16):
        F = build_field(2, 4) if q == 16 else build_field(q)
        for _ in range(40):
            n = rng.randrange(5, q + 1)
            k = rng.randrange(3, n - 1)
            S = EvaluationSet(F, rng.sample(range(q), n))
            v = [rng.randrange(1, q) for _ in range(n)]
            assert nongrs_verdict(S, v, k).fired
            if 2 * k < n + 2:
                assert not schur_evidence(grs(S, v, k)).fired
                assert not schur_evidence(egrs(S, v, k)).fired


def test_certificate_f8_example():
    F = build_field(2, 3)
    S = EvaluationSet(F, [F.power(e) for e in (0, 1, 2, 3, 4, 6)])
    asd = asd_char2(S, 3)
    cert = so_certificate(S, asd.scaling, 3)
    assert cert.g.coeffs == (F.power(2),)
    assert all(F.mul(x, x) == F.mul(F.power(2), u) for x, u in zip(asd.scaling, S.u))


def test_no_certificate_at_half_length():
    rng = random.Random(3)
    for q in (7, 8, 9, 11, 13):
        F = build_field(2, 3) if q == 8 else build_field(3, 2) if q == 9 else build_field(q)
        for _ in range(30):
            n = rng.choice([m for m in range(5, q + 1) if m % 2 == 1])
            k = (n + 1) // 2
            if k > n - 2:
                continue
            S, v = random_so_instance(rng, F, n, k, positive=True)
            rep = so_check(S, v, k)
            assert rep.certificate is None and not rep.ggt_zero


def test_certificate_iff_self_orthogonal():
    rng = random.Random(11)
    positives = 0
    for pm in [(7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)]:
        F = build_field(*pm)
        for i in range(80):
            n = rng.randrange(6, min(F.q, 10) + 1)
            k = rng.randrange(3, max(4, n // 2 + 1))
            if k > n - 2:
                continue
            S, v = random_so_instance(rng, F, n, k, positive=i % 2 == 0)
            rep = so_check(S, v, k)
            assert (rep.certificate is not None) == rep.ggt_zero
            positives += rep.ggt_zero
            if rep.certificate is not None:
                g = rep.certificate.g
                assert all(F.mul(x, x) == F.mul(u, g(a)) for x, u, a in zip(v, S.u, S.elements))
    assert positives > 20


def test_scaling_from_certificate_rejects_bad_boundary():
    F = build_field(7)
    S = EvaluationSet(F, range(1, 7))  # sums to 0, so g_0 * sum(a) = -1 is impossible
    assert S.sigma == 0
    for c in range(7):
        assert scaling_from_certificate(S, 3, Polynomial(F, [c])) is None
    T = EvaluationSet(F, range(6))
    g0 = F.div(F.neg(1), T.sigma)
    v = scaling_from_certificate(T, 3, Polynomial(F, [g0]))
    if v is not None:
        assert ck_infty(T, v, 3).is_self_orthogonal()
    assert scaling_from_certificate(T, 3, Polynomial(F, [g0, 1])) is None  # degree too high


def test_classify_ck_examples():
    F16 = build_field(2, 4)
    S = EvaluationSet(F16, [F16.power(e) for e in (1, 3, 5, 8, 9, 11, 13)])
    r = classify_ck(S, None, 5, cross_check=True)
    assert r.code_class.kind == MDS and r.witness is None
    assert r.freeness["zero_sum_subsets"] == 0
    F9 = build_field(3, 2)
    r = classify_ck(EvaluationSet.nonzero(F9), None, 4, cross_check=True)
    assert r.code_class.kind == NMDS
    assert len(r.witness) == 4 and F9.total(r.witness) == 0
    first = next(c for c in combinations(range(1, 9), 4) if F9.total(c) == 0)
    assert r.witness == first


def test_classify_ck_agrees_with_distances():
    rng = random.Random(5)
    for pm in [(7, 1), (2, 3), (3, 2), (11, 1), (13, 1)]:
        F = build_field(*pm)
        for _ in range(25):
            n = rng.randrange(5, F.q + 1)
            k = rng.randrange(3, n - 1)
            S = EvaluationSet(F, rng.sample(range(F.q), n))
            v = [rng.randrange(1, F.q) for _ in range(n)]
            r = classify_ck(S, v, k, cross_check=True)
            direct = classify(ck_infty(S, v, k))
            assert direct.kind in (MDS, NMDS)
            assert direct.kind == r.code_class.kind
