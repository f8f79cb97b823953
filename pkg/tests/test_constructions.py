from __future__ import annotations

from itertools import combinations

import pytest

from nongrs.code import dual, min_distance_exhaustive
from nongrs.constructions import (EvaluationSet, Polynomial, ScalingVector, asd_char2, asd_subfield,
                                  ck_codeword, ck_dual_codeword, ck_generator, ck_infty,
                                  ck_infty_parity, ck_mu, egrs, grs)
from nongrs.errors import ValidationError
from nongrs.field import build_field
from nongrs.matrix import rank


def test_u_weights_small_example():
    F = build_field(5)
    S = EvaluationSet(F, [1, 2, 3])
    assert S.u == (3, 4, 3)
    assert S.sigma == 1
    assert [S.power_sum(ell) for ell in range(4)] == [0, 0, 1, S.sigma]


def test_u_weights_by_definition(rng):
    F = build_field(2, 4)
    a = rng.sample(range(16), 6)
    S = EvaluationSet(F, a)
    for i, ai in enumerate(a):
        prod = 1
        for j, aj in enumerate(a):
            if j != i:
                prod = F.mul(prod, F.sub(ai, aj))
        assert F.mul(prod, S.u[i]) == 1


@pytest.mark.parametrize("pm", [(5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (13, 1)])
def test_power_sums(pm, rng):
    F = build_field(*pm)
    for _ in range(200):
        n = rng.randrange(2, F.q + 1)
        S = EvaluationSet(F, rng.sample(range(F.q), n))
        for ell in range(n - 1):
            assert S.power_sum(ell) == 0
        assert S.power_sum(n - 1) == 1
        assert S.power_sum(n) == S.sigma


def test_set_validation():
    F = build_field(7)
    with pytest.raises(ValidationError, match="repeated"):
        EvaluationSet(F, [1, 2, 2])
    with pytest.raises(ValidationError):
        EvaluationSet(F, [])
    with pytest.raises(ValidationError):
        ScalingVector(F, [1, 0, 2])
    assert EvaluationSet.excluding(F, [0, 3]).elements == (1, 2, 4, 5, 6)


def test_polynomial_spaces():
    F = build_field(7)
    f = Polynomial(F, [1, 0, 0, 2, 0])
    assert f.degree == 3
    assert f.coefficient(-1) == 0 and f.coefficient(7) == 0
    assert f(2) == (1 + 2 * 8) % 7
    assert f.in_v(3) and not f.in_v(4) and f.in_span_below(4)


def test_grs_and_egrs_examples():
    F9 = build_field(3, 2)
    assert min_distance_exhaustive(grs(EvaluationSet.full(F9), None, 3)) == 7
    assert min_distance_exhaustive(grs(EvaluationSet.nonzero(F9), None, 3)) == 6
    F8 = build_field(2, 3)
    E = egrs(EvaluationSet.full(F8), None, 4)
    assert (E.length, E.dimension) == (9, 4)
    assert min_distance_exhaustive(E) == 6
    F5 = build_field(5)
    S = EvaluationSet(F5, [1, 2, 3, 4])
    E = egrs(S, None, 4)
    assert (E.length, E.dimension, min_distance_exhaustive(E)) == (5, 4, 2)
    R = grs(S, [1, 2, 3, 4], 1)
    assert R.generator.tolist() == [[1, 2, 3, 4]]


def test_ck_window():
    F = build_field(7)
    S = EvaluationSet(F, range(6))
    ck_infty(S, None, 3)
    ck_infty(S, None, 4)
    for k in (2, 5):
        with pytest.raises(ValidationError):
            ck_infty(S, None, k)
    with pytest.raises(ValidationError):
        ck_infty(EvaluationSet.full(F), None, 6)


def test_ck_generator_shape():
    F = build_field(7)
    S = EvaluationSet(F, [1, 2, 3, 4, 5])
    G = ck_generator(S, None, 3)
    assert G.tolist() == [
        [1, 1, 1, 1, 1, 0],
        [1, 2, 3, 4, 5, 0],
        [1, 1, 6, 1, 6, 1],  # a^3 mod 7
    ]


def test_examples_parameters():
    F16 = build_field(2, 4)
    S = EvaluationSet(F16, [F16.power(e) for e in (1, 3, 5, 8, 9, 11, 13)])
    C = ck_infty(S, None, 5)
    assert (C.length, C.dimension, min_distance_exhaustive(C)) == (8, 5, 4)
    F9 = build_field(3, 2)
    C = ck_infty(EvaluationSet.nonzero(F9), None, 4)
    assert (C.length, C.dimension, min_distance_exhaustive(C)) == (9, 4, 5)


@pytest.mark.parametrize("pm,k", [((3, 2), 4), ((7, 1), 3), ((2, 4), 5), ((11, 1), 6)])
def test_parity_check(pm, k, rng):
    F = build_field(*pm)
    S = EvaluationSet(F, rng.sample(range(F.q), min(F.q, 9)))
    v = [rng.randrange(1, F.q) for _ in range(S.n)]
    C = ck_infty(S, v, k)
    H = ck_infty_parity(S, v, k)
    assert H.shape == (S.n - k + 1, S.n + 1)
    assert rank(H) == S.n - k + 1
    assert (C.generator @ H.T).is_zero()
    assert dual(C).same_code(type(C)(H))
    # explicit codewords on both sides
    for _ in range(5):
        g = Polynomial(F, [rng.randrange(F.q) for _ in range(S.n - k + 1)])
        assert dual(C).contains(ck_dual_codeword(S, v, k, g))
        coeffs = [rng.randrange(F.q) for _ in range(k + 1)]
        coeffs[k - 1] = 0
        assert C.contains(ck_codeword(S, v, k, Polynomial(F, coeffs)))


def test_ck_inside_egrs(rng):
    F = build_field(13)
    for _ in range(10):
        n = rng.randrange(5, 13)
        k = rng.randrange(3, n - 1)
        S = EvaluationSet(F, rng.sample(range(13), n))
        v = [rng.randrange(1, 13) for _ in range(n)]
        assert ck_infty(S, v, k).is_subcode_of(egrs(S, v, k + 1))


def test_ck_mu():
    F = build_field(13)
    S = EvaluationSet.excluding(F, [4, 6, 10, 11])
    assert ck_mu(S, None, 4, 4).same_code(ck_infty(S, None, 4))
    for mu in (0, 5):
        with pytest.raises(ValidationError):
            ck_mu(S, None, 4, mu)
    C = ck_mu(S, None, 4, 1)
    assert (C.length, C.dimension) == (10, 4)


def test_asd_char2_example():
    F = build_field(2, 3)
    S = EvaluationSet(F, [F.power(e) for e in (0, 1, 2, 3, 4, 6)])
    asd = asd_char2(S, 3)
    assert [F.log(x) for x in asd.scaling] == [3, 1, 0, 0, 3, 1]
    assert asd.lam == F.power(2)
    C = asd.code
    assert (C.generator @ C.generator.T).is_zero()
    assert C.is_subcode_of(dual(C))
    assert 2 * C.dimension + 1 == C.length


def test_asd_char2_errors():
    F = build_field(2, 3)
    with pytest.raises(ValidationError):
        asd_char2(EvaluationSet(F, range(1, 7)), 4)  # |S| != 2k
    with pytest.raises(ValidationError):
        asd_char2(EvaluationSet(build_field(7), range(6)), 3)
    F16 = build_field(2, 4)
    zero_sum = next(c for c in combinations(range(1, 16), 6) if F16.total(c) == 0)
    with pytest.raises(ValidationError, match="sum to zero"):
        asd_char2(EvaluationSet(F16, zero_sum), 3)


def test_asd_subfield_random(rng):
    # S inside F_9 embedded in F_81; m / r = 2
    F = build_field(3, 4)
    sub = [a for a in F.subfield_elements(2)]
    done = 0
    while done < 5:
        S = EvaluationSet(F, rng.sample(sub, 6))
        if S.sigma == 0:
            continue
        asd = asd_subfield(S, 3, 2)
        C = asd.code
        assert C.is_self_orthogonal() and C.is_subcode_of(dual(C))
        lam = asd.lam
        assert all(F.mul(x, x) == F.mul(lam, u) for x, u in zip(asd.scaling, S.u))
        done += 1


def test_asd_subfield_errors():
    F = build_field(3, 4)
    outside = [a for a in range(1, F.q) if not F.in_subfield(a, 2)][:6]
    with pytest.raises(ValidationError, match="subfield"):
        asd_subfield(EvaluationSet(F, outside), 3, 2)
    with pytest.raises(ValidationError):
        asd_subfield(EvaluationSet(F, F.subfield_elements(2)[:6]), 3, 3)
    sub = F.subfield_elements(2)
    S = EvaluationSet(F, next(c for c in combinations(sub, 6) if F.total(c) != 0))
    good = asd_subfield(S, 3, 2).scaling.values
    bad = list(good)
    bad[0] = F.mul(bad[0], F.primitive_element)
    with pytest.raises(ValidationError, match="positions"):
        asd_subfield(S, 3, 2, bad)
    # the other root is an equally valid choice
    flipped = [F.neg(good[0])] + list(good[1:])
    assert asd_subfield(S, 3, 2, flipped).code.is_self_orthogonal()


def test_scaling_length_mismatch():
    F = build_field(7)
    S = EvaluationSet(F, range(6))
    with pytest.raises(ValidationError):
        ck_infty(S, [1, 2], 3)
    with pytest.raises(ValidationError):
        ck_infty(S, [1] * 7, 3)
