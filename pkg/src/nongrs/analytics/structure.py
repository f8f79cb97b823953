"""Schur squares, non-GRS evidence, self-orthogonality and MDS/NMDS verdicts
for C_k(S, v, inf)."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from ..code import (DEFAULT_MAX_ENUM, DEFAULT_MAX_SUBSETS, MDS, NMDS, CodeClass, LinearCode,
                    classify, dual, has_unit_vector, min_distance, schur_square)
from ..constructions import (EvaluationSet, Polynomial, ScalingVector, as_scaling,
                             check_ck_window, ck_generator, ck_infty)
from ..errors import BudgetExceeded
from ..matrix import Matrix, power_rows, solve
from .subsets import subset_sum_bruteforce, zero_sum_witness

SMALL_K, LARGE_K = "small-k", "large-k"


# -- Schur squares -----------------------------------------------------------


@dataclass(frozen=True)
class SchurSide:
    case: str
    dimension: int
    predicted_dimension: int
    matches: bool
    distance: int | None = None
    distance_method: str | None = None

    def to_json(self) -> dict:
        return {"case": self.case, "dimension": self.dimension,
                "predicted_dimension": self.predicted_dimension, "matches": self.matches,
                "distance": self.distance, "distance_method": self.distance_method}


@dataclass(frozen=True)
class SchurReport:
    n: int
    k: int
    square: SchurSide
    dual_square: SchurSide
    dual_unit_vector: int | None

    @property
    def ok(self) -> bool:
        return self.square.matches and self.dual_square.matches

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "square": self.square.to_json(),
                "dual_square": self.dual_square.to_json(),
                "dual_unit_vector": self.dual_unit_vector, "ok": self.ok}


def _full_space(F, N: int) -> LinearCode:
    return LinearCode(Matrix.identity(F, N), check=False)


def predicted_square(S: EvaluationSet, k: int) -> tuple[str, LinearCode]:
    """Expected C^2 for v = 1."""
    F, n = S.field, S.n
    if 2 * k <= n:
        # n = 2k gives rows a^0..a^{2k-2} and (a^{2k}, 1), the same shape
        case = "2k<n" if 2 * k < n else "n=2k"
        return case, LinearCode.from_rows(F, ck_generator(S, None, 2 * k).entries, n + 1)
    return "2k>=n+1", _full_space(F, n + 1)


def predicted_dual_square(S: EvaluationSet, k: int) -> tuple[str, LinearCode]:
    """Expected (C^perp)^2 for v = 1."""
    F, n = S.field, S.n
    if 2 * k <= n + 1:
        return "2k<=n+1", _full_space(F, n + 1)
    u2 = [F.mul(x, x) for x in S.u]
    body = power_rows(F, S.elements, range(2 * n - 2 * k + 1), u2)
    rows = np.hstack([body, np.zeros((body.shape[0], 1), dtype=np.int64)])
    unit = np.zeros((1, n + 1), dtype=np.int64)
    unit[0, n] = 1
    return "2k>n+1", LinearCode.from_rows(F, np.vstack([unit, rows]), n + 1)


def _side(case, actual: LinearCode, expected: LinearCode, distances: bool,
          max_enum: int, max_subsets: int) -> SchurSide:
    d = how = None
    if distances:
        try:
            d, how = min_distance(actual, "auto", max_enum, max_subsets)
        except BudgetExceeded:
            pass
    return SchurSide(case, actual.dimension, expected.dimension, actual.same_code(expected),
                     d, how)


def schur_square_structure(S: EvaluationSet, k: int, distances: bool = True,
                           max_enum: int = DEFAULT_MAX_ENUM,
                           max_subsets: int = DEFAULT_MAX_SUBSETS) -> SchurReport:
    """Compare C^2 and (C^perp)^2 of C_k(S, 1, inf) with their predicted row spaces."""
    check_ck_window(S.n, k, S.field.q)
    code = ck_infty(S, None, k)
    sq = schur_square(code)
    dsq = schur_square(dual(code))
    case, want = predicted_square(S, k)
    dcase, dwant = predicted_dual_square(S, k)
    return SchurReport(S.n, k,
                       _side(case, sq, want, distances, max_enum, max_subsets),
                       _side(dcase, dsq, dwant, distances, max_enum, max_subsets),
                       has_unit_vector(dsq))


# -- non-GRS evidence ------------------------------------------------------------


@dataclass(frozen=True)
class NonGrsEvidence:
    """A Schur-square measurement that no GRS code of these parameters attains.

    ``small-k`` compares dim(C^2) against 2k - 1; ``large-k`` compares
    d((C^perp)^2) against 2.  ``fired`` is True when the measurement rules
    out GRS.
    """

    regime: str
    measured: int
    threshold: int
    fired: bool
    unit_vector: int | None = None

    def to_json(self) -> dict:
        quantity = "dim(C^2)" if self.regime == SMALL_K else "d((C^perp)^2)"
        return {"regime": self.regime, "quantity": quantity, "measured": self.measured,
                "threshold": self.threshold, "non_grs": self.fired,
                "unit_vector": self.unit_vector, "method": "schur-square rank"
                if self.regime == SMALL_K else "unit-vector membership"}


def schur_evidence(code: LinearCode) -> NonGrsEvidence:
    """Measure the Schur-square invariant appropriate to the code's rate."""
    N, k = code.length, code.dimension
    if 2 * k < N:
        dim = schur_square(code).dimension
        return NonGrsEvidence(SMALL_K, dim, 2 * k - 1, dim > 2 * k - 1)
    dsq = schur_square(dual(code))
    j = has_unit_vector(dsq)
    # distance 1 is certified by the unit vector; otherwise only d >= 2 is known
    return NonGrsEvidence(LARGE_K, 1 if j is not None else 2, 2, j is not None, j)


def nongrs_verdict(S: EvaluationSet, v, k: int) -> NonGrsEvidence:
    check_ck_window(S.n, k, S.field.q)
    return schur_evidence(ck_infty(S, v, k))


# -- self-orthogonality ----------------------------------------------------------


@dataclass(frozen=True)
class SelfOrthogonalityCertificate:
    """g with deg g <= n - 2k, v_i^2 = u_i g(a_i), and
    g_{n-2k-1} + g_{n-2k} * sum(a) = -1."""

    g: Polynomial
    degree_bound: int

    def to_json(self) -> dict:
        return {"g": list(self.g.coeffs), "degree_bound": self.degree_bound}


def _certificate(S: EvaluationSet, v, k: int) -> SelfOrthogonalityCertificate | None:
    F, n = S.field, S.n
    top = n - 2 * k
    if top < 0:
        return None
    v = as_scaling(S, v)
    # unknowns g_0..g_top; one row per coordinate plus the boundary row
    rows = power_rows(F, S.elements, range(top + 1), S.u).T
    boundary = np.zeros((1, top + 1), dtype=np.int64)
    boundary[0, top] = S.sigma
    if top >= 1:
        boundary[0, top - 1] = 1
    A = Matrix(F, np.vstack([rows, boundary]))
    rhs = [F.mul(x, x) for x in v.values] + [F.neg(1)]
    g = solve(A, rhs)
    if g is None:
        return None
    return SelfOrthogonalityCertificate(Polynomial(F, g), top)


@dataclass(frozen=True)
class SelfOrthogonalityReport:
    certificate: SelfOrthogonalityCertificate | None
    ggt_zero: bool

    def to_json(self) -> dict:
        cert = None if self.certificate is None else self.certificate.to_json()
        return {"certificate": cert, "ggt_zero": self.ggt_zero}


def so_check(S: EvaluationSet, v, k: int) -> SelfOrthogonalityReport:
    """Certificate search together with the direct G G^T test; they must agree."""
    check_ck_window(S.n, k, S.field.q)
    cert = _certificate(S, v, k)
    ggt = ck_infty(S, v, k).is_self_orthogonal()
    if (cert is not None) != ggt:
        raise AssertionError(f"certificate ({cert is not None}) disagrees with G G^T = 0 ({ggt})")
    return SelfOrthogonalityReport(cert, ggt)


def so_certificate(S: EvaluationSet, v, k: int) -> SelfOrthogonalityCertificate | None:
    return so_check(S, v, k).certificate


def scaling_from_certificate(S: EvaluationSet, k: int, g: Polynomial) -> ScalingVector | None:
    """v with v_i^2 = u_i g(a_i), or None when g breaks the boundary condition
    or some u_i g(a_i) is zero or a non-square."""
    F, n = S.field, S.n
    top = n - 2 * k
    if top < 0 or g.degree > top:
        return None
    if F.add(g.coefficient(top - 1), F.mul(g.coefficient(top), S.sigma)) != F.neg(1):
        return None
    roots = [F.sqrt(F.mul(u, g(a))) for u, a in zip(S.u, S.elements)]
    if any(r is None or r == 0 for r in roots):
        return None
    return ScalingVector(F, roots)


# -- MDS / NMDS verdict ---------------------------------------------------------------


@dataclass(frozen=True)
class CkClassification:
    code_class: CodeClass
    witness: tuple[int, ...] | None
    freeness: dict | None
    cross_check: CodeClass | None = None

    def to_json(self) -> dict:
        out = {"classification": self.code_class.to_json(),
               "witness": None if self.witness is None else list(self.witness),
               "freeness_certificate": self.freeness}
        if self.cross_check is not None:
            out["cross_check"] = self.cross_check.to_json()
        return out


def classify_ck(S: EvaluationSet, v, k: int, cross_check: bool = False,
                max_enum: int = DEFAULT_MAX_ENUM,
                max_subsets: int = DEFAULT_MAX_SUBSETS) -> CkClassification:
    """MDS exactly when no k-subset of S sums to zero, NMDS otherwise.

    The witness is the first zero-sum k-subset in the order of S.  For MDS
    the certificate is an exact count of zero-sum k-subsets equal to 0.
    With ``cross_check`` the code's distances are also computed directly and
    must agree.
    """
    F, n = S.field, S.n
    check_ck_window(n, k, F.q)
    N = n + 1
    witness = zero_sum_witness(S, k, max_subsets)
    if witness is None:
        count = subset_sum_bruteforce(S, k, 0, max_subsets=max_subsets)
        if count.count:  # pragma: no cover - two independent searches disagree
            raise AssertionError("witness search and subset count disagree")
        freeness = {"zero_sum_subsets": 0, "subsets": str(comb(n, k)), "method": count.method}
        verdict = CodeClass(MDS, N, k, N - k + 1, k + 1, "zero-sum criterion",
                            "zero-sum criterion")
    else:
        freeness = None
        verdict = CodeClass(NMDS, N, k, N - k, k, "zero-sum criterion", "zero-sum criterion")
    direct = None
    if cross_check:
        direct = classify(ck_infty(S, v, k), "auto", max_enum, max_subsets)
        if (direct.kind, direct.d, direct.d_dual) != (verdict.kind, verdict.d, verdict.d_dual):
            raise AssertionError(f"zero-sum verdict {verdict} disagrees with {direct}")
    return CkClassification(verdict, witness, freeness, direct)


__all__ = [
    "CkClassification", "LARGE_K", "NonGrsEvidence", "SMALL_K", "SchurReport", "SchurSide",
    "SelfOrthogonalityCertificate", "SelfOrthogonalityReport", "classify_ck",
    "scaling_from_certificate",
    "nongrs_verdict", "predicted_dual_square", "predicted_square", "schur_evidence",
    "schur_square_structure", "so_certificate", "so_check",
]
