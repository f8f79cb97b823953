"""Linear codes over F_q: duals, distances, weight distributions, Schur products."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Sequence

import numpy as np

from .errors import BudgetExceeded, ValidationError
from .field import FieldSpec
from .matrix import (Matrix, det, kernel_basis, rank, row_basis,
                     row_space_contains, same_row_space)

DEFAULT_MAX_ENUM = 1 << 27
DEFAULT_MAX_SUBSETS = 10_000_000
# below this many codewords, enumeration beats the column-dependence search
AUTO_ENUM = 1 << 20

MDS, NMDS, AMDS_ONLY, OTHER = "MDS", "NMDS", "AMDS-only", "Other"


@dataclass(frozen=True)
class WeightDistribution:
    """Exact counts A_0..A_N of codewords by Hamming weight."""

    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    @property
    def length(self) -> int:
        return len(self.counts) - 1

    def total(self) -> int:
        return sum(self.counts)

    def min_distance(self) -> int | None:
        for i, c in enumerate(self.counts[1:], start=1):
            if c:
                return i
        return None

    def enumerator(self) -> str:
        """Weight enumerator as ``1+48z^5+480z^6+...``."""
        terms = []
        for i, c in enumerate(self.counts):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                coef = "" if c == 1 else str(c)
                terms.append(f"{coef}z" + ("" if i == 1 else f"^{i}"))
        return "+".join(terms) or "0"

    def to_json(self) -> dict:
        return {"counts": [str(c) for c in self.counts], "enumerator": self.enumerator()}

    @classmethod
    def from_json(cls, data: dict) -> "WeightDistribution":
        return cls(tuple(int(c) for c in data["counts"]))


class LinearCode:
    """A linear [N, k] code given by a full-row-rank k x N generator matrix."""

    def __init__(self, generator: Matrix, check: bool = True):
        if check and rank(generator) != generator.rows:
            raise ValidationError(
                f"generator has rank {rank(generator)} < {generator.rows} rows")
        self.generator = generator

    @classmethod
    def from_rows(cls, field: FieldSpec, rows, length: int) -> "LinearCode":
        """The code spanned by ``rows`` (any spanning set, reduced to a basis)."""
        M = Matrix(field, np.asarray(rows, dtype=np.int64).reshape(-1, length), cols=length)
        return cls(row_basis(M), check=False)

    @property
    def field(self) -> FieldSpec:
        return self.generator.field

    @property
    def length(self) -> int:
        return self.generator.cols

    @property
    def dimension(self) -> int:
        return self.generator.rows

    def __repr__(self) -> str:
        return f"LinearCode([{self.length}, {self.dimension}]_{self.field.q})"

    def encode(self, message: Sequence[int]) -> list[int]:
        F = self.field
        if len(message) != self.dimension:
            raise ValidationError("message length must equal the dimension")
        acc = np.zeros(self.length, dtype=np.int64)
        for c, row in zip(message, self.generator.entries):
            if c:
                acc = F.add_v(acc, F.mul_v(row, c))
        return acc.tolist()

    def contains(self, word: Sequence[int]) -> bool:
        w = Matrix(self.field, [list(word)], cols=self.length)
        return row_space_contains(self.generator, w)

    def is_subcode_of(self, other: "LinearCode") -> bool:
        return row_space_contains(other.generator, self.generator)

    def same_code(self, other: "LinearCode") -> bool:
        return same_row_space(self.generator, other.generator)

    def parity_check(self) -> Matrix:
        return kernel_basis(self.generator)

    def is_self_orthogonal(self) -> bool:
        G = self.generator
        return (G @ G.T).is_zero()

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "length": self.length,
                "dimension": self.dimension, "generator": self.generator.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "LinearCode":
        field = FieldSpec.from_json(data["field"])
        G = Matrix.from_json(field, data["generator"])
        code = cls(G)
        if "length" in data and int(data["length"]) != code.length:
            raise ValidationError("length does not match the generator")
        if "dimension" in data and int(data["dimension"]) != code.dimension:
            raise ValidationError("dimension does not match the generator rank")
        return code


def dual(code: LinearCode) -> LinearCode:
    """The Euclidean dual code."""
    return LinearCode(code.parity_check(), check=False)


# -- exhaustive enumeration ------------------------------------------------


def _check_enum_budget(code: LinearCode, budget: int) -> None:
    size = code.field.q ** code.dimension
    if size > budget:
        raise BudgetExceeded("max-enum", size, budget)


def weight_distribution_exhaustive(code: LinearCode,
                                   budget: int = DEFAULT_MAX_ENUM) -> WeightDistribution:
    """Count codewords by weight, visiting all q^k messages."""
    _check_enum_budget(code, budget)
    F, N, k = code.field, code.length, code.dimension
    q = F.q
    counts = np.zeros(N + 1, dtype=np.int64)
    if k == 0:
        counts[0] = 1
        return WeightDistribution(tuple(counts.tolist()))
    G = code.generator.entries
    # the last `inner` rows are enumerated as one vectorised block
    cap = max(q, (1 << 22) // max(N, 1))
    inner = 1
    while inner < k and q ** (inner + 1) <= cap:
        inner += 1
    scalars = np.arange(q, dtype=np.int64)
    block = np.zeros((1, N), dtype=np.int64)
    for g in G[k - inner:]:
        block = F.add_v(block[:, None, :], F.mul_v(scalars[None, :, None], g[None, None, :]))
        block = block.reshape(-1, N)
    multiples = [F.mul_v(scalars[:, None], g[None, :]) for g in G[:k - inner]]
    for msg in product(range(q), repeat=k - inner):
        offset = np.zeros(N, dtype=np.int64)
        for c, mult in zip(msg, multiples):
            if c:
                offset = F.add_v(offset, mult[c])
        # block + offset is zero exactly where block == -offset
        weights = (block != F.neg_v(offset)).sum(axis=1)
        counts += np.bincount(weights, minlength=N + 1)
    return WeightDistribution(tuple(int(c) for c in counts))


def min_distance_exhaustive(code: LinearCode, budget: int = DEFAULT_MAX_ENUM) -> int:
    """Minimum weight over all nonzero codewords (N + 1 for the zero code)."""
    d = weight_distribution_exhaustive(code, budget).min_distance()
    return code.length + 1 if d is None else d


# -- column dependence -----------------------------------------------------


def min_dependent_columns(M: Matrix, max_subsets: int = DEFAULT_MAX_SUBSETS) -> int:
    """Size of a smallest linearly dependent set of columns of ``M``.

    Returns ``cols + 1`` when all columns are independent.  Independent sets
    are grown depth-first; the residuals of the remaining columns modulo the
    current span are carried along, so each extension costs one rank-1 update.
    """
    F = M.field
    r, N = M.shape
    best = r + 1 if N >= r + 1 else N + 1
    if N == 0:
        return 1
    visited = 0

    def grow(R: np.ndarray, depth: int) -> None:
        nonlocal best, visited
        for t in range(R.shape[1]):
            col = R[:, t]
            nz = np.flatnonzero(col)
            if nz.size == 0:
                best = min(best, depth + 1)
                continue
            if depth + 2 >= best or t + 1 == R.shape[1]:
                continue
            visited += 1
            if visited > max_subsets:
                raise BudgetExceeded("max-subsets", visited, max_subsets)
            piv = int(nz[0])
            b = F.mul_v(col, F.inv(int(col[piv])))
            rest = R[:, t + 1:]
            rest = F.sub_v(rest, F.mul_v(b[:, None], rest[piv][None, :]))
            grow(rest, depth + 1)

    grow(M.entries.copy(), 0)
    return best


def min_distance_by_dependence(code: LinearCode,
                               max_subsets: int = DEFAULT_MAX_SUBSETS) -> int:
    """d(C) as the least number of linearly dependent parity-check columns."""
    return min_dependent_columns(code.parity_check(), max_subsets)


def dual_distance_by_dependence(code: LinearCode,
                                max_subsets: int = DEFAULT_MAX_SUBSETS) -> int:
    """d(C^perp) as the least number of linearly dependent generator columns."""
    return min_dependent_columns(code.generator, max_subsets)


def min_distance(code: LinearCode, method: str = "auto",
                 max_enum: int = DEFAULT_MAX_ENUM,
                 max_subsets: int = DEFAULT_MAX_SUBSETS) -> tuple[int, str]:
    """Minimum distance and the method tag that produced it."""
    return _distance(code, method, max_enum, max_subsets, dual_side=False)


def dual_distance(code: LinearCode, method: str = "auto",
                  max_enum: int = DEFAULT_MAX_ENUM,
                  max_subsets: int = DEFAULT_MAX_SUBSETS) -> tuple[int, str]:
    return _distance(code, method, max_enum, max_subsets, dual_side=True)


def _distance(code, method, max_enum, max_subsets, dual_side):
    q = code.field.q
    k = code.length - code.dimension if dual_side else code.dimension

    def exhaustive():
        target = dual(code) if dual_side else code
        return min_distance_exhaustive(target, max_enum), "exhaustive"

    def dependence():
        fn = dual_distance_by_dependence if dual_side else min_distance_by_dependence
        return fn(code, max_subsets), "dependence-search"

    if method == "exhaustive":
        return exhaustive()
    if method == "dependence":
        return dependence()
    if method != "auto":
        raise ValidationError(f"unknown distance method {method!r}")
    if q**k <= min(AUTO_ENUM, max_enum):
        return exhaustive()
    try:
        return dependence()
    except BudgetExceeded:
        if q**k <= max_enum:
            return exhaustive()
        raise


# -- Schur products and MDS tests ------------------------------------------


def schur_product(c1: LinearCode, c2: LinearCode) -> LinearCode:
    """The code spanned by coordinatewise products of basis rows."""
    if c1.field != c2.field:
        raise ValidationError("Schur product of codes over different fields")
    if c1.length != c2.length:
        raise ValidationError("Schur product of codes of different lengths")
    F = c1.field
    G1, G2 = c1.generator.entries, c2.generator.entries
    if c1 is c2 or np.array_equal(G1, G2):
        pairs = [(i, j) for i in range(len(G1)) for j in range(i, len(G1))]
    else:
        pairs = [(i, j) for i in range(len(G1)) for j in range(len(G2))]
    if not pairs:
        return LinearCode(Matrix(F, np.zeros((0, c1.length), dtype=np.int64)), check=False)
    rows = F.mul_v(G1[[i for i, _ in pairs]], G2[[j for _, j in pairs]])
    return LinearCode.from_rows(F, rows, c1.length)


def schur_square(code: LinearCode) -> LinearCode:
    return schur_product(code, code)


def mds_by_columns(code: LinearCode, max_subsets: int = DEFAULT_MAX_SUBSETS) -> bool:
    """True iff every k columns of the generator are linearly independent."""
    N, k = code.length, code.dimension
    n_sub = comb(N, k)
    if n_sub > max_subsets:
        raise BudgetExceeded("max-subsets", n_sub, max_subsets)
    G = code.generator
    return all(det(G.columns(idx)) != 0 for idx in combinations(range(N), k))


def has_unit_vector(code: LinearCode) -> int | None:
    """Index j with e_j in the code (so d = 1), or None."""
    F = code.field
    for j in range(code.length):
        e = np.zeros((1, code.length), dtype=np.int64)
        e[0, j] = 1
        if row_space_contains(code.generator, Matrix(F, e)):
            return j
    return None


# -- classification ----------------------------------------------------------


@dataclass(frozen=True)
class CodeClass:
    kind: str
    length: int
    dimension: int
    d: int
    d_dual: int
    method: str = ""
    method_dual: str = ""

    @property
    def is_mds(self) -> bool:
        return self.kind == MDS

    @property
    def is_nmds(self) -> bool:
        return self.kind == NMDS

    def to_json(self) -> dict:
        return {"class": self.kind, "length": self.length, "dimension": self.dimension,
                "d": self.d, "d_dual": self.d_dual,
                "method": self.method, "method_dual": self.method_dual}


def class_from_distances(N: int, k: int, d: int, d_dual: int) -> str:
    if d == N - k + 1:
        return MDS
    amds, dual_amds = d == N - k, d_dual == k
    if amds and dual_amds:
        return NMDS
    if amds or dual_amds:
        return AMDS_ONLY
    return OTHER


def classify(code: LinearCode, method: str = "auto",
             max_enum: int = DEFAULT_MAX_ENUM,
             max_subsets: int = DEFAULT_MAX_SUBSETS) -> CodeClass:
    """MDS / NMDS / AMDS-only / Other from both distances, computed eagerly."""
    N, k = code.length, code.dimension
    d, how = min_distance(code, method, max_enum, max_subsets)
    dd, how_dual = dual_distance(code, method, max_enum, max_subsets)
    if d > N - k + 1 or dd > k + 1:
        raise AssertionError(f"Singleton bound violated: d={d}, d_dual={dd} for [{N},{k}]")
    return CodeClass(class_from_distances(N, k, d, dd), N, k, d, dd, how, how_dual)


__all__ = [
    "AMDS_ONLY", "CodeClass", "DEFAULT_MAX_ENUM", "DEFAULT_MAX_SUBSETS", "LinearCode",
    "MDS", "NMDS", "OTHER", "WeightDistribution", "class_from_distances", "classify",
    "dual", "dual_distance", "dual_distance_by_dependence", "has_unit_vector",
    "mds_by_columns", "min_dependent_columns", "min_distance", "min_distance_by_dependence",
    "min_distance_exhaustive", "schur_product", "schur_square",
    "weight_distribution_exhaustive",
]
