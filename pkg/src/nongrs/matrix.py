"""Dense matrices over a :class:`~nongrs.field.FieldSpec` with exact elimination."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import ValidationError
from .field import FieldSpec


class Matrix:
    """An immutable ``rows x cols`` matrix of field-element encodings."""

    __slots__ = ("field", "entries")

    def __init__(self, field: FieldSpec, entries, cols: int | None = None):
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim != 2 and arr.size == 0:
            arr = arr.reshape(0, cols or 0)
        if arr.ndim != 2:
            raise ValidationError(f"matrix entries must be 2-dimensional, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValidationError(f"matrix entries must be encodings in [0, {field.q})")
        arr.flags.writeable = False
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "entries", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        return cls(field, np.eye(n, dtype=np.int64))

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Matrix) and self.field == other.field
                and self.shape == other.shape and bool(np.array_equal(self.entries, other.entries)))

    __hash__ = None

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols} over GF({self.field.q}), {self.tolist()})"

    def __getitem__(self, idx):
        return self.entries[idx]

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "entries": self.entries.reshape(-1).tolist()}

    @classmethod
    def from_json(cls, field: FieldSpec, data: dict) -> "Matrix":
        r, c = int(data["rows"]), int(data["cols"])
        flat = list(data["entries"])
        if len(flat) != r * c:
            raise ValidationError(f"expected {r * c} entries, got {len(flat)}")
        return cls(field, np.array(flat, dtype=np.int64).reshape(r, c), cols=c)

    @property
    def T(self) -> "Matrix":
        return transpose(self)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return matmul(self, other)

    def columns(self, idx: Sequence[int]) -> "Matrix":
        return Matrix(self.field, self.entries[:, list(idx)], cols=len(idx))

    def is_zero(self) -> bool:
        return not self.entries.any()


def transpose(M: Matrix) -> Matrix:
    return Matrix(M.field, M.entries.T.copy(), cols=M.rows)


def stack(*mats: Matrix) -> Matrix:
    """Stack matrices vertically."""
    if not mats:
        raise ValidationError("nothing to stack")
    field, cols = mats[0].field, mats[0].cols
    for M in mats:
        if M.field != field or M.cols != cols:
            raise ValidationError("stack: matrices must share field and column count")
    return Matrix(field, np.vstack([M.entries for M in mats]), cols=cols)


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if A.field != B.field:
        raise ValidationError("matmul: matrices over different fields")
    if A.cols != B.rows:
        raise ValidationError(f"matmul: shapes {A.shape} and {B.shape} do not conform")
    F = A.field
    if F.m == 1:
        return Matrix(F, (A.entries @ B.entries) % F.p, cols=B.cols)
    acc = np.zeros((A.rows, B.cols), dtype=np.int64)
    for t in range(A.cols):
        acc = F.add_v(acc, F.mul_v(A.entries[:, t, None], B.entries[None, t, :]))
    return Matrix(F, acc, cols=B.cols)


def _eliminate(F: FieldSpec, A: np.ndarray, ncols: int | None = None):
    """Reduce ``A`` in place to reduced row echelon form.

    Pivots are searched in the first ``ncols`` columns only.  Returns the
    pivot columns and the product of the raw pivots times the sign of the row
    permutation (the determinant, for square full-rank input).
    """
    r, c = A.shape
    ncols = c if ncols is None else ncols
    pivots: list[int] = []
    scale = 1
    row = 0
    for col in range(ncols):
        if row == r:
            break
        nz = np.flatnonzero(A[row:, col])
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            A[[row, piv]] = A[[piv, row]]
            scale = F.neg(scale)
        pv = int(A[row, col])
        scale = F.mul(scale, pv)
        A[row] = F.mul_v(A[row], F.inv(pv))
        factors = A[:, col].copy()
        factors[row] = 0
        mask = factors != 0
        if mask.any():
            A[mask] = F.sub_v(A[mask], F.mul_v(factors[mask][:, None], A[row][None, :]))
        pivots.append(col)
        row += 1
    return pivots, scale


def rref(M: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (zero rows kept) and pivot columns."""
    A = M.entries.copy()
    pivots, _ = _eliminate(M.field, A)
    return Matrix(M.field, A, cols=M.cols), pivots


def row_basis(M: Matrix) -> Matrix:
    """The nonzero rows of the reduced echelon form of ``M``."""
    R, pivots = rref(M)
    return Matrix(M.field, R.entries[:len(pivots)], cols=M.cols)


def rank(M: Matrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    return len(_eliminate(M.field, M.entries.copy())[0])


def kernel_basis(M: Matrix) -> Matrix:
    """Rows spanning {x : M x^T = 0}, in reduced echelon form."""
    F = M.field
    R, pivots = rref(M)
    free = [j for j in range(M.cols) if j not in set(pivots)]
    basis = np.zeros((len(free), M.cols), dtype=np.int64)
    for b, f in enumerate(free):
        basis[b, f] = 1
        for i, pc in enumerate(pivots):
            basis[b, pc] = F.neg(int(R.entries[i, f]))
    out = Matrix(F, basis, cols=M.cols)
    return row_basis(out) if len(free) else out


def det(M: Matrix) -> int:
    if M.rows != M.cols:
        raise ValidationError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    if M.rows == 0:
        return 1
    pivots, scale = _eliminate(M.field, M.entries.copy())
    return scale if len(pivots) == M.rows else 0


def solve(M: Matrix, b: Sequence[int]) -> list[int] | None:
    """Some x with M x^T = b, or None when the system is inconsistent."""
    F = M.field
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1)
    if b.shape[0] != M.rows:
        raise ValidationError("solve: right-hand side has the wrong length")
    A = np.hstack([M.entries, b])
    pivots, _ = _eliminate(F, A, ncols=M.cols)
    if A[len(pivots):, -1].any():
        return None
    x = [0] * M.cols
    for i, pc in enumerate(pivots):
        x[pc] = int(A[i, -1])
    return x


def row_space_contains(A: Matrix, B: Matrix) -> bool:
    """True iff every row of ``B`` lies in the row space of ``A``."""
    if B.rows == 0:
        return True
    return rank(stack(A, B)) == rank(A)


def same_row_space(A: Matrix, B: Matrix) -> bool:
    ra, rb = rank(A), rank(B)
    return ra == rb and rank(stack(A, B)) == ra


def skipped_row_det_rhs(field: FieldSpec, a: Sequence[int]) -> int:
    """(sum a_s) * prod_{i<j} (a_j - a_i): the determinant of the matrix with
    rows 1, a, ..., a^{n-2}, a^n."""
    a = [int(x) for x in a]
    if len(a) < 3:
        raise ValidationError("need at least 3 nodes")
    if len(set(a)) != len(a):
        raise ValidationError("nodes must be pairwise distinct")
    out = field.total(a)
    for i, j in combinations(range(len(a)), 2):
        out = field.mul(out, field.sub(a[j], a[i]))
    return out


def power_rows(field: FieldSpec, a: Sequence[int], exponents: Iterable[int],
               scale: Sequence[int] | None = None) -> np.ndarray:
    """Array whose rows are (scale_i * a_i^e)_i for each exponent e."""
    a = list(a)
    scale = [1] * len(a) if scale is None else list(scale)
    return np.array([[field.mul(s, field.pow(x, e)) for x, s in zip(a, scale)]
                     for e in exponents], dtype=np.int64).reshape(-1, len(a))
