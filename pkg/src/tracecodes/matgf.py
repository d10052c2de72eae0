"""Dense matrices over a FieldSpec.

Entries are element codes in an int64 numpy array.  Matrices are treated as
immutable: every operation returns a fresh ``GFMatrix``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, FieldMismatch
from .gf import FieldSpec


@dataclass(frozen=True, eq=False)
class GFMatrix:
    field: FieldSpec
    data: np.ndarray

    def __post_init__(self):
        data = np.array(self.data, dtype=np.int64, copy=True)
        if data.ndim == 1:
            data = data.reshape(1, -1) if data.size else data.reshape(0, 0)
        if data.ndim != 2:
            raise DimensionMismatch("a matrix needs two dimensions")
        if data.size and (data.min() < 0 or data.max() >= self.field.order):
            raise ValueError(f"entries outside {self.field}")
        data.flags.writeable = False
        object.__setattr__(self, "data", data)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GFMatrix)
            and self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __repr__(self) -> str:
        return f"GFMatrix({self.field}, {self.rows}x{self.cols})"

    @property
    def T(self) -> GFMatrix:
        return GFMatrix(self.field, self.data.T)

    def row(self, i: int) -> np.ndarray:
        return self.data[i]

    def is_zero(self) -> bool:
        return not np.any(self.data)


def zeros(field: FieldSpec, rows: int, cols: int) -> GFMatrix:
    return GFMatrix(field, np.zeros((rows, cols), dtype=np.int64))


def identity(field: FieldSpec, n: int) -> GFMatrix:
    return GFMatrix(field, np.eye(n, dtype=np.int64))


def random_matrix(field: FieldSpec, rows: int, cols: int, rng: np.random.Generator) -> GFMatrix:
    return GFMatrix(field, rng.integers(0, field.order, size=(rows, cols)))


def _rref_array(field: FieldSpec, a: np.ndarray, col_order=None) -> tuple[np.ndarray, list[int]]:
    R = np.array(a, dtype=np.int64, copy=True)
    nrows, ncols = R.shape
    pivots: list[int] = []
    r = 0
    cols = range(ncols) if col_order is None else col_order
    for c in cols:
        if r == nrows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        lead = R[r, c]
        if lead != 1:
            R[r] = field.mul(R[r], field.s_inv(int(lead)))
        factors = R[:, c].copy()
        factors[r] = 0
        idx = np.flatnonzero(factors)
        if idx.size:
            R[idx] = field.sub(R[idx], field.mul(factors[idx, None], R[r][None, :]))
        pivots.append(int(c))
        r += 1
    return R, pivots


def rref(M: GFMatrix, col_order=None) -> tuple[GFMatrix, list[int]]:
    """Reduced row echelon form and pivot columns (first nonzero pivot selection).

    ``col_order`` optionally fixes the order in which columns are tried as
    pivots; the result is then reduced with respect to that order.
    """
    R, piv = _rref_array(M.field, M.data, col_order)
    return GFMatrix(M.field, R), piv


def rank(M: GFMatrix) -> int:
    return len(rref(M)[1])


def row_basis(M: GFMatrix) -> GFMatrix:
    """Nonzero rows of the RREF."""
    R, piv = rref(M)
    return GFMatrix(M.field, R.data[: len(piv)].reshape(len(piv), M.cols))


def kernel(M: GFMatrix) -> GFMatrix:
    """Rows spanning {v : M v^T = 0}."""
    f = M.field
    R, piv = rref(M)
    free = [c for c in range(M.cols) if c not in set(piv)]
    K = np.zeros((len(free), M.cols), dtype=np.int64)
    for i, c in enumerate(free):
        K[i, c] = 1
        if piv:
            K[i, piv] = f.neg(R.data[: len(piv), c])
    return GFMatrix(f, K)


def _check_field(A: GFMatrix, B: GFMatrix) -> None:
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")


def matmul(A: GFMatrix, B: GFMatrix) -> GFMatrix:
    _check_field(A, B)
    if A.cols != B.rows:
        raise DimensionMismatch(f"{A.shape} @ {B.shape}")
    f = A.field
    out = np.zeros((A.rows, B.cols), dtype=np.int64)
    for k in range(A.cols):
        a = A.data[:, k]
        if not a.any():
            continue
        out = f.add(out, f.mul(a[:, None], B.data[k][None, :]))
    return GFMatrix(f, out)


def conj_transpose(M: GFMatrix, e: int) -> GFMatrix:
    """Transpose with every entry raised to p**e."""
    return GFMatrix(M.field, M.field.frobenius(M.data.T, e))


def frobenius_matrix(M: GFMatrix, e: int) -> GFMatrix:
    return GFMatrix(M.field, M.field.frobenius(M.data, e))


def vstack(*mats: GFMatrix) -> GFMatrix:
    f = mats[0].field
    for m in mats[1:]:
        _check_field(mats[0], m)
    cols = {m.cols for m in mats if m.rows}
    if len(cols) > 1:
        raise DimensionMismatch(f"column counts differ: {sorted(cols)}")
    n = cols.pop() if cols else mats[0].cols
    return GFMatrix(f, np.vstack([m.data.reshape(m.rows, n) for m in mats]))


def row_space_contains(A: GFMatrix, v) -> bool:
    v = np.asarray(v, dtype=np.int64).reshape(1, -1)
    if v.shape[1] != A.cols:
        raise DimensionMismatch(f"vector of length {v.shape[1]} vs {A.cols} columns")
    return rank(vstack(A, GFMatrix(A.field, v))) == rank(A)


def same_row_space(A: GFMatrix, B: GFMatrix) -> bool:
    _check_field(A, B)
    ra, rb = row_basis(A), row_basis(B)
    return ra == rb


def contains_row_space(big: GFMatrix, small: GFMatrix) -> bool:
    """True when rowspace(small) is inside rowspace(big)."""
    return rank(vstack(big, small)) == rank(big)


def weight(v) -> int:
    return int(np.count_nonzero(np.asarray(v)))
