"""Gaussian elimination over a finite field.

Matrices are 2-D int64 numpy arrays of element indices; row operations use
the field's vectorized ``v*`` methods so each pivot costs a handful of
whole-matrix numpy calls.
"""

from __future__ import annotations

import numpy as np


def rref(field, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    R = np.array(M, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    nrows, ncols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        lead = int(R[r, c])
        if lead != 1:
            R[r] = field.vmul(R[r], field.inv(lead))
        factors = R[:, c].copy()
        factors[r] = 0
        rows = np.flatnonzero(factors)
        if rows.size:
            R[rows] = field.vsub(R[rows], field.vmul(factors[rows, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def rank(field, M) -> int:
    M = np.asarray(M, dtype=np.int64)
    if M.size == 0:
        return 0
    return len(rref(field, M)[1])


def row_basis(field, M) -> np.ndarray:
    """Nonzero rows of the RREF of ``M``: a canonical basis of its row space."""
    R, pivots = rref(field, M)
    return R[: len(pivots)]


def nullspace(field, M) -> np.ndarray:
    """Rows form a basis of {v : M v = 0}."""
    M = np.asarray(M, dtype=np.int64)
    ncols = M.shape[1]
    R, pivots = rref(field, M)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, c in enumerate(pivots):
            basis[i, c] = field.neg(int(R[r, f]))
    return basis


def solve(field, A, b) -> np.ndarray | None:
    """One solution of A x = b (free variables set to zero), or None."""
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1)
    R, pivots = rref(field, np.hstack([A, b]))
    ncols = A.shape[1]
    if pivots and pivots[-1] == ncols:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for r, c in enumerate(pivots):
        x[c] = R[r, ncols]
    return x


def inverse(field, M) -> np.ndarray:
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("matrix is not square")
    R, pivots = rref(field, np.hstack([M, np.eye(n, dtype=np.int64)]))
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ValueError("matrix is singular")
    return R[:, n:]


def matmul(field, A, B) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    return field.vsum(field.vmul(A[:, :, None], B[None, :, :]), axis=1)
