"""Exact linear algebra over the prime field F_p on numpy integer matrices.

All matrices are 2-d ``int64`` arrays with entries reduced mod p.  Row
vectors are the working convention throughout the package: a subspace is
stored as a matrix whose rows span it, canonically in reduced row echelon
form so that equality of subspaces is equality of bytes.
"""

from __future__ import annotations

import numpy as np


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def asmat(a) -> np.ndarray:
    m = np.asarray(a, dtype=np.int64)
    if m.ndim != 2:
        raise ValueError(f"expected a matrix, got ndim={m.ndim}")
    return m


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # entries < p and inner dims are tiny, so int64 never overflows
    return (a @ b) % p


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form mod p; returns (nonzero rows, pivot columns)."""
    m = asmat(a) % p
    rows, cols = m.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        pv = int(m[r, c])
        if pv != 1:
            m[r] = (m[r] * pow(pv, p - 2, p)) % p
        hit = np.nonzero(m[:, c])[0]
        hit = hit[hit != r]
        if hit.size:
            m[hit] = (m[hit] - np.outer(m[hit, c], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], tuple(pivots)


def row_space(a: np.ndarray, p: int) -> np.ndarray:
    """Canonical (RREF) basis of the row space of ``a``."""
    return rref(a, p)[0]


def rank(a: np.ndarray, p: int) -> int:
    return rref(a, p)[0].shape[0]


def subspace_key(basis: np.ndarray) -> bytes:
    """Byte key of an RREF basis; equal keys mean equal subspaces."""
    b = np.ascontiguousarray(basis, dtype=np.int64)
    return b.shape[1].to_bytes(4, "little") + b.tobytes()


def right_null_space(a: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning {x : a @ x = 0} (x read as a column vector)."""
    m = asmat(a)
    rows, cols = m.shape
    r, pivots = rref(m, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = zeros(len(free), cols)
    for k, c in enumerate(free):
        basis[k, c] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-r[i, c]) % p
    return basis


def left_null_space(a: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning {x : x @ a = 0}."""
    return right_null_space(asmat(a).T, p)


def express_in_rref(basis: np.ndarray, pivots: tuple[int, ...], v: np.ndarray, p: int) -> np.ndarray:
    """Coordinates of row vectors ``v`` in an RREF ``basis``.

    Raises ValueError if some row does not lie in the row space.
    """
    v = np.atleast_2d(np.asarray(v, dtype=np.int64)) % p
    coeffs = v[:, list(pivots)] if pivots else zeros(v.shape[0], 0)
    resid = (v - coeffs @ basis) % p if basis.shape[0] else v
    if np.any(resid):
        raise ValueError("vector not in span of basis")
    return coeffs


def in_row_space(basis: np.ndarray, pivots: tuple[int, ...], v: np.ndarray, p: int) -> bool:
    try:
        express_in_rref(basis, pivots, v, p)
        return True
    except ValueError:
        return False


def solve_left(a: np.ndarray, b: np.ndarray, p: int):
    """One solution x of x @ a = b (rows of b solved independently), or None."""
    a = asmat(a)
    b = np.atleast_2d(asmat(b))
    r, pivots = rref(a, p)
    try:
        coeffs = express_in_rref(r, pivots, b, p)
    except ValueError:
        return None
    # lift from RREF rows back to rows of a: r = t @ a with t tracked via augmentation
    aug = np.hstack([a % p, eye(a.shape[0])])
    raug, _ = rref(aug, p)
    t = raug[: r.shape[0], a.shape[1]:]
    return (coeffs @ t) % p


def inverse(a: np.ndarray, p: int):
    """Inverse matrix mod p, or None if singular."""
    a = asmat(a)
    n = a.shape[0]
    if a.shape[1] != n:
        return None
    aug = np.hstack([a % p, eye(n)])
    r, pivots = rref(aug, p)
    if r.shape[0] != n or pivots != tuple(range(n)):
        return None
    return r[:, n:]


def is_invertible(a: np.ndarray, p: int) -> bool:
    a = asmat(a)
    return a.shape[0] == a.shape[1] and rank(a, p) == a.shape[0]


def vstack(mats, cols: int) -> np.ndarray:
    mats = [m for m in mats if m.shape[0]]
    if not mats:
        return zeros(0, cols)
    return np.vstack(mats)
