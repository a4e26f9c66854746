"""Exact dense linear algebra over prime fields F_p.

Matrices are plain ``numpy.int64`` arrays with entries reduced into ``[0, p)``.
Vectors are columns; a subspace is stored as a matrix whose columns form a
basis.  All functions are pure and return fresh arrays.
"""

from __future__ import annotations

import numpy as np


def as_mat(m, p: int, shape: tuple[int, int] | None = None) -> np.ndarray:
    """Coerce ``m`` to an int64 matrix reduced mod ``p``."""
    a = np.array(m, dtype=np.int64)
    if shape is not None:
        a = a.reshape(shape)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {a.shape}")
    return a % p


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    if a.size == 0 or b.size == 0:
        return zeros(a.shape[0], b.shape[1])
    if p < 3_000_000 and a.shape[1] < 1000:
        return (a @ b) % p
    # entries could overflow int64 in a single product sum
    return np.array((a.astype(object) @ b.astype(object)) % p, dtype=np.int64)


def inv_mod(x: int, p: int) -> int:
    x %= p
    if x == 0:
        raise ZeroDivisionError("zero has no inverse")
    return pow(x, p - 2, p)


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``m`` and its pivot columns."""
    a = np.array(m, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        lead = int(a[r, c])
        if lead != 1:
            a[r] = (a[r] * inv_mod(lead, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: np.ndarray, p: int) -> int:
    if m.size == 0:
        return 0
    return len(rref(m, p)[1])


def kernel_basis(m: np.ndarray, p: int) -> np.ndarray:
    """Basis of the right null space, as columns (canonical: one per free column)."""
    rows, cols = m.shape
    if rows == 0:
        return identity(cols)
    r, pivots = rref(m, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = zeros(cols, len(free))
    for k, f in enumerate(free):
        basis[f, k] = 1
        for i, pc in enumerate(pivots):
            basis[pc, k] = (-r[i, f]) % p
    return basis


def left_kernel_basis(m: np.ndarray, p: int) -> np.ndarray:
    """Rows y with ``y @ m == 0``."""
    return kernel_basis(m.T, p).T


def image_basis(m: np.ndarray, p: int) -> np.ndarray:
    """An independent subset of the columns of ``m`` spanning its image."""
    if m.size == 0:
        return zeros(m.shape[0], 0)
    _, pivots = rref(m, p)
    return m[:, pivots] % p


def solve(m: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """Solve ``m @ x == b`` exactly; ``None`` if there is no solution.

    Free variables are set to zero, so the answer is reproducible.
    ``b`` may have several columns.
    """
    if b.ndim == 1:
        b = b.reshape(-1, 1)
    if m.shape[0] != b.shape[0]:
        raise ValueError(f"row mismatch: {m.shape} vs {b.shape}")
    rows, cols = m.shape
    if rows == 0:
        return zeros(cols, b.shape[1])
    aug = np.concatenate([m % p, b % p], axis=1)
    r, pivots = rref(aug, p)
    if any(pc >= cols for pc in pivots):
        return None
    x = zeros(cols, b.shape[1])
    for i, pc in enumerate(pivots):
        x[pc] = r[i, cols:]
    return x


def inverse(m: np.ndarray, p: int) -> np.ndarray:
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    x = solve(m, identity(n), p)
    if x is None or rank(m, p) < n:
        raise ZeroDivisionError("singular matrix")
    return x


def extend_to_basis(sub: np.ndarray, n: int, p: int) -> np.ndarray:
    """Standard basis vectors completing the columns of ``sub`` to a basis of F_p^n."""
    if sub.shape[1] == 0:
        return identity(n)
    r, pivots = rref(sub.T, p)
    chosen = [c for c in range(n) if c not in set(pivots)]
    return identity(n)[:, chosen]


def batch_invertible(stack: np.ndarray, p: int) -> np.ndarray:
    """Invertibility of every square matrix in a ``(B, n, n)`` stack."""
    a = np.array(stack, dtype=np.int64) % p
    batch, n, n2 = a.shape
    if n != n2:
        raise ValueError("stack of non-square matrices")
    ok = np.ones(batch, dtype=bool)
    if n == 0:
        return ok
    inv_table = np.zeros(p, dtype=np.int64)
    inv_table[1:] = [pow(x, p - 2, p) for x in range(1, p)]
    idx = np.arange(batch)
    for k in range(n):
        nz = a[:, k:, k] != 0
        ok &= nz.any(axis=1)
        piv = k + nz.argmax(axis=1)
        row_k = a[idx, k].copy()
        a[idx, k] = a[idx, piv]
        a[idx, piv] = row_k
        scale = inv_table[a[:, k, k]]
        a[:, k] = (a[:, k] * scale[:, None]) % p
        if k + 1 < n:
            factor = a[:, k + 1:, k]
            a[:, k + 1:] = (a[:, k + 1:] - factor[:, :, None] * a[:, None, k]) % p
    return ok


def block_diag(blocks: list[np.ndarray]) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = zeros(rows, cols)
    r = c = 0
    for b in blocks:
        out[r:r + b.shape[0], c:c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out
