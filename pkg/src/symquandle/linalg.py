"""Exact Gaussian elimination over the prime field Z_p.

Matrices are numpy integer arrays with entries in ``0..p-1``.  The reduced
row echelon form is built incrementally, a block of rows at a time, so tall
sparse systems (many more equations than unknowns) stay cheap.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

_BLOCK = 1024


def is_prime(p: int) -> bool:
    if not isinstance(p, (int, np.integer)) or p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _dtype_for(p: int, ncols: int):
    # matrix products accumulate up to ncols * (p-1)^2
    if ncols * (p - 1) ** 2 < 2**62:
        return np.int64
    return object


def _rref_dense(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Plain RREF of a small dense block; returns (nonzero rows, pivot columns)."""
    a = a.copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rref_mod_p(matrix, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``matrix`` over Z_p.

    Returns the nonzero rows of the RREF (sorted by pivot column) and the
    pivot columns.  Deterministic for a fixed column order.
    """
    m = np.asarray(matrix)
    if m.ndim != 2:
        raise ValueError("matrix must be two-dimensional")
    blocks = (m[i:i + _BLOCK] for i in range(0, m.shape[0], _BLOCK))
    return rref_blocks_mod_p(blocks, m.shape[1], p)


def rref_blocks_mod_p(blocks: Iterable, ncols: int, p: int) -> tuple[np.ndarray, list[int]]:
    """Like :func:`rref_mod_p` but consumes the rows as a stream of 2-d blocks."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    dtype = _dtype_for(p, ncols)
    basis = np.zeros((0, ncols), dtype=dtype)
    pivots: list[int] = []
    for raw in blocks:
        block = np.asarray(raw, dtype=dtype) % p
        if block.ndim != 2 or block.shape[1] != ncols:
            raise ValueError(f"row block has shape {block.shape}, expected (*, {ncols})")
        if pivots:
            block = (block - block[:, pivots].dot(basis)) % p
        block = block[np.any(block != 0, axis=1)]
        if block.shape[0] == 0:
            continue
        new_rows, new_piv = _rref_dense(block, p)
        if not new_piv:
            continue
        if pivots:
            basis = (basis - basis[:, new_piv].dot(new_rows)) % p
        basis = np.vstack([basis, new_rows])
        pivots = pivots + new_piv
        order = np.argsort(pivots, kind="stable")
        basis = basis[order]
        pivots = [pivots[i] for i in order]
    return basis, pivots


def rank_mod_p(matrix, p: int) -> int:
    return len(rref_mod_p(matrix, p)[1])


def nullspace_mod_p(matrix, p: int) -> np.ndarray:
    """Basis of ``{v : matrix @ v == 0 (mod p)}``, one row per free column.

    Basis vector ``i`` has a 1 in the ``i``-th free column, zeros in the
    other free columns, and the pivot entries that this forces.
    """
    m = np.asarray(matrix)
    return nullspace_from_rref(*rref_mod_p(m, p), m.shape[1], p)


def nullspace_from_rref(rref: np.ndarray, pivots: list[int], ncols: int, p: int) -> np.ndarray:
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    out = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        out[i, f] = 1
        for r, c in enumerate(pivots):
            out[i, c] = (-int(rref[r, f])) % p
    return out
