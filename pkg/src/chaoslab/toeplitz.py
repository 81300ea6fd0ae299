"""Truncated Toeplitz-operator model for the free moment counts.

The order-r operator is the sum of all words in the shift and its adjoint
with r letters and the shifts first; its truncation to dimension d has a
0/1 matrix with ones exactly where the column-minus-row difference is an
admissible jump and the index sum clears the floor rule.  The (0,0) entry
of a product therefore counts valid lattice paths, so a truncation at
dimension |r|/2 + 1 already gives the exact moment.
"""

from __future__ import annotations

import numpy as np

from .dyck import jump_set


def toeplitz_matrix(r: int, d: int) -> np.ndarray:
    """The d-by-d truncation of the order-r operator, entries 0 or 1."""
    if r < 0:
        raise ValueError("order must be nonnegative")
    if d < 1:
        raise ValueError("dimension must be at least 1")
    if r == 0:
        return np.eye(d, dtype=np.int64)
    jumps = set(jump_set(r))
    out = np.zeros((d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            if j - i in jumps and i + j >= r:
                out[i, j] = 1
    return out


def toeplitz_moment(parts: tuple[int, ...], d: int | None = None) -> int:
    """Vacuum expectation of the product: the (0,0) entry at dimension d.

    The default dimension |r|//2 + 1 is exact because path heights never
    exceed half the total jump budget.
    """
    parts = tuple(parts)
    total = sum(parts)
    if d is None:
        d = total // 2 + 1
    prod = np.eye(d, dtype=np.int64)
    for r in parts:
        prod = prod @ toeplitz_matrix(r, d)
    return int(prod[0, 0])
