"""Pure-numpy row reduction over GF(p); fallback for the compiled kernel."""

from __future__ import annotations

import numpy as np


def rref_inplace(a: np.ndarray, p: int) -> list[int]:
    rows, cols = a.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r >= rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        if inv != 1:
            a[r] = a[r] * inv % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return pivots
