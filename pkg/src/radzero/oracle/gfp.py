"""Dense linear algebra over GF(p).

Row reduction runs in the compiled extension when it was built and in a
numpy implementation otherwise; :func:`use_backend` switches explicitly.
"""

from __future__ import annotations

import numpy as np

from . import _gfp_py

try:
    from . import _gfp_ext
except ImportError:  # extension not built
    _gfp_ext = None

_BACKENDS = {"python": _gfp_py.rref_inplace}
if _gfp_ext is not None:
    _BACKENDS["compiled"] = _gfp_ext.rref_inplace

BACKEND = "compiled" if "compiled" in _BACKENDS else "python"
_rref_inplace = _BACKENDS[BACKEND]


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def use_backend(name: str) -> str:
    """Select the row-reduction kernel; returns the previous backend name."""
    global BACKEND, _rref_inplace
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; available: {available_backends()}")
    prev, BACKEND, _rref_inplace = BACKEND, name, _BACKENDS[name]
    return prev


def as_gf(a, p: int) -> np.ndarray:
    arr = np.array(a, dtype=np.int64, copy=True, ndmin=2)
    return np.ascontiguousarray(arr % p)


def matmul(a, b, p: int) -> np.ndarray:
    """``a @ b mod p``.  Goes through float64 BLAS whenever every partial sum stays below 2**53."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape[-1] * (p - 1) ** 2 < 2**53:
        return (a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64) % p
    return a.astype(np.int64) @ b.astype(np.int64) % p


def rref(a, p: int) -> tuple[np.ndarray, list[int]]:
    m = as_gf(a, p)
    if m.size == 0:
        return m, []
    pivots = _rref_inplace(m, p)
    return m, list(pivots)


def rank(a, p: int) -> int:
    return len(rref(a, p)[1])


def nullspace(a, p: int, ncols: int | None = None) -> np.ndarray:
    """Rows form a basis of ``{x : a x = 0}``.  ``ncols`` is needed when ``a`` has no rows."""
    a = np.asarray(a, dtype=np.int64)
    n = a.shape[1] if a.ndim == 2 and a.size else (ncols if ncols is not None else a.shape[-1])
    if a.size == 0:
        return np.eye(n, dtype=np.int64)
    r, piv = rref(a, p)
    pivset = set(piv)
    free = [c for c in range(n) if c not in pivset]
    basis = np.zeros((len(free), n), dtype=np.int64)
    basis[np.arange(len(free)), free] = 1
    if piv and free:
        basis[:, piv] = (-r[: len(piv)][:, free].T) % p
    return basis


def solve(a, b, p: int) -> np.ndarray:
    """A particular solution ``x`` of ``a x = b``; raises ``ValueError`` if none exists."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if b.ndim == 1:
        b = b[:, None]
    rows, n = a.shape
    k = b.shape[1]
    if rows == 0:
        return np.zeros((n, k), dtype=np.int64)
    r, piv = rref(np.hstack([a, b]), p)
    if any(c >= n for c in piv):
        raise ValueError("inconsistent linear system")
    x = np.zeros((n, k), dtype=np.int64)
    for i, c in enumerate(piv):
        x[c] = r[i, n:]
    return x
