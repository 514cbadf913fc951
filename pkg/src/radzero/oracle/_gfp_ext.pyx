# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Row reduction over GF(p) on int64 buffers."""

cdef long long _inv(long long x, long long p) nogil:
    cdef long long result = 1, base = x % p, e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def rref_inplace(long long[:, ::1] a, long long p):
    """Reduce ``a`` (entries in ``[0, p)``) to reduced row echelon form; return pivot columns."""
    cdef Py_ssize_t rows = a.shape[0], cols = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef long long inv, f, t
    pivots = []
    for c in range(cols):
        if r >= rows:
            break
        piv = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                t = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = t
        inv = _inv(a[r, c], p)
        if inv != 1:
            for j in range(c, cols):
                a[r, j] = a[r, j] * inv % p
        for i in range(rows):
            if i == r:
                continue
            f = a[i, c]
            if f == 0:
                continue
            for j in range(c, cols):
                if a[r, j] != 0:
                    a[i, j] = (a[i, j] + (p - f) * a[r, j]) % p
        pivots.append(c)
        r += 1
    return pivots
