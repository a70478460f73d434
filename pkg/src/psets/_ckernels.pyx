# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled fraction-free elimination.

Runs in int64 with checked multiply/subtract. Any overflow, or an input
entry outside int64, falls back to the arbitrary-precision Python kernel.
"""

from libc.stdlib cimport malloc, free

from psets._pykernels import eliminate as _eliminate_py

cdef extern from *:
    """
    static int _mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static int _sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int _mul_ovf(long long a, long long b, long long *r) nogil
    int _sub_ovf(long long a, long long b, long long *r) nogil


cdef int _eliminate_i64(long long *m, Py_ssize_t nrows, Py_ssize_t ncols,
                        Py_ssize_t *rank_out, long long *prev_out,
                        int *sign_out) nogil:
    cdef Py_ssize_t rank = 0, col, piv, r, c
    cdef long long prev = 1, p, a, t1, t2, d
    cdef int sign = 1
    cdef long long *prow
    cdef long long *row
    for col in range(ncols):
        if rank == nrows:
            break
        piv = rank
        while piv < nrows and m[piv * ncols + col] == 0:
            piv += 1
        if piv == nrows:
            continue
        if piv != rank:
            for c in range(ncols):
                t1 = m[rank * ncols + c]
                m[rank * ncols + c] = m[piv * ncols + c]
                m[piv * ncols + c] = t1
            sign = -sign
        prow = m + rank * ncols
        p = prow[col]
        for r in range(rank + 1, nrows):
            row = m + r * ncols
            a = row[col]
            for c in range(col + 1, ncols):
                if _mul_ovf(p, row[c], &t1):
                    return 1
                if _mul_ovf(a, prow[c], &t2):
                    return 1
                if _sub_ovf(t1, t2, &d):
                    return 1
                row[c] = d // prev
            row[col] = 0
        prev = p
        rank += 1
    rank_out[0] = rank
    prev_out[0] = prev
    sign_out[0] = sign
    return 0


def eliminate(rows, Py_ssize_t ncols):
    """Same contract as :func:`psets._pykernels.eliminate`."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t i, j, rank = 0
    cdef long long prev = 1
    cdef int sign = 1, status
    cdef long long *m
    if nrows == 0 or ncols == 0:
        return 0, 1, 1
    m = <long long *> malloc(nrows * ncols * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    try:
        try:
            for i in range(nrows):
                row = rows[i]
                for j in range(ncols):
                    m[i * ncols + j] = row[j]
        except OverflowError:
            return _eliminate_py(rows, ncols)
        with nogil:
            status = _eliminate_i64(m, nrows, ncols, &rank, &prev, &sign)
        if status:
            return _eliminate_py(rows, ncols)
        return rank, prev, sign
    finally:
        free(m)
