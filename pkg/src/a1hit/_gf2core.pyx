# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Word-packed Gauss-Jordan elimination over GF(2).

Rows are packed little-endian: column c lives in word c >> 6, bit c & 63.
"""

import numpy as np

ctypedef unsigned long long u64


def rref_packed(u64[:, ::1] mat, Py_ssize_t n_cols):
    """Reduce ``mat`` to RREF in place (up to row order).

    Returns ``(pivots, order)``: ascending pivot columns and a row-order
    array such that ``mat[order[i]]`` is the i-th echelon row for
    ``i < len(pivots)``.
    """
    cdef Py_ssize_t n_rows = mat.shape[0]
    cdef Py_ssize_t n_words = mat.shape[1]
    order_arr = np.arange(n_rows, dtype=np.intp)
    cdef Py_ssize_t[::1] order = order_arr
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t col, wcol, i, w, piv, src, dst, tmp
    cdef u64 mask
    pivots = []
    for col in range(n_cols):
        if rank == n_rows:
            break
        wcol = col >> 6
        mask = (<u64> 1) << (col & 63)
        piv = -1
        for i in range(rank, n_rows):
            if mat[order[i], wcol] & mask:
                piv = i
                break
        if piv < 0:
            continue
        tmp = order[rank]
        order[rank] = order[piv]
        order[piv] = tmp
        src = order[rank]
        for i in range(n_rows):
            dst = order[i]
            if dst != src and (mat[dst, wcol] & mask):
                for w in range(n_words):
                    mat[dst, w] ^= mat[src, w]
        pivots.append(col)
        rank += 1
    return pivots, order_arr
