# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the numpy kernels in tetk.kernels.

Same contracts as the python lane: lexicographic nerve-tuple extension,
face ranking through the positional weight tables, and the alternating
face-gather sum that is the multiplicative coboundary in exponent form.
"""

import numpy as np

cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t

cnp.import_array()


def extend_tuples(const int32_t[:, ::1] prev, const int32_t[::1] prev_tgt,
                  const int32_t[::1] arrows_by_src, const int64_t[::1] src_start,
                  const int32_t[::1] tgt):
    cdef Py_ssize_t n = prev.shape[0]
    cdef Py_ssize_t k = prev.shape[1]
    cdef Py_ssize_t i, j, t, pos
    cdef int64_t lo, hi
    cdef int64_t total = 0
    for i in range(n):
        total += src_start[prev_tgt[i] + 1] - src_start[prev_tgt[i]]

    out_np = np.empty((total, k + 1), dtype=np.int32)
    new_tgt_np = np.empty(total, dtype=np.int32)
    cdef int32_t[:, ::1] out = out_np
    cdef int32_t[::1] new_tgt = new_tgt_np
    cdef int32_t arrow
    pos = 0
    for i in range(n):
        lo = src_start[prev_tgt[i]]
        hi = src_start[prev_tgt[i] + 1]
        for t in range(lo, hi):
            arrow = arrows_by_src[t]
            for j in range(k):
                out[pos, j] = prev[i, j]
            out[pos, k] = arrow
            new_tgt[pos] = tgt[arrow]
            pos += 1
    return out_np, new_tgt_np


def face_ranks(const int32_t[:, ::1] tuples, const int32_t[:, ::1] comp,
               const int64_t[:, ::1] weight_rows):
    cdef Py_ssize_t n = tuples.shape[0]
    cdef Py_ssize_t q = tuples.shape[1]
    cdef Py_ssize_t i, j, t
    cdef int64_t acc
    cdef int32_t col
    faces_np = np.empty((q + 1, n), dtype=np.int64)
    cdef int64_t[:, ::1] faces = faces_np
    for i in range(q + 1):
        for t in range(n):
            acc = 0
            for j in range(q - 1):
                if i == 0:
                    col = tuples[t, j + 1]
                elif j + 1 < i:
                    col = tuples[t, j]
                elif j + 1 == i:
                    col = comp[tuples[t, j], tuples[t, j + 1]]
                else:
                    col = tuples[t, j + 1]
                acc += weight_rows[j, col]
            faces[i, t] = acc
    return faces_np


def signed_sum_mod(const int64_t[::1] table, const int64_t[:, ::1] faces, int64_t m):
    cdef Py_ssize_t rows = faces.shape[0]
    cdef Py_ssize_t n = faces.shape[1]
    cdef Py_ssize_t i, t
    cdef int64_t acc
    out_np = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] out = out_np
    for t in range(n):
        acc = 0
        for i in range(rows):
            if i % 2 == 0:
                acc += table[faces[i, t]]
            else:
                acc -= table[faces[i, t]]
        acc %= m
        if acc < 0:
            acc += m
        out[t] = acc
    return out_np
