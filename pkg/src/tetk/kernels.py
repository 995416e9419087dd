"""Hot kernels for nerve enumeration and coboundary accumulation.

Two interchangeable lanes provide the same three functions:

  extend_tuples(prev, prev_tgt, arrows_by_src, src_start, tgt)
  face_ranks(tuples, comp, weight_rows)
  signed_sum_mod(table, faces, m)

The compiled lane (tetk._ckernels, built from _ckernels.pyx) is selected at
import when available; otherwise the vectorized numpy lane below is used.
Set TETK_NO_EXT=1 to force the numpy lane.
"""

from __future__ import annotations

import os

import numpy as np


def _np_extend_tuples(prev, prev_tgt, arrows_by_src, src_start, tgt):
    """Append every composable next arrow to each tuple.

    prev: (N, k) int32 composable tuples in lexicographic order (k >= 0).
    prev_tgt: (N,) target object of each tuple's last arrow.
    arrows_by_src: arrow indices grouped by source object, ascending.
    src_start: (n_objects + 1,) group offsets into arrows_by_src.
    Returns (tuples (N', k+1), new_tgt (N',)) still lexicographic.
    """
    outdeg = np.diff(src_start)
    counts = outdeg[prev_tgt]
    total = int(counts.sum())
    n = prev.shape[0]
    rows = np.repeat(np.arange(n, dtype=np.int64), counts)
    cum = np.zeros(n, dtype=np.int64)
    np.cumsum(counts[:-1], out=cum[1:])
    within = np.arange(total, dtype=np.int64) - np.repeat(cum, counts)
    new_arrows = arrows_by_src[np.repeat(src_start[prev_tgt], counts) + within]
    out = np.empty((total, prev.shape[1] + 1), dtype=np.int32)
    out[:, :-1] = prev[rows]
    out[:, -1] = new_arrows
    return out, tgt[new_arrows]


def _np_face_ranks(tuples, comp, weight_rows):
    """Rank every face of every degree-q tuple in the degree-(q-1) nerve.

    weight_rows: (q-1, A) int64; the rank of a (q-1)-tuple (b_1..b_{q-1}) is
    sum_j weight_rows[j][b_j].  Returns faces (q+1, N) int64.
    """
    n, q = tuples.shape
    faces = np.empty((q + 1, n), dtype=np.int64)
    for i in range(q + 1):
        acc = np.zeros(n, dtype=np.int64)
        for j in range(q - 1):
            if i == 0:
                col = tuples[:, j + 1]
            elif j + 1 < i:
                col = tuples[:, j]
            elif j + 1 == i:
                col = comp[tuples[:, j], tuples[:, j + 1]]
            else:
                col = tuples[:, j + 1]
            acc += weight_rows[j][col]
        faces[i] = acc
    return faces


def _np_signed_sum_mod(table, faces, m):
    """Alternating sum of table values gathered through the face rows, mod m."""
    acc = np.zeros(faces.shape[1], dtype=np.int64)
    for i in range(faces.shape[0]):
        if i % 2 == 0:
            acc += table[faces[i]]
        else:
            acc -= table[faces[i]]
    return np.mod(acc, m)


class _Lane:
    def __init__(self, name, extend_tuples, face_ranks, signed_sum_mod):
        self.name = name
        self.extend_tuples = extend_tuples
        self.face_ranks = face_ranks
        self.signed_sum_mod = signed_sum_mod


PYTHON_LANE = _Lane("python", _np_extend_tuples, _np_face_ranks, _np_signed_sum_mod)

COMPILED_LANE = None
if os.environ.get("TETK_NO_EXT") != "1":
    try:
        from tetk import _ckernels

        COMPILED_LANE = _Lane(
            "compiled",
            _ckernels.extend_tuples,
            _ckernels.face_ranks,
            _ckernels.signed_sum_mod,
        )
    except ImportError:
        COMPILED_LANE = None

ACTIVE = COMPILED_LANE if COMPILED_LANE is not None else PYTHON_LANE


def available_lanes():
    lanes = {"python": PYTHON_LANE}
    if COMPILED_LANE is not None:
        lanes["compiled"] = COMPILED_LANE
    return lanes
