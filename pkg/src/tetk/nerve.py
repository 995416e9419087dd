"""Nerve enumeration for finite groupoids.

Degree-p nerve tuples (composable chains of p arrows) are enumerated once in
lexicographic arrow-index order and cached on the groupoid together with the
rank tables that let face maps be computed as flat index gathers.
"""

from __future__ import annotations

import numpy as np

from tetk import kernels


DEFAULT_BUDGET = 10**6


class BudgetError(RuntimeError):
    """A nerve enumeration would exceed the configured tuple budget."""


class NerveCache:
    def __init__(self, gpd):
        self.gpd = gpd
        A = gpd.n_arrows
        order = np.argsort(gpd.src, kind="stable")
        self.arrows_by_src = order.astype(np.int32)
        self.src_start = np.zeros(gpd.n_objects + 1, dtype=np.int64)
        np.cumsum(np.bincount(gpd.src, minlength=gpd.n_objects), out=self.src_start[1:])
        self.outdeg = np.diff(self.src_start)
        # D[k][a] = number of composable k-tuples starting with arrow a.
        self._D = {1: np.ones(A, dtype=np.int64)}
        self._tuples = {}
        self._faces = {}
        self._weights = {}

    # -- counting ----------------------------------------------------------

    def starts_per_arrow(self, k):
        while k not in self._D:
            kk = max(d for d in self._D) + 1
            prev = self._D[kk - 1]
            per_obj = np.zeros(self.gpd.n_objects, dtype=np.int64)
            np.add.at(per_obj, self.gpd.src, prev)
            self._D[kk] = per_obj[self.gpd.tgt]
        return self._D[k]

    def count(self, p):
        if p == 0:
            return self.gpd.n_objects
        return int(self.starts_per_arrow(p).sum())

    def check_budget(self, p, budget):
        budget = DEFAULT_BUDGET if budget is None else budget
        n = self.count(p)
        if n > budget:
            raise BudgetError(
                f"degree-{p} nerve has {n} tuples, exceeding the budget of {budget}")
        return n

    # -- ranking -----------------------------------------------------------

    def weight_rows(self, p):
        """(p, A) int64 W with rank(a_1..a_p) = sum_j W[j-1][a_j]."""
        if p not in self._weights:
            A = self.gpd.n_arrows
            W = np.zeros((p, A), dtype=np.int64)
            D = self.starts_per_arrow(p)
            if A:
                W[0][1:] = np.cumsum(D[:-1])
            for j in range(1, p):
                Dk = self.starts_per_arrow(p - j)
                # exclusive prefix sums of Dk within each source-object block
                by = self.arrows_by_src
                vals = Dk[by]
                csum = np.cumsum(vals)
                L = np.empty(A, dtype=np.int64)
                for x in range(self.gpd.n_objects):
                    lo, hi = int(self.src_start[x]), int(self.src_start[x + 1])
                    if lo == hi:
                        continue
                    base = csum[lo] - vals[lo]
                    L[by[lo:hi]] = csum[lo:hi] - vals[lo:hi] - base
                W[j] = L
            self._weights[p] = W
        return self._weights[p]

    def rank(self, arrows):
        """Index of a composable tuple in the lexicographic enumeration."""
        p = len(arrows)
        if p == 0:
            raise ValueError("rank of the empty tuple is undefined")
        W = self.weight_rows(p)
        return int(sum(W[j][a] for j, a in enumerate(arrows)))

    # -- enumeration and faces ----------------------------------------------

    def tuples(self, p, budget=None):
        if p == 0:
            return np.arange(self.gpd.n_objects, dtype=np.int32).reshape(-1, 1)
        if p not in self._tuples:
            self.check_budget(p, budget)
            if 1 not in self._tuples:
                self._tuples[1] = (
                    np.arange(self.gpd.n_arrows, dtype=np.int32).reshape(-1, 1),
                    self.gpd.tgt.astype(np.int32))
            k = max(d for d in self._tuples if d <= p)
            cur, cur_tgt = self._tuples[k]
            lane = kernels.ACTIVE
            while k < p:
                cur, cur_tgt = lane.extend_tuples(
                    cur, cur_tgt, self.arrows_by_src,
                    self.src_start.astype(np.int64), self.gpd.tgt.astype(np.int32))
                k += 1
                self._tuples[k] = (cur, cur_tgt)
        return self._tuples[p][0]

    def faces(self, q, budget=None):
        """(q+1, N_q) indices of d_0..d_q into the degree-(q-1) enumeration."""
        if q < 1:
            raise ValueError("faces need degree >= 1")
        if q not in self._faces:
            self.check_budget(q, budget)
            if q == 1:
                F = np.empty((2, self.gpd.n_arrows), dtype=np.int64)
                F[0] = self.gpd.tgt      # d_0 drops the source object
                F[1] = self.gpd.src      # d_1 drops the target object
            else:
                lane = kernels.ACTIVE
                tup = self.tuples(q, budget=budget)
                F = lane.face_ranks(tup, self.gpd.comp, self.weight_rows(q - 1))
            self._faces[q] = F
        return self._faces[q]


def nerve(gpd) -> NerveCache:
    cache = getattr(gpd, "_nerve", None)
    if cache is None:
        cache = NerveCache(gpd)
        gpd._nerve = cache
    return cache
