"""Twisted representations and twisted vector bundles in exact arithmetic.

Matrices have CycSum entries, so the twisted homomorphism law
rho(g) rho(h) = theta(g, h) rho(gh) is checked by exact equality rather than
numerically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from tetk.cochain import CheckResult, Cochain
from tetk.cyclotomic import CycSum
from tetk.extension import CentralExtension, central_extension
from tetk.groupoid import FiniteGroupoid
from tetk.groups import FiniteGroup
from tetk.nerve import nerve
from tetk.tate import ClassFunction


def _as_cyc_matrix(rows):
    return [[e if isinstance(e, CycSum) else CycSum.from_rational(e) for e in row]
            for row in rows]


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    out = [[CycSum.zero() for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for t in range(k):
            a = A[i][t]
            if a.is_zero:
                continue
            for j in range(m):
                if not B[t][j].is_zero:
                    out[i][j] = out[i][j] + a * B[t][j]
    return out


def mat_scale(c, A):
    return [[c * e for e in row] for row in A]


def mat_eq(A, B):
    return (len(A) == len(B)
            and all(len(r) == len(s) and all(a == b for a, b in zip(r, s))
                    for r, s in zip(A, B)))


def identity_matrix(n):
    return [[CycSum.one() if i == j else CycSum.zero() for j in range(n)]
            for i in range(n)]


def trace(A):
    t = CycSum.zero()
    for i in range(len(A)):
        t = t + A[i][i]
    return t


class MatrixRep:
    """Per-arrow matrices over a group (one object) or groupoid.

    For a group, ``base`` is a FiniteGroup and ``matrices[g]`` is square of
    size dims[0].  For a groupoid, ``matrices[a]`` maps the fiber at tgt(a)
    to the fiber at src(a), so its shape is dims[src] x dims[tgt].
    """

    def __init__(self, base, dims, matrices):
        self.base = base
        self.dims = [int(d) for d in dims]
        self.matrices = [_as_cyc_matrix(m) for m in matrices]
        if isinstance(base, FiniteGroup):
            if len(self.dims) != 1:
                raise ValueError("group representation has a single fiber")
            if len(self.matrices) != base.order:
                raise ValueError("need one matrix per group element")
            d = self.dims[0]
            for g, m in enumerate(self.matrices):
                if len(m) != d or any(len(r) != d for r in m):
                    raise ValueError(f"matrix for element {g} is not {d}x{d}")
        elif isinstance(base, FiniteGroupoid):
            if len(self.dims) != base.n_objects:
                raise ValueError("need one fiber dimension per object")
            if len(self.matrices) != base.n_arrows:
                raise ValueError("need one matrix per arrow")
            for a, m in enumerate(self.matrices):
                want = (self.dims[int(base.src[a])], self.dims[int(base.tgt[a])])
                rows = len(m)
                cols = len(m[0]) if m else 0
                if rows != want[0] or (rows and cols != want[1]):
                    raise ValueError(
                        f"matrix for arrow {a} has shape ({rows}, {cols}), "
                        f"expected {want}")
        else:
            raise TypeError("base must be a FiniteGroup or FiniteGroupoid")

    def matrix(self, idx):
        return self.matrices[int(idx)]


def _theta_exponent_table(base: FiniteGroup, theta: Cochain):
    gpd = theta.groupoid
    if theta.degree != 2 or gpd.n_objects != 1 or gpd.n_arrows != base.order:
        raise ValueError("theta must be a degree-2 cochain on the delooping of the group")
    nc = nerve(gpd)
    n = base.order
    return [[int(theta.table[nc.rank((g, h))]) for h in range(n)] for g in range(n)]


def verify_twisted_rep(rho: MatrixRep, theta: Cochain) -> CheckResult:
    """rho(g) rho(h) = theta(g,h) rho(gh) exactly, and rho(1) = id."""
    base = rho.base
    if not isinstance(base, FiniteGroup):
        raise ValueError("verify_twisted_rep needs a group representation")
    tbl = _theta_exponent_table(base, theta)
    m = theta.modulus
    if not mat_eq(rho.matrix(0), identity_matrix(rho.dims[0])):
        return CheckResult(False, witness=0, detail="rho(identity) is not the identity")
    for g in range(base.order):
        for h in range(base.order):
            lhs = mat_mul(rho.matrix(g), rho.matrix(h))
            rhs = mat_scale(CycSum.root(m, tbl[g][h]),
                            rho.matrix(int(base.mul[g, h])))
            if not mat_eq(lhs, rhs):
                return CheckResult(
                    False, witness=(g, h),
                    detail=f"twisted law fails at pair ({g}, {h})")
    return CheckResult(True)


def twisted_regular_rep(base: FiniteGroup, theta: Cochain):
    """The twisted regular representation rho(g) e_h = theta(g, h) e_{gh},
    together with its exact character on the associated central extension.

    The character lives on the extension: chi~(g, z) = z * tr rho(g), which
    is |H| at the identity and 0 off the central fiber.
    """
    tbl = _theta_exponent_table(base, theta)
    m = theta.modulus
    n = base.order
    mats = []
    for g in range(n):
        M = [[CycSum.zero() for _ in range(n)] for _ in range(n)]
        for h in range(n):
            M[int(base.mul[g, h])][h] = CycSum.root(m, tbl[g][h])
        mats.append(M)
    rho = MatrixRep(base, [n], mats)
    chk = verify_twisted_rep(rho, theta)
    assert chk, chk.detail
    ext = central_extension(base, theta)
    traces = [trace(mats[g]) for g in range(n)]

    def character(elem):
        g, z = ext.pair(elem)
        return CycSum.root(m, z) * traces[g]

    chi = ClassFunction.from_callable(ext, character)
    return rho, chi


def verify_twisted_bundle(gpd: FiniteGroupoid, theta: Cochain,
                          bundle: MatrixRep) -> CheckResult:
    """mu(a) mu(b) = theta(a,b) mu(a.b) on composable pairs, units to ids.

    On a one-object groupoid this is literally the twisted representation
    law.
    """
    if bundle.base is not gpd:
        raise ValueError("bundle does not live on the given groupoid")
    if theta.degree != 2 or theta.groupoid is not gpd:
        raise ValueError("theta must be a degree-2 cochain on the groupoid")
    m = theta.modulus
    nc = nerve(gpd)
    for x in range(gpd.n_objects):
        u = int(gpd.unit[x])
        if not mat_eq(bundle.matrix(u), identity_matrix(bundle.dims[x])):
            return CheckResult(False, witness=u,
                               detail=f"unit arrow {u} is not the identity")
    pa, pb = np.nonzero(gpd.comp >= 0)
    for a, b in zip(pa, pb):
        a, b = int(a), int(b)
        lhs = mat_mul(bundle.matrix(a), bundle.matrix(b))
        th = CycSum.root(m, int(theta.table[nc.rank((a, b))]))
        rhs = mat_scale(th, bundle.matrix(int(gpd.comp[a, b])))
        if not mat_eq(lhs, rhs):
            return CheckResult(False, witness=(a, b),
                               detail=f"twisted composition law fails at pair ({a}, {b})")
    return CheckResult(True)
