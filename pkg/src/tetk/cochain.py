"""Roots-of-unity valued cochains on groupoid nerves.

A degree-p cochain with modulus m assigns an exponent in Z/m to every
composable p-tuple of arrows (to every object when p = 0); the value is
e^(2 pi i exponent / m).  Working with exponents keeps the whole calculus in
exact integer arithmetic: the coboundary is an alternating sum of face
gathers mod m.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

import numpy as np

from tetk import kernels
from tetk.groupoid import FiniteGroupoid, GroupoidFunctor, action_groupoid
from tetk.groups import cyclic_group, trivial_action
from tetk.nerve import nerve


class Cochain:
    """Dense exponent table over the degree-p nerve, lexicographic order."""

    def __init__(self, groupoid: FiniteGroupoid, degree: int, modulus: int, table):
        if degree < 0:
            raise ValueError("degree must be >= 0")
        if modulus < 1:
            raise ValueError("modulus must be >= 1")
        expected = nerve(groupoid).count(degree)
        table = np.mod(np.asarray(table, dtype=np.int64), modulus)
        if table.shape != (expected,):
            raise ValueError(
                f"table has {table.shape} entries, degree-{degree} nerve has {expected}")
        self.groupoid = groupoid
        self.degree = degree
        self.modulus = modulus
        self.table = table
        self.table.setflags(write=False)

    @staticmethod
    def zero(groupoid, degree, modulus):
        return Cochain(groupoid, degree, modulus,
                       np.zeros(nerve(groupoid).count(degree), dtype=np.int64))

    def __eq__(self, other):
        return (isinstance(other, Cochain)
                and self.groupoid is other.groupoid
                and self.degree == other.degree
                and self.modulus == other.modulus
                and np.array_equal(self.table, other.table))

    def __repr__(self):
        return (f"Cochain(degree={self.degree}, modulus={self.modulus}, "
                f"on {self.groupoid!r})")

    def value(self, arrows):
        """Exponent at an explicit tuple of arrow indices."""
        if self.degree == 0:
            return int(self.table[int(arrows)])
        return int(self.table[nerve(self.groupoid).rank(arrows)])

    def is_zero(self):
        return not self.table.any()

    def add(self, other):
        a, b = align_moduli(self, other)
        return Cochain(a.groupoid, a.degree, a.modulus, a.table + b.table)

    def neg(self):
        return Cochain(self.groupoid, self.degree, self.modulus, -self.table)

    def sub(self, other):
        return self.add(other.neg())

    def scale(self, k):
        return Cochain(self.groupoid, self.degree, self.modulus, self.table * int(k))


def align_moduli(a: Cochain, b: Cochain):
    """Embed two cochains on one groupoid into the lcm modulus."""
    if a.groupoid is not b.groupoid or a.degree != b.degree:
        raise ValueError("cochains live on different nerves")
    m = lcm(a.modulus, b.modulus)
    return embed_modulus(a, m), embed_modulus(b, m)


def embed_modulus(c: Cochain, new_modulus: int) -> Cochain:
    """mu_m -> mu_M along zeta_m = zeta_M^(M/m); exponents scale by M/m."""
    if new_modulus % c.modulus:
        raise ValueError("new modulus must be a multiple of the old one")
    step = new_modulus // c.modulus
    return Cochain(c.groupoid, c.degree, new_modulus, c.table * step)


def face(groupoid, arrows, j):
    """Face d_j of an explicit composable tuple, as a tuple of arrow indices.

    d_0 drops the first arrow, d_p the last, and an interior d_j composes
    arrows j and j+1 (the object-deletion convention).  Degree 1 goes to
    objects: d_0(g) = tgt(g), d_1(g) = src(g).
    """
    p = len(arrows)
    if not 0 <= j <= p:
        raise ValueError(f"face index {j} out of range for degree {p}")
    if p == 1:
        return (int(groupoid.tgt[arrows[0]]),) if j == 0 else (int(groupoid.src[arrows[0]]),)
    if j == 0:
        return tuple(arrows[1:])
    if j == p:
        return tuple(arrows[:-1])
    return tuple(arrows[:j - 1]) + (groupoid.compose(arrows[j - 1], arrows[j]),) + tuple(arrows[j + 1:])


def coboundary(c: Cochain) -> Cochain:
    """(delta c)(t) = sum_i (-1)^i c(d_i t) in exponents mod m."""
    q = c.degree + 1
    faces = nerve(c.groupoid).faces(q)
    out = kernels.ACTIVE.signed_sum_mod(c.table, faces, c.modulus)
    return Cochain(c.groupoid, q, c.modulus, out)


@dataclass
class CheckResult:
    ok: bool
    witness: object = None
    detail: str = ""

    def __bool__(self):
        return self.ok


def is_cocycle(c: Cochain) -> CheckResult:
    """True iff coboundary(c) is identically 1; witness = first bad tuple."""
    d = coboundary(c)
    bad = np.flatnonzero(d.table)
    if bad.size == 0:
        return CheckResult(True)
    i = int(bad[0])
    tup = tuple(int(a) for a in nerve(c.groupoid).tuples(c.degree + 1)[i])
    return CheckResult(False, witness=tup,
                       detail=f"coboundary exponent {int(d.table[i])} at tuple {tup}")


def unit_tuple_mask(groupoid, degree):
    """Mask of degree-p tuples containing at least one unit arrow."""
    tup = nerve(groupoid).tuples(degree)
    is_unit = groupoid.is_unit()
    return is_unit[tup].any(axis=1)


def is_normalized(c: Cochain) -> bool:
    """True iff every tuple containing a unit arrow has exponent 0."""
    if c.degree == 0:
        return True
    return not c.table[unit_tuple_mask(c.groupoid, c.degree)].any()


def incidence_matrix(groupoid, degree, rows=None):
    """Integer matrix of delta from degree-1 cochains: M x = table of delta x.

    Row t (a degree-`degree` tuple), column e (a degree-(degree-1) tuple):
    sum of (-1)^i over faces d_i t = e.  ``rows`` restricts to a subset of
    tuples.
    """
    faces = nerve(groupoid).faces(degree)
    n_rows = faces.shape[1] if rows is None else len(rows)
    n_cols = nerve(groupoid).count(degree - 1)
    which = range(faces.shape[1]) if rows is None else rows
    M = [[0] * n_cols for _ in range(n_rows)]
    for r, t in enumerate(which):
        row = M[r]
        for i in range(faces.shape[0]):
            row[int(faces[i][t])] += 1 if i % 2 == 0 else -1
    return M


def normalize_3cocycle(alpha: Cochain):
    """A normalized representative of alpha's class, with its witness.

    Returns (alpha', beta) with alpha' = alpha + delta beta, alpha'
    normalized and still a cocycle.  A normalized input comes back unchanged
    with a trivial witness.  Implemented by solving the linear system over
    Z/m that cancels every unit-containing entry.
    """
    check = is_cocycle(alpha)
    if not check:
        raise ValueError(f"input is not a cocycle: {check.detail}")
    if alpha.degree != 3:
        raise ValueError("normalization is implemented for degree 3")
    beta0 = Cochain.zero(alpha.groupoid, 2, alpha.modulus)
    if is_normalized(alpha):
        return alpha, beta0
    from tetk.snf import solve_mod

    mask = unit_tuple_mask(alpha.groupoid, 3)
    rows = [int(i) for i in np.flatnonzero(mask)]
    A = incidence_matrix(alpha.groupoid, 3, rows=rows)
    b = [int(-alpha.table[i]) % alpha.modulus for i in rows]
    x = solve_mod(A, b, alpha.modulus)
    if x is None:
        raise RuntimeError("no normalizing witness exists; input was not a cocycle?")
    beta = Cochain(alpha.groupoid, 2, alpha.modulus, np.array(x, dtype=np.int64))
    out = alpha.add(coboundary(beta))
    assert is_normalized(out) and is_cocycle(out)
    return out, beta


def standard_cyclic_3cocycle(n: int, k: int, groupoid=None) -> Cochain:
    """The degree-3 cocycle on B(Z/n) with exponent(a,b,c) = k*a*floor((b+c)/n).

    With k running over Z/n these exhaust H^3(B Z/n; mu_n).
    """
    if not 0 <= k < n:
        raise ValueError("need 0 <= k < n")
    if groupoid is None:
        groupoid = action_groupoid(trivial_action(cyclic_group(n)))
    idx = np.arange(n ** 3)
    a, b, c = idx // (n * n), (idx // n) % n, idx % n
    table = np.mod(k * a * ((b + c) // n), n)
    cochain = Cochain(groupoid, 3, n, table)
    assert is_cocycle(cochain)
    return cochain


def random_cochain(groupoid, degree, modulus, rng) -> Cochain:
    count = nerve(groupoid).count(degree)
    return Cochain(groupoid, degree, modulus, rng.integers(0, modulus, size=count))


def random_cocycle(groupoid, modulus, rng, seed_class: Cochain | None = None) -> Cochain:
    """A random 3-cocycle: optional nontrivial class plus a random coboundary."""
    beta = random_cochain(groupoid, 2, modulus, rng)
    out = coboundary(beta)
    if seed_class is not None:
        out = out.add(embed_modulus(seed_class, lcm(seed_class.modulus, modulus)))
    return out


def pullback_cochain(functor: GroupoidFunctor, c: Cochain) -> Cochain:
    """(f* c)(a_1..a_p) = c(f a_1, .., f a_p); degree 0 pulls back on objects."""
    dom = functor.domain
    if c.groupoid is not functor.codomain:
        raise ValueError("cochain does not live on the functor codomain")
    if c.degree == 0:
        return Cochain(dom, 0, c.modulus, c.table[functor.obj_map])
    tup = nerve(dom).tuples(c.degree)
    cod_nerve = nerve(c.groupoid)
    W = cod_nerve.weight_rows(c.degree)
    mapped = functor.arr_map[tup]
    ranks = np.zeros(tup.shape[0], dtype=np.int64)
    for j in range(c.degree):
        ranks += W[j][mapped[:, j]]
    return Cochain(dom, c.degree, c.modulus, c.table[ranks])
