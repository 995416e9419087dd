"""Central extensions and twisted groupoids from 2-cocycles.

A normalized 2-cocycle theta on BH with values in mu_m builds the group
H x mu_m with multiplication (h, z)(k, w) = (hk, theta(h,k) z w); elements
are indexed h*m + z so the identity (1, 1) sits at index 0.  The same twist
applied to a groupoid's arrow space gives the twisted groupoid, whose
associativity is equivalent to the cocycle condition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from tetk.cochain import Cochain, is_cocycle, is_normalized
from tetk.cohomology import class_order
from tetk.groupoid import FiniteGroupoid, GroupoidFunctor, action_groupoid
from tetk.groups import FiniteGroup, ValidationError, cyclic_subgroup, trivial_action
from tetk.nerve import nerve


def _group_cochain_table(base: FiniteGroup, theta: Cochain):
    """theta as an order x order exponent table; theta must live on a
    one-object groupoid whose arrows are indexed by the elements of base."""
    if theta.degree != 2:
        raise ValueError("need a degree-2 cochain")
    gpd = theta.groupoid
    if gpd.n_objects != 1 or gpd.n_arrows != base.order:
        raise ValueError("cochain does not live on the delooping of the base group")
    n = base.order
    table = np.zeros((n, n), dtype=np.int64)
    nc = nerve(gpd)
    for g in range(n):
        for h in range(n):
            table[g, h] = theta.table[nc.rank((g, h))]
    return table


class CentralExtension(FiniteGroup):
    """The group H x mu_m twisted by theta, with projection bookkeeping.

    Element index = h * m + z with z the mu_m exponent.  (1, z) is central
    for every z, and projection to H is a homomorphism with kernel mu_m.
    """

    def __init__(self, base: FiniteGroup, theta: Cochain, modulus=None):
        m = theta.modulus if modulus is None else int(modulus)
        if m != theta.modulus:
            raise ValueError("modulus disagrees with the cochain")
        chk = is_cocycle(theta)
        if not chk:
            raise ValidationError(
                f"theta is not a cocycle, extension would not be associative: {chk.detail}")
        if not is_normalized(theta):
            raise ValidationError("theta must be normalized (theta(1,.) = theta(.,1) = 1)")
        tbl = _group_cochain_table(base, theta)
        n = base.order
        mul = np.zeros((n * m, n * m), dtype=np.int32)
        for h in range(n):
            for z in range(m):
                for k in range(n):
                    for w in range(m):
                        mul[h * m + z, k * m + w] = (
                            int(base.mul[h, k]) * m + (z + w + int(tbl[h, k])) % m)
        super().__init__(mul, label=f"{base.label or 'H'}~x mu{m}")
        self.base = base
        self.modulus = m
        self.theta = theta
        self.theta_table = tbl
        self.theta_table.setflags(write=False)

    def pair(self, idx):
        return divmod(int(idx), self.modulus)

    def index(self, h, z):
        return int(h) * self.modulus + int(z) % self.modulus

    def lift(self, g):
        """The canonical lift g~ = (g, 1)."""
        return self.index(g, 0)

    def project(self, idx):
        return self.pair(idx)[0]


def central_extension(base: FiniteGroup, theta: Cochain, modulus=None) -> CentralExtension:
    return CentralExtension(base, theta, modulus)


def trivial_group_cochain(base: FiniteGroup, modulus) -> Cochain:
    gpd = action_groupoid(trivial_action(base))
    return Cochain.zero(gpd, 2, modulus)


def group_cochain(base: FiniteGroup, modulus, entries, groupoid=None) -> Cochain:
    """A degree-2 cochain on B(base) from an order x order exponent table."""
    gpd = groupoid if groupoid is not None else action_groupoid(trivial_action(base))
    entries = np.asarray(entries, dtype=np.int64)
    n = base.order
    nc = nerve(gpd)
    table = np.zeros(nc.count(2), dtype=np.int64)
    for g in range(n):
        for h in range(n):
            table[nc.rank((g, h))] = entries[g, h]
    return Cochain(gpd, 2, modulus, table)


@dataclass
class LiftOrder:
    order: int            # N = order of (g, 1) in the extension
    twist_order: int      # h = order of the restricted twist class
    base_order: int       # |g|
    divides: bool         # N | h * |g|

    def __iter__(self):
        return iter((self.order, self.twist_order, self.divides))


def order_of_lift(ext: CentralExtension, g, source_order=None) -> LiftOrder:
    """Order of the canonical lift (g, 1), with the divisibility report.

    source_order, when given, is the cohomology-class order of the
    originating cochain restricted to <g> (e.g. of a 3-cocycle upstream of a
    transgression); otherwise the class order of theta restricted to
    <g> x <g> is computed here.
    """
    N = ext.element_order(ext.lift(g))
    base_order = ext.base.element_order(g)
    if source_order is None:
        h = restricted_theta_class_order(ext, g)
    else:
        h = int(source_order)
    return LiftOrder(N, h, base_order, (h * base_order) % N == 0)


def restricted_theta_class_order(ext: CentralExtension, g) -> int:
    """Order of [theta restricted to <g> x <g>] in H^2(B<g>; mu_m)."""
    sub = cyclic_subgroup(ext.base, g)
    emb = sub.embedding
    entries = ext.theta_table[np.ix_(emb, emb)]
    restricted = group_cochain(sub, ext.modulus, entries)
    return class_order(restricted)


def find_central_lifts(ext: CentralExtension, g):
    """All z with (g, z) central in the extension.

    Requires g central in the base group.  The result is either empty (no
    central lift exists: theta(g, .) is asymmetric) or all m values of z.
    """
    base = ext.base
    if any(base.mul[g, h] != base.mul[h, g] for h in range(base.order)):
        raise ValueError(f"element {g} is not central in the base group")
    m = ext.modulus
    symmetric = all(ext.theta_table[g, h] == ext.theta_table[h, g]
                    for h in range(base.order))
    return list(range(m)) if symmetric else []


class TwistedGroupoid(FiniteGroupoid):
    """Arrows of the base times mu_m, with theta-twisted composition.

    Arrow (a, z) is indexed a * m + z; composition multiplies the mu_m parts
    and adds theta(a, b).  The unit over x is (u_x, -theta(u_x, u_x)), which
    the cocycle identity makes a two-sided unit even for non-normalized
    theta.
    """

    def __init__(self, base: FiniteGroupoid, theta: Cochain, modulus=None):
        m = theta.modulus if modulus is None else int(modulus)
        if m != theta.modulus:
            raise ValueError("modulus disagrees with the cochain")
        if theta.degree != 2 or theta.groupoid is not base:
            raise ValueError("need a degree-2 cochain on the base groupoid")
        chk = is_cocycle(theta)
        if not chk:
            raise ValidationError(
                f"theta is not a cocycle, twisted composition would not be "
                f"associative at {chk.witness}")
        A = base.n_arrows
        nc = nerve(base)
        src = np.repeat(base.src, m)
        tgt = np.repeat(base.tgt, m)
        unit = np.zeros(base.n_objects, dtype=np.int32)
        for x in range(base.n_objects):
            u = int(base.unit[x])
            uu = int(theta.table[nc.rank((u, u))])
            unit[x] = u * m + (-uu) % m
        comp = np.full((A * m, A * m), -1, dtype=np.int32)
        inv = np.zeros(A * m, dtype=np.int32)
        for a in range(A):
            bs = np.flatnonzero(base.src == base.tgt[a])
            for b in bs:
                c = int(base.comp[a, b])
                th = int(theta.table[nc.rank((a, int(b)))])
                for z in range(m):
                    for w in range(m):
                        comp[a * m + z, b * m + w] = c * m + (z + w + th) % m
            ainv = int(base.inv[a])
            th_inv = int(theta.table[nc.rank((a, ainv))])
            u = int(base.unit[base.src[a]])
            uu = int(theta.table[nc.rank((u, u))])
            for z in range(m):
                inv[a * m + z] = ainv * m + (-z - th_inv - uu) % m
        super().__init__(base.n_objects, src, tgt, unit, inv, comp,
                         label=f"({base.label or 'G'})_theta")
        self.base = base
        self.modulus = m
        self.theta = theta


def twisted_groupoid(base: FiniteGroupoid, theta: Cochain, modulus=None) -> TwistedGroupoid:
    return TwistedGroupoid(base, theta, modulus)
