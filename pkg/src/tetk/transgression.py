"""Transgression of cochains on an action groupoid to its inertia groupoid.

A degree-3 cochain alpha on X // G transgresses to a degree-2 cochain theta
on Lambda(X // G): at an object (x, g) and composable conjugation arrows
h1, h2,

    theta = alpha(x, g, h1, h2) * alpha(x, h1, h2, (h1 h2)^-1 g h1 h2)
            / alpha(x, h1, h1^-1 g h1, h2),

written additively in exponents.  Restricted to the centralizer directions
(h1, h2 in C_g) the last two arguments collapse and theta becomes a cochain
on the fixed-point action groupoid X^g // C_g, which matches the pullback of
the full theta along the inertia decomposition.  One degree down, a 2-cochain
beta transgresses to the 1-cochain

    F((x,g); h) = beta(x, h, h^-1 g h) / beta(x, g, h),

the unique sign/order variant for which transgress3(delta beta) equals
delta(transgress2(beta)) entrywise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from tetk.cochain import (CheckResult, Cochain, coboundary, is_cocycle,
                          is_normalized, pullback_cochain)
from tetk.groupoid import (InertiaComponent, arrow_from_pair,
                           inertia_decomposition, pair_from_arrow)
from tetk.nerve import nerve


def _alpha_key(alpha, x, elems):
    """Exponent of alpha at the action-groupoid tuple keyed (x, g_1..g_p)."""
    action = alpha.groupoid.action
    n = action.group.order
    arrows = []
    for g in elems:
        arrows.append(x * n + g)
        x = int(action.act[x, g])
    return int(alpha.table[nerve(alpha.groupoid).rank(arrows)])


@dataclass
class TransgressionResult:
    """Full-inertia theta plus its conjugacy-class restrictions."""
    alpha: Cochain
    inertia: object                      # Lambda(X // G)
    theta: Cochain                       # degree 2 on the inertia groupoid
    components: list                     # InertiaComponent per conjugacy class
    restrictions: dict = field(default_factory=dict)  # class rep -> Cochain

    def component_for(self, rep):
        for comp in self.components:
            if comp.rep == rep:
                return comp
        raise ValueError(f"{rep} is not a chosen class representative")


def transgress3(alpha: Cochain, require_normalized=True) -> TransgressionResult:
    """Transgress a 3-cocycle on X // G to a 2-cocycle on Lambda(X // G).

    The inertia formula is only refinement-independent for normalized input,
    so non-normalized cocycles are rejected unless the caller opts out
    (the coboundary-lemma check needs the raw formula on delta beta, which is
    rarely normalized).
    """
    gpd = alpha.groupoid
    if getattr(gpd, "action", None) is None:
        raise ValueError("transgression needs a cochain on an action groupoid")
    if alpha.degree != 3:
        raise ValueError("transgress3 takes a degree-3 cochain")
    chk = is_cocycle(alpha)
    if not chk:
        raise ValueError(f"alpha is not a cocycle: {chk.detail}")
    if require_normalized and not is_normalized(alpha):
        raise ValueError("alpha is not normalized; normalize_3cocycle it first "
                         "(or pass require_normalized=False)")

    action = gpd.action
    G = action.group
    lam, components = inertia_decomposition(action)
    data = lam.inertia

    pairs = nerve(lam).tuples(2)
    table = np.zeros(pairs.shape[0], dtype=np.int64)
    for i in range(pairs.shape[0]):
        a1, a2 = int(pairs[i, 0]), int(pairs[i, 1])
        o1 = int(data.arr_obj[a1])
        x, g = pair_from_arrow(gpd, int(data.objects[o1]))
        h1 = pair_from_arrow(gpd, int(data.arr_h[a1]))[1]
        h2 = pair_from_arrow(gpd, int(data.arr_h[a2]))[1]
        g1 = G.conjugate(g, h1)
        g2 = G.conjugate(g, int(G.mul[h1, h2]))
        table[i] = (_alpha_key(alpha, x, (g, h1, h2))
                    + _alpha_key(alpha, x, (h1, h2, g2))
                    - _alpha_key(alpha, x, (h1, g1, h2)))
    theta = Cochain(lam, 2, alpha.modulus, table)
    chk = is_cocycle(theta)
    assert chk, f"transgressed theta failed the cocycle check: {chk.detail}"

    result = TransgressionResult(alpha, lam, theta, components)
    for comp in components:
        result.restrictions[comp.rep] = _restriction(alpha, comp, theta)
    return result


def _restriction(alpha, comp: InertiaComponent, theta=None):
    """theta_g on X^g // C_g by the centralizer formula, cross-checked
    against the pullback of the full theta when that is supplied."""
    g = comp.rep
    model = comp.model
    emb = comp.centralizer.embedding
    pts = comp.fixed_points
    pairs = nerve(model).tuples(2)
    table = np.zeros(pairs.shape[0], dtype=np.int64)
    for i in range(pairs.shape[0]):
        xi, hi = pair_from_arrow(model, int(pairs[i, 0]))
        ki = pair_from_arrow(model, int(pairs[i, 1]))[1]
        x, h, k = pts[xi], int(emb[hi]), int(emb[ki])
        table[i] = (_alpha_key(alpha, x, (g, h, k))
                    + _alpha_key(alpha, x, (h, k, g))
                    - _alpha_key(alpha, x, (h, g, k)))
    out = Cochain(model, 2, alpha.modulus, table)
    if theta is not None:
        pulled = pullback_cochain(comp.into_inertia, theta)
        assert out == pulled, (
            f"class {g}: restriction disagrees with the pullback of theta")
    return out


def restrict_to_centralizer(result: TransgressionResult, rep) -> Cochain:
    """theta_g for a chosen class representative (rejects non-representatives)."""
    if rep not in result.restrictions:
        raise ValueError(f"{rep} is not a chosen class representative")
    return result.restrictions[rep]


def transgress2(beta: Cochain) -> Cochain:
    """Transgress a 2-cochain on X // G to a 1-cochain on Lambda(X // G)."""
    gpd = beta.groupoid
    if getattr(gpd, "action", None) is None:
        raise ValueError("transgression needs a cochain on an action groupoid")
    if beta.degree != 2:
        raise ValueError("transgress2 takes a degree-2 cochain")
    from tetk.groupoid import inertia_groupoid

    G = gpd.action.group
    lam = inertia_groupoid(gpd)
    data = lam.inertia
    table = np.zeros(lam.n_arrows, dtype=np.int64)
    for a in range(lam.n_arrows):
        o = int(data.arr_obj[a])
        x, g = pair_from_arrow(gpd, int(data.objects[o]))
        h = pair_from_arrow(gpd, int(data.arr_h[a]))[1]
        table[a] = (_alpha_key(beta, x, (h, G.conjugate(g, h)))
                    - _alpha_key(beta, x, (g, h)))
    return Cochain(lam, 1, beta.modulus, table)


def source_restriction(alpha: Cochain, g, x0=0) -> Cochain:
    """alpha pulled back to B<g> along the inclusion at a fixed point x0.

    The class order of this restriction is the h in the lift-order
    divisibility law |g~| divides h |g|.
    """
    from tetk.groupoid import GroupoidFunctor, action_groupoid
    from tetk.groups import cyclic_subgroup, trivial_action

    action = alpha.groupoid.action
    G = action.group
    if int(action.act[x0, g]) != x0:
        raise ValueError(f"point {x0} is not fixed by {g}")
    sub = cyclic_subgroup(G, g)
    arr_map = [x0 * G.order + int(e) for e in sub.embedding]
    incl = GroupoidFunctor(action_groupoid(trivial_action(sub)), alpha.groupoid,
                           [x0], arr_map)
    return pullback_cochain(incl, alpha)


def source_class_order(alpha: Cochain, g, x0=0) -> int:
    from tetk.cohomology import class_order

    return class_order(source_restriction(alpha, g, x0))


@dataclass
class LemmaReport:
    checks: list  # (name, CheckResult)
    witness: Cochain | None = None

    @property
    def ok(self):
        return all(bool(r) for _, r in self.checks)

    def __bool__(self):
        return self.ok


def verify_transgression_lemmas(alpha=None, beta=None) -> LemmaReport:
    """Check the two transgression lemmas on explicit input.

    With a 3-cocycle alpha: transgress3(alpha) is again a cocycle.  With a
    2-cochain beta: transgress3(delta beta) equals the coboundary of
    transgress2(beta) entrywise, exhibiting the transgressed coboundary as a
    coboundary with explicit witness F.  Failures carry the offending tuple
    and both exponents.
    """
    checks = []
    witness = None
    if alpha is not None:
        res = transgress3(alpha, require_normalized=False)
        checks.append(("cocycle-to-cocycle", is_cocycle(res.theta)))
    if beta is not None:
        dbeta = coboundary(beta)
        res = transgress3(dbeta, require_normalized=False)
        witness = transgress2(beta)
        lhs = res.theta
        rhs = coboundary(witness)
        if np.array_equal(lhs.table, rhs.table):
            checks.append(("coboundary-to-coboundary", CheckResult(True)))
        else:
            i = int(np.flatnonzero(lhs.table != rhs.table)[0])
            tup = tuple(int(a) for a in nerve(res.inertia).tuples(2)[i])
            checks.append(("coboundary-to-coboundary", CheckResult(
                False, witness=tup,
                detail=(f"tuple {tup}: transgressed {int(lhs.table[i])} "
                        f"!= coboundary {int(rhs.table[i])}"))))
    return LemmaReport(checks, witness)
