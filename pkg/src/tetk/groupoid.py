"""Finite groupoids: dense arrow tables, functors, and the constructions
(action groupoid, inertia groupoid, center, equivalences, loop reduction)
the cochain calculus runs on.

Arrows are stored in a flat indexed list; composition is a dense pair table
with -1 marking incomposable pairs, so composition is O(1) during nerve
enumeration.  All axioms are checked exhaustively at construction and every
value is immutable afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from tetk.groups import (FiniteGroup, GroupAction, Subgroup, ValidationError,
                         centralizer, class_representatives, conjugacy_classes,
                         fixed_set)


class FiniteGroupoid:
    """A finite groupoid with validated structure tables.

    src, tgt: (A,) object indices; unit: (n_objects,) arrow indices;
    inv: (A,); comp: (A, A) with comp[a, b] = a.b when tgt[a] == src[b],
    else -1.
    """

    def __init__(self, n_objects, src, tgt, unit, inv, comp, label=None):
        src = np.asarray(src, dtype=np.int32)
        tgt = np.asarray(tgt, dtype=np.int32)
        unit = np.asarray(unit, dtype=np.int32)
        inv = np.asarray(inv, dtype=np.int32)
        comp = np.asarray(comp, dtype=np.int32)
        A = src.shape[0]
        if tgt.shape != (A,) or inv.shape != (A,) or comp.shape != (A, A):
            raise ValidationError("arrow table shapes disagree")
        if unit.shape != (n_objects,):
            raise ValidationError("unit table must have one arrow per object")
        if A and (src.min() < 0 or src.max() >= n_objects
                  or tgt.min() < 0 or tgt.max() >= n_objects):
            raise ValidationError("src/tgt out of range")
        if A and (inv.min() < 0 or inv.max() >= A):
            raise ValidationError("inverse table out of range")
        if n_objects and A == 0:
            raise ValidationError("objects need unit arrows")

        self.n_objects = int(n_objects)
        self.n_arrows = int(A)
        self.src, self.tgt, self.unit, self.inv, self.comp = src, tgt, unit, inv, comp
        for arr in (src, tgt, unit, inv, comp):
            arr.setflags(write=False)
        self.label = label
        self._validate()

    def _validate(self):
        src, tgt, unit, inv, comp = self.src, self.tgt, self.unit, self.inv, self.comp
        n, A = self.n_objects, self.n_arrows
        objs = np.arange(n)
        if n and not (np.array_equal(src[unit], objs) and np.array_equal(tgt[unit], objs)):
            raise ValidationError("unit arrows must be endoarrows of their objects")
        composable = tgt[:, None] == src[None, :] if A else np.zeros((0, 0), bool)
        if not np.array_equal(comp >= 0, composable):
            a, b = map(int, np.argwhere((comp >= 0) != composable)[0])
            raise ValidationError(f"composability mismatch at pair ({a}, {b})")
        if A:
            pa, pb = np.nonzero(composable)
            prods = comp[pa, pb]
            if not (np.array_equal(src[prods], src[pa]) and np.array_equal(tgt[prods], tgt[pb])):
                raise ValidationError("composition breaks src/tgt")
            if not np.array_equal(comp[unit[src], np.arange(A)], np.arange(A)):
                a = int(np.argwhere(comp[unit[src], np.arange(A)] != np.arange(A))[0][0])
                raise ValidationError(f"left unit law fails at arrow {a}")
            if not np.array_equal(comp[np.arange(A), unit[tgt]], np.arange(A)):
                a = int(np.argwhere(comp[np.arange(A), unit[tgt]] != np.arange(A))[0][0])
                raise ValidationError(f"right unit law fails at arrow {a}")
            if not (np.array_equal(src[inv], tgt) and np.array_equal(tgt[inv], src)):
                raise ValidationError("inverse arrows must swap src and tgt")
            if not np.array_equal(comp[np.arange(A), inv], unit[src]):
                a = int(np.argwhere(comp[np.arange(A), inv] != unit[src])[0][0])
                raise ValidationError(f"a.inv(a) is not a unit at arrow {a}")
            if not np.array_equal(comp[inv, np.arange(A)], unit[tgt]):
                raise ValidationError("inv(a).a is not a unit")
            # associativity on all composable triples, grouped by middle arrow
            for b in range(A):
                ins = np.flatnonzero(tgt == src[b])
                outs = np.flatnonzero(src == tgt[b])
                if ins.size == 0 or outs.size == 0:
                    continue
                lhs = comp[comp[ins, b][:, None], outs[None, :]]
                rhs = comp[ins[:, None], comp[b, outs][None, :]]
                if not np.array_equal(lhs, rhs):
                    i, j = map(int, np.argwhere(lhs != rhs)[0])
                    raise ValidationError(
                        f"associativity fails at triple ({int(ins[i])}, {b}, {int(outs[j])})")

    def __repr__(self):
        name = self.label or f"{self.n_objects} objects, {self.n_arrows} arrows"
        return f"FiniteGroupoid({name})"

    def compose(self, a, b):
        c = int(self.comp[a, b])
        if c < 0:
            raise ValueError(f"arrows {a} and {b} are not composable")
        return c

    def is_unit(self):
        """Boolean mask of unit arrows."""
        mask = np.zeros(self.n_arrows, dtype=bool)
        mask[self.unit] = True
        return mask

    def hom(self, x, y):
        return [int(a) for a in np.flatnonzero((self.src == x) & (self.tgt == y))]

    def self_arrows(self):
        return [int(a) for a in np.flatnonzero(self.src == self.tgt)]


class GroupoidFunctor:
    """A functor between finite groupoids, validated by table scan."""

    def __init__(self, domain, codomain, obj_map, arr_map):
        obj_map = np.asarray(obj_map, dtype=np.int32)
        arr_map = np.asarray(arr_map, dtype=np.int32)
        if obj_map.shape != (domain.n_objects,) or arr_map.shape != (domain.n_arrows,):
            raise ValidationError("functor maps have wrong shape")
        if domain.n_objects and (obj_map.min() < 0 or obj_map.max() >= codomain.n_objects):
            raise ValidationError("object map out of range")
        if domain.n_arrows and (arr_map.min() < 0 or arr_map.max() >= codomain.n_arrows):
            raise ValidationError("arrow map out of range")
        if not np.array_equal(codomain.src[arr_map], obj_map[domain.src]):
            raise ValidationError("functor breaks sources")
        if not np.array_equal(codomain.tgt[arr_map], obj_map[domain.tgt]):
            raise ValidationError("functor breaks targets")
        if not np.array_equal(arr_map[domain.unit], codomain.unit[obj_map]):
            raise ValidationError("functor breaks units")
        pa, pb = np.nonzero(domain.comp >= 0)
        if pa.size:
            lhs = arr_map[domain.comp[pa, pb]]
            rhs = codomain.comp[arr_map[pa], arr_map[pb]]
            if not np.array_equal(lhs, rhs):
                k = int(np.argwhere(lhs != rhs)[0][0])
                raise ValidationError(
                    f"functor breaks composition at pair ({int(pa[k])}, {int(pb[k])})")
        self.domain = domain
        self.codomain = codomain
        self.obj_map = obj_map
        self.arr_map = arr_map

    def __repr__(self):
        return f"GroupoidFunctor({self.domain!r} -> {self.codomain!r})"


def identity_functor(gpd):
    return GroupoidFunctor(gpd, gpd, np.arange(gpd.n_objects), np.arange(gpd.n_arrows))


def compose_functors(f, g):
    """g after f (apply f first)."""
    if f.codomain is not g.domain:
        raise ValueError("functors not composable")
    return GroupoidFunctor(f.domain, g.codomain,
                           g.obj_map[f.obj_map], g.arr_map[f.arr_map])


@dataclass
class EquivalenceReport:
    ok: bool
    reason: str = ""
    witness: object = None

    def __bool__(self):
        return self.ok


def is_equivalence(f: GroupoidFunctor) -> EquivalenceReport:
    """Essential surjectivity plus full faithfulness, checked exhaustively.

    On failure the report carries a witness: an unreachable codomain object,
    or a domain object pair where the hom map fails to biject.
    """
    dom, cod = f.domain, f.codomain
    image = set(int(y) for y in f.obj_map)
    reachable = set(image)
    for a in range(cod.n_arrows):
        if int(cod.src[a]) in image:
            reachable.add(int(cod.tgt[a]))
    for y in range(cod.n_objects):
        if y not in reachable:
            return EquivalenceReport(False, "not essentially surjective", y)
    for x1 in range(dom.n_objects):
        for x2 in range(dom.n_objects):
            hom = dom.hom(x1, x2)
            target = cod.hom(int(f.obj_map[x1]), int(f.obj_map[x2]))
            mapped = [int(f.arr_map[a]) for a in hom]
            if len(set(mapped)) != len(mapped):
                seen = {}
                for a, fa in zip(hom, mapped):
                    if fa in seen:
                        return EquivalenceReport(
                            False, "not injective on hom", (x1, x2, seen[fa], a))
                    seen[fa] = a
            missing = set(target) - set(mapped)
            if missing:
                return EquivalenceReport(
                    False, "not surjective on hom", (x1, x2, min(missing)))
    return EquivalenceReport(True)


# ---------------------------------------------------------------------------
# Action groupoids


def action_groupoid(action: GroupAction, label=None) -> FiniteGroupoid:
    """Objects are points, arrows (x, g): x -> x.g, indexed as x*|G| + g."""
    G = action.group
    n, k = G.order, action.points
    A = k * n
    idx = np.arange(A)
    xs, gs = idx // n, idx % n
    src = xs
    tgt = action.act[xs, gs]
    unit = np.arange(k) * n
    inv = tgt * n + G.inv[gs]
    comp = np.full((A, A), -1, dtype=np.int32)
    # (x, g).(x.g, h) = (x, g*h)
    for a in range(A):
        x, g = divmod(a, n)
        bs = int(tgt[a]) * n + np.arange(n)
        comp[a, bs] = x * n + G.mul[g]
    gpd = FiniteGroupoid(k, src, tgt, unit, inv, comp,
                         label=label or (f"{action.label or 'X'} // {G.label or 'G'}"))
    gpd.action = action
    return gpd


def arrow_from_pair(gpd, x, g):
    """Arrow index of (x, g) in an action groupoid."""
    return int(x) * gpd.action.group.order + int(g)


def pair_from_arrow(gpd, a):
    return divmod(int(a), gpd.action.group.order)


def delta_groupoid(n_points) -> FiniteGroupoid:
    """The discrete groupoid: n objects, unit arrows only."""
    idx = np.arange(n_points)
    comp = np.full((n_points, n_points), -1, dtype=np.int32)
    comp[idx, idx] = idx
    return FiniteGroupoid(n_points, idx, idx, idx, idx, comp, label=f"discrete({n_points})")


# ---------------------------------------------------------------------------
# Inertia


class InertiaData:
    """Index bookkeeping for an inertia groupoid.

    objects: base self-arrow index per inertia object.
    arrow (o, h): src = o, tgt = object of inv(h).a_o.h, enumerated with h
    running over base arrows out of src(a_o), ascending.
    """

    def __init__(self, base):
        self.base = base
        self.objects = np.array(base.self_arrows(), dtype=np.int32)
        self.obj_pos = {int(a): i for i, a in enumerate(self.objects)}
        outs = [np.flatnonzero(base.src == base.src[a]).astype(np.int32)
                for a in self.objects]
        self.out_arrows = outs
        self.offsets = np.zeros(len(self.objects) + 1, dtype=np.int64)
        np.cumsum([o.size for o in outs], out=self.offsets[1:])
        self.arr_obj = np.concatenate(
            [np.full(o.size, i, dtype=np.int32) for i, o in enumerate(outs)]
        ) if outs else np.zeros(0, dtype=np.int32)
        self.arr_h = np.concatenate(outs) if outs else np.zeros(0, dtype=np.int32)

    def arrow_index(self, obj_index, h):
        lo, hi = self.offsets[obj_index], self.offsets[obj_index + 1]
        block = self.arr_h[lo:hi]
        k = int(np.searchsorted(block, h))
        if k >= block.size or block[k] != h:
            raise ValueError(f"arrow {h} does not start at the object's base point")
        return int(lo) + k

    def conjugated(self, obj_index, h):
        """Base self-arrow inv(h) . a . h."""
        base = self.base
        a = int(self.objects[obj_index])
        return int(base.comp[base.comp[base.inv[h], a], h])


def inertia_groupoid(base: FiniteGroupoid):
    """The inertia groupoid plus its index bookkeeping.

    Objects are the self-arrows of the base; an arrow (a, h) runs from a to
    inv(h).a.h, and composition is inherited from the base.
    """
    data = InertiaData(base)
    n_obj = len(data.objects)
    A = int(data.arr_h.size)
    src = data.arr_obj.copy()
    tgt = np.array([data.obj_pos[data.conjugated(int(o), int(h))]
                    for o, h in zip(data.arr_obj, data.arr_h)], dtype=np.int32) \
        if A else np.zeros(0, dtype=np.int32)
    unit = np.array([data.arrow_index(i, int(base.unit[base.src[a]]))
                     for i, a in enumerate(data.objects)], dtype=np.int32)
    inv = np.array([data.arrow_index(int(tgt[k]), int(base.inv[data.arr_h[k]]))
                    for k in range(A)], dtype=np.int32) if A else np.zeros(0, dtype=np.int32)
    comp = np.full((A, A), -1, dtype=np.int32)
    for k in range(A):
        o2 = int(tgt[k])
        lo, hi = data.offsets[o2], data.offsets[o2 + 1]
        for b in range(int(lo), int(hi)):
            comp[k, b] = data.arrow_index(
                int(src[k]), int(base.comp[data.arr_h[k], data.arr_h[b]]))
    lam = FiniteGroupoid(n_obj, src, tgt, unit, inv, comp,
                         label=f"Lambda({base.label or 'G'})")
    lam.inertia = data
    return lam


def full_subgroupoid(gpd, object_subset, label=None):
    """The full subgroupoid on a set of objects, with its inclusion functor."""
    objs = sorted(set(int(x) for x in object_subset))
    obj_pos = {x: i for i, x in enumerate(objs)}
    keep = np.array([a for a in range(gpd.n_arrows)
                     if int(gpd.src[a]) in obj_pos and int(gpd.tgt[a]) in obj_pos],
                    dtype=np.int32)
    arr_pos = {int(a): i for i, a in enumerate(keep)}
    A = keep.size
    src = np.array([obj_pos[int(gpd.src[a])] for a in keep], dtype=np.int32)
    tgt = np.array([obj_pos[int(gpd.tgt[a])] for a in keep], dtype=np.int32)
    unit = np.array([arr_pos[int(gpd.unit[x])] for x in objs], dtype=np.int32)
    inv = np.array([arr_pos[int(gpd.inv[a])] for a in keep], dtype=np.int32)
    comp = np.full((A, A), -1, dtype=np.int32)
    for i, a in enumerate(keep):
        for j, b in enumerate(keep):
            c = int(gpd.comp[a, b])
            if c >= 0:
                comp[i, j] = arr_pos[c]
    sub = FiniteGroupoid(len(objs), src, tgt, unit, inv, comp, label=label)
    inclusion = GroupoidFunctor(sub, gpd,
                                np.array(objs, dtype=np.int32), keep)
    return sub, inclusion


@dataclass
class InertiaComponent:
    """One conjugacy-class component of the inertia decomposition."""
    rep: int                      # class representative g
    centralizer: Subgroup         # C_g with embedding into G
    fixed_points: list            # X^g as point indices
    model: FiniteGroupoid         # action groupoid X^g // C_g
    component: FiniteGroupoid     # the matching component of Lambda(X // G)
    functor: GroupoidFunctor      # model -> component (an equivalence)
    inclusion: GroupoidFunctor    # component -> Lambda(X // G)

    @property
    def into_inertia(self):
        return compose_functors(self.functor, self.inclusion)


def fixed_point_action(action: GroupAction, g) -> tuple[Subgroup, GroupAction, list]:
    """The centralizer C_g acting on the fixed set X^g."""
    cg = centralizer(action.group, g)
    pts = fixed_set(action, g)
    pos = {x: i for i, x in enumerate(pts)}
    act = np.zeros((len(pts), cg.order), dtype=np.int32)
    for i, x in enumerate(pts):
        for j in range(cg.order):
            act[i, j] = pos[int(action.act[x, cg.embedding[j]])]
    sub_action = GroupAction(cg, act, label=f"X^{g} with C_{g}")
    return cg, sub_action, pts


def inertia_decomposition(action: GroupAction):
    """One equivalence X^g // C_g -> component of Lambda(X // G) per class.

    Returns (lam, components) where lam is the inertia groupoid of the action
    groupoid and components is a list of InertiaComponent in class order.
    """
    gpd = action_groupoid(action)
    lam = inertia_groupoid(gpd)
    data = lam.inertia
    G = action.group
    _, class_index = conjugacy_classes(G)
    components = []
    for rep in class_representatives(G):
        cg, sub_action, pts = fixed_point_action(action, rep)
        model = action_groupoid(sub_action, label=f"X^{rep} // C_{rep}")
        cls = class_index[rep]
        comp_objs = [i for i, a in enumerate(data.objects)
                     if class_index[int(a) % G.order] == cls]
        component, inclusion = full_subgroupoid(
            lam, comp_objs, label=f"Lambda[{rep}]")
        # model object x -> inertia object (x, rep); arrow (x, h) -> ((x, rep), emb h)
        comp_obj_pos = {int(inclusion.obj_map[i]): i for i in range(component.n_objects)}
        obj_map = np.array(
            [comp_obj_pos[data.obj_pos[arrow_from_pair(gpd, x, rep)]] for x in pts],
            dtype=np.int32)
        comp_arr_pos = {int(inclusion.arr_map[i]): i for i in range(component.n_arrows)}
        arr_map = np.zeros(model.n_arrows, dtype=np.int32)
        for a in range(model.n_arrows):
            xi, hi = pair_from_arrow(model, a)
            x = pts[xi]
            h = int(cg.embedding[hi])
            lam_obj = data.obj_pos[arrow_from_pair(gpd, x, rep)]
            lam_arrow = data.arrow_index(lam_obj, arrow_from_pair(gpd, x, h))
            arr_map[a] = comp_arr_pos[lam_arrow]
        functor = GroupoidFunctor(model, component, obj_map, arr_map)
        components.append(InertiaComponent(
            rep=rep, centralizer=cg, fixed_points=pts, model=model,
            component=component, functor=functor, inclusion=inclusion))
    return lam, components


# ---------------------------------------------------------------------------
# Center


def groupoid_center(gpd, budget=100000):
    """All natural transformations id => id, as object -> self-arrow tables.

    A central family is determined on each connected component by its value
    at one object, so the search propagates along arrows instead of taking a
    raw product over objects; it is still exhaustive.
    """
    n = gpd.n_objects
    if n == 0:
        return [()]
    comp_id = np.full(n, -1, dtype=np.int64)
    n_comp = 0
    tree = {}  # object -> arrow used to reach it from its component base
    for x0 in range(n):
        if comp_id[x0] >= 0:
            continue
        comp_id[x0] = n_comp
        stack = [x0]
        while stack:
            x = stack.pop()
            for a in range(gpd.n_arrows):
                if gpd.src[a] == x and comp_id[gpd.tgt[a]] < 0:
                    comp_id[gpd.tgt[a]] = n_comp
                    tree[int(gpd.tgt[a])] = int(a)
                    stack.append(int(gpd.tgt[a]))
        n_comp += 1
    bases = [int(np.flatnonzero(comp_id == c)[0]) for c in range(n_comp)]

    per_component = []
    for c, x0 in enumerate(bases):
        members = [int(x) for x in np.flatnonzero(comp_id == c)]
        candidates = []
        for xi in gpd.hom(x0, x0):
            family = {x0: xi}
            ok = True
            # propagate along the spanning tree: xi_y = inv(a) . xi_x . a
            pending = [x for x in members if x != x0]
            while pending:
                progressed = False
                rest = []
                for y in pending:
                    a = tree[y]
                    x = int(gpd.src[a])
                    if x in family:
                        family[y] = int(gpd.comp[gpd.comp[gpd.inv[a], family[x]], a])
                        progressed = True
                    else:
                        rest.append(y)
                pending = rest
                if not progressed and pending:
                    raise RuntimeError("spanning tree propagation stalled")
            for a in range(gpd.n_arrows):
                sa, ta = int(gpd.src[a]), int(gpd.tgt[a])
                if sa in family and ta in family:
                    if gpd.comp[family[sa], a] != gpd.comp[a, family[ta]]:
                        ok = False
                        break
            if ok:
                candidates.append(family)
        per_component.append(candidates)

    total = 1
    for cands in per_component:
        total *= len(cands)
        if total > budget:
            raise RuntimeError(f"center has more than {budget} families")
    out = []
    import itertools
    for choice in itertools.product(*per_component):
        family = [0] * n
        for fam in choice:
            for x, xi in fam.items():
                family[x] = xi
        out.append(tuple(family))
    return out


# ---------------------------------------------------------------------------
# Discrete loops and their reduction to the trivial cover


@dataclass
class DiscreteLoop:
    """A cyclic chain of group elements over an action: x_i . g_i = x_{i+1}."""
    action: GroupAction
    vertices: list
    elements: list

    def __post_init__(self):
        if len(self.vertices) != len(self.elements) or not self.vertices:
            raise ValidationError("loop needs equally many vertices and elements")
        n = len(self.vertices)
        for i in range(n):
            x, g = self.vertices[i], self.elements[i]
            if int(self.action.act[x, g]) != self.vertices[(i + 1) % n]:
                raise ValidationError(
                    f"edge condition fails at segment {i}: "
                    f"{x}.{g} != {self.vertices[(i + 1) % n]}")


@dataclass
class ReducedLoop:
    base_point: int
    element: int
    witness: list  # per-segment group elements w_i, w_0 = identity

    def __iter__(self):
        return iter((self.base_point, self.element, self.witness))


def reduce_discrete_loop(loop: DiscreteLoop) -> ReducedLoop:
    """Collapse a loop to the trivial cover: base x_0 and g = g_0 g_1 ... g_{n-1}.

    The witness w_i = (g_0 ... g_{i-1})^-1 carries vertex x_i back to the
    base segment; recomposing the reduced loop through the witness restores
    the input edges exactly (g_i = w_i . e_i . w_{i+1}^-1 with e_i the
    reduced edge).
    """
    G = loop.action.group
    n = len(loop.elements)
    prefix = [0]
    for g in loop.elements[:-1]:
        prefix.append(int(G.mul[prefix[-1], g]))
    total = int(G.mul[prefix[-1], loop.elements[-1]])
    witness = [int(G.inv[p]) for p in prefix]
    return ReducedLoop(loop.vertices[0], total, witness)
