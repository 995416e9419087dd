"""Finite groups and right group actions as dense index tables.

Every group stores a full multiplication table over element indices
0..order-1 with the identity pinned at index 0.  Actions are right actions,
x . g, stored as a points x order table.  All tables are validated
exhaustively at construction.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np


class ValidationError(ValueError):
    """A table failed one of its defining axioms."""


class FiniteGroup:
    """A finite group given by its multiplication table.

    Conventions: elements are 0..order-1, the identity is element 0, and
    mul[g, h] is the product g*h.  The inverse table is derived during
    validation.  Instances are immutable once constructed.
    """

    def __init__(self, mul, label=None):
        mul = np.asarray(mul, dtype=np.int32)
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1]:
            raise ValidationError("multiplication table must be square")
        n = mul.shape[0]
        if n == 0:
            raise ValidationError("group must be nonempty")
        if mul.min() < 0 or mul.max() >= n:
            bad = np.argwhere((mul < 0) | (mul >= n))[0]
            raise ValidationError(
                f"table entry out of range at row {bad[0]}, column {bad[1]}")
        if not np.array_equal(mul[0], np.arange(n)):
            g = int(np.argwhere(mul[0] != np.arange(n))[0][0])
            raise ValidationError(f"element 0 is not a left identity: 0*{g} != {g}")
        if not np.array_equal(mul[:, 0], np.arange(n)):
            g = int(np.argwhere(mul[:, 0] != np.arange(n))[0][0])
            raise ValidationError(f"element 0 is not a right identity: {g}*0 != {g}")

        inv = np.full(n, -1, dtype=np.int32)
        for g in range(n):
            hits = np.flatnonzero(mul[g] == 0)
            if hits.size != 1 or mul[hits[0], g] != 0:
                raise ValidationError(f"no two-sided inverse for element {g}")
            inv[g] = hits[0]

        # (g*h)*k == g*(h*k) on all triples, vectorized per g.
        for g in range(n):
            lhs = mul[mul[g]]          # lhs[h, k] = (g*h)*k
            rhs = mul[g][mul]          # rhs[h, k] = g*(h*k)
            if not np.array_equal(lhs, rhs):
                h, k = map(int, np.argwhere(lhs != rhs)[0])
                raise ValidationError(
                    f"associativity fails at triple ({g}, {h}, {k}): "
                    f"({g}*{h})*{k} = {int(lhs[h, k])} but {g}*({h}*{k}) = {int(rhs[h, k])}")

        self.order = n
        self.mul = mul
        self.mul.setflags(write=False)
        self.inv = inv
        self.inv.setflags(write=False)
        self.label = label

    def __repr__(self):
        name = self.label or f"order {self.order}"
        return f"FiniteGroup({name})"

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and np.array_equal(self.mul, other.mul)

    def conjugate(self, g, h):
        """h^-1 g h."""
        return int(self.mul[self.mul[self.inv[h], g], h])

    def element_order(self, g):
        k, a = 1, g
        while a != 0:
            a = int(self.mul[a, g])
            k += 1
        return k

    def power(self, g, k):
        a = 0
        step = g if k >= 0 else int(self.inv[g])
        for _ in range(abs(k)):
            a = int(self.mul[a, step])
        return a


class Subgroup(FiniteGroup):
    """A subgroup with its embedding into the parent group.

    embedding[i] is the parent index of subgroup element i; element 0 is the
    parent identity.
    """

    def __init__(self, parent, elements, label=None):
        elements = sorted(set(int(e) for e in elements))
        if not elements or elements[0] != 0:
            raise ValidationError("subgroup must contain the identity")
        pos = {e: i for i, e in enumerate(elements)}
        k = len(elements)
        mul = np.zeros((k, k), dtype=np.int32)
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                p = int(parent.mul[a, b])
                if p not in pos:
                    raise ValidationError(
                        f"subset not closed: {a}*{b} = {p} is outside")
                mul[i, j] = pos[p]
        super().__init__(mul, label=label)
        self.parent = parent
        self.embedding = np.array(elements, dtype=np.int32)
        self.embedding.setflags(write=False)

    def parent_index(self, i):
        return int(self.embedding[i])

    def position_of(self, parent_elem):
        hits = np.flatnonzero(self.embedding == parent_elem)
        if hits.size == 0:
            raise ValueError(f"element {parent_elem} not in subgroup")
        return int(hits[0])


def group_from_table(mul, label=None) -> FiniteGroup:
    """Validate a raw multiplication table into a FiniteGroup."""
    return FiniteGroup(mul, label=label)


def conjugacy_classes(group: FiniteGroup):
    """Partition into conjugacy classes, each sorted, ordered by least element.

    Returns (classes, class_index) where classes is a list of lists and
    class_index maps an element to the position of its class.
    """
    n = group.order
    seen = np.zeros(n, dtype=bool)
    classes = []
    class_index = np.zeros(n, dtype=np.int32)
    for g in range(n):
        if seen[g]:
            continue
        orbit = {group.conjugate(g, h) for h in range(n)}
        cls = sorted(orbit)
        for e in cls:
            seen[e] = True
            class_index[e] = len(classes)
        classes.append(cls)
    return classes, class_index


def class_representatives(group: FiniteGroup):
    classes, _ = conjugacy_classes(group)
    return [cls[0] for cls in classes]


def centralizer(group: FiniteGroup, a) -> Subgroup:
    """The subgroup of elements commuting with a, with embedding tables."""
    if not 0 <= a < group.order:
        raise ValueError(f"element {a} out of range")
    elems = [h for h in range(group.order)
             if group.mul[h, a] == group.mul[a, h]]
    return Subgroup(group, elems, label=f"C_{a}")


def cyclic_subgroup(group: FiniteGroup, g) -> Subgroup:
    elems = {0}
    a = g
    while a != 0:
        elems.add(int(a))
        a = int(group.mul[a, g])
    return Subgroup(group, elems, label=f"<{g}>")


def center_elements(group: FiniteGroup):
    n = group.order
    return [g for g in range(n)
            if all(group.mul[g, h] == group.mul[h, g] for h in range(n))]


class GroupAction:
    """A right action of a finite group on a finite point set."""

    def __init__(self, group: FiniteGroup, act, label=None):
        act = np.asarray(act, dtype=np.int32)
        if act.ndim != 2:
            raise ValidationError("action table must be 2-dimensional")
        points, n = act.shape
        if n != group.order:
            raise ValidationError(
                f"action table has {n} columns, expected {group.order}")
        if points and (act.min() < 0 or act.max() >= points):
            bad = np.argwhere((act < 0) | (act >= points))[0]
            raise ValidationError(
                f"action entry out of range at row {bad[0]}, column {bad[1]}")
        if not np.array_equal(act[:, 0], np.arange(points)):
            x = int(np.argwhere(act[:, 0] != np.arange(points))[0][0])
            raise ValidationError(f"identity moves point {x}")
        for g in range(n):
            lhs = act[act[:, g]]               # lhs[x, h] = (x.g).h
            rhs = act[:, group.mul[g]]         # rhs[x, h] = x.(g*h)
            if not np.array_equal(lhs, rhs):
                x, h = map(int, np.argwhere(lhs != rhs)[0])
                raise ValidationError(
                    f"action not compatible at point {x}, pair ({g}, {h})")
        self.group = group
        self.points = points
        self.act = act
        self.act.setflags(write=False)
        self.label = label

    def __repr__(self):
        name = self.label or f"{self.points} points"
        return f"GroupAction({name})"

    def apply(self, x, g):
        return int(self.act[x, g])


def fixed_set(action: GroupAction, a):
    """Points x with x.a == x."""
    return [int(x) for x in np.flatnonzero(action.act[:, a] == np.arange(action.points))]


def trivial_action(group: FiniteGroup, points=1, label=None) -> GroupAction:
    act = np.tile(np.arange(points, dtype=np.int32)[:, None], (1, group.order))
    return GroupAction(group, act, label=label or f"trivial on {points}")


def regular_action(group: FiniteGroup) -> GroupAction:
    return GroupAction(group, group.mul, label=f"regular {group.label or ''}".strip())


# ---------------------------------------------------------------------------
# Built-in groups.  Permutations compose left-to-right ((g*h)(x) = h(g(x))) so
# that x.g := g(x) is a right action.


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("n must be >= 1")
    idx = np.arange(n)
    return FiniteGroup((idx[:, None] + idx[None, :]) % n, label=f"Z{n}")


def klein_four_group() -> FiniteGroup:
    idx = np.arange(4)
    return FiniteGroup(idx[:, None] ^ idx[None, :], label="V4")


def _perm_group(perms, label):
    perms = sorted(perms)  # identity is the lexicographic minimum
    pos = {p: i for i, p in enumerate(perms)}
    k = len(perms)
    mul = np.zeros((k, k), dtype=np.int32)
    for i, g in enumerate(perms):
        for j, h in enumerate(perms):
            gh = tuple(h[g[x]] for x in range(len(g)))
            mul[i, j] = pos[gh]
    grp = FiniteGroup(mul, label=label)
    grp.perms = perms
    return grp


def symmetric_group(n: int) -> FiniteGroup:
    return _perm_group(list(permutations(range(n))), label=f"S{n}")


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n, as vertex permutations."""
    if n < 3:
        raise ValueError("dihedral group needs n >= 3")
    perms = []
    for i in range(n):
        perms.append(tuple((x + i) % n for x in range(n)))        # rotations
        perms.append(tuple((i - x) % n for x in range(n)))        # reflections
    return _perm_group(perms, label=f"D{n}")


def quaternion_group() -> FiniteGroup:
    """Q8 with elements ordered 1, i, j, k, -1, -i, -j, -k."""
    # unit multiplication: (sign, axis) with axes e=0, i=1, j=2, k=3.
    axis_mul = {}
    for a in range(4):
        axis_mul[(0, a)] = (0, a)
        axis_mul[(a, 0)] = (0, a)
    for a in (1, 2, 3):
        axis_mul[(a, a)] = (1, 0)
    for (a, b), c in {(1, 2): 3, (2, 3): 1, (3, 1): 2}.items():
        axis_mul[(a, b)] = (0, c)
        axis_mul[(b, a)] = (1, c)
    mul = np.zeros((8, 8), dtype=np.int32)
    for x in range(8):
        for y in range(8):
            sa, a = divmod(x, 4)
            sb, b = divmod(y, 4)
            s, c = axis_mul[(a, b)]
            mul[x, y] = ((sa + sb + s) % 2) * 4 + c
    return FiniteGroup(mul, label="Q8")


BUILTIN_KINDS = ("cyclic", "dihedral", "symmetric", "klein4", "quaternion8")


def builtin_group(kind: str, n=None) -> FiniteGroup:
    if kind == "cyclic":
        return cyclic_group(int(n))
    if kind == "dihedral":
        return dihedral_group(int(n))
    if kind == "symmetric":
        return symmetric_group(int(n))
    if kind == "klein4":
        return klein_four_group()
    if kind == "quaternion8":
        return quaternion_group()
    raise ValueError(f"unknown group kind {kind!r} (expected one of {BUILTIN_KINDS})")
