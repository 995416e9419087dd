"""Bundled fixture corpus: groups, actions, cocycle generators, and the two
worked examples (the Z/2 chain and the V4 cocycle with no central lift).

The registry is an ordered of name -> constructor and is stable across runs,
so reports built from it are reproducible byte for byte.
"""

from __future__ import annotations

import numpy as np

from tetk.cochain import Cochain, standard_cyclic_3cocycle
from tetk.extension import central_extension, group_cochain
from tetk.groupoid import action_groupoid
from tetk.groups import (GroupAction, builtin_group, cyclic_group,
                         dihedral_group, klein_four_group, quaternion_group,
                         symmetric_group, trivial_action)


def fixture_groups():
    groups = {}
    for n in range(1, 9):
        groups[f"z{n}"] = cyclic_group(n)
    groups["v4"] = klein_four_group()
    groups["s3"] = symmetric_group(3)
    groups["d4"] = dihedral_group(4)
    groups["q8"] = quaternion_group()
    return groups


def natural_action(group):
    """Permutation groups acting on their points: x . g = g(x)."""
    perms = group.perms
    k = len(perms[0])
    act = np.array([[perms[g][x] for g in range(group.order)] for x in range(k)],
                   dtype=np.int32)
    return GroupAction(group, act, label=f"natural {group.label}")


def fixture_actions():
    z2 = cyclic_group(2)
    s3 = symmetric_group(3)
    actions = {
        "point_z2": trivial_action(z2, label="point_z2"),
        "point_z4": trivial_action(cyclic_group(4), label="point_z4"),
        "point_s3": trivial_action(s3, label="point_s3"),
        "swap2_z2": GroupAction(z2, np.array([[0, 1], [1, 0]]), label="swap2_z2"),
        "z2_on3": GroupAction(z2, np.array([[0, 1], [1, 0], [2, 2]]), label="z2_on3"),
        "z2_on4": GroupAction(z2, np.array([[0, 1], [1, 0], [2, 3], [3, 2]]),
                              label="z2_on4"),
        "s3_natural": natural_action(s3),
    }
    return actions


def alpha_std(n, k, groupoid=None):
    return standard_cyclic_3cocycle(n, k, groupoid=groupoid)


def fixture_cocycles():
    """All alpha_std generators at n <= 6, keyed alpha_std_n_k."""
    out = {}
    for n in range(2, 7):
        gpd = action_groupoid(trivial_action(cyclic_group(n)))
        for k in range(n):
            out[f"alpha_std_{n}_{k}"] = standard_cyclic_3cocycle(n, k, groupoid=gpd)
    return out


def v4_asymmetric_theta():
    """theta((a1,a2),(b1,b2)) = (-1)^(a2 b1) on B(V4): a 2-cocycle whose
    lifts of g = (1,0) are never central (theta(g, .) is asymmetric)."""
    v4 = klein_four_group()
    entries = np.zeros((4, 4), dtype=np.int64)
    for a in range(4):
        for b in range(4):
            entries[a, b] = ((a & 1) * (b >> 1)) % 2
    return v4, group_cochain(v4, 2, entries)


V4_NO_LIFT_ELEMENT = 2  # (1, 0) in the index = 2*a1 + a2 convention


def z2_worked_example():
    """The end-to-end Z/2 chain: alpha_std(2,1), its transgression, the
    order-4 central extension, and the graded character data."""
    from tetk.reps import twisted_regular_rep
    from tetk.tate import q_graded_projection
    from tetk.transgression import restrict_to_centralizer, transgress3

    alpha = standard_cyclic_3cocycle(2, 1)
    res = transgress3(alpha)
    comp = res.component_for(1)
    theta1 = restrict_to_centralizer(res, 1)
    rho, chi = twisted_regular_rep(comp.centralizer, theta1)
    ext = chi.group  # the extension the character lives on
    xi = ext.index(comp.centralizer.position_of(1), 0)
    series = q_graded_projection(chi, xi)
    return {
        "alpha": alpha,
        "transgression": res,
        "theta1": theta1,
        "extension": ext,
        "rep": rho,
        "character": chi,
        "lift": xi,
        "series": series,
    }


def fixture_names():
    names = sorted(fixture_groups())
    names += sorted(fixture_actions())
    names += sorted(fixture_cocycles())
    names += ["v4_asymmetric_theta", "z2_worked_example"]
    return names
