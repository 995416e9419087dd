import itertools

import numpy as np
import pytest

from tetk.cochain import Cochain, coboundary, is_cocycle, standard_cyclic_3cocycle
from tetk.cohomology import (class_order, coboundary_witness, cohomology_group,
                             group_order, is_coboundary)
from tetk.groupoid import action_groupoid
from tetk.groups import cyclic_group, trivial_action
from tetk.nerve import BudgetError


def test_trivial_group_has_trivial_h2():
    b1 = action_groupoid(trivial_action(cyclic_group(1)))
    assert cohomology_group(b1, 2, 5) == []


def test_h1_bz2_mu2(bz2):
    assert cohomology_group(bz2, 1, 2) == [2]
    # brute-force oracle over all 2^2 one-cochains
    kernel = sum(1 for bits in itertools.product(range(2), repeat=2)
                 if coboundary(Cochain(bz2, 1, 2, np.array(bits))).is_zero())
    image = {tuple(int(v) for v in coboundary(Cochain(bz2, 0, 2, np.array([z]))).table)
             for z in range(2)}
    assert kernel // len(image) == 2


def test_h3_bz2_mu2_with_brute_force_oracle(bz2):
    assert cohomology_group(bz2, 3, 2) == [2]

    # oracle: enumerate all 2^8 degree-3 tables and all 2^4 witnesses
    cocycles = set()
    for bits in itertools.product(range(2), repeat=8):
        if is_cocycle(Cochain(bz2, 3, 2, np.array(bits))):
            cocycles.add(bits)
    images = set()
    for bits in itertools.product(range(2), repeat=4):
        images.add(tuple(int(v) for v in
                         coboundary(Cochain(bz2, 2, 2, np.array(bits))).table))
    assert len(cocycles) // len(images) == 2
    nontrivial = tuple(int(v) for v in standard_cyclic_3cocycle(2, 1, groupoid=bz2).table)
    assert nontrivial in cocycles and nontrivial not in images


@pytest.mark.parametrize("n", [3, 4])
def test_h3_bzn_order_n(n):
    gpd = action_groupoid(trivial_action(cyclic_group(n)))
    assert group_order(cohomology_group(gpd, 3, n)) == n


def test_alpha_std_class_orders(bz4):
    # alpha_std(4, k) has class order 4 / gcd(4, k)
    from math import gcd

    for k in range(4):
        alpha = standard_cyclic_3cocycle(4, k, groupoid=bz4)
        assert class_order(alpha) == 4 // gcd(4, k if k else 4)


def test_coboundary_witness_roundtrip(bz4, rng):
    from tetk.cochain import random_cochain

    for _ in range(10):
        beta = random_cochain(bz4, 2, 4, rng)
        c = coboundary(beta)
        w = coboundary_witness(c)
        assert w is not None
        assert coboundary(w) == c


def test_nontrivial_cocycle_is_not_coboundary(bz2):
    assert not is_coboundary(standard_cyclic_3cocycle(2, 1, groupoid=bz2))


def test_budget_exceeded_raises(bz4):
    with pytest.raises(BudgetError):
        cohomology_group(bz4, 3, 4, budget=50)
