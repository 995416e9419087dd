"""Nerve enumeration and the two kernel lanes agree and rank correctly."""

import numpy as np
import pytest

from tetk import kernels
from tetk.groupoid import action_groupoid
from tetk.groups import GroupAction, cyclic_group, symmetric_group, trivial_action
from tetk.nerve import BudgetError, NerveCache, nerve


def test_nerve_counts_delooping(bs3):
    nc = nerve(bs3)
    assert nc.count(0) == 1
    for p in range(1, 5):
        assert nc.count(p) == 6 ** p


def test_nerve_counts_action_groupoid(z2):
    act = GroupAction(z2, np.array([[0, 1], [1, 0], [2, 3], [3, 2]]))
    nc = nerve(action_groupoid(act))
    assert nc.count(0) == 4
    assert nc.count(1) == 8
    assert nc.count(2) == 16  # each arrow extends by |G| arrows


def test_rank_roundtrip_multi_object(z2):
    act = GroupAction(z2, np.array([[0, 1], [1, 0], [2, 3], [3, 2]]))
    nc = nerve(action_groupoid(act))
    for p in (1, 2, 3, 4):
        tuples = nc.tuples(p)
        for i in range(0, tuples.shape[0], 7):
            assert nc.rank(tuples[i]) == i


def test_faces_compose_correctly(bs3):
    nc = nerve(bs3)
    faces = nc.faces(3)
    t3, t2 = nc.tuples(3), nc.tuples(2)
    for i in (0, 41, 100, 215):
        a, b, c = map(int, t3[i])
        assert list(t2[faces[0][i]]) == [b, c]
        assert list(t2[faces[1][i]]) == [bs3.compose(a, b), c]
        assert list(t2[faces[2][i]]) == [a, bs3.compose(b, c)]
        assert list(t2[faces[3][i]]) == [a, b]


def test_degree_one_faces_are_src_tgt(bs3):
    faces = nerve(bs3).faces(1)
    assert np.array_equal(faces[0], bs3.tgt)
    assert np.array_equal(faces[1], bs3.src)


def test_budget_enforced(bz4):
    with pytest.raises(BudgetError):
        NerveCache(bz4).check_budget(4, budget=100)


def test_lanes_agree():
    lanes = kernels.available_lanes()
    if len(lanes) < 2:
        pytest.skip("compiled lane not built")
    z2 = cyclic_group(2)
    act = GroupAction(z2, np.array([[0, 1], [1, 0], [2, 3], [3, 2]]))
    results = {}
    original = kernels.ACTIVE
    try:
        for name, lane in lanes.items():
            kernels.ACTIVE = lane
            gpd = action_groupoid(act)  # fresh cache per lane
            nc = nerve(gpd)
            table = np.arange(nc.count(3), dtype=np.int64) % 5
            results[name] = (nc.tuples(4).copy(), nc.faces(4).copy(),
                             lane.signed_sum_mod(table, nc.faces(4), 5))
    finally:
        kernels.ACTIVE = original
    py_t, py_f, py_s = results["python"]
    c_t, c_f, c_s = results["compiled"]
    assert np.array_equal(py_t, c_t)
    assert np.array_equal(py_f, c_f)
    assert np.array_equal(py_s, c_s)


def test_lanes_agree_on_s4_nerve():
    lanes = kernels.available_lanes()
    if len(lanes) < 2:
        pytest.skip("compiled lane not built")
    s4 = symmetric_group(4)
    sums = {}
    original = kernels.ACTIVE
    try:
        for name, lane in lanes.items():
            kernels.ACTIVE = lane
            gpd = action_groupoid(trivial_action(s4))
            nc = nerve(gpd)
            rng = np.random.default_rng(11)
            table = rng.integers(0, 24, size=nc.count(3)).astype(np.int64)
            sums[name] = lane.signed_sum_mod(table, nc.faces(4), 24)
    finally:
        kernels.ACTIVE = original
    assert np.array_equal(sums["python"], sums["compiled"])
