import numpy as np
import pytest

from tetk.cochain import (Cochain, coboundary, embed_modulus, face,
                          is_cocycle, is_normalized, normalize_3cocycle,
                          pullback_cochain, random_cochain, random_cocycle,
                          standard_cyclic_3cocycle)
from tetk.groupoid import GroupoidFunctor, action_groupoid
from tetk.groups import GroupAction, cyclic_group, trivial_action


def test_face_maps_on_explicit_tuples(bs3):
    # d_1(g, h) = (g.h); d_0 drops the first arrow; d_2 the last
    g, h = 1, 4
    assert face(bs3, (g, h), 0) == (h,)
    assert face(bs3, (g, h), 1) == (bs3.compose(g, h),)
    assert face(bs3, (g, h), 2) == (g,)
    # degree 1 goes to objects: d_0 = tgt, d_1 = src
    assert face(bs3, (g,), 0) == (int(bs3.tgt[g]),)
    assert face(bs3, (g,), 1) == (int(bs3.src[g]),)


def test_faces_of_unit_tuples_are_units(bs3):
    u = int(bs3.unit[0])
    for j in range(4):
        assert face(bs3, (u, u, u), j) == (u, u)


def test_hand_evaluated_coboundary_on_bz2(bz2):
    # beta(1,1) = -1 (m = 2): delta beta (1,1,1) = 1 multiplicatively
    beta = Cochain(bz2, 2, 2, [0, 0, 0, 1])
    assert coboundary(beta).value((1, 1, 1)) == 0


def test_coboundary_of_constant_is_trivial(bs3):
    assert coboundary(Cochain.zero(bs3, 2, 6)).is_zero()


@pytest.mark.parametrize("degree", [0, 1, 2, 3])
def test_delta_squared_vanishes(bs3, rng, degree):
    for _ in range(10):
        c = random_cochain(bs3, degree, 6, rng)
        assert coboundary(coboundary(c)).is_zero()


def test_delta_squared_on_action_groupoid(z2, rng):
    act = GroupAction(z2, np.array([[0, 1], [1, 0], [2, 3], [3, 2]]))
    gpd = action_groupoid(act)
    for degree in range(4):
        for _ in range(5):
            c = random_cochain(gpd, degree, 2, rng)
            assert coboundary(coboundary(c)).is_zero()


def test_coboundaries_are_cocycles(bz4, rng):
    for _ in range(20):
        beta = random_cochain(bz4, 2, 4, rng)
        assert is_cocycle(coboundary(beta))


@pytest.mark.parametrize("n", range(2, 7))
def test_standard_cocycles(n):
    for k in range(n):
        c = standard_cyclic_3cocycle(n, k)
        assert is_cocycle(c)
        assert is_normalized(c)


def test_standard_cocycle_z2_single_entry():
    c = standard_cyclic_3cocycle(2, 1)
    assert list(np.flatnonzero(c.table)) == [7]  # only (1,1,1)
    assert standard_cyclic_3cocycle(2, 0).is_zero()


def test_flipped_entry_breaks_cocycle(bz2):
    c = standard_cyclic_3cocycle(2, 1, groupoid=bz2)
    table = c.table.copy()
    table.setflags(write=True)
    table[3] ^= 1
    chk = is_cocycle(Cochain(bz2, 3, 2, table))
    assert not chk
    assert chk.witness is not None


def test_is_normalized_detects_unit_entries(bz2):
    table = np.zeros(8, dtype=np.int64)
    table[0] = 1  # tuple (0,0,0) contains units
    assert not is_normalized(Cochain(bz2, 3, 2, table))


def test_normalize_fixes_random_cocycles(bz4, rng):
    for trial in range(10):
        seed = standard_cyclic_3cocycle(4, trial % 4, groupoid=bz4)
        alpha = random_cocycle(bz4, 4, rng, seed_class=seed)
        normalized, witness = normalize_3cocycle(alpha)
        assert is_normalized(normalized)
        assert is_cocycle(normalized)
        assert normalized == alpha.add(coboundary(witness))


def test_normalize_is_identity_on_normalized(bz2):
    alpha = standard_cyclic_3cocycle(2, 1, groupoid=bz2)
    out, witness = normalize_3cocycle(alpha)
    assert out == alpha
    assert witness.is_zero()


def test_normalize_rejects_non_cocycle(bz2, rng):
    c = random_cochain(bz2, 3, 2, rng)
    while is_cocycle(c):
        c = random_cochain(bz2, 3, 2, rng)
    with pytest.raises(ValueError, match="not a cocycle"):
        normalize_3cocycle(c)


def test_embed_modulus_preserves_value(bz2):
    c = standard_cyclic_3cocycle(2, 1, groupoid=bz2)
    e = embed_modulus(c, 6)
    assert e.modulus == 6
    assert e.value((1, 1, 1)) == 3  # -1 = zeta_6^3


def test_pullback_along_sign_hom(bs3, bz2, s3):
    even = {(0, 1, 2), (1, 2, 0), (2, 0, 1)}
    sign = np.array([0 if s3.perms[g] in even else 1 for g in range(6)])
    f = GroupoidFunctor(bs3, bz2, [0], sign)
    pulled = pullback_cochain(f, standard_cyclic_3cocycle(2, 1, groupoid=bz2))
    assert is_cocycle(pulled)
    assert not pulled.is_zero()


def test_cochain_table_shape_validated(bz2):
    with pytest.raises(ValueError, match="entries"):
        Cochain(bz2, 2, 2, [0, 0, 0])
