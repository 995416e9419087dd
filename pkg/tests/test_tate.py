from fractions import Fraction

import pytest

from tetk.cochain import Cochain, standard_cyclic_3cocycle
from tetk.cyclotomic import CycSum
from tetk.extension import central_extension, trivial_group_cochain
from tetk.fixtures import fixture_groups, z2_worked_example
from tetk.groupoid import action_groupoid
from tetk.groups import cyclic_group, trivial_action
from tetk.reps import twisted_regular_rep
from tetk.tate import (AssemblyError, ClassFunction, TateSeries,
                       assemble_tetk_element, identity_summand_triviality,
                       moonshine_transform_check, q_graded_projection,
                       rotation_check)


@pytest.fixture(scope="module")
def chain():
    return z2_worked_example()


def test_class_function_evaluation(chain):
    chi, ext = chain["character"], chain["extension"]
    # evaluation routes through the class of the element
    for cls in __import__("tetk.groups", fromlist=["conjugacy_classes"]).conjugacy_classes(ext)[0]:
        for e in cls:
            assert chi.evaluate(e) == chi.evaluate(cls[0])


def test_zero_series_passes_rotation(chain):
    ext, xi = chain["extension"], chain["lift"]
    series = TateSeries(ext, 4, {})
    assert rotation_check(series, xi)
    assert moonshine_transform_check(series, xi)


def test_denominator_mismatch_rejected(chain):
    ext, xi = chain["extension"], chain["lift"]
    series = TateSeries(ext, 2, {})
    with pytest.raises(ValueError, match="denominator mismatch"):
        rotation_check(series, xi)
    with pytest.raises(ValueError, match="denominator mismatch"):
        moonshine_transform_check(series, xi)


def test_non_central_lift_rejected():
    from tetk.groups import symmetric_group

    s3 = symmetric_group(3)
    ext = central_extension(s3, trivial_group_cochain(s3, 2))
    chi = ClassFunction.zero(ext)
    with pytest.raises(ValueError, match="not central"):
        q_graded_projection(chi, ext.lift(1))


def test_z2_fixture_projection(chain):
    series, xi, chi = chain["series"], chain["lift"], chain["character"]
    assert series.denominator == 4
    assert series.coefficient(0).is_zero
    assert series.coefficient(2).is_zero
    assert series.coefficient(1).evaluate(0) == 1
    assert series.coefficient(3).evaluate(0) == 1
    # hand value: V_j(e) = (1/4)(2 - 2 zeta_4^{-2j})
    for j in range(4):
        expected = (CycSum.from_rational(2)
                    - CycSum.root(4, (-2 * j) % 4) * 2) * Fraction(1, 4)
        assert series.coefficient(j).evaluate(0) == expected
    assert rotation_check(series, xi)
    assert moonshine_transform_check(series, xi)


def test_fourier_inversion(chain):
    assert chain["series"].coefficient_sum() == chain["character"]


def test_fourier_inversion_untwisted_fixtures():
    for name in ("z2", "z3", "z4", "v4"):
        group = fixture_groups()[name]
        theta = trivial_group_cochain(group, 2)
        ext = central_extension(group, theta)
        _, chi = twisted_regular_rep(group, theta)
        xi = ext.lift(1 % group.order)
        series = q_graded_projection(chi, xi)
        assert series.coefficient_sum() == chi
        assert rotation_check(series, xi)
        assert moonshine_transform_check(series, xi)


def test_projection_idempotence(chain):
    """Projecting a single graded piece returns a series supported there."""
    series, xi = chain["series"], chain["lift"]
    v1 = series.coefficient(1)
    again = q_graded_projection(v1, xi)
    assert not again.coefficient(1).is_zero
    for j in (0, 2, 3):
        assert again.coefficient(j).is_zero


def test_rotation_fails_for_ungraded_character(chain):
    ext, xi, chi = chain["extension"], chain["lift"], chain["character"]
    bad = TateSeries(ext, 4, {0: chi})
    assert not rotation_check(bad, xi)
    assert not moonshine_transform_check(bad, xi)


def test_checks_agree_on_shifted_series(chain):
    series, xi, ext = chain["series"], chain["lift"], chain["extension"]
    shifted = TateSeries(ext, 4, {(j + 1) % 4: series.coefficient(j)
                                  for j in range(4)})
    assert bool(rotation_check(shifted, xi)) == bool(moonshine_transform_check(shifted, xi)) == False


def test_untwisted_rotation_is_zeta_grading():
    """With trivial theta and xi = (g, 1), N = |g| and the condition reads
    V_j(gx) = zeta_|g|^j V_j(x)."""
    z3 = cyclic_group(3)
    theta = trivial_group_cochain(z3, 2)
    ext = central_extension(z3, theta)
    _, chi = twisted_regular_rep(z3, theta)
    xi = ext.lift(1)
    assert ext.element_order(xi) == 3
    series = q_graded_projection(chi, xi)
    for j in range(3):
        V = series.coefficient(j)
        zeta_j = CycSum.root(3, j)
        for x in range(ext.order):
            assert V.evaluate(int(ext.mul[xi, x])) == zeta_j * V.evaluate(x)


def test_identity_summand_triviality():
    for n, k in [(2, 1), (3, 2), (4, 1)]:
        assert identity_summand_triviality(standard_cyclic_3cocycle(n, k))


def test_identity_summand_rejects_non_normalized(bz2, rng):
    from tetk.cochain import coboundary, is_normalized, random_cochain

    alpha = coboundary(random_cochain(bz2, 2, 2, rng))
    while is_normalized(alpha):
        alpha = coboundary(random_cochain(bz2, 2, 2, rng))
    with pytest.raises(ValueError, match="normalized"):
        identity_summand_triviality(alpha)


def test_assemble_z2_point():
    alpha = standard_cyclic_3cocycle(2, 1)
    element = assemble_tetk_element(alpha.groupoid.action, alpha)
    by_rep = {s.rep: s for s in element.summands}
    assert set(by_rep) == {0, 1}
    assert by_rep[0].series.denominator == 1
    assert by_rep[1].series.denominator == 4
    assert by_rep[1].lift_order.divides
    for s in element.summands:
        assert rotation_check(s.series, s.lift)


def test_assemble_trivial_group():
    b1 = action_groupoid(trivial_action(cyclic_group(1)))
    alpha = Cochain.zero(b1, 3, 2)
    element = assemble_tetk_element(b1.action, alpha)
    assert len(element.summands) == 1
    assert element.summands[0].series.denominator == 1


def test_assemble_missing_class_errors():
    alpha = standard_cyclic_3cocycle(2, 1)
    with pytest.raises(AssemblyError, match="missing"):
        assemble_tetk_element(alpha.groupoid.action, alpha, series_by_class={})


def test_assemble_rejects_multi_point_fixed_sets(swap2):
    # the identity class fixes both points; out of the extension-based scope
    gpd = action_groupoid(swap2)
    alpha = Cochain.zero(gpd, 3, 2)
    with pytest.raises(AssemblyError, match="fixed set has 2 points"):
        assemble_tetk_element(swap2, alpha)


def test_assemble_empty_action_gives_zero_summands():
    import numpy as np

    from tetk.groups import GroupAction

    z2 = cyclic_group(2)
    empty = GroupAction(z2, np.zeros((0, 2), dtype=np.int32))
    gpd = action_groupoid(empty)
    element = assemble_tetk_element(empty, Cochain.zero(gpd, 3, 2))
    by_rep = {s.rep: s for s in element.summands}
    assert set(by_rep) == {0, 1}
    assert by_rep[1].series.support() == []
    assert by_rep[1].series.denominator == 2  # |g| under the untwisted lift


def test_tau_shift_invariance_of_identity_summand():
    """The [1]-summand has integral q-powers and passes the series identity,
    the F(1, g; tau) = F(1, g; tau+1) degeneration."""
    alpha = standard_cyclic_3cocycle(2, 1)
    element = assemble_tetk_element(alpha.groupoid.action, alpha)
    s0 = next(s for s in element.summands if s.rep == 0)
    assert s0.series.denominator == 1
    assert moonshine_transform_check(s0.series, s0.lift)
