from fractions import Fraction

import pytest

from snorder import exact, poly
from snorder.errors import NotWeaklyMajorized
from snorder.schur import (
    DomainBox,
    MajorizationCert,
    Prop,
    SymmetricFunction,
    cdm_condition_check,
    compose_table1,
    compose_table2,
    majorization_preserving_check,
    negative_sum_of_squares,
    schur_convex_falsify,
    schur_ostrowski_check,
    sum_of_squares,
)

REAL_BOX = DomainBox(1.0, 0.0, 0.0)


def test_ostrowski_sum_of_squares_passes_on_real_box():
    f = sum_of_squares(3)
    samples = [[2.0, 0.5, -1.0], [3.0, 3.0, 0.0], [-1.0, -2.0, -2.5]]
    report = schur_ostrowski_check(f, REAL_BOX, samples)
    assert report.passed
    assert report.records  # every ordered pair got a record


def test_ostrowski_negated_fails():
    f = negative_sum_of_squares(3)
    samples = [[2.0, 0.5, -1.0]]
    report = schur_ostrowski_check(f, REAL_BOX, samples)
    assert not report.passed
    assert all(r.case == 3 for r in report.failures)


def test_ostrowski_finite_difference_gradient():
    f = SymmetricFunction(2, lambda x: sum(z * z for z in x))
    report = schur_ostrowski_check(f, REAL_BOX, [[1.5, -0.5]])
    assert report.passed


def test_falsifier_finds_concave_counterexample():
    counter = schur_convex_falsify(negative_sum_of_squares(3), 3, trials=500)
    assert counter is not None
    assert counter.trial < 500


def test_falsifier_passes_convex_function():
    assert schur_convex_falsify(sum_of_squares(3), 3, trials=500) is None


def test_falsifier_deterministic_given_seed():
    a = schur_convex_falsify(negative_sum_of_squares(2), 2, trials=200, seed=42)
    b = schur_convex_falsify(negative_sum_of_squares(2), 2, trials=200, seed=42)
    assert a == b


# -- composition tables --------------------------------------------------------


def test_table1_generic_rows():
    assert compose_table1({Prop.INCREASING}, {Prop.SCHUR_CONVEX}) == {Prop.SCHUR_CONVEX}
    assert compose_table1({Prop.DECREASING}, {Prop.SCHUR_CONVEX}) == {Prop.SCHUR_CONCAVE}
    assert compose_table1({Prop.INCREASING}, {Prop.SCHUR_CONCAVE}) == {Prop.SCHUR_CONCAVE}
    assert compose_table1({Prop.DECREASING}, {Prop.SCHUR_CONCAVE}) == {Prop.SCHUR_CONVEX}


def test_table1_specific_rows_win():
    got = compose_table1({Prop.INCREASING}, {Prop.INCREASING, Prop.SCHUR_CONVEX})
    assert got == {Prop.INCREASING, Prop.SCHUR_CONVEX}
    got = compose_table1({Prop.DECREASING}, {Prop.DECREASING, Prop.SCHUR_CONVEX})
    assert got == {Prop.DECREASING, Prop.SCHUR_CONCAVE}


def test_table1_no_match():
    assert compose_table1(set(), {Prop.SCHUR_CONVEX}) is None


def test_table2_requires_averaging_condition():
    g = {Prop.INCREASING, Prop.SCHUR_CONVEX}
    h = {Prop.INCREASING, Prop.CONVEX_AFFINE}
    assert compose_table2(g, h, cdm_verified=False) is None
    assert compose_table2(g, h, cdm_verified=True) == {Prop.INCREASING, Prop.SCHUR_CONVEX}


def test_table2_sign_rows():
    got = compose_table2(
        {Prop.DECREASING, Prop.SCHUR_CONCAVE},
        {Prop.DECREASING, Prop.CONVEX_AFFINE},
        cdm_verified=True,
    )
    assert got == {Prop.INCREASING, Prop.SCHUR_CONCAVE}


def test_cdm_condition_identity_map():
    ident = lambda z: z
    y1, y2 = exact(3), exact(1)
    assert cdm_condition_check(ident, y1, y2, Fraction(1, 2))
    assert cdm_condition_check(ident, y1, y2, 1)  # alpha = 1 reproduces the pair
    assert not cdm_condition_check(ident, y1, y2, 2)  # affine overshoot spreads out


# -- single-variable majorization preservation ----------------------------------


def vec(*vals):
    return tuple(exact(v) for v in vals)


def test_increasing_certificate():
    f = poly([1, 2])  # 2z + 1
    res = majorization_preserving_check(f, vec(2, 2), vec(3, 1))
    assert res.kind is MajorizationCert.CERTIFIED_INCREASING
    assert not res.reversed_direction


def test_decreasing_certificate():
    f = poly([0, -1])  # -z
    res = majorization_preserving_check(f, vec(2, 2), vec(3, 1))
    assert res.kind is MajorizationCert.CERTIFIED_DECREASING


def test_entrywise_certificate_reversed():
    f = poly([0, -1])
    # entrywise x_i <= y_i, weak majorization only
    res = majorization_preserving_check(f, vec(1, 0), vec(3, 1))
    assert res.kind is MajorizationCert.CERTIFIED_ENTRYWISE
    assert res.reversed_direction


def test_entrywise_inputs_with_increasing_map_use_the_stronger_certificate():
    # pointwise x_i <= y_i makes the difference-sum conditions automatic,
    # so an increasing map certifies via the increasing branch directly
    f = poly([0, 0, 1])  # z^2, increasing on nonnegative points
    res = majorization_preserving_check(f, vec(1, 0), vec(3, 1))
    assert res.kind is MajorizationCert.CERTIFIED_INCREASING
    assert not res.reversed_direction


def test_not_certified():
    f = poly([0, 0, 1])  # z^2 is not monotone across sign changes
    res = majorization_preserving_check(f, vec(1, -1), vec(2, -2))
    assert res.kind is MajorizationCert.NOT_CERTIFIED


def test_requires_weak_majorization():
    with pytest.raises(NotWeaklyMajorized):
        majorization_preserving_check(poly([0, 1]), vec(5, 0), vec(3, 1))
