import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from snorder import (
    Majorization,
    OrderOutcome,
    TTransform,
    cmp_total,
    exact,
    gds_check,
    gds_from_transforms,
    majorize_check,
    sort_desc,
    t_transform_apply,
    t_transform_decompose,
)
from snorder.errors import DimensionMismatch, NotMajorized
from snorder.linalg import Matrix
from snorder.majorization import apply_row_vector, t_transform_decompose_trace

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=4)
scalars = st.builds(exact, rationals, rationals)


def vec(*vals):
    return tuple(exact(*v) if isinstance(v, tuple) else exact(v) for v in vals)


def assert_vec_equal(a, b):
    assert len(a) == len(b)
    for x, y in zip(a, b):
        assert cmp_total(x, y) is OrderOutcome.EQUAL


def test_worked_majorization_example():
    x = vec(4, (1, 1), 3)
    y = vec((2, 1), 5, 1)
    assert majorize_check(x, y) is Majorization.STRICT


def test_weak_but_not_strict():
    assert majorize_check(vec(1, 0), vec(3, 1)) is Majorization.WEAK


def test_not_majorized():
    assert majorize_check(vec(5, 0), vec(3, 1)) is Majorization.NONE


def test_reflexive_strict():
    v = vec((2, 1), 1)
    assert majorize_check(v, v) is Majorization.STRICT


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        majorize_check(vec(1), vec(1, 2))


def test_majorization_axioms_exhaustive_small_ints():
    # all non-increasing integer vectors, n = 3, entries 0..4
    vecs = [
        vec(*entries)
        for entries in itertools.combinations_with_replacement(range(4, -1, -1), 3)
    ]
    rel = [[majorize_check(a, b) is not Majorization.NONE for b in vecs] for a in vecs]
    n = len(vecs)
    for i in range(n):
        assert rel[i][i]
        for j in range(n):
            if i != j and rel[i][j] and rel[j][i]:
                # mutual weak majorization forces equal sorted vectors,
                # impossible for distinct canonical representatives
                pytest.fail(f"antisymmetry violated for {vecs[i]} / {vecs[j]}")
            for k in range(n):
                if rel[i][j] and rel[j][k]:
                    assert rel[i][k]


def test_t_transform_apply_midpoint():
    v = vec(3, 1)
    out = t_transform_apply(v, TTransform(0, 1, exact(Fraction(1, 2))))
    assert_vec_equal(out, vec(2, 2))


def test_t_transform_affine_beta_flag():
    assert TTransform(0, 1, exact(Fraction(1, 2))).beta_in_unit_interval
    assert not TTransform(0, 1, exact(2)).beta_in_unit_interval
    assert not TTransform(0, 1, exact(Fraction(1, 2), 1)).beta_in_unit_interval


def test_t_transform_index_validation():
    with pytest.raises(DimensionMismatch):
        TTransform(1, 1, exact(0))
    with pytest.raises(IndexError):
        t_transform_apply(vec(1, 2), TTransform(0, 5, exact(0)))


def test_decompose_simple():
    x, y = vec(2, 2), vec(3, 1)
    ts = t_transform_decompose(x, y)
    w = sort_desc(y)
    for t in ts:
        w = t_transform_apply(w, t)
    assert_vec_equal(w, x)


def test_decompose_permutation_case_is_swaps_only():
    x = vec(1, 3, 2)
    y = vec(3, 2, 1)
    ts = t_transform_decompose(x, y)
    assert all(t.beta.is_zero() for t in ts)
    w = sort_desc(y)
    for t in ts:
        w = t_transform_apply(w, t)
    assert_vec_equal(w, x)


def test_decompose_requires_strict():
    with pytest.raises(NotMajorized):
        t_transform_decompose(vec(1, 0), vec(3, 1))


def _random_pair(rng, n, complex_entries):
    y = tuple(
        exact(
            Fraction(rng.randint(-20, 20), rng.randint(1, 4)),
            Fraction(rng.randint(-20, 20), rng.randint(1, 4)) if complex_entries else 0,
        )
        for _ in range(n)
    )
    x = list(y)
    for _ in range(rng.randint(1, 4)):
        i, j = sorted(rng.sample(range(n), 2))
        x = list(t_transform_apply(x, TTransform(i, j, exact(Fraction(rng.randint(0, 12), 12)))))
    return tuple(x), y


def test_decompose_intermediates_stay_sandwiched():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(2, 5)
        x, y = _random_pair(rng, n, complex_entries=True)
        ts, intermediates = t_transform_decompose_trace(x, y)
        for v in intermediates:
            assert majorize_check(x, v) is Majorization.STRICT
            assert majorize_check(v, y) is Majorization.STRICT
        p = gds_from_transforms(ts, n)
        assert gds_check(p)
        assert_vec_equal(apply_row_vector(sort_desc(y), p), x)


def test_gds_check_rejects_non_square():
    m = Matrix.from_rows([[exact(1), exact(0)]])
    with pytest.raises(DimensionMismatch):
        gds_check(m)


def test_gds_closure_under_product():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(2, 4)
        mats = []
        for _ in range(2):
            # random GDS built from random affine transforms
            ts = [
                TTransform(
                    *sorted(rng.sample(range(n), 2)),
                    exact(Fraction(rng.randint(-6, 6), 3), Fraction(rng.randint(-6, 6), 3)),
                )
                for _ in range(3)
            ]
            mats.append(gds_from_transforms(ts, n))
        assert gds_check(mats[0])
        assert gds_check(mats[1])
        assert gds_check(mats[0] @ mats[1])


@settings(max_examples=40)
@given(st.lists(scalars, min_size=2, max_size=5), st.data())
def test_transform_preserves_majorization_below(entries, data):
    y = tuple(entries)
    beta = exact(Fraction(data.draw(st.integers(min_value=0, max_value=8)), 8))
    i = data.draw(st.integers(min_value=0, max_value=len(y) - 2))
    j = data.draw(st.integers(min_value=i + 1, max_value=len(y) - 1))
    x = t_transform_apply(y, TTransform(i, j, beta))
    assert majorize_check(x, y) is Majorization.STRICT
