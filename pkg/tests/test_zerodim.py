from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from brieskorn.core import InputError
from brieskorn.zerodim import ZeroDimTag, classify_zero_dim, ray_angles, sign_set

from oracles import fixed_roots, line_signs

pairs = st.integers(1, 200).flatmap(lambda a: st.tuples(st.just(a), st.integers(0, a - 1)))


def angles(cls):
    return {p.value for p in cls.points}


@pytest.mark.parametrize(
    "a, m, tag, expected",
    [
        (3, 2, ZeroDimTag.POINT, {Fraction(1, 3)}),
        (4, 0, ZeroDimTag.PAIR, {Fraction(0), Fraction(1, 2)}),
        (4, 1, ZeroDimTag.EMPTY, set()),
        (2, 0, ZeroDimTag.PAIR, {Fraction(0), Fraction(1, 2)}),
        (1, 0, ZeroDimTag.POINT, {Fraction(0)}),
    ],
)
def test_classify_examples(a, m, tag, expected):
    cls = classify_zero_dim(a, m)
    assert cls.tag is tag
    assert angles(cls) == expected


def test_brute_force_all_roots_up_to_64():
    for a in range(1, 65):
        for m in range(a):
            assert angles(classify_zero_dim(a, m)) == fixed_roots(a, m), (a, m)


@given(pairs)
def test_points_are_fixed_roots_of_unity(pair):
    a, m = pair
    for q in classify_zero_dim(a, m).points:
        assert (a * q.value).denominator == 1
        assert (2 * q.value - Fraction(m, a)) % 1 == 0


@given(pairs)
def test_parity_rules(pair):
    a, m = pair
    tag = classify_zero_dim(a, m).tag
    assert (tag is ZeroDimTag.EMPTY) == (a % 2 == 0 and m % 2 == 1)
    if a % 2:
        assert tag is ZeroDimTag.POINT
    elif m % 2 == 0:
        assert tag is ZeroDimTag.PAIR


@pytest.mark.parametrize(
    "a, m, expected",
    [(3, 1, {1, -1}), (2, 0, {1}), (2, 1, {-1})],
)
def test_sign_set_examples(a, m, expected):
    assert sign_set(a, m) == expected


def test_sign_set_matches_evaluation_on_the_line():
    for a in range(1, 25):
        for m in range(a):
            assert sign_set(a, m) == line_signs(a, m), (a, m)


@given(pairs)
def test_sign_set_both_iff_odd(pair):
    a, m = pair
    assert (sign_set(a, m) == {1, -1}) == (a % 2 == 1)
    if a % 2 == 0:
        assert sign_set(a, m) == {(-1) ** m}


@given(pairs)
def test_rays_are_opposite(pair):
    plus, minus = ray_angles(*pair)
    assert (minus - plus) % 1 == Fraction(1, 2)


@pytest.mark.parametrize("a, m", [(0, 0), (3, 3), (3, -1)])
def test_range_violations(a, m):
    with pytest.raises(InputError):
        classify_zero_dim(a, m)
