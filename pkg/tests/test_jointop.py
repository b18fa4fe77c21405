import pytest
from hypothesis import given
from hypothesis import strategies as st

from brieskorn.jointop import (
    EMPTY,
    POINT,
    HomotopyType,
    Kind,
    component_count,
    join,
    lagrangian_homotopy_type,
    reduced_homology,
)
from brieskorn.zerodim import classify_zero_dim

from oracles import fold_join

S = HomotopyType.sphere

types = st.one_of(st.just(EMPTY), st.just(POINT), st.integers(0, 12).map(S))


@st.composite
def pairs(draw, max_len=7, max_a=9):
    a = draw(st.lists(st.integers(1, max_a), min_size=1, max_size=max_len))
    m = [draw(st.integers(0, x - 1)) for x in a]
    return tuple(a), tuple(m)


@pytest.mark.parametrize(
    "h1, h2, expected",
    [(S(0), S(0), S(1)), (POINT, S(5), POINT), (EMPTY, S(2), S(2)), (EMPTY, EMPTY, EMPTY)],
)
def test_join_examples(h1, h2, expected):
    assert join(h1, h2) == expected


@given(types, types, types)
def test_join_associative(x, y, z):
    assert join(join(x, y), z) == join(x, join(y, z))


@given(types, types)
def test_join_commutative(x, y):
    assert join(x, y) == join(y, x)


@given(types)
def test_empty_is_unit(x):
    assert join(EMPTY, x) == x == join(x, EMPTY)


@pytest.mark.parametrize(
    "a, m, expected",
    [
        ((2, 2, 2, 2), (0, 0, 0, 0), S(3)),
        ((2, 2, 2, 2), (0, 1, 1, 1), S(0)),
        ((3, 4, 2), (1, 2, 0), POINT),
        ((2, 2), (1, 1), EMPTY),
        ((4, 2, 2), (1, 1, 1), EMPTY),
    ],
)
def test_lagrangian_examples(a, m, expected):
    assert lagrangian_homotopy_type(a, m) == expected


@pytest.mark.parametrize("k", range(0, 12))
def test_a_k_base_parity(k):
    expected = POINT if k % 2 == 0 else S(0)
    assert lagrangian_homotopy_type((k + 1, 2, 2, 2), (0, 1, 1, 1)) == expected


@given(pairs())
def test_fold_matches_point_count_oracle(pair):
    a, m = pair
    kind, dim = fold_join([len(classify_zero_dim(x, y).points) for x, y in zip(a, m)])
    h = lagrangian_homotopy_type(a, m)
    assert (h.kind.value, h.dim) == (kind, dim)


@given(pairs())
def test_sphere_dimension_bounded_by_n(pair):
    a, m = pair
    h = lagrangian_homotopy_type(a, m)
    if h.kind is Kind.SPHERE:
        assert h.dim <= len(a) - 1


@given(pairs())
def test_odd_exponent_forces_point(pair):
    a, m = pair
    if any(x % 2 for x in a):
        assert lagrangian_homotopy_type(a, m) == POINT


@given(st.lists(st.integers(1, 10).map(lambda x: 2 * x), min_size=1, max_size=8))
def test_all_even_with_one_zero_index_is_s0(a):
    m = (0,) + (1,) * (len(a) - 1)
    assert lagrangian_homotopy_type(tuple(a), m) == S(0)


@pytest.mark.parametrize(
    "h, count, homology",
    [(S(0), 2, {0: 1}), (POINT, 1, {}), (EMPTY, 0, {}), (S(3), 1, {3: 1})],
)
def test_component_count_and_homology(h, count, homology):
    assert component_count(h) == count
    assert reduced_homology(h) == homology


def test_homotopy_type_validation():
    with pytest.raises(ValueError):
        HomotopyType(Kind.SPHERE)
    with pytest.raises(ValueError):
        HomotopyType(Kind.POINT, 2)
    assert str(S(3)) == "Sphere 3"
    assert S(1).to_dict() == {"kind": "Sphere", "dim": 1}
