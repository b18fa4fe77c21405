from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from brieskorn.certify import (
    BASE_REFLECTION,
    POSITIVITY_AXIOM,
    HypothesisRejected,
    arrangement,
    build_certificate,
    check_theoremA_hypotheses,
)
from brieskorn.core import ExponentTuple
from brieskorn.jointop import POINT, HomotopyType, lagrangian_homotopy_type
from brieskorn.reeb import growth_proxy
from brieskorn.zerodim import classify_zero_dim

from oracles import hypothesis_clauses


@st.composite
def accepted_tuples(draw):
    head = draw(st.integers(1, 12))
    evens = draw(st.lists(st.integers(1, 6).map(lambda x: 2 * x), max_size=4))
    items = [head, 2, 2, 2] + evens
    return tuple(draw(st.permutations(items)))


@pytest.mark.parametrize(
    "a, accepted, reason",
    [
        ((3, 4, 2, 2, 2, 2), True, None),
        ((3, 3, 2, 2, 2), False, "two odd exponents"),
        ((5, 2, 2), False, "n = 2 < 3"),
        ((4, 4, 2, 2), False, "only 2 exponents equal 2 (need at least three)"),
    ],
)
def test_hypothesis_examples(a, accepted, reason):
    check = check_theoremA_hypotheses(a)
    assert bool(check) is accepted
    assert check.reason == reason


@given(st.lists(st.integers(1, 8), min_size=1, max_size=8))
def test_hypothesis_check_matches_clause_oracle(a):
    assert bool(check_theoremA_hypotheses(tuple(a))) == hypothesis_clauses(a)


def test_certificate_34222():
    cert = build_certificate((3, 4, 2, 2, 2, 2))
    assert cert.base == (3, 2, 2, 2)
    assert cert.k == 2
    assert cert.base_type == POINT
    assert [s.exponent for s in cert.steps] == [4, 2]
    assert all(s.reflection_index == 1 and s.factor == "Empty" for s in cert.steps)
    assert all(s.homotopy_type == POINT for s in cert.steps)
    assert cert.reflection == (0, 1, 1, 1, 1, 1)
    assert cert.arranged == (3, 2, 2, 2, 4, 2)


def test_certificate_all_twos():
    cert = build_certificate((2, 2, 2, 2))
    assert cert.base == (2, 2, 2, 2)
    assert cert.k == 1
    assert cert.base_type == HomotopyType.sphere(0)
    assert cert.steps == []
    assert any("component" in note for note in cert.notes)


def test_rejection_raises():
    with pytest.raises(HypothesisRejected, match="two odd exponents"):
        build_certificate((3, 3, 2, 2, 2))


def test_k_zero_base_is_flagged():
    cert = build_certificate((1, 2, 2, 2))
    assert cert.k == 0
    assert any("Milnor number 0" in note for note in cert.notes)


def test_even_base_uses_largest_entry():
    cert = build_certificate((2, 4, 2, 6, 2, 4))
    assert cert.base == (6, 2, 2, 2)
    assert cert.arranged == (6, 2, 2, 2, 4, 4)


@given(accepted_tuples())
def test_certificate_properties(a):
    cert = build_certificate(a)
    assert sorted(cert.permutation) == list(range(len(a)))
    assert Counter(cert.arranged) == Counter(a)
    assert cert.arranged == tuple(a[j] for j in cert.permutation)
    assert cert.base[1:] == (2, 2, 2)
    assert cert.base_reflection == BASE_REFLECTION
    assert cert.final_type == lagrangian_homotopy_type(cert.arranged, cert.reflection)
    assert cert.base_type == (POINT if cert.k % 2 == 0 else HomotopyType.sphere(0))
    proxy = growth_proxy(cert.base, BASE_REFLECTION)
    for i, step in enumerate(cert.steps):
        assert step.exponent % 2 == 0 and step.reflection_index % 2 == 1
        assert classify_zero_dim(step.exponent, step.reflection_index).points == frozenset()
        assert step.homotopy_type == cert.base_type
        assert step.component_contractible
        assert step.proxy_before == proxy
        assert step.proxy_after >= step.proxy_before
        assert step.proxy_after == growth_proxy(
            cert.arranged[: 5 + i], cert.reflection[: 5 + i]
        )
        proxy = step.proxy_after


def test_axiom_is_recorded_not_verified():
    cert = build_certificate((3, 2, 2, 2))
    assert cert.axiom == POSITIVITY_AXIOM
    assert cert.axiom["verified_here"] is False
    assert any("conditional" in line for line in cert.conclusion)


def test_certificate_serializes():
    doc = build_certificate((3, 4, 2, 2, 2, 2)).to_dict()
    assert doc["base"] == {
        "exponents": [3, 2, 2, 2],
        "k": 2,
        "reflection": [0, 1, 1, 1],
        "homotopy_type": {"kind": "Point", "dim": None},
        "component_type": {"kind": "Point", "dim": None},
    }
    assert [s["exponent"] for s in doc["steps"]] == [4, 2]


def test_arrangement_prefers_odd_head():
    assert arrangement(ExponentTuple((4, 2, 5, 2, 2))) == (2, 1, 3, 4, 0)
