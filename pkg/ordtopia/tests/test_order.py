"""
Tests for finite preorders.
"""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ordtopia.core.generators import all_preorders
from ordtopia.core.order import (
    ElementSet,
    FinitePreorder,
    Relation,
    chain,
    down_closure,
    dual,
    identity_preorder,
    is_antisymmetric,
    is_total,
    lower_contour,
    preorder_from_pairs,
    refines,
    relation,
    total_indifference,
    up_closure,
    upper_contour,
)
from ordtopia.errors import CarrierTooLarge, IndexOutOfRange, NotAPreorder, SizeMismatch


def test_closure_adds_transitive_pairs():
    """Closure of 0→1→2 relates 0 to 2 but not 2 to 0."""
    p = preorder_from_pairs(3, [(0, 1), (1, 2)])

    assert p.le(0, 2)
    assert not p.le(2, 0)
    assert p.strict_pairs() == [(0, 1), (0, 2), (1, 2)]


def test_closure_of_cycle_is_indifference():
    """A cycle collapses into one indifference class."""
    p = preorder_from_pairs(3, [(0, 1), (1, 2), (2, 0)])

    assert p == total_indifference(3)


def test_pair_outside_carrier_rejected():
    """Indices must lie in 0..n-1."""
    with pytest.raises(IndexOutOfRange, match="out of range"):
        preorder_from_pairs(2, [(0, 2)])


def test_constructor_rejects_non_transitive_rows():
    """Rows that are not closed are refused."""
    with pytest.raises(NotAPreorder, match="not transitive"):
        FinitePreorder(3, (0b011, 0b110, 0b100))


def test_constructor_rejects_non_reflexive_rows():
    with pytest.raises(NotAPreorder, match="not reflexive"):
        FinitePreorder(2, (0b10, 0b10))


def test_named_preorders():
    """Identity, chain and indifference have the expected shape."""
    assert identity_preorder(3).strict_pairs() == []
    assert chain(3).strict_pairs() == [(0, 1), (0, 2), (1, 2)]
    assert is_total(chain(4))
    assert is_antisymmetric(chain(4))
    assert not is_antisymmetric(total_indifference(2))
    assert not is_total(identity_preorder(2))


def test_contours_and_closures():
    """L and U contours on a chain, and closures of a set."""
    p = chain(4)

    assert lower_contour(p, 2).to_list() == [0, 1, 2]
    assert upper_contour(p, 2).to_list() == [2, 3]
    assert down_closure(p, ElementSet.of(4, [1])).to_list() == [0, 1]
    assert up_closure(p, ElementSet.of(4, [1, 3])).to_list() == [1, 2, 3]


def test_element_set_membership():
    s = ElementSet.of(4, [0, 2])

    assert 2 in s
    assert 1 not in s
    assert 7 not in s
    assert s.complement().to_list() == [1, 3]
    assert len(s) == 2
    assert s.issubset(ElementSet.full(4))


def test_refines_is_reverse_inclusion():
    """A chain refines the identity, never the other way round."""
    assert refines(chain(3), identity_preorder(3))
    assert not refines(identity_preorder(3), chain(3))
    assert refines(total_indifference(3), chain(3))


def test_refines_needs_same_carrier():
    with pytest.raises(SizeMismatch, match="Carrier sizes differ"):
        refines(chain(2), chain(3))


def test_relation_on_mixed_preorder():
    """Exactly one of the four relations holds for each pair."""
    p = preorder_from_pairs(4, [(0, 1), (1, 0), (1, 2)])

    assert relation(p, 0, 1) == Relation.INDIFFERENT
    assert relation(p, 0, 2) == Relation.BELOW
    assert relation(p, 2, 1) == Relation.ABOVE
    assert relation(p, 0, 3) == Relation.INCOMPARABLE


def test_dual_swaps_contours():
    p = chain(3)

    assert dual(p).le(2, 0)
    assert upper_contour(dual(p), 1) == lower_contour(p, 1)


def test_preorder_counts():
    """Number of preorders on n points: 1, 1, 4, 29, 355."""
    assert [len(all_preorders(n)) for n in range(5)] == [1, 1, 4, 29, 355]
    assert len(set(all_preorders(3))) == 29


def test_enumeration_limit():
    with pytest.raises(CarrierTooLarge, match="Cannot enumerate preorders"):
        all_preorders(6)


def test_dict_round_trip():
    p = preorder_from_pairs(3, [(2, 0)])

    assert p.to_dict() == {"n": 3, "pairs": [[2, 0]]}
    assert FinitePreorder.from_dict(p.to_dict()) == p


relations = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=12),
    )
)


@given(relations)
def test_closure_is_smallest_preorder(data):
    """Closure contains every pair and is reflexive and transitive."""
    n, pairs = data
    p = preorder_from_pairs(n, pairs)

    assert all(p.le(i, j) for i, j in pairs)
    assert all(p.le(i, i) for i in range(n))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if p.le(i, j) and p.le(j, k):
                    assert p.le(i, k)
