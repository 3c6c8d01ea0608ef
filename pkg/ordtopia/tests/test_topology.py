"""
Tests for finite topologies and continuity of preorders.
"""
from fractions import Fraction

import pytest

from ordtopia.core.generators import all_preorders, all_topologies
from ordtopia.core.order import ElementSet, chain, dual, identity_preorder, total_indifference
from ordtopia.core.topology import (
    FiniteTopology,
    alexandroff_topology,
    check_alexandroff_sufficient,
    check_continuity_characterization,
    check_lower_continuity_characterization,
    check_refinement_reversal,
    check_semicontinuous_representation,
    closure,
    discrete_topology,
    finer_than,
    indiscrete_topology,
    is_continuous,
    is_lower_continuous,
    is_lower_semicontinuous,
    is_t0,
    is_t1,
    is_up_set,
    lower_topology,
    multi_utility,
    represents,
    specialization_preorder,
    topology_from_subbasis,
    upper_alexandroff_gap,
    upper_multi_utility,
    upper_topology,
)
from ordtopia.errors import NotATopology, SizeMismatch
from ordtopia.schemas.report import Status


def test_topology_counts():
    """Topologies on n points: 1, 1, 4, 29."""
    assert [len(all_topologies(n)) for n in range(4)] == [1, 1, 4, 29]


def test_subbasis_saturation():
    """Intersections and unions of the sub-basis are added."""
    t = topology_from_subbasis(3, [0b011, 0b110])

    assert t.is_valid()
    assert t.is_open(0b010)
    assert t.is_open(0b111)
    assert not t.is_open(0b001)


def test_upper_topology_of_chain():
    """On 0 ≺ 1 the upper topology is {∅, {1}, {0,1}}."""
    assert upper_topology(chain(2)).sorted_opens() == [[], [0, 1], [1]]


def test_alexandroff_opens_are_up_sets():
    p = chain(3)
    t = alexandroff_topology(p)

    assert all(is_up_set(p, o) for o in t.opens)
    assert len(t.opens) == 4


def test_upper_equals_alexandroff_on_finite_carriers():
    """Every principal up-set is a finite intersection of complements of lower contours."""
    for n in range(1, 5):
        for p in all_preorders(n):
            assert upper_topology(p) == alexandroff_topology(p)
    assert upper_alexandroff_gap(all_preorders(3)) is None


def test_specialization_recovers_preorder():
    for p in all_preorders(3):
        assert specialization_preorder(alexandroff_topology(p)) == p
        assert specialization_preorder(upper_topology(p)) == p


def test_closure_matches_specialization():
    """x ≾_τ y ⇔ x ∈ cl({y})."""
    for t in all_topologies(3):
        spec = specialization_preorder(t)
        for x in range(3):
            for y in range(3):
                assert spec.le(x, y) == (x in closure(t, ElementSet.of(3, [y])))


def test_separation_axioms():
    assert is_t1(discrete_topology(3))
    assert not is_t1(indiscrete_topology(2))
    assert is_t0(alexandroff_topology(chain(3)))
    assert not is_t0(indiscrete_topology(2))


def test_continuity_of_named_preorders():
    """Only the indifference relation is continuous for the indiscrete topology."""
    assert is_continuous(identity_preorder(3), indiscrete_topology(3)) is False
    assert is_continuous(total_indifference(3), indiscrete_topology(3))
    assert is_lower_continuous(chain(3), alexandroff_topology(chain(3)))
    assert not is_lower_continuous(chain(3), indiscrete_topology(3))


def test_characterizations_hold_exhaustively():
    """Both biconditionals and the sufficient conditions on three points."""
    for t in all_topologies(3):
        for p in all_preorders(3):
            assert check_continuity_characterization(p, t).status == Status.PASS
            assert check_lower_continuity_characterization(p, t).status == Status.PASS
            assert check_alexandroff_sufficient(p, t).status == Status.PASS
            assert check_semicontinuous_representation(p, t).status == Status.PASS


def test_refinement_reversal_exhaustive():
    preorders = all_preorders(3)
    for p in preorders:
        for q in preorders:
            assert check_refinement_reversal(p, q).passed


def test_lower_topology_inside_dual_alexandroff():
    """τ_L(P) ⊆ τ_A(P⁻¹) for every preorder on up to four points."""
    for n in range(1, 5):
        for p in all_preorders(n):
            assert finer_than(alexandroff_topology(dual(p)), lower_topology(p))


def test_refinement_shrinks_alexandroff():
    assert finer_than(alexandroff_topology(identity_preorder(3)), alexandroff_topology(chain(3)))
    assert not finer_than(alexandroff_topology(chain(3)), alexandroff_topology(identity_preorder(3)))


def test_indicator_family_represents():
    for p in all_preorders(4):
        family = multi_utility(p)
        tau = alexandroff_topology(p)
        assert represents(family, p)
        assert all(is_lower_semicontinuous(u, tau) for u in family.members)
        assert represents(upper_multi_utility(p), p)


def test_lower_semicontinuity_thresholds():
    """{u > a} must be open for every a."""
    t = upper_topology(chain(2))

    assert is_lower_semicontinuous((Fraction(0), Fraction(1)), t)
    assert not is_lower_semicontinuous((Fraction(1), Fraction(0)), t)


def test_carrier_mismatch():
    with pytest.raises(SizeMismatch, match="Carrier sizes differ"):
        finer_than(discrete_topology(2), discrete_topology(3))


def test_from_dict_rejects_non_topology():
    with pytest.raises(NotATopology, match="not closed"):
        FiniteTopology.from_dict({"n": 3, "opens": [[], [0, 1], [1, 2], [0, 1, 2]]})


def test_dict_round_trip():
    t = alexandroff_topology(chain(3))

    assert FiniteTopology.from_dict(t.to_dict()) == t


def test_empty_and_carrier_required():
    with pytest.raises(NotATopology, match="must be open"):
        FiniteTopology(2, frozenset({0b01}))
