"""
Tests for quasi-pseudo-metrics and the order constructions.
"""
import random
from fractions import Fraction

import pytest

from ordtopia.core.generators import all_preorders, random_base_metric, random_weak_utility
from ordtopia.core.order import chain, identity_preorder, preorder_from_pairs, total_indifference
import ordtopia.core.qpm as qpm
from ordtopia.core.qpm import (
    BaseMetric,
    MetricKind,
    QuasiPseudoMetric,
    construct_d1,
    construct_d2,
    construct_d2_param,
    construct_d3,
    construct_d4,
    default_weak_utility,
    encode_preorder,
    induced_preorder,
    induced_topology,
    left_distance,
    scale_to_unit,
    scan_axioms,
    scan_axioms_batch,
    symmetrize,
    triangle_witness,
    validate_qpm,
)
from ordtopia.core.topology import alexandroff_topology, discrete_topology, finer_than, upper_topology
from ordtopia.errors import InvalidDistance, NotOneBounded, ParamOutOfRange, UtilityNotIsotonic, UtilityOutOfRange
from ordtopia.suites.qpm_axioms import below_half_counterexample


def test_encoding_recovers_preorder_and_topology():
    """The 0/1 encoding induces the preorder and its Alexandroff topology."""
    for n in range(1, 4):
        for p in all_preorders(n):
            d = encode_preorder(p)
            assert induced_preorder(d) == p
            assert induced_topology(d) == alexandroff_topology(p)
            assert scan_axioms(d).valid


def test_symmetrized_encoding_is_indifference():
    """d^s(x, y) = 0 exactly on indifferent pairs."""
    p = preorder_from_pairs(3, [(0, 1), (1, 0), (1, 2)])
    s = symmetrize(encode_preorder(p))

    assert s.dist[0][1] == 0
    assert s.dist[1][2] == 1
    assert induced_preorder(s) == preorder_from_pairs(3, [(0, 1), (1, 0)])


def test_triangle_witness_is_lexicographic():
    table = [[0, 5, 1], [0, 0, 1], [1, 1, 0]]

    assert triangle_witness([[Fraction(v) for v in row] for row in table]) == (0, 2, 1)
    assert scan_axioms(table).kind == MetricKind.INVALID


def test_scan_classifies_kinds():
    assert scan_axioms([[0, 1], [1, 0]]).kind == MetricKind.METRIC
    assert scan_axioms([[0, 0], [0, 0]]).kind == MetricKind.PSEUDO_METRIC
    assert scan_axioms([[0, 1], [2, 0]]).kind == MetricKind.T1_QUASI_METRIC
    assert scan_axioms([[0, 0], [1, 0]]).kind == MetricKind.QUASI_METRIC
    assert scan_axioms([[0, 0, 1], [0, 0, 1], [1, 1, 0]]).kind == MetricKind.PSEUDO_METRIC


def test_distance_table_validation():
    with pytest.raises(InvalidDistance, match="is not 0"):
        QuasiPseudoMetric.from_rows([[1, 0], [0, 0]])
    with pytest.raises(InvalidDistance, match="negative entry"):
        QuasiPseudoMetric.from_rows([[0, -1], [0, 0]])
    with pytest.raises(InvalidDistance, match=r"d\(1,0\) != d\(0,1\)"):
        BaseMetric.from_rows([[0, 1], [2, 0]])


def test_constructions_on_small_preorders():
    """d1–d4 pass the axioms on every preorder of three points; d1 and d2 are T1."""
    rng = random.Random(3)
    for p in all_preorders(3):
        for _ in range(5):
            d = random_base_metric(3, rng)
            u = random_weak_utility(p, rng)
            assert validate_qpm(construct_d1(p, d), require_t1=True).passed
            assert validate_qpm(construct_d2(p, d), require_t1=True).passed
            assert validate_qpm(construct_d3(p, u)).passed
            assert validate_qpm(construct_d4(p, u)).passed


def test_constructions_induce_the_preorder_through_alexandroff():
    """τ_{d3} equals τ_A; the metric-based constructions are discrete."""
    rng = random.Random(11)
    for p in all_preorders(3):
        d = random_base_metric(3, rng)
        u = default_weak_utility(p)
        tau_a = alexandroff_topology(p)
        assert induced_topology(construct_d3(p, u)) == tau_a
        assert induced_topology(construct_d1(p, d)) == discrete_topology(3)
        assert finer_than(induced_topology(construct_d4(p, u)), tau_a)


def test_utility_construction_is_not_t1_on_a_chain():
    """On 0 ≺ 1 the utility construction is a quasi-metric with d(0,1) = 0."""
    p = chain(2)
    d = construct_d3(p, default_weak_utility(p))

    assert d.dist[0][1] == 0
    assert d.dist[1][0] == 1 + Fraction(1, 4)
    assert scan_axioms(d).kind == MetricKind.QUASI_METRIC


def test_parametric_family_in_range():
    rng = random.Random(5)
    for p in all_preorders(3):
        d = random_base_metric(3, rng)
        for k, m in [(1, 2), (2, 3), (3, 4), (1, 1)]:
            assert validate_qpm(construct_d2_param(p, d, k, m)).passed


def test_parametric_family_below_half_breaks_triangle():
    """k/m = 1/4 violates the triangle inequality on three points."""
    p, d = below_half_counterexample()
    scan = scan_axioms(construct_d2_param(p, d, 1, 4))

    assert scan.kind == MetricKind.INVALID
    assert scan.triangle_witness is not None
    assert scan_axioms(construct_d2_param(p, d, 1, 2)).valid


def test_parametric_range_checked():
    p = identity_preorder(2)
    d = BaseMetric.from_rows([[0, 1], [1, 0]])

    with pytest.raises(ParamOutOfRange, match="need m > 0"):
        construct_d2_param(p, d, 3, 2)
    with pytest.raises(ParamOutOfRange, match="need m > 0"):
        construct_d2_param(p, d, 0, 0)


def test_bounded_metric_construction_needs_one_bounded_base():
    p = identity_preorder(2)
    d = BaseMetric.from_rows([[0, 2], [2, 0]])

    with pytest.raises(NotOneBounded, match="exceeds 1"):
        construct_d1(p, d)
    assert scale_to_unit(d).is_one_bounded
    assert scale_to_unit(d).dist[0][1] == Fraction(2, 3)


def test_weak_utility_checks():
    p = chain(2)

    with pytest.raises(UtilityNotIsotonic, match="not isotonic"):
        construct_d3(p, [Fraction(3, 4), Fraction(1, 4)])
    with pytest.raises(UtilityOutOfRange, match="outside"):
        construct_d4(p, [Fraction(0), Fraction(1, 2)])


def test_default_weak_utility_is_isotonic():
    p = total_indifference(3)

    assert default_weak_utility(p) == (Fraction(4, 5),) * 3
    assert default_weak_utility(chain(3)) == (Fraction(2, 5), Fraction(3, 5), Fraction(4, 5))


def test_left_distance_induces_upper_topology():
    values = [Fraction(0), Fraction(1, 2), Fraction(1)]
    d = left_distance(values)

    assert d.dist[2][0] == 1
    assert d.dist[0][2] == 0
    assert induced_topology(d) == upper_topology(chain(3))
    assert symmetrize(d).dist[0][1] == Fraction(1, 2)


def test_dict_round_trip():
    d = construct_d4(chain(2), default_weak_utility(chain(2)))

    assert d.to_dict()["dist"][1][0] == "5/8"
    assert QuasiPseudoMetric.from_dict(d.to_dict()) == d


def _triangle_by_loops(table):
    n = len(table)
    return next(
        ((i, j, k) for i in range(n) for j in range(n) for k in range(n) if table[i][k] > table[i][j] + table[j][k]),
        None,
    )


def test_batched_scan_matches_loops(monkeypatch):
    """Mixed carrier sizes, split across several stacked chunks."""
    monkeypatch.setattr(qpm, "SCAN_CHUNK", 3)
    rng = random.Random(11)
    tables = []
    for n in (1, 2, 3, 4, 3, 2, 4, 4, 3):
        p = preorder_from_pairs(n, [(rng.randrange(n), rng.randrange(n)) for _ in range(n)])
        d = random_base_metric(n, rng)
        tables.append(construct_d2(p, d))
        tables.append(construct_d2_param(p, d, 1, 4))
    tables.append([[0, 5, 1], [0, 0, 1], [1, 1, -1]])

    scans = scan_axioms_batch(tables)

    assert len(scans) == len(tables)
    for table, scan in zip(tables, scans):
        rows = table.dist if isinstance(table, QuasiPseudoMetric) else [[Fraction(v) for v in r] for r in table]
        assert scan.triangle_witness == _triangle_by_loops(rows)
    assert scans[-1].negative_entry == (2, 2)
    assert scans[-1].nonzero_diagonal == 2
    assert scan_axioms_batch([]) == []


def test_batched_scan_of_empty_carrier():
    assert scan_axioms_batch([QuasiPseudoMetric(0, ())])[0].kind == MetricKind.METRIC


def test_parametric_endpoints_reproduce_d1_and_d2():
    rng = random.Random(5)
    for p in all_preorders(3):
        d = random_base_metric(3, rng)
        assert construct_d2_param(p, d, 1, 1) == construct_d1(p, d)
        assert construct_d2_param(p, d, 1, 2) == construct_d2(p, d)


def test_scale_to_unit_on_empty_carrier():
    empty = BaseMetric(0, ())

    assert scale_to_unit(empty) == empty
