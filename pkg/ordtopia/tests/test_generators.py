"""
Tests for enumerators and seeded samplers.
"""
import random
from fractions import Fraction

import pytest

from ordtopia.core.generators import (
    GRID,
    all_topologies,
    random_base_metric,
    random_permutation,
    random_preorder,
    random_sequence,
    random_topology,
    random_weak_utility,
)
from ordtopia.core.qpm import MetricKind, check_weak_utility, scan_axioms
from ordtopia.errors import CarrierTooLarge
from ordtopia.seq.model import TailKind, apply_perm


def test_same_seed_same_draws():
    """Samplers depend only on the generator state."""
    first = [random_preorder(5, random.Random(42)) for _ in range(3)]
    second = [random_preorder(5, random.Random(42)) for _ in range(3)]

    assert first == second


def test_random_topology_is_valid():
    rng = random.Random(1)
    for _ in range(50):
        assert random_topology(4, rng).is_valid()


def test_random_base_metric_is_bounded_metric():
    rng = random.Random(7)
    for n in range(1, 7):
        d = random_base_metric(n, rng)
        assert d.is_one_bounded
        assert scan_axioms(d).kind == MetricKind.METRIC


def test_random_weak_utility_is_valid():
    rng = random.Random(9)
    for _ in range(50):
        p = random_preorder(5, rng)
        check_weak_utility(p, random_weak_utility(p, rng))


def test_random_sequence_values_on_grid():
    rng = random.Random(2)
    x = random_sequence(rng, 6)

    assert len(x) == 6
    assert all(0 <= v <= 1 and (v * GRID).denominator == 1 for v in x.prefix)
    assert x.tail.kind == TailKind.ZERO
    assert random_sequence(rng, 2, tail=Fraction(1, 2)).tail.kind == TailKind.CONST


def test_random_permutation_rearranges_prefix():
    rng = random.Random(4)
    x = random_sequence(rng, 5)
    y = apply_perm(random_permutation(rng, 5), x)

    assert sorted(x.prefix) == sorted(y.prefix)


def test_topology_enumeration_limit():
    with pytest.raises(CarrierTooLarge, match="Cannot enumerate topologies"):
        all_topologies(5)
