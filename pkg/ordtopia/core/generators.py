"""
Exhaustive enumerators and seeded samplers for small carriers.

Everything random takes an explicit random.Random so suites stay
deterministic for a given seed.
"""
import random
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from ordtopia.core.order import FinitePreorder, preorder_from_pairs
from ordtopia.core.qpm import BaseMetric
from ordtopia.core.topology import FiniteTopology, topology_from_subbasis
from ordtopia.errors import CarrierTooLarge
from ordtopia.seq.model import FinitePermutation, SeqModel

MAX_PREORDER_ENUMERATION = 5
MAX_TOPOLOGY_ENUMERATION = 4

# Grid for random rationals: k/GRID with 0 <= k <= GRID.
GRID = 64


@lru_cache(maxsize=None)
def all_preorders(n: int) -> Tuple[FinitePreorder, ...]:
    """
    Every preorder on {0..n-1}: 1, 1, 4, 29, 355, 4231 for n = 0..5.

    Grows preorders one element at a time: the new element n picks a
    down-closed set D of predecessors and an up-closed set U of successors
    with D × U already related.

    Raises:
        CarrierTooLarge: If n > MAX_PREORDER_ENUMERATION
    """
    if n > MAX_PREORDER_ENUMERATION:
        raise CarrierTooLarge(f"Cannot enumerate preorders on {n} points (limit {MAX_PREORDER_ENUMERATION})")
    if n == 0:
        return (FinitePreorder(0, ()),)
    out: List[FinitePreorder] = []
    m = n - 1
    new_bit = 1 << m
    for p in all_preorders(m):
        cols = p.columns
        down_sets = [s for s in range(1 << m) if all(cols[x] & ~s == 0 for x in _members(s))]
        up_sets = [s for s in range(1 << m) if all(p.rows[x] & ~s == 0 for x in _members(s))]
        for down in down_sets:
            for up in up_sets:
                if any(p.rows[x] & up != up for x in _members(down)):
                    continue
                rows = [row | new_bit if down >> x & 1 else row for x, row in enumerate(p.rows)]
                rows.append(up | new_bit)
                out.append(FinitePreorder(n, tuple(rows)))
    return tuple(out)


def _members(bits: int) -> List[int]:
    return [i for i in range(bits.bit_length()) if bits >> i & 1]


@lru_cache(maxsize=None)
def all_topologies(n: int) -> Tuple[FiniteTopology, ...]:
    """
    Every topology on {0..n-1} by brute force over candidate families.

    Raises:
        CarrierTooLarge: If n > MAX_TOPOLOGY_ENUMERATION
    """
    if n > MAX_TOPOLOGY_ENUMERATION:
        raise CarrierTooLarge(f"Cannot enumerate topologies on {n} points (limit {MAX_TOPOLOGY_ENUMERATION})")
    full = (1 << n) - 1
    middle = [s for s in range(1, full)]
    out = []
    for choice in range(1 << len(middle)):
        opens = {0, full} | {s for i, s in enumerate(middle) if choice >> i & 1}
        if all(a | b in opens and a & b in opens for a in opens for b in opens):
            out.append(FiniteTopology(n, frozenset(opens)))
    return tuple(out)


def random_preorder(n: int, rng: random.Random) -> FinitePreorder:
    """Closure of a random relation; density varies per draw."""
    density = rng.random() * 0.5
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j and rng.random() < density]
    return preorder_from_pairs(n, pairs)


def random_topology(n: int, rng: random.Random) -> FiniteTopology:
    """Saturation of a random sub-basis of up to 2n random subsets."""
    k = rng.randint(0, 2 * n)
    return topology_from_subbasis(n, [rng.randrange(1 << n) for _ in range(k)])


def random_fraction(rng: random.Random, low: int = 0, high: int = GRID) -> Fraction:
    return Fraction(rng.randint(low, high), GRID)


def random_base_metric(n: int, rng: random.Random, distinct: bool = True) -> BaseMetric:
    """
    Sup distance between n random grid points of the unit square.

    The result is 1-bounded. With distinct=True no two points coincide,
    so it is a metric rather than a pseudo-metric.
    """
    points: List[Tuple[int, int]] = []
    while len(points) < n:
        point = (rng.randint(0, GRID), rng.randint(0, GRID))
        if distinct and point in points:
            continue
        points.append(point)
    return BaseMetric(
        n,
        tuple(
            tuple(Fraction(max(abs(a[0] - b[0]), abs(a[1] - b[1])), GRID) for b in points)
            for a in points
        ),
    )


def random_weak_utility(p: FinitePreorder, rng: random.Random) -> Tuple[Fraction, ...]:
    """
    u(x) = (1 + Σ_{z ≾ x} w_z) / (2 + Σ w) with random positive weights.

    Isotonic because x ≾ y ⇒ L(x) ⊆ L(y); values lie in (0, 1).
    """
    weights = [rng.randint(1, 16) for _ in range(p.n)]
    total = sum(weights)
    return tuple(
        Fraction(1 + sum(w for z, w in enumerate(weights) if p.columns[x] >> z & 1), 2 + total)
        for x in range(p.n)
    )


def random_sequence(rng: random.Random, length: int, grid: int = GRID, tail: Fraction = Fraction(0)) -> SeqModel:
    """Random prefix of values k/grid in [0, 1] followed by a constant tail."""
    return SeqModel.with_constant_tail([Fraction(rng.randint(0, grid), grid) for _ in range(length)], tail)


def random_permutation(rng: random.Random, length: int) -> FinitePermutation:
    """Uniform permutation of the first `length` positions."""
    images = list(range(length))
    rng.shuffle(images)
    return FinitePermutation.from_images(images)
