"""
Finite preorders and their order-theoretic algebra.

Carrier elements are the dense indices 0..n-1. A relation is stored as one
bitset per row: bit j of rows[i] is set iff i ≾ j. Every value is immutable,
so all operations here are pure.
"""
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any, Dict, Iterable, Iterator, List, Sequence, Tuple

from ordtopia.errors import IndexOutOfRange, NotAPreorder, SizeMismatch


@dataclass(frozen=True)
class ElementSet:
    """A subset of the carrier {0..n-1}, held as a bitset."""

    n: int
    members: int

    def __post_init__(self) -> None:
        if self.members < 0 or self.members >> self.n:
            raise IndexOutOfRange(
                f"Cannot build set: members {bin(self.members)} exceed carrier of size {self.n}"
            )

    @classmethod
    def of(cls, n: int, indices: Iterable[int]) -> "ElementSet":
        bits = 0
        for i in indices:
            _check_index(n, i)
            bits |= 1 << i
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> "ElementSet":
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n: int) -> "ElementSet":
        return cls(n, 0)

    def __contains__(self, i: object) -> bool:
        return isinstance(i, int) and 0 <= i < self.n and bool(self.members >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(bits_to_indices(self.members))

    def __len__(self) -> int:
        return bin(self.members).count("1")

    def complement(self) -> "ElementSet":
        return ElementSet(self.n, ((1 << self.n) - 1) & ~self.members)

    def issubset(self, other: "ElementSet") -> bool:
        return self.members & ~other.members == 0

    def to_list(self) -> List[int]:
        return bits_to_indices(self.members)


class Relation(str, Enum):
    """How two carrier elements are related; exactly one holds."""

    BELOW = "below"  # x ≺ y
    ABOVE = "above"  # y ≺ x
    INDIFFERENT = "indifferent"  # x ∼ y
    INCOMPARABLE = "incomparable"  # x ⋈ y


@dataclass(frozen=True)
class FinitePreorder:
    """
    Reflexive and transitive relation on {0..n-1}.

    Build instances through preorder_from_pairs() unless the rows are
    already closed; the constructor validates both invariants.
    """

    n: int
    rows: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise SizeMismatch(
                f"Cannot build preorder: {len(self.rows)} rows for carrier of size {self.n}"
            )
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise IndexOutOfRange(f"Cannot build preorder: row {i} exceeds carrier")
            if not row >> i & 1:
                raise NotAPreorder(f"Cannot build preorder: not reflexive at {i}")
            for j in bits_to_indices(row):
                if self.rows[j] & ~row:
                    raise NotAPreorder(
                        f"Cannot build preorder: not transitive through ({i}, {j})"
                    )

    def le(self, x: int, y: int) -> bool:
        """x ≾ y."""
        _check_index(self.n, x)
        _check_index(self.n, y)
        return bool(self.rows[x] >> y & 1)

    @cached_property
    def columns(self) -> Tuple[int, ...]:
        cols = [0] * self.n
        for i, row in enumerate(self.rows):
            for j in bits_to_indices(row):
                cols[j] |= 1 << i
        return tuple(cols)

    def table(self) -> List[List[bool]]:
        return [[bool(row >> j & 1) for j in range(self.n)] for row in self.rows]

    def strict_pairs(self) -> List[Tuple[int, int]]:
        """Related pairs (i, j) with i ≠ j, in lexicographic order."""
        return [(i, j) for i in range(self.n) for j in bits_to_indices(self.rows[i]) if i != j]

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "pairs": [[i, j] for i, j in self.strict_pairs()]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "FinitePreorder":
        return preorder_from_pairs(int(data["n"]), [(int(i), int(j)) for i, j in data["pairs"]])


def bits_to_indices(bits: int) -> List[int]:
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


def _check_index(n: int, i: int) -> None:
    if not 0 <= i < n:
        raise IndexOutOfRange(f"Index {i} out of range for carrier of size {n}")


def _check_same_carrier(p: FinitePreorder, q: FinitePreorder) -> None:
    if p.n != q.n:
        raise SizeMismatch(f"Carrier sizes differ: {p.n} vs {q.n}")


def preorder_from_pairs(n: int, pairs: Iterable[Tuple[int, int]]) -> FinitePreorder:
    """
    Smallest preorder on {0..n-1} containing every pair.

    Reachability closure over bitset rows; cubic in n.

    Raises:
        IndexOutOfRange: If a pair mentions an index >= n
    """
    rows = [1 << i for i in range(n)]
    for i, j in pairs:
        _check_index(n, i)
        _check_index(n, j)
        rows[i] |= 1 << j
    return FinitePreorder(n, _close(rows))


def _close(rows: List[int]) -> Tuple[int, ...]:
    rows = list(rows)
    for k in range(len(rows)):
        reach_k = rows[k]
        bit = 1 << k
        for i in range(len(rows)):
            if rows[i] & bit:
                rows[i] |= reach_k
    return tuple(rows)


def identity_preorder(n: int) -> FinitePreorder:
    return FinitePreorder(n, tuple(1 << i for i in range(n)))


def total_indifference(n: int) -> FinitePreorder:
    full = (1 << n) - 1
    return FinitePreorder(n, tuple(full for _ in range(n)))


def chain(n: int) -> FinitePreorder:
    """0 ≺ 1 ≺ ... ≺ n-1."""
    full = (1 << n) - 1
    return FinitePreorder(n, tuple(full & ~((1 << i) - 1) for i in range(n)))


def lower_contour(p: FinitePreorder, y: int) -> ElementSet:
    """L(y) = {x : x ≾ y}."""
    _check_index(p.n, y)
    return ElementSet(p.n, p.columns[y])


def upper_contour(p: FinitePreorder, y: int) -> ElementSet:
    """U(y) = {x : y ≾ x}."""
    _check_index(p.n, y)
    return ElementSet(p.n, p.rows[y])


def down_closure(p: FinitePreorder, s: ElementSet) -> ElementSet:
    """↓s: everything below some member of s."""
    bits = 0
    for x in s:
        bits |= p.columns[x]
    return ElementSet(p.n, bits)


def up_closure(p: FinitePreorder, s: ElementSet) -> ElementSet:
    """↑s: everything above some member of s."""
    bits = 0
    for x in s:
        bits |= p.rows[x]
    return ElementSet(p.n, bits)


def refines(p: FinitePreorder, q: FinitePreorder) -> bool:
    """True iff every pair related by q is related by p (q ⊆ p)."""
    _check_same_carrier(p, q)
    return all(qr & ~pr == 0 for pr, qr in zip(p.rows, q.rows))


def dual(p: FinitePreorder) -> FinitePreorder:
    """x ≾⁻¹ y ⇔ y ≾ x."""
    return FinitePreorder(p.n, p.columns)


def strictly_below(p: FinitePreorder, x: int, y: int) -> bool:
    return p.le(x, y) and not p.le(y, x)


def indifferent(p: FinitePreorder, x: int, y: int) -> bool:
    return p.le(x, y) and p.le(y, x)


def incomparable(p: FinitePreorder, x: int, y: int) -> bool:
    return not p.le(x, y) and not p.le(y, x)


def relation(p: FinitePreorder, x: int, y: int) -> Relation:
    forward, backward = p.le(x, y), p.le(y, x)
    if forward and backward:
        return Relation.INDIFFERENT
    if forward:
        return Relation.BELOW
    if backward:
        return Relation.ABOVE
    return Relation.INCOMPARABLE


def is_total(p: FinitePreorder) -> bool:
    full = (1 << p.n) - 1
    return all(row | col == full for row, col in zip(p.rows, p.columns))


def is_antisymmetric(p: FinitePreorder) -> bool:
    """True iff p is a partial order."""
    return all(row & col == 1 << i for i, (row, col) in enumerate(zip(p.rows, p.columns)))


def is_isotonic(p: FinitePreorder, values: Sequence[Any]) -> bool:
    """x ≾ y ⇒ values[x] <= values[y]."""
    if len(values) != p.n:
        raise SizeMismatch(f"Vector of length {len(values)} on carrier of size {p.n}")
    return all(values[i] <= values[j] for i in range(p.n) for j in bits_to_indices(p.rows[i]))
