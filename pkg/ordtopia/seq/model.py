"""
Sequence models for bounded real sequences.

A SeqModel is an explicit rational prefix followed by a shared tail. Two
models can be compared metrically only when their tails agree, so their
difference has finite support inside the (aligned) prefixes.
"""
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ordtopia.errors import (
    IncomparableTails,
    InvalidPermutation,
    InvalidSequence,
    SupportExceedsPrefix,
)

Number = Union[int, Fraction]


class TailKind(str, Enum):
    ZERO = "zero"
    CONST = "const"
    NAMED = "named"


@dataclass(frozen=True)
class NamedTail:
    """
    A registered infinite background sequence.

    `coordinate(i)` gives the value at absolute position i. `recurring_min`
    must be attained infinitely often and bound every coordinate from below;
    counting coordinates below a threshold relies on it.
    """

    tail_id: str
    coordinate: Callable[[int], Fraction]
    recurring_min: Fraction
    bound: Fraction


_TAILS: Dict[str, NamedTail] = {}


def register_tail(tail: NamedTail) -> NamedTail:
    if tail.tail_id in _TAILS and _TAILS[tail.tail_id] is not tail:
        raise InvalidSequence(f"Cannot register tail: '{tail.tail_id}' already registered")
    _TAILS[tail.tail_id] = tail
    return tail


def get_tail(tail_id: str) -> NamedTail:
    try:
        return _TAILS[tail_id]
    except KeyError:
        raise IncomparableTails(f"Unknown named tail '{tail_id}'")


def block_start(k: int) -> int:
    """Absolute position where block k (k >= 1) of the blocks tail begins."""
    return (k - 1) * (k + 2) // 2


def _blocks_coordinate(i: int) -> Fraction:
    # block k is (0, 1/k, ..., k/k) and occupies k + 1 positions
    k = (math.isqrt(9 + 8 * i) - 1) // 2
    while block_start(k + 1) <= i:
        k += 1
    while block_start(k) > i:
        k -= 1
    return Fraction(i - block_start(k), k)


BLOCKS = register_tail(
    NamedTail("blocks", _blocks_coordinate, recurring_min=Fraction(0), bound=Fraction(1))
)


@dataclass(frozen=True)
class TailRef:
    """Which tail follows the prefix, and the absolute position it starts at."""

    kind: TailKind
    offset: int
    value: Optional[Fraction] = None
    tail_id: Optional[str] = None

    def __post_init__(self) -> None:
        if self.offset < 0:
            raise InvalidSequence(f"Cannot build tail: negative offset {self.offset}")
        if self.kind == TailKind.CONST and self.value is None:
            raise InvalidSequence("Cannot build tail: constant tail needs a value")
        if self.kind == TailKind.NAMED:
            get_tail(self.tail_id or "")

    def at(self, i: int) -> Fraction:
        """Value at absolute position i >= offset."""
        if self.kind == TailKind.ZERO:
            return Fraction(0)
        if self.kind == TailKind.CONST:
            assert self.value is not None
            return self.value
        return get_tail(self.tail_id or "").coordinate(i)

    def same_class(self, other: "TailRef") -> bool:
        return (self.kind, self.value, self.tail_id) == (other.kind, other.value, other.tail_id)

    @property
    def infimum(self) -> Fraction:
        if self.kind == TailKind.ZERO:
            return Fraction(0)
        if self.kind == TailKind.CONST:
            assert self.value is not None
            return self.value
        return get_tail(self.tail_id or "").recurring_min


@dataclass(frozen=True)
class SeqModel:
    """Bounded sequence: explicit prefix, then the tail from position len(prefix) on."""

    prefix: Tuple[Fraction, ...]
    tail: TailRef

    def __post_init__(self) -> None:
        if self.tail.offset != len(self.prefix):
            raise InvalidSequence(
                f"Cannot build sequence: tail offset {self.tail.offset} != prefix length {len(self.prefix)}"
            )

    @classmethod
    def finite(cls, values: Iterable[Number]) -> "SeqModel":
        """Explicit values followed by zeros."""
        prefix = tuple(Fraction(v) for v in values)
        return cls(prefix, TailRef(TailKind.ZERO, len(prefix)))

    @classmethod
    def with_constant_tail(cls, values: Iterable[Number], c: Number) -> "SeqModel":
        """Explicit values followed by c forever; c = 0 gives the zero tail."""
        if c == 0:
            return cls.finite(values)
        prefix = tuple(Fraction(v) for v in values)
        return cls(prefix, TailRef(TailKind.CONST, len(prefix), value=Fraction(c)))

    @classmethod
    def with_named_tail(cls, values: Iterable[Number], tail_id: str) -> "SeqModel":
        prefix = tuple(Fraction(v) for v in values)
        return cls(prefix, TailRef(TailKind.NAMED, len(prefix), tail_id=tail_id))

    def __len__(self) -> int:
        return len(self.prefix)

    def coordinate(self, i: int) -> Fraction:
        """Value at 0-based position i."""
        if i < 0:
            raise IndexError(f"Negative position {i}")
        return self.prefix[i] if i < len(self.prefix) else self.tail.at(i)

    def extended(self, length: int) -> "SeqModel":
        """Same sequence with the prefix materialised up to `length` positions."""
        if length <= len(self.prefix):
            return self
        extra = tuple(self.tail.at(i) for i in range(len(self.prefix), length))
        tail = TailRef(self.tail.kind, length, self.tail.value, self.tail.tail_id)
        return SeqModel(self.prefix + extra, tail)

    def with_prefix(self, prefix: Sequence[Number]) -> "SeqModel":
        """Replace the prefix, keeping the tail class; lengths must match."""
        values = tuple(Fraction(v) for v in prefix)
        if len(values) != len(self.prefix):
            raise InvalidSequence("Cannot replace prefix: length changed")
        return SeqModel(values, self.tail)

    def to_dict(self) -> Dict[str, Any]:
        tail: Dict[str, Any] = {"kind": self.tail.kind.value, "offset": self.tail.offset}
        if self.tail.value is not None:
            tail["value"] = _fmt(self.tail.value)
        if self.tail.tail_id is not None:
            tail["id"] = self.tail.tail_id
        return {"prefix": [_fmt(v) for v in self.prefix], "tail": tail}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SeqModel":
        tail = data["tail"]
        ref = TailRef(
            TailKind(tail["kind"]),
            int(tail["offset"]),
            value=Fraction(tail["value"]) if "value" in tail else None,
            tail_id=tail.get("id"),
        )
        return cls(tuple(Fraction(v) for v in data["prefix"]), ref)


def _fmt(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def comparable(x: SeqModel, y: SeqModel) -> bool:
    return x.tail.same_class(y.tail)


def align(x: SeqModel, y: SeqModel) -> Tuple[SeqModel, SeqModel]:
    """
    Extend both prefixes to a common length so they share one TailRef.

    Raises:
        IncomparableTails: If the tails are of different kind, value or id
    """
    if not comparable(x, y):
        raise IncomparableTails(f"Cannot align sequences: tails {x.tail} and {y.tail} differ")
    length = max(len(x), len(y))
    return x.extended(length), y.extended(length)


def differences(x: SeqModel, y: SeqModel) -> List[Fraction]:
    """x_t − y_t over the aligned prefix; zero beyond it."""
    ax, ay = align(x, y)
    return [a - b for a, b in zip(ax.prefix, ay.prefix)]


def tail_le(a: TailRef, b: TailRef) -> bool:
    """
    Whether tail a sits pointwise at or below tail b from a shared offset on.

    Raises:
        IncomparableTails: If a and b are different named tails
    """
    if a.same_class(b):
        return True
    if a.kind == TailKind.NAMED and b.kind == TailKind.NAMED:
        raise IncomparableTails(f"Cannot compare named tails '{a.tail_id}' and '{b.tail_id}'")
    if a.kind == TailKind.NAMED:
        return get_tail(a.tail_id or "").bound <= b.infimum
    return a.infimum <= b.infimum


def tail_lt(a: TailRef, b: TailRef) -> bool:
    """Strict pointwise version of tail_le."""
    if a.same_class(b):
        return False
    if a.kind == TailKind.NAMED and b.kind == TailKind.NAMED:
        raise IncomparableTails(f"Cannot compare named tails '{a.tail_id}' and '{b.tail_id}'")
    if a.kind == TailKind.NAMED:
        return get_tail(a.tail_id or "").bound < b.infimum
    if b.kind == TailKind.NAMED:
        return a.infimum < get_tail(b.tail_id or "").recurring_min
    return a.infimum < b.infimum


def _common(x: SeqModel, y: SeqModel) -> Tuple[SeqModel, SeqModel]:
    length = max(len(x), len(y))
    return x.extended(length), y.extended(length)


def product_le(x: SeqModel, y: SeqModel) -> bool:
    """Coordinatewise x_t <= y_t for every t."""
    ax, ay = _common(x, y)
    return all(a <= b for a, b in zip(ax.prefix, ay.prefix)) and tail_le(ax.tail, ay.tail)


def product_lt_everywhere(x: SeqModel, y: SeqModel) -> bool:
    """x_t < y_t for every t."""
    ax, ay = _common(x, y)
    return all(a < b for a, b in zip(ax.prefix, ay.prefix)) and tail_lt(ax.tail, ay.tail)


def same_sequence(x: SeqModel, y: SeqModel) -> bool:
    if not comparable(x, y):
        return False
    ax, ay = align(x, y)
    return ax.prefix == ay.prefix


@dataclass(frozen=True)
class FinitePermutation:
    """
    Bijection of ℕ that moves only finitely many positions.

    `mapping` lists (index, image) pairs; unlisted positions are fixed.
    """

    mapping: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        sources = [i for i, _ in self.mapping]
        targets = [j for _, j in self.mapping]
        if len(set(sources)) != len(sources) or set(sources) != set(targets):
            raise InvalidPermutation(f"Cannot build permutation: {self.mapping} is not a bijection of its support")
        if any(i < 0 for i in sources):
            raise InvalidPermutation("Cannot build permutation: negative index")

    @classmethod
    def identity(cls) -> "FinitePermutation":
        return cls(())

    @classmethod
    def swap(cls, i: int, j: int) -> "FinitePermutation":
        return cls(((i, j), (j, i))) if i != j else cls(())

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "FinitePermutation":
        """Permutation of 0..len(images)-1 sending t to images[t]."""
        return cls(tuple((t, img) for t, img in enumerate(images) if t != img))

    @property
    def support(self) -> List[int]:
        return sorted(i for i, j in self.mapping if i != j)

    def image(self, t: int) -> int:
        for i, j in self.mapping:
            if i == t:
                return j
        return t


def apply_perm(pi: FinitePermutation, x: SeqModel) -> SeqModel:
    """
    π(x)_t = x_{π(t)} on the prefix; the tail is untouched.

    Raises:
        SupportExceedsPrefix: If π moves a position beyond the prefix
    """
    support = pi.support
    if support and support[-1] >= len(x):
        raise SupportExceedsPrefix(
            f"Cannot permute: support reaches {support[-1]} but prefix has {len(x)} positions"
        )
    return x.with_prefix([x.prefix[pi.image(t)] for t in range(len(x))])


@dataclass(frozen=True)
class ExtendedCount:
    """A natural number or infinity; infinity is never greater than infinity."""

    value: Optional[int]

    @classmethod
    def infinite(cls) -> "ExtendedCount":
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __gt__(self, other: "ExtendedCount") -> bool:
        if self.value is None:
            return other.value is not None
        return other.value is not None and self.value > other.value

    def __lt__(self, other: "ExtendedCount") -> bool:
        return other > self

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)
