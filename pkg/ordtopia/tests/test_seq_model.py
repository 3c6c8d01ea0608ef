"""
Tests for bounded-sequence models, tails and finite permutations.
"""
from fractions import Fraction

import pytest

from ordtopia.errors import (
    IncomparableTails,
    InvalidPermutation,
    InvalidSequence,
    ParamOutOfRange,
    SupportExceedsPrefix,
)
from ordtopia.seq.model import (
    BLOCKS,
    ExtendedCount,
    FinitePermutation,
    SeqModel,
    TailKind,
    align,
    apply_perm,
    block_start,
    product_le,
    product_lt_everywhere,
    same_sequence,
    tail_le,
    tail_lt,
)
from ordtopia.seq.witnesses import blocks_base, blocks_limit, blocks_shifted


def test_blocks_tail_layout():
    """(0,1 | 0,½,1 | 0,⅓,⅔,1 | …)."""
    assert [block_start(k) for k in range(1, 5)] == [0, 2, 5, 9]
    expected = [0, 1, 0, Fraction(1, 2), 1, 0, Fraction(1, 3), Fraction(2, 3), 1, 0]
    assert [BLOCKS.coordinate(i) for i in range(10)] == expected


def test_constant_zero_tail_is_finite():
    x = SeqModel.with_constant_tail([1, 2], 0)

    assert x.tail.kind == TailKind.ZERO
    assert x == SeqModel.finite([1, 2])


def test_coordinate_reads_past_prefix():
    x = SeqModel.with_constant_tail([1], Fraction(1, 2))

    assert x.coordinate(0) == 1
    assert x.coordinate(100) == Fraction(1, 2)
    with pytest.raises(IndexError):
        x.coordinate(-1)


def test_align_materialises_shorter_prefix():
    x = SeqModel.with_named_tail([1], BLOCKS.tail_id)
    y = SeqModel.with_named_tail([0, 0, 0, 0], BLOCKS.tail_id)
    ax, ay = align(x, y)

    assert ax.prefix == (1, 1, 0, Fraction(1, 2))
    assert ax.tail == ay.tail


def test_align_rejects_different_tails():
    with pytest.raises(IncomparableTails, match="Cannot align"):
        align(SeqModel.finite([1]), SeqModel.with_constant_tail([1], 1))


def test_tail_order():
    zero = SeqModel.finite([]).tail
    half = SeqModel.with_constant_tail([], Fraction(1, 2)).tail
    named = SeqModel.with_named_tail([], BLOCKS.tail_id).tail

    assert tail_le(zero, half)
    assert tail_lt(zero, half)
    assert not tail_le(half, zero)
    assert tail_le(named, SeqModel.with_constant_tail([], 1).tail)
    assert not tail_lt(zero, named)


def test_product_orders():
    x = SeqModel.finite([0, 1])
    y = SeqModel.finite([1, 1])

    assert product_le(x, y)
    assert not product_le(y, x)
    assert not product_lt_everywhere(x, y)
    assert product_lt_everywhere(
        SeqModel.with_constant_tail([0], Fraction(1, 4)), SeqModel.with_constant_tail([1], Fraction(1, 2))
    )


def test_same_sequence_ignores_prefix_length():
    assert same_sequence(SeqModel.finite([1]), SeqModel.finite([1, 0, 0]))
    assert not same_sequence(SeqModel.finite([1]), SeqModel.with_constant_tail([1], 1))


def test_apply_perm_reads_through_the_permutation():
    """π(x)_t = x_{π(t)}."""
    x = SeqModel.finite([1, 2, 3])
    pi = FinitePermutation.from_images([1, 2, 0])

    assert apply_perm(pi, x).prefix == (2, 3, 1)
    assert apply_perm(FinitePermutation.identity(), x) == x


def test_permutation_must_be_bijective():
    with pytest.raises(InvalidPermutation, match="not a bijection"):
        FinitePermutation(((0, 1), (1, 1)))


def test_permutation_support_must_fit_prefix():
    with pytest.raises(SupportExceedsPrefix, match="support reaches 3"):
        apply_perm(FinitePermutation.swap(0, 3), SeqModel.finite([1, 2]))


def test_swap_support():
    assert FinitePermutation.swap(2, 0).support == [0, 2]
    assert FinitePermutation.swap(1, 1).support == []


def test_extended_count_order():
    """Infinity beats every finite count and never itself."""
    inf = ExtendedCount.infinite()

    assert inf > ExtendedCount(3)
    assert not inf > inf
    assert ExtendedCount(2) > ExtendedCount(1)
    assert ExtendedCount(1) < inf
    assert str(inf) == "inf"


def test_shifted_blocks_shape():
    """Block n moves one place right and the first coordinate becomes 1."""
    y = blocks_shifted(3)
    start = block_start(3)

    assert y.prefix[0] == 1
    assert y.prefix[start:start + 4] == (0, 0, Fraction(1, 3), Fraction(2, 3))
    assert blocks_shifted(1) == blocks_base()
    assert blocks_limit().coordinate(0) == 1
    assert blocks_limit().coordinate(1) == BLOCKS.coordinate(1)


def test_shifted_blocks_needs_positive_index():
    with pytest.raises(ParamOutOfRange, match="must be positive"):
        blocks_shifted(0)


def test_prefix_replacement_keeps_length():
    with pytest.raises(InvalidSequence, match="length changed"):
        SeqModel.finite([1, 2]).with_prefix([1])


def test_dict_round_trip():
    x = SeqModel.with_constant_tail([Fraction(1, 3)], Fraction(1, 2))

    assert x.to_dict() == {"prefix": ["1/3"], "tail": {"kind": "const", "offset": 1, "value": "1/2"}}
    assert SeqModel.from_dict(x.to_dict()) == x
