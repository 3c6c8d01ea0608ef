"""
Tests for the sequence distances.
"""
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ordtopia.errors import IncomparableTails, ParamOutOfRange
from ordtopia.seq.metrics import metric_catalog, metric_d1, metric_dc, metric_dp, metric_dq, metric_ds
from ordtopia.seq.model import SeqModel


def test_exact_metrics_on_small_example():
    x = SeqModel.finite([0, Fraction(1, 2), 0])
    y = SeqModel.finite([Fraction(1, 4), 0, 0, Fraction(1, 8)])

    assert metric_ds(x, y) == Fraction(1, 2)
    assert metric_dc(x, y) == Fraction(1, 8) + Fraction(1, 8) + Fraction(1, 128)
    assert metric_d1(x, y) == Fraction(7, 8)


def test_d1_saturates_at_one():
    assert metric_d1(SeqModel.finite([1, 1]), SeqModel.finite([])) == 1


def test_dp_is_euclidean_for_p_two():
    x = SeqModel.finite([])
    y = SeqModel.finite([Fraction(3, 10), Fraction(4, 10)])

    assert metric_dp(x, y, 2) == pytest.approx(0.5, rel=1e-12)
    assert metric_dp(x, x, 2) == 0.0


def test_dp_survives_tiny_differences():
    """Entries whose p-th power underflows still give the right norm."""
    tiny = Fraction(1, 2**600)
    x = SeqModel.finite([tiny, tiny])

    assert metric_dp(x, SeqModel.finite([]), 2) == pytest.approx(math.sqrt(2) * 2.0**-600, rel=1e-12)


def test_dq_sums_powers():
    x = SeqModel.finite([Fraction(1, 16), Fraction(1, 16)])

    assert metric_dq(x, SeqModel.finite([]), Fraction(1, 2)) == pytest.approx(0.5, rel=1e-12)
    assert metric_dq(SeqModel.finite([1]), SeqModel.finite([]), 0.3) == 1.0


def test_exponent_ranges():
    x = SeqModel.finite([1])
    with pytest.raises(ParamOutOfRange, match="p must exceed 1"):
        metric_dp(x, x, 1)
    with pytest.raises(ParamOutOfRange, match=r"q must lie in \(0, 1\)"):
        metric_dq(x, x, 1)


def test_metrics_need_shared_tail():
    with pytest.raises(IncomparableTails):
        metric_ds(SeqModel.finite([1]), SeqModel.with_constant_tail([1], Fraction(1, 2)))


def test_catalog_binds_exponents():
    catalog = metric_catalog(3.0, Fraction(1, 3))
    x = SeqModel.finite([Fraction(1, 8)])

    assert sorted(catalog) == ["d1", "dc", "dp", "dq", "ds"]
    assert catalog["dp"](x, SeqModel.finite([])) == pytest.approx(0.125, rel=1e-12)
    assert catalog["dq"](x, SeqModel.finite([])) == pytest.approx(0.5, rel=1e-12)


prefixes = st.lists(st.fractions(min_value=0, max_value=1, max_denominator=32), max_size=8)


@given(prefixes, prefixes, prefixes)
def test_exact_metrics_are_metrics(a, b, c):
    """Symmetry, zero self-distance and the triangle inequality."""
    x, y, z = SeqModel.finite(a), SeqModel.finite(b), SeqModel.finite(c)
    for d in (metric_ds, metric_dc, metric_d1):
        assert d(x, x) == 0
        assert d(x, y) == d(y, x)
        assert d(x, z) <= d(x, y) + d(y, z)


@given(prefixes, prefixes, prefixes, st.sampled_from([1.5, 2.0, 3.0]), st.sampled_from([Fraction(1, 3), Fraction(1, 2), 0.75]))
def test_real_metrics_are_metrics(a, b, c, p, q):
    """d_p and d_q are metrics up to float rounding."""
    x, y, z = SeqModel.finite(a), SeqModel.finite(b), SeqModel.finite(c)
    for d in (lambda u, v: metric_dp(u, v, p), lambda u, v: metric_dq(u, v, q)):
        assert d(x, x) == 0.0
        assert d(x, y) == d(y, x)
        assert d(x, z) <= d(x, y) + d(y, z) + 1e-9
