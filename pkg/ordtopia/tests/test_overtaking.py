"""
Tests for the overtaking criterion.
"""
import logging
from fractions import Fraction

import pytest

from ordtopia.errors import GaugeDomain, IncomparableTails
from ordtopia.seq import overtaking
from ordtopia.seq.grading import Comparison
from ordtopia.seq.model import SeqModel
from ordtopia.seq.overtaking import get_gauge, limit_sign, overtaking_compare, overtaking_criterion


def test_concave_gauges_prefer_equal_split():
    """(½, ½) beats (0, 1) under sqrt and log; linear is indifferent."""
    unequal = SeqModel.finite([0, 1])
    equal = SeqModel.finite([Fraction(1, 2), Fraction(1, 2)])

    assert overtaking_compare(unequal, equal, "sqrt") == Comparison.X_BELOW
    assert overtaking_compare(unequal, equal, "log") == Comparison.X_BELOW
    assert overtaking_compare(equal, unequal, "sqrt") == Comparison.Y_BELOW
    assert overtaking_compare(unequal, equal, "linear") == Comparison.INDIFFERENT


def test_rearrangement_is_indifferent():
    """A permuted prefix cancels exactly; no decimal work is needed."""
    x = SeqModel.finite([Fraction(1, 3), 0, Fraction(2, 7)])
    y = SeqModel.finite([Fraction(2, 7), Fraction(1, 3)])

    assert limit_sign(x, y, "sqrt") == 0
    assert overtaking_compare(x, y, "log") == Comparison.INDIFFERENT


def test_pareto_improvement_wins():
    assert overtaking_compare(SeqModel.finite([0, 1]), SeqModel.finite([0, 2])) == Comparison.X_BELOW


def test_tiny_gap_climbs_precision():
    """A difference far below the starting precision is still signed."""
    eps = Fraction(1, 10**30)
    x = SeqModel.finite([Fraction(1, 3), Fraction(2, 3)])
    y = SeqModel.finite([Fraction(1, 3) + eps, Fraction(2, 3) - eps])

    assert overtaking_compare(x, y, "sqrt") == Comparison.X_BELOW
    assert overtaking_compare(y, x, "log") == Comparison.Y_BELOW


def test_undecided_sign_logs_warning(monkeypatch, caplog):
    """With the ladder capped below the needed digits the sum is treated as zero."""
    monkeypatch.setattr(overtaking, "MAX_PRECISION", overtaking.START_PRECISION)
    eps = Fraction(1, 10**60)
    x = SeqModel.finite([Fraction(1, 3), Fraction(2, 3)])
    y = SeqModel.finite([Fraction(1, 3) + eps, Fraction(2, 3) - eps])

    with caplog.at_level(logging.WARNING, logger="ordtopia.seq.overtaking"):
        assert limit_sign(x, y, "sqrt") == 0
    assert "undecided" in caplog.text


def test_exact_zero_sums_skip_the_interval_ladder(caplog):
    """√1 + √4 = 2·√(9/4) and ln 1 + ln 4 = 2·ln 2, settled without decimals."""
    with caplog.at_level(logging.WARNING, logger="ordtopia.seq.overtaking"):
        assert overtaking_compare(SeqModel.finite([0, 3]), SeqModel.finite([Fraction(5, 4), Fraction(5, 4)]), "sqrt") \
            == Comparison.INDIFFERENT
        assert overtaking_compare(SeqModel.finite([0, 3]), SeqModel.finite([1, 1]), "log") == Comparison.INDIFFERENT
        # √2 + √8 = 3√2 = 2·√(9/2)
        assert limit_sign(SeqModel.finite([1, 7]), SeqModel.finite([Fraction(7, 2), Fraction(7, 2)]), "sqrt") == 0
    assert caplog.text == ""


def test_single_surd_group_is_signed_exactly(monkeypatch):
    """Sums over multiples of one root never reach the decimal ladder."""
    monkeypatch.setattr(overtaking, "_interval_sign", None)

    # √2 + √8 = 3√2 < √(9/2) + √18 = 9√2/2
    assert limit_sign(SeqModel.finite([1, 7]), SeqModel.finite([Fraction(7, 2), 17]), "sqrt") == -1


def test_shared_tail_required():
    with pytest.raises(IncomparableTails):
        overtaking_compare(SeqModel.finite([1]), SeqModel.with_constant_tail([1], Fraction(1, 2)))


def test_constant_tail_beyond_support():
    x = SeqModel.with_constant_tail([0, 1], Fraction(1, 4))
    y = SeqModel.with_constant_tail([Fraction(1, 2), Fraction(1, 2)], Fraction(1, 4))

    assert overtaking_compare(x, y) == Comparison.X_BELOW


def test_gauge_domain():
    with pytest.raises(GaugeDomain, match="is negative"):
        overtaking_compare(SeqModel.finite([-1]), SeqModel.finite([0]))
    with pytest.raises(GaugeDomain, match="Unknown gauge"):
        overtaking_criterion("cube")
    assert get_gauge("sqrt").strictly_concave
    assert not get_gauge("linear").strictly_concave
