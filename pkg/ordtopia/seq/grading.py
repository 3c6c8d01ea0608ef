"""
The grading principle and the threshold-count preorders built on it.

x ≾_m y iff x ≤ π(y) coordinatewise for some finite permutation π. The
check here is bounded to permutations supported in the first K positions,
where it reduces to sorted dominance.
"""
from enum import Enum
from fractions import Fraction
from functools import partial
from typing import Callable, Optional

from ordtopia.errors import WindowTooSmall
from ordtopia.seq.model import ExtendedCount, SeqModel, TailKind, get_tail, tail_le

HALF = Fraction(1, 2)


class Comparison(str, Enum):
    """Verdict of a criterion on an ordered pair (x, y)."""

    X_BELOW = "x<y"
    Y_BELOW = "y<x"
    INDIFFERENT = "x~y"
    INCOMPARABLE = "x|y"

    @property
    def x_weakly_below(self) -> bool:
        return self in (Comparison.X_BELOW, Comparison.INDIFFERENT)


Criterion = Callable[[SeqModel, SeqModel], Comparison]
LePredicate = Callable[[SeqModel, SeqModel], bool]


def criterion_from_le(le: LePredicate) -> Criterion:
    """Turn a ≾ predicate into a Criterion by evaluating both directions."""

    def compare(x: SeqModel, y: SeqModel) -> Comparison:
        forward, backward = le(x, y), le(y, x)
        if forward and backward:
            return Comparison.INDIFFERENT
        if forward:
            return Comparison.X_BELOW
        if backward:
            return Comparison.Y_BELOW
        return Comparison.INCOMPARABLE

    return compare


def grading_le(x: SeqModel, y: SeqModel, window: int) -> bool:
    """
    x ≾_m y with permutations supported in the first `window` positions.

    True iff sorted(x[:K]) <= sorted(y[:K]) coordinatewise and x's tail lies
    pointwise at or below y's beyond K. A true answer stays true for every
    larger window.

    Raises:
        WindowTooSmall: If either prefix is longer than the window
        IncomparableTails: If the tails are different named tails
    """
    if window < max(len(x), len(y)):
        raise WindowTooSmall(
            f"Cannot grade: window {window} shorter than prefixes ({len(x)}, {len(y)})"
        )
    ax, ay = x.extended(window), y.extended(window)
    if not tail_le(ax.tail, ay.tail):
        return False
    return all(a <= b for a, b in zip(sorted(ax.prefix), sorted(ay.prefix)))


def sigma_below(x: SeqModel, threshold: Fraction, window: Optional[int] = None) -> ExtendedCount:
    """
    Number of coordinates strictly below `threshold`.

    With `window` set only the first `window` positions are counted, which
    keeps the count finite. Otherwise a tail that drops below the threshold
    infinitely often makes the count infinite.
    """
    if window is not None:
        values = x.extended(window).prefix[:window]
        return ExtendedCount(sum(1 for v in values if v < threshold))
    if x.tail.kind == TailKind.NAMED:
        tail_hits = get_tail(x.tail.tail_id or "").recurring_min < threshold
    else:
        tail_hits = x.tail.infimum < threshold
    if tail_hits:
        return ExtendedCount.infinite()
    return ExtendedCount(sum(1 for v in x.prefix if v < threshold))


def _threshold_le(
    x: SeqModel, y: SeqModel, window: int, threshold: Fraction, count_window: Optional[int]
) -> bool:
    if grading_le(x, y, window):
        return True
    return sigma_below(x, threshold, count_window) > sigma_below(y, threshold, count_window)


def pre_half(x: SeqModel, y: SeqModel, window: int, counted_in_window: bool = False) -> bool:
    """x ≾_m y, or x has strictly more coordinates below ½ than y."""
    return _threshold_le(x, y, window, HALF, window if counted_in_window else None)


def pre_plus(x: SeqModel, y: SeqModel, window: int, counted_in_window: bool = False) -> bool:
    """x ≾_m y, or x has strictly more negative coordinates than y."""
    return _threshold_le(x, y, window, Fraction(0), window if counted_in_window else None)


def grading_criterion(window: int) -> Criterion:
    return criterion_from_le(partial(grading_le, window=window))


def half_criterion(window: int, counted_in_window: bool = False) -> Criterion:
    return criterion_from_le(partial(pre_half, window=window, counted_in_window=counted_in_window))


def plus_criterion(window: int, counted_in_window: bool = False) -> Criterion:
    return criterion_from_le(partial(pre_plus, window=window, counted_in_window=counted_in_window))
