"""
Overtaking criterion with concave gauges.

y ≾ x iff Σ_{t<T} (g(x_t) − g(y_t)) >= 0 for all large T. With a shared
tail the partial sums are constant once past the difference's support, so
the verdict is the sign of one finite sum. The log and linear gauges are
signed exactly. Square-root sums are grouped by rational multiples of a
common root, which settles every zero sum exactly; the rest are bracketed
with outward-rounded decimal intervals whose precision doubles until the
sign is certain.
"""
import logging
import math
from collections import Counter
from dataclasses import dataclass
from decimal import ROUND_CEILING, ROUND_FLOOR, Context, Decimal
from fractions import Fraction
from functools import partial
from typing import Callable, Dict, List, Optional, Tuple

from ordtopia.errors import GaugeDomain
from ordtopia.seq.grading import Comparison, Criterion
from ordtopia.seq.model import SeqModel, align

logger = logging.getLogger(__name__)

START_PRECISION = 20
MAX_PRECISION = 320

Interval = Tuple[Decimal, Decimal]
ExactSign = Callable[[List[Fraction], List[Fraction]], Optional[int]]


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def _bracket(t: Fraction, prec: int) -> Interval:
    """Decimal interval around t + 1."""
    lo = Context(prec=prec, rounding=ROUND_FLOOR)
    hi = Context(prec=prec, rounding=ROUND_CEILING)
    num, den = Decimal(t.numerator + t.denominator), Decimal(t.denominator)
    return lo.divide(num, den), hi.divide(num, den)


def _widen(value_lo: Decimal, value_hi: Decimal, prec: int) -> Interval:
    # sqrt is correctly rounded to half an ulp; one ulp each way covers it
    ctx = Context(prec=prec)
    return ctx.next_minus(value_lo), ctx.next_plus(value_hi)


def _sqrt_interval(t: Fraction, prec: int) -> Interval:
    a, b = _bracket(t, prec)
    ctx = Context(prec=prec)
    return _widen(ctx.sqrt(a), ctx.sqrt(b), prec)


def _sqrt_exact_sign(xs: List[Fraction], ys: List[Fraction]) -> Optional[int]:
    """
    Σ √(x+1) − Σ √(y+1) as Σ c_r √r over pairwise independent radicands r.

    √(p/q) = √(pq)/q, and √a, √b are rational multiples of each other iff
    ab is a perfect square. Roots of distinct groups are linearly
    independent over Q, so the sum is zero iff every c_r is. With one
    nonzero group its coefficient gives the sign; otherwise None.
    """
    groups: List[Tuple[int, Fraction]] = []
    for values, side in ((xs, 1), (ys, -1)):
        for t in values:
            v = t + 1
            radicand, den = v.numerator * v.denominator, v.denominator
            for index, (base, coefficient) in enumerate(groups):
                root = math.isqrt(base * radicand)
                if root * root == base * radicand:
                    groups[index] = (base, coefficient + Fraction(side * root, base * den))
                    break
            else:
                groups.append((radicand, Fraction(side, den)))
    live = [coefficient for _, coefficient in groups if coefficient != 0]
    if not live:
        return 0
    if len(live) == 1:
        return _sign(live[0])
    return None


def _log_exact_sign(xs: List[Fraction], ys: List[Fraction]) -> int:
    """Both sides have equally many terms, so the +1 offsets cancel and ln is monotone."""
    return _sign(math.prod(t + 1 for t in xs) - math.prod(t + 1 for t in ys))


def _linear_exact_sign(xs: List[Fraction], ys: List[Fraction]) -> int:
    return _sign(sum(xs, Fraction(0)) - sum(ys, Fraction(0)))


@dataclass(frozen=True)
class Gauge:
    """
    A strictly isotonic gauge on t >= 0.

    `exact_sign` signs Σ g(x) − g(y) over equally long lists when it can and
    returns None otherwise; `interval` then brackets single values at a
    given decimal precision.
    """

    gauge_id: str
    strictly_concave: bool
    exact_sign: Optional[ExactSign] = None
    interval: Optional[Callable[[Fraction, int], Interval]] = None


GAUGES: Dict[str, Gauge] = {
    "sqrt": Gauge("sqrt", strictly_concave=True, exact_sign=_sqrt_exact_sign, interval=_sqrt_interval),
    "log": Gauge("log", strictly_concave=True, exact_sign=_log_exact_sign),
    # control: isotonic but not strictly concave
    "linear": Gauge("linear", strictly_concave=False, exact_sign=_linear_exact_sign),
}


def get_gauge(gauge_id: str) -> Gauge:
    try:
        return GAUGES[gauge_id]
    except KeyError:
        raise GaugeDomain(f"Unknown gauge '{gauge_id}'; choose from {sorted(GAUGES)}")


def _cancel_common(xs: List[Fraction], ys: List[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    """Drop the common multiset; the sum of g-differences is unchanged."""
    cx, cy = Counter(xs), Counter(ys)
    common = cx & cy
    return sorted((cx - common).elements()), sorted((cy - common).elements())


def _interval_sign(gauge: Gauge, xs: List[Fraction], ys: List[Fraction]) -> int:
    assert gauge.interval is not None
    prec = START_PRECISION
    while prec <= MAX_PRECISION:
        floor = Context(prec=prec + 10, rounding=ROUND_FLOOR)
        ceil = Context(prec=prec + 10, rounding=ROUND_CEILING)
        x_bounds = [gauge.interval(v, prec) for v in xs]
        y_bounds = [gauge.interval(v, prec) for v in ys]
        low = Decimal(0)
        high = Decimal(0)
        for lo, hi in x_bounds:
            low = floor.add(low, lo)
            high = ceil.add(high, hi)
        for lo, hi in y_bounds:
            low = floor.subtract(low, hi)
            high = ceil.subtract(high, lo)
        if low > 0:
            return 1
        if high < 0:
            return -1
        prec *= 2
    logger.warning(
        "Overtaking sum sign undecided at %d digits for gauge %s; treating as zero",
        MAX_PRECISION,
        gauge.gauge_id,
    )
    return 0


def limit_sign(x: SeqModel, y: SeqModel, gauge_id: str) -> int:
    """
    Sign of Σ_t (g(x_t) − g(y_t)) over the support of x − y.

    Raises:
        IncomparableTails: If x and y do not share a tail
        GaugeDomain: If a differing coordinate is negative or the gauge is unknown
    """
    gauge = get_gauge(gauge_id)
    ax, ay = align(x, y)
    negative = [v for v in ax.prefix + ay.prefix if v < 0]
    if ax.tail.infimum < 0:
        negative.append(ax.tail.infimum)
    if negative:
        raise GaugeDomain(f"Cannot apply gauge {gauge_id}: coordinate {negative[0]} is negative")
    xs, ys = _cancel_common(list(ax.prefix), list(ay.prefix))
    if not xs:
        return 0
    if gauge.exact_sign is not None:
        sign = gauge.exact_sign(xs, ys)
        if sign is not None:
            return sign
    return _interval_sign(gauge, xs, ys)


def overtaking_compare(x: SeqModel, y: SeqModel, gauge_id: str = "sqrt") -> Comparison:
    """Total verdict of the overtaking criterion: never INCOMPARABLE."""
    sign = limit_sign(x, y, gauge_id)
    if sign > 0:
        return Comparison.Y_BELOW
    if sign < 0:
        return Comparison.X_BELOW
    return Comparison.INDIFFERENT


def overtaking_criterion(gauge_id: str = "sqrt") -> Criterion:
    get_gauge(gauge_id)
    return partial(overtaking_compare, gauge_id=gauge_id)
