"""
Named sequences used by the reproductions, and simplex-condition witnesses.

S = {x : Σ x_t = 1}. A metric passes the simplex condition when d(0, S) > 0.
Uniform blocks and far spikes show d_s, d_c and d_p fail it; d_1 and d_q
keep every simplex point at distance exactly 1 from zero.
"""
import math
from fractions import Fraction
from typing import List, Optional, Union

from ordtopia.errors import ParamOutOfRange
from ordtopia.schemas.report import CheckReport, Pair
from ordtopia.seq.metrics import metric_catalog
from ordtopia.seq.model import BLOCKS, SeqModel, block_start

Real = Union[float, Fraction]

SIMPLEX_THRESHOLD = 1e-3
DEFAULT_BLOCK_MAX = 2**12
DEFAULT_SPIKE_MAX = 10
REL_TOLERANCE = 1e-9


def zero_seq() -> SeqModel:
    return SeqModel.finite(())


def blocks_base() -> SeqModel:
    """(0,1 | 0,½,1 | 0,⅓,⅔,1 | …)."""
    return SeqModel.with_named_tail((), BLOCKS.tail_id)


def blocks_limit() -> SeqModel:
    """The blocks sequence with its first coordinate raised to 1."""
    return SeqModel.with_named_tail((1,), BLOCKS.tail_id)


def blocks_shifted(n: int) -> SeqModel:
    """
    First coordinate 1, and block n shifted one place right:
    (0, 1/n, …, n/n) becomes (0, 0, 1/n, …, (n−1)/n). For n = 1 it is the
    blocks sequence itself.
    """
    if n < 1:
        raise ParamOutOfRange(f"Cannot build shifted blocks: n must be positive, got {n}")
    if n == 1:
        return blocks_base()
    start, end = block_start(n), block_start(n + 1)
    values = [BLOCKS.coordinate(i) for i in range(end)]
    values[0] = Fraction(1)
    values[start:end] = [Fraction(0)] + [Fraction(j, n) for j in range(n)]
    return SeqModel.with_named_tail(values, BLOCKS.tail_id)


def threshold_seq(n: int) -> SeqModel:
    """(½ − 2⁻ⁿ, ½ − 2⁻ⁿ, 0, …)."""
    v = Fraction(1, 2) - Fraction(1, 2**n)
    return SeqModel.finite((v, v))


def threshold_limit() -> SeqModel:
    return SeqModel.finite((Fraction(1, 2), Fraction(1, 2)))


def threshold_half_point() -> SeqModel:
    return SeqModel.finite((Fraction(1, 2),))


def half_constant() -> SeqModel:
    return SeqModel.with_constant_tail((), Fraction(1, 2))


def uniform_block(n: int) -> SeqModel:
    """(1/n, …, 1/n, 0, …) with n equal entries; a simplex point."""
    return SeqModel.finite([Fraction(1, n)] * n)


def spike(n: int) -> SeqModel:
    """Unit mass at 1-based position n; a simplex point."""
    return SeqModel.finite([0] * (n - 1) + [1])


def dp_crossing(p: float, threshold: float = SIMPLEX_THRESHOLD) -> int:
    """Smallest n with n^(1/p − 1) < threshold."""
    n = math.ceil(threshold ** (p / (1 - p)))
    while n ** (1 / p - 1) >= threshold:
        n += 1
    return n


def _strictly_decreasing(values: List[Real]) -> bool:
    return all(a > b for a, b in zip(values, values[1:]))


def _close(observed: float, expected: float) -> bool:
    return abs(observed - expected) <= REL_TOLERANCE * abs(expected)


def simplex_witnesses(
    metric: str,
    n_max: Optional[int] = None,
    p: Real = 2.0,
    q: Real = Fraction(1, 2),
    suite: str = "repro",
) -> CheckReport:
    """
    Witness families for d(0, S).

    ds, dp: uniform blocks for n = 1, 2, 4, … up to n_max.
    dc: spikes at n = 1 … n_max.
    d1, dq: both families, each at distance exactly 1.
    """
    catalog = metric_catalog(p, q)
    if metric not in catalog:
        raise ParamOutOfRange(f"Cannot build witnesses: unknown metric '{metric}'")
    d = catalog[metric]
    zero = zero_seq()
    observed: List[Pair] = []
    expected: List[Pair] = []
    tolerance = "exact"

    if metric == "dc":
        ns = list(range(1, (n_max or DEFAULT_SPIKE_MAX) + 1))
        values: List[Real] = [d(zero, spike(n)) for n in ns]
        ok = values == [Fraction(1, 2**n) for n in ns]
        ok = ok and _strictly_decreasing(values) and values[-1] < SIMPLEX_THRESHOLD
        observed = [(f"n={n}", str(v)) for n, v in zip(ns, values)]
        expected = [("d(0,e_n)", "2^-n"), ("final", f"< {SIMPLEX_THRESHOLD}")]
    elif metric in ("ds", "dp"):
        top = n_max or DEFAULT_BLOCK_MAX
        ns = [2**k for k in range(top.bit_length()) if 2**k <= top]
        values = [d(zero, uniform_block(n)) for n in ns]
        observed = [(f"n={n}", str(v)) for n, v in zip(ns, values)]
        if metric == "ds":
            ok = values == [Fraction(1, n) for n in ns] and values[-1] < SIMPLEX_THRESHOLD
            expected = [("d(0,u_n)", "1/n"), ("final", f"< {SIMPLEX_THRESHOLD}")]
        else:
            exponent = 1 / float(p) - 1
            ok = all(_close(float(v), n**exponent) for n, v in zip(ns, values))
            crossing = dp_crossing(float(p))
            observed.append(("crossing_n", str(crossing)))
            expected = [("d(0,u_n)", "n^(1/p-1)")]
            tolerance = f"rel {REL_TOLERANCE}"
        ok = ok and _strictly_decreasing(values)
    else:
        ns = list(range(1, (n_max or 16) + 1))
        points = [uniform_block(n) for n in ns] + [spike(n) for n in ns]
        values = [d(zero, point) for point in points]
        ok = all(v == 1 for v in values)
        observed = [("min_distance", str(min(values))), ("points", str(len(points)))]
        expected = [("min_distance", "1")]

    return CheckReport.from_outcome(
        name=f"simplex-{metric}",
        suite=suite,
        anchor="simplex-condition",
        ok=ok,
        observed=observed,
        expected=expected,
        tolerance=tolerance,
    )
