"""
Worked-example reproductions.

Each example rebuilds a family of sequences, measures it with the relevant
metric and compares against the closed form. Exact metrics compare with
zero tolerance, real-valued ones within REL_TOLERANCE.
"""
import logging
from fractions import Fraction
from typing import Iterator, List

from ordtopia.schemas.config import RunConfig
from ordtopia.schemas.report import CheckReport, Pair, Status
from ordtopia.seq.axioms import check_anonymity, check_dfsc, check_pareto
from ordtopia.seq.grading import Comparison, grading_le, half_criterion
from ordtopia.seq.metrics import metric_catalog, metric_dp, metric_dq, metric_ds
from ordtopia.seq.model import FinitePermutation, SeqModel, block_start, product_le
from ordtopia.seq.overtaking import overtaking_criterion
from ordtopia.seq.witnesses import (
    REL_TOLERANCE,
    blocks_base,
    blocks_limit,
    blocks_shifted,
    half_constant,
    simplex_witnesses,
    threshold_half_point,
    threshold_limit,
    threshold_seq,
)

logger = logging.getLogger(__name__)

SUITE = "repro"

SHIFTED_BLOCKS_MAX = 32
HALF_THRESHOLD_MAX = 20
LP_EXPONENTS = (1.5, 2.0, 3.0)
# covers both leading coordinates of the half-threshold sequences
THRESHOLD_WINDOW = 2


def _close(observed: float, expected: float) -> bool:
    return abs(observed - expected) <= REL_TOLERANCE * abs(expected)


def shifted_blocks(cfg: RunConfig) -> Iterator[CheckReport]:
    """
    d_s(l, y_n) = 1/n exactly. Alongside: y_n is not coordinatewise above l,
    y_n is a rearrangement of the blocks sequence x, and x is graded
    strictly below l.
    """
    limit, base = blocks_limit(), blocks_base()
    for n in range(1, SHIFTED_BLOCKS_MAX + 1):
        shifted = blocks_shifted(n)
        window = block_start(n + 1)
        distance = metric_ds(limit, shifted)
        above = product_le(limit, shifted)
        rearranged = grading_le(shifted, base, window) and grading_le(base, shifted, window)
        limit_graded = grading_le(limit, base, window)
        base_graded = grading_le(base, limit, window)
        yield CheckReport.from_outcome(
            name=f"shifted-blocks-n{n:02d}", suite=SUITE, anchor="shifted-blocks-sup-distance",
            ok=distance == Fraction(1, n) and not above and rearranged and not limit_graded and base_graded,
            observed=[
                ("d_s", str(distance)),
                ("l<=y_n", str(above)),
                ("y_n~x", str(rearranged)),
                ("l<=x", str(limit_graded)),
                ("x<=l", str(base_graded)),
            ],
            expected=[("d_s", str(Fraction(1, n))), ("l<=y_n", "False"), ("y_n~x", "True"), ("l<=x", "False"),
                      ("x<=l", "True")],
        )


def shifted_blocks_lp(cfg: RunConfig) -> Iterator[CheckReport]:
    """d_p(l, y_n) = n^(1/p)/n for each exponent, or only for --p when given."""
    exponents = (cfg.p,) if cfg.p is not None else LP_EXPONENTS
    limit = blocks_limit()
    for p in exponents:
        observed: List[Pair] = []
        ok = True
        for n in range(1, SHIFTED_BLOCKS_MAX + 1):
            value = metric_dp(limit, blocks_shifted(n), p)
            target = n ** (1 / p) / n
            ok = ok and _close(value, target)
            observed.append((f"n={n}", repr(value)))
        yield CheckReport.from_outcome(
            name=f"shifted-blocks-lp-p{p:g}", suite=SUITE, anchor="shifted-blocks-lp-distance",
            ok=ok, observed=observed, expected=[("d_p", "n^(1/p)/n")], tolerance=f"rel {REL_TOLERANCE}",
        )


def half_threshold(cfg: RunConfig) -> Iterator[CheckReport]:
    """
    x_n = (½ − 2⁻ⁿ, ½ − 2⁻ⁿ, 0, …) against Z = (½, ½, 0, …) and y = (½, 0, …).

    The count of coordinates below ½ is infinite for every zero-tailed
    sequence, so x_n and y are reported under both the literal count and the
    count restricted to the leading window. x_1 is the zero sequence and is
    graded below y, so the literal verdict there is x<y.
    """
    p = cfg.p if cfg.p is not None else 2.0
    q = cfg.q
    limit, y = threshold_limit(), threshold_half_point()
    literal = half_criterion(THRESHOLD_WINDOW)
    windowed = half_criterion(THRESHOLD_WINDOW, counted_in_window=True)
    for n in range(1, HALF_THRESHOLD_MAX + 1):
        x = threshold_seq(n)
        dp = metric_dp(limit, x, p)
        dq = metric_dq(limit, x, q)
        dp_target = 2 ** (1 / p) / 2**n
        dq_target = min(1.0, 2 ** (1 - n * float(q)))
        literal_verdict, windowed_verdict = literal(x, y), windowed(x, y)
        literal_target = Comparison.X_BELOW if grading_le(x, y, THRESHOLD_WINDOW) else Comparison.INCOMPARABLE
        yield CheckReport.from_outcome(
            name=f"half-threshold-n{n:02d}", suite=SUITE, anchor="half-threshold-lp-distance",
            ok=(
                _close(dp, dp_target)
                and _close(dq, dq_target)
                and literal_verdict == literal_target
                and windowed_verdict == Comparison.X_BELOW
            ),
            observed=[
                ("d_p", repr(dp)),
                ("d_q", repr(dq)),
                ("literal", literal_verdict.value),
                ("windowed", windowed_verdict.value),
            ],
            expected=[
                ("d_p", repr(dp_target)),
                ("d_q", repr(dq_target)),
                ("literal", literal_target.value),
                ("windowed", Comparison.X_BELOW.value),
            ],
            tolerance=f"rel {REL_TOLERANCE}",
        )

    constant = half_constant()
    verdicts = [literal(y, constant), windowed(y, constant)]
    yield CheckReport.from_outcome(
        name="half-threshold-y-below-constant", suite=SUITE, anchor="grading-principle",
        ok=all(v == Comparison.X_BELOW for v in verdicts),
        observed=[("literal", verdicts[0].value), ("windowed", verdicts[1].value)],
        expected=[("literal", Comparison.X_BELOW.value), ("windowed", Comparison.X_BELOW.value)],
    )


def simplex(cfg: RunConfig) -> Iterator[CheckReport]:
    p = cfg.p if cfg.p is not None else 2.0
    for metric in metric_catalog(p, cfg.q):
        yield simplex_witnesses(metric, p=p, q=cfg.q, suite=SUITE)


def overtaking_demo(cfg: RunConfig) -> Iterator[CheckReport]:
    """
    x = (0, 1) and its swap mixed at s = ½. Concave gauges prefer the mixture
    strictly; the linear gauge is indifferent, so its check is expected to
    fail. A constant prefix is fixed by the swap and skipped.
    """
    x = SeqModel.finite((0, 1))
    swap = FinitePermutation.swap(0, 1)
    grid = (Fraction(1, 2),)
    for gauge in ("sqrt", "log"):
        yield check_dfsc(overtaking_criterion(gauge), x, swap, grid, strong=True,
                         name=f"overtaking-demo-dfsc-{gauge}", suite=SUITE)

    control = check_dfsc(overtaking_criterion("linear"), x, swap, grid, strong=True, suite=SUITE)
    yield CheckReport.from_outcome(
        name="overtaking-demo-dfsc-linear-control", suite=SUITE, anchor="overtaking-criterion",
        ok=control.status == Status.FAIL, observed=[("status", control.status.value)] + control.observed,
        expected=[("status", Status.FAIL.value)],
    )

    flat = SeqModel.finite((Fraction(1, 2), Fraction(1, 2)))
    skipped = check_dfsc(overtaking_criterion("sqrt"), flat, swap, grid, suite=SUITE)
    yield CheckReport.from_outcome(
        name="overtaking-demo-dfsc-fixed-point", suite=SUITE, anchor="overtaking-criterion",
        ok=skipped.status == Status.SKIP, observed=[("status", skipped.status.value)],
        expected=[("status", Status.SKIP.value)],
    )

    sqrt = overtaking_criterion("sqrt")
    yield check_pareto(sqrt, [(x, SeqModel.finite((0, 2))), (x, SeqModel.finite((1, 1)))],
                       name="overtaking-demo-pareto", suite=SUITE)
    yield check_anonymity(sqrt, SeqModel.finite((0, 1, Fraction(1, 3))),
                          [swap, FinitePermutation.from_images((2, 0, 1))],
                          name="overtaking-demo-anonymity", suite=SUITE)
    logger.debug("Overtaking demo finished for x=%s", x.to_dict())
