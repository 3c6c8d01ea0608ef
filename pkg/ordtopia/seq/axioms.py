"""
Equity and Pareto axiom checkers for sequence criteria.

Each checker evaluates a Criterion on supplied instances and returns a
CheckReport. Instances that do not meet an axiom's premise are counted but
not judged; a check with no qualifying instance is skipped.
"""
import logging
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from ordtopia.core.qpm import format_fraction
from ordtopia.schemas.report import CheckReport, Pair, Status
from ordtopia.seq.grading import Comparison, Criterion, grading_le, sigma_below
from ordtopia.seq.model import (
    FinitePermutation,
    SeqModel,
    apply_perm,
    product_le,
    product_lt_everywhere,
    same_sequence,
)

logger = logging.getLogger(__name__)

SeqPair = Tuple[SeqModel, SeqModel]

DEFAULT_SUITE = "welfare"
DEFAULT_ANCHOR = "overtaking-criterion"


def _describe(x: SeqModel) -> str:
    values = ", ".join(format_fraction(v) for v in x.prefix)
    return f"({values}; {x.tail.kind.value})"


def _judge(
    name: str,
    pairs: Sequence[SeqPair],
    premise: Callable[[SeqModel, SeqModel], bool],
    verdict_ok: Callable[[SeqModel, SeqModel], bool],
    expected: List[Pair],
    suite: str,
    anchor: str,
    seed: Optional[int],
) -> CheckReport:
    qualifying = 0
    violation: Optional[SeqPair] = None
    for x, y in pairs:
        if not premise(x, y):
            continue
        qualifying += 1
        if violation is None and not verdict_ok(x, y):
            violation = (x, y)
    observed: List[Pair] = [("instances", str(len(pairs))), ("qualifying", str(qualifying))]
    if violation is not None:
        observed.append(("violation", f"{_describe(violation[0])} vs {_describe(violation[1])}"))
        logger.debug("Check %s violated on %s", name, observed[-1][1])
    if qualifying == 0:
        return CheckReport(
            name=name, suite=suite, anchor=anchor, status=Status.SKIP,
            observed=observed, expected=expected, seed=seed,
        )
    return CheckReport.from_outcome(
        name=name, suite=suite, anchor=anchor, ok=violation is None,
        observed=observed, expected=expected, seed=seed,
    )


def mixture(x: SeqModel, y: SeqModel, s: Fraction) -> SeqModel:
    """s·x + (1 − s)·y for sequences sharing a prefix length and tail."""
    return x.with_prefix([s * a + (1 - s) * b for a, b in zip(x.prefix, y.prefix)])


def check_dfsc(
    compare: Criterion,
    x: SeqModel,
    pi: FinitePermutation,
    s_grid: Sequence[Fraction],
    strong: bool = False,
    name: str = "dfsc",
    suite: str = DEFAULT_SUITE,
    anchor: str = DEFAULT_ANCHOR,
    seed: Optional[int] = None,
) -> CheckReport:
    """
    Some (strong: every) mixture s·x + (1−s)·π(x) over the grid is strictly
    preferred to both x and π(x).
    """
    px = apply_perm(pi, x)
    expected: List[Pair] = [("mixture_preferred", "every s" if strong else "some s")]
    if px.prefix == x.prefix:
        return CheckReport(
            name=name, suite=suite, anchor=anchor, status=Status.SKIP,
            observed=[("precondition", "x = π(x)")], expected=expected, seed=seed,
        )
    outcomes = []
    for s in s_grid:
        m = mixture(x, px, s)
        outcomes.append(compare(x, m) == Comparison.X_BELOW and compare(px, m) == Comparison.X_BELOW)
    ok = all(outcomes) if strong else any(outcomes)
    observed: List[Pair] = [("x", _describe(x))]
    observed += [(f"s={format_fraction(s)}", str(out)) for s, out in zip(s_grid, outcomes)]
    return CheckReport.from_outcome(
        name=name, suite=suite, anchor=anchor, ok=ok, observed=observed, expected=expected, seed=seed
    )


def check_pareto(
    compare: Criterion,
    pairs: Sequence[SeqPair],
    weak: bool = False,
    name: str = "pareto",
    suite: str = DEFAULT_SUITE,
    anchor: str = DEFAULT_ANCHOR,
    seed: Optional[int] = None,
) -> CheckReport:
    """
    Strong: x ≤ y everywhere and x ≠ y ⇒ x ≺ y.
    Weak: x < y everywhere ⇒ x ≺ y.
    """
    if weak:
        premise = product_lt_everywhere
    else:
        def premise(x: SeqModel, y: SeqModel) -> bool:
            return product_le(x, y) and not same_sequence(x, y)

    return _judge(
        name, pairs, premise,
        lambda x, y: compare(x, y) == Comparison.X_BELOW,
        [("strictly_preferred", "all qualifying")], suite, anchor, seed,
    )


def check_weak_pareto(compare: Criterion, pairs: Sequence[SeqPair], **kwargs) -> CheckReport:
    kwargs.setdefault("name", "weak-pareto")
    return check_pareto(compare, pairs, weak=True, **kwargs)


def check_anonymity(
    compare: Criterion,
    x: SeqModel,
    perms: Sequence[FinitePermutation],
    name: str = "anonymity",
    suite: str = DEFAULT_SUITE,
    anchor: str = DEFAULT_ANCHOR,
    seed: Optional[int] = None,
) -> CheckReport:
    """x ∼ π(x) for every supplied π."""
    pairs = [(x, apply_perm(pi, x)) for pi in perms]
    return _judge(
        name, pairs, lambda a, b: True,
        lambda a, b: compare(a, b) == Comparison.INDIFFERENT,
        [("indifferent", "all permutations")], suite, anchor, seed,
    )


def raise_present(x: SeqModel, amount: Fraction = Fraction(1)) -> SeqModel:
    """x with its first coordinate raised by `amount`; later coordinates kept."""
    base = x.extended(1)
    return base.with_prefix((base.prefix[0] + amount,) + base.prefix[1:])


def check_sensitivity_present(
    compare: Criterion,
    x: SeqModel,
    name: str = "sensitivity-present",
    suite: str = DEFAULT_SUITE,
    anchor: str = DEFAULT_ANCHOR,
    seed: Optional[int] = None,
) -> CheckReport:
    """
    Replacing the first coordinate with a larger value is a strict
    improvement; for a strong-Pareto criterion this witnesses sensitivity.
    """
    z = raise_present(x)
    verdict = compare(x.extended(1), z)
    return CheckReport.from_outcome(
        name=name, suite=suite, anchor=anchor, ok=verdict == Comparison.X_BELOW,
        observed=[("x", _describe(x)), ("verdict", verdict.value)],
        expected=[("verdict", Comparison.X_BELOW.value)], seed=seed,
    )


def check_negativity(
    compare: Criterion,
    pairs: Sequence[SeqPair],
    name: str = "negativity",
    suite: str = DEFAULT_SUITE,
    anchor: str = DEFAULT_ANCHOR,
    seed: Optional[int] = None,
) -> CheckReport:
    """More negative coordinates ⇒ strictly worse."""
    zero = Fraction(0)
    return _judge(
        name, pairs,
        lambda x, y: sigma_below(x, zero) > sigma_below(y, zero),
        lambda x, y: compare(x, y) == Comparison.X_BELOW,
        [("strictly_worse", "all qualifying")], suite, anchor, seed,
    )


def check_refines_grading(
    compare: Criterion,
    pairs: Sequence[SeqPair],
    window: int,
    name: str = "refines-grading",
    suite: str = DEFAULT_SUITE,
    anchor: str = "grading-principle",
    seed: Optional[int] = None,
) -> CheckReport:
    """x ≾_m y within the window ⇒ the criterion ranks x at or below y."""
    return _judge(
        name, pairs,
        lambda x, y: grading_le(x, y, window),
        lambda x, y: compare(x, y).x_weakly_below,
        [("weakly_below", "all graded pairs")], suite, anchor, seed,
    )
