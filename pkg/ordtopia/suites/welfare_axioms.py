"""
axioms-overtaking: equity and Pareto axioms for sequence criteria.

The overtaking criterion is run with each strictly concave gauge and with
the linear control; the grading principle and the threshold-count
preorders are run alongside. Instances are seeded random sequences with
short prefixes.
"""
import itertools
import logging
import random
from fractions import Fraction
from typing import Iterator, List, Tuple

from ordtopia.core.generators import random_permutation, random_sequence
from ordtopia.core.summary import aggregate
from ordtopia.schemas.config import RunConfig
from ordtopia.schemas.report import CheckReport, Status
from ordtopia.seq.axioms import (
    check_anonymity,
    check_dfsc,
    check_negativity,
    check_pareto,
    check_refines_grading,
    check_sensitivity_present,
    check_weak_pareto,
)
from ordtopia.seq.grading import (
    Comparison,
    Criterion,
    grading_criterion,
    grading_le,
    half_criterion,
    plus_criterion,
)
from ordtopia.seq.model import SeqModel, apply_perm
from ordtopia.seq.overtaking import overtaking_criterion

logger = logging.getLogger(__name__)

SUITE = "axioms-overtaking"

MIN_INSTANCES = 100
MAX_INSTANCES = 500
MAX_PREFIX = 6
WINDOW = MAX_PREFIX + 1
BRUTE_FORCE_PAIRS = 1000
BRUTE_FORCE_GRID = 4

CONCAVE_GAUGES = ("sqrt", "log")
DFSC_GRID = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))

SeqPair = Tuple[SeqModel, SeqModel]


def _instances(cfg: RunConfig) -> int:
    return max(MIN_INSTANCES, min(cfg.trials, MAX_INSTANCES))


def _bumped(rng: random.Random, x: SeqModel) -> SeqModel:
    """x raised on a random nonempty set of prefix positions."""
    raised = set(rng.sample(range(len(x)), rng.randint(1, len(x))))
    return x.with_prefix(
        [v + Fraction(rng.randint(1, 16), 16) if t in raised else v for t, v in enumerate(x.prefix)]
    )


def _graded_pair(rng: random.Random, length: int) -> SeqPair:
    """(x, y) with x ≾_m y: y is a permutation of x, possibly raised."""
    x = random_sequence(rng, length)
    y = apply_perm(random_permutation(rng, length), x)
    return (x, _bumped(rng, y) if rng.random() < 0.5 else y)


def brute_force_grading(x: SeqModel, y: SeqModel, window: int) -> bool:
    """Search every permutation of the window for x ≤ π(y)."""
    ax, ay = x.extended(window), y.extended(window)
    return any(
        all(a <= ay.prefix[image] for a, image in zip(ax.prefix, perm))
        for perm in itertools.permutations(range(window))
    )


def _criterion_checks(
    label: str, criterion: Criterion, cfg: RunConfig, rng: random.Random, strong_dfsc: bool,
    total: bool = True, anchor: str = "overtaking-criterion",
) -> Iterator[CheckReport]:
    """Anonymity, Pareto and refinement for any criterion; dfsc and totality only for total ones."""
    count = _instances(cfg)
    anonymity, pareto, dfsc, sensitivity, totality = [], [], [], [], []
    graded: List[SeqPair] = []
    for _ in range(count):
        length = rng.randint(2, MAX_PREFIX)
        x = random_sequence(rng, length)
        perms = [random_permutation(rng, length) for _ in range(3)]
        anonymity.append(check_anonymity(criterion, x, perms, suite=SUITE, anchor=anchor))
        pareto.append(check_pareto(criterion, [(x, _bumped(rng, x))], suite=SUITE, anchor=anchor))
        if total:
            dfsc.append(check_dfsc(criterion, x, perms[0], DFSC_GRID, strong=strong_dfsc, suite=SUITE))
        sensitivity.append(check_sensitivity_present(criterion, x, suite=SUITE, anchor=anchor))
        y = random_sequence(rng, length)
        forward, backward = criterion(x, y), criterion(y, x)
        mirrored = {
            Comparison.X_BELOW: Comparison.Y_BELOW,
            Comparison.Y_BELOW: Comparison.X_BELOW,
            Comparison.INDIFFERENT: Comparison.INDIFFERENT,
        }
        totality.append(
            CheckReport.from_outcome(
                name="totality", suite=SUITE, anchor=anchor,
                ok=forward != Comparison.INCOMPARABLE and mirrored.get(forward) == backward,
                observed=[("forward", forward.value), ("backward", backward.value)],
            )
        )
        graded.append(_graded_pair(rng, length))
        graded.append((x, y))

    seed = cfg.seed
    yield aggregate(f"{label}-anonymity", SUITE, anchor, anonymity, seed=seed)
    yield aggregate(f"{label}-strong-pareto", SUITE, anchor, pareto, seed=seed)
    if total:
        yield aggregate(
            f"{label}-dfsc{'-strong' if strong_dfsc else ''}", SUITE, anchor, dfsc, seed=seed
        )
    yield aggregate(f"{label}-sensitivity-present", SUITE, anchor, sensitivity, seed=seed)
    if total:
        yield aggregate(f"{label}-totality", SUITE, anchor, totality, seed=seed)
    yield check_refines_grading(criterion, graded, WINDOW, name=f"{label}-refines-grading", suite=SUITE, seed=seed)


def _linear_control(cfg: RunConfig, rng: random.Random) -> CheckReport:
    """Without strict concavity no mixture is ever strictly preferred."""
    criterion = overtaking_criterion("linear")
    outcomes = []
    for _ in range(_instances(cfg)):
        length = rng.randint(2, MAX_PREFIX)
        x = random_sequence(rng, length)
        outcomes.append(check_dfsc(criterion, x, random_permutation(rng, length), DFSC_GRID, suite=SUITE).status)
    judged = [s for s in outcomes if s != Status.SKIP]
    failed = sum(1 for s in judged if s == Status.FAIL)
    return CheckReport.from_outcome(
        name="overtaking-linear-dfsc-control", suite=SUITE, anchor="overtaking-criterion",
        ok=bool(judged) and failed == len(judged),
        observed=[("judged", str(len(judged))), ("failed", str(failed))],
        expected=[("failed", "all judged")], seed=cfg.seed,
    )


def _grading_brute_force(cfg: RunConfig, rng: random.Random) -> CheckReport:
    reports = []
    for _ in range(BRUTE_FORCE_PAIRS):
        window = rng.randint(1, MAX_PREFIX)
        x = random_sequence(rng, rng.randint(0, window), grid=BRUTE_FORCE_GRID)
        y = random_sequence(rng, rng.randint(0, window), grid=BRUTE_FORCE_GRID)
        fast, slow = grading_le(x, y, window), brute_force_grading(x, y, window)
        reports.append(
            CheckReport.from_outcome(
                name="brute-force", suite=SUITE, anchor="grading-principle", ok=fast == slow,
                observed=[("window", str(window)), ("sorted", str(fast)), ("search", str(slow))],
            )
        )
    return aggregate("grading-brute-force", SUITE, "grading-principle", reports, seed=cfg.seed)


def _threshold_checks(cfg: RunConfig, rng: random.Random) -> Iterator[CheckReport]:
    half, plus = half_criterion(WINDOW), plus_criterion(WINDOW)
    tails = [Fraction(k, 4) for k in range(5)]
    weak, anonymity, negativity = [], [], []
    for _ in range(_instances(cfg)):
        length = rng.randint(1, MAX_PREFIX)
        low, high = sorted(rng.sample(tails, 2))
        x = random_sequence(rng, length, tail=low)
        y = SeqModel.with_constant_tail([v + Fraction(rng.randint(1, 16), 16) for v in x.prefix], high)
        weak.append(check_weak_pareto(half, [(x, y)], suite=SUITE, anchor="grading-principle"))
        anonymity.append(
            check_anonymity(half, x, [random_permutation(rng, length)], suite=SUITE, anchor="grading-principle")
        )
        signs = [Fraction(rng.randint(-8, 8), 8) for _ in range(length)]
        other = [Fraction(rng.randint(-8, 8), 8) for _ in range(length)]
        negativity.append(
            check_negativity(plus, [(SeqModel.finite(signs), SeqModel.finite(other))],
                             suite=SUITE, anchor="grading-principle")
        )
    yield aggregate("half-weak-pareto", SUITE, "grading-principle", weak, seed=cfg.seed)
    yield aggregate("half-anonymity", SUITE, "grading-principle", anonymity, seed=cfg.seed)
    yield aggregate("plus-negativity", SUITE, "grading-principle", negativity, seed=cfg.seed)


def run(cfg: RunConfig) -> Iterator[CheckReport]:
    rng = random.Random(cfg.seed)
    for gauge in CONCAVE_GAUGES:
        yield from _criterion_checks(f"overtaking-{gauge}", overtaking_criterion(gauge), cfg, rng, True)
    yield _linear_control(cfg, rng)
    yield from _criterion_checks("grading", grading_criterion(WINDOW), cfg, rng, False,
                                 total=False, anchor="grading-principle")
    yield _grading_brute_force(cfg, rng)
    yield from _threshold_checks(cfg, rng)
