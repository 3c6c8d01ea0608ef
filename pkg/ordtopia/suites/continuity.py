"""
cont-theorems: continuity of preorders against finite topologies.

Exhaustive over every (preorder, topology) pair on small carriers, then
seeded random pairs on larger ones.
"""
import logging
import random
from typing import Callable, Dict, Iterator, List, Set, Tuple

from ordtopia.core.generators import all_preorders, all_topologies, random_preorder, random_topology
from ordtopia.core.order import FinitePreorder, preorder_from_pairs
from ordtopia.core.summary import aggregate
from ordtopia.core.topology import (
    FiniteTopology,
    alexandroff_topology,
    check_alexandroff_sufficient,
    check_continuity_characterization,
    check_lower_continuity_characterization,
    check_semicontinuous_representation,
    closure,
    specialization_preorder,
    upper_alexandroff_gap,
    upper_topology,
)
from ordtopia.schemas.config import RANDOM_CARRIERS, RunConfig
from ordtopia.schemas.report import CheckReport

logger = logging.getLogger(__name__)

SUITE = "cont-theorems"

PairCheck = Callable[..., CheckReport]

PAIR_CHECKS: Dict[str, PairCheck] = {
    "continuity": check_continuity_characterization,
    "lower-continuity": check_lower_continuity_characterization,
    "alexandroff-sufficient": check_alexandroff_sufficient,
    "semicontinuous-representation": check_semicontinuous_representation,
}

ANCHOR_OF = {
    "continuity": "continuity-characterization",
    "lower-continuity": "lower-continuity-characterization",
    "alexandroff-sufficient": "alexandroff-sufficient",
    "semicontinuous-representation": "semicontinuous-multi-utility",
}


def _pair_reports(p: FinitePreorder, t: FiniteTopology, into: Dict[str, List[CheckReport]]) -> None:
    for key, check in PAIR_CHECKS.items():
        into[key].append(check(p, t, suite=SUITE))


def _closure_matches(t: FiniteTopology) -> bool:
    """x ≾_τ y ⇔ x ∈ cl({y})."""
    spec = specialization_preorder(t)
    return all(
        spec.le(x, y) == (x in closure(t, 1 << y)) for x in range(t.n) for y in range(t.n)
    )


def _fixpoint_closure(n: int, pairs: Set[Tuple[int, int]]) -> Set[Tuple[int, int]]:
    """Reflexive-transitive closure by repeated composition until nothing changes."""
    closed = set(pairs) | {(i, i) for i in range(n)}
    while True:
        extra = {(i, k) for i, j in closed for j2, k in closed if j == j2} - closed
        if not extra:
            return closed
        closed |= extra


def _closure_report(cfg: RunConfig, rng: random.Random) -> CheckReport:
    mismatches = 0
    for _ in range(cfg.trials):
        n = rng.choice(RANDOM_CARRIERS)
        pairs = {(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(0, 2 * n))}
        p = preorder_from_pairs(n, pairs)
        got = {(i, j) for i in range(n) for j in range(n) if p.le(i, j)}
        if got != _fixpoint_closure(n, pairs):
            mismatches += 1
    return CheckReport.from_outcome(
        name="closure-random", suite=SUITE, anchor="preorder-closure", ok=mismatches == 0,
        observed=[("trials", str(cfg.trials)), ("mismatches", str(mismatches))],
        expected=[("mismatches", "0")], seed=cfg.seed,
    )


def run(cfg: RunConfig) -> Iterator[CheckReport]:
    for n in range(1, cfg.topology_carrier + 1):
        buckets: Dict[str, List[CheckReport]] = {key: [] for key in PAIR_CHECKS}
        topologies = all_topologies(n)
        preorders = all_preorders(n)
        for p in preorders:
            for t in topologies:
                _pair_reports(p, t, buckets)
        logger.debug("Exhaustive n=%d: %d pairs", n, len(preorders) * len(topologies))
        for key, reports in buckets.items():
            yield aggregate(f"{key}-exhaustive-n{n}", SUITE, ANCHOR_OF[key], reports,
                            extra=[("topologies", str(len(topologies)))])
        closure_ok = all(_closure_matches(t) for t in topologies)
        yield CheckReport.from_outcome(
            name=f"closure-specialization-n{n}", suite=SUITE, anchor="specialization-preorder",
            ok=closure_ok, observed=[("topologies", str(len(topologies))), ("all_match", str(closure_ok))],
            expected=[("all_match", "True")],
        )

    for n in range(1, cfg.pair_carrier + 1):
        preorders = all_preorders(n)
        recovered = sum(
            1 for p in preorders
            if specialization_preorder(upper_topology(p)) == p
            and specialization_preorder(alexandroff_topology(p)) == p
        )
        yield CheckReport.from_outcome(
            name=f"specialization-n{n}", suite=SUITE, anchor="specialization-preorder",
            ok=recovered == len(preorders),
            observed=[("preorders", str(len(preorders))), ("recovered", str(recovered))],
            expected=[("recovered", str(len(preorders)))],
        )
        gap = upper_alexandroff_gap(preorders)
        observed = [("preorders", str(len(preorders))), ("gap_found", str(gap is not None))]
        if gap is not None:
            observed.append(("gap_preorder", str(gap[0].strict_pairs())))
        yield CheckReport.from_outcome(
            name=f"upper-equals-alexandroff-n{n}", suite=SUITE, anchor="upper-vs-alexandroff",
            ok=gap is None, observed=observed, expected=[("gap_found", "False")],
        )
        fixed = sum(1 for p in preorders if preorder_from_pairs(n, p.strict_pairs()) == p)
        yield CheckReport.from_outcome(
            name=f"closure-idempotent-n{n}", suite=SUITE, anchor="preorder-closure",
            ok=fixed == len(preorders),
            observed=[("preorders", str(len(preorders))), ("fixed", str(fixed))],
            expected=[("fixed", str(len(preorders)))],
        )

    rng = random.Random(cfg.seed)
    buckets = {key: [] for key in PAIR_CHECKS}
    for _ in range(cfg.trials):
        n = rng.choice(RANDOM_CARRIERS)
        _pair_reports(random_preorder(n, rng), random_topology(n, rng), buckets)
    for key, reports in buckets.items():
        yield aggregate(f"{key}-random", SUITE, ANCHOR_OF[key], reports, seed=cfg.seed,
                        extra=[("trials", str(cfg.trials))])
    yield _closure_report(cfg, rng)
