"""
qpm-topologies: topologies induced by the constructions against τ_A.

All preorders on small carriers are enumerated; bases and utilities are
drawn from the run seed.
"""
import logging
import random
from typing import Dict, Iterator, List

from ordtopia.core.generators import all_preorders, random_base_metric, random_fraction
from ordtopia.core.order import FinitePreorder, identity_preorder, is_antisymmetric, preorder_from_pairs, refines
from ordtopia.core.qpm import (
    QuasiPseudoMetric,
    construct_d1,
    construct_d2,
    construct_d3,
    construct_d4,
    default_weak_utility,
    encode_preorder,
    induced_preorder,
    induced_topology,
    left_distance,
    symmetrize,
)
from ordtopia.core.summary import aggregate
from ordtopia.core.topology import (
    FiniteTopology,
    alexandroff_topology,
    finer_than,
    is_continuous,
    is_lower_continuous,
    is_t0,
    lower_topology,
    upper_topology,
)
from ordtopia.schemas.config import RunConfig
from ordtopia.schemas.report import CheckReport

logger = logging.getLogger(__name__)

SUITE = "qpm-topologies"

LEFT_DISTANCE_SAMPLES = 100


def _outcome(name: str, anchor: str, ok: bool, p: FinitePreorder) -> CheckReport:
    return CheckReport.from_outcome(
        name=name, suite=SUITE, anchor=anchor, ok=ok, observed=[("preorder", str(p.strict_pairs()))]
    )


def _constructions(p: FinitePreorder, rng: random.Random) -> Dict[str, QuasiPseudoMetric]:
    d = random_base_metric(p.n, rng)
    u = default_weak_utility(p)
    return {
        "d1": construct_d1(p, d),
        "d2": construct_d2(p, d),
        "d3": construct_d3(p, u),
        "d4": construct_d4(p, u),
    }


def run(cfg: RunConfig) -> Iterator[CheckReport]:
    rng = random.Random(cfg.seed)
    for n in range(1, cfg.pair_carrier + 1):
        preorders = all_preorders(n)
        buckets: Dict[str, List[CheckReport]] = {
            key: [] for key in ("encode", "possibility", "t0", "d1", "d2", "d3", "d4", "extension")
        }
        d4_equal = 0
        for p in preorders:
            tau_a = alexandroff_topology(p)
            encoded = encode_preorder(p)
            tau_d = induced_topology(encoded)
            tau_s = induced_topology(symmetrize(encoded))
            buckets["encode"].append(
                _outcome("encode", "order-encoding-qpm", tau_d == tau_a and induced_preorder(encoded) == p, p)
            )
            buckets["possibility"].append(
                _outcome(
                    "possibility", "qpm-possibility",
                    finer_than(tau_d, upper_topology(p))
                    and finer_than(tau_s, upper_topology(p))
                    and finer_than(tau_s, lower_topology(p))
                    and is_lower_continuous(p, tau_d)
                    and is_continuous(p, tau_s),
                    p,
                )
            )
            if is_antisymmetric(p):
                buckets["t0"].append(_outcome("t0", "order-encoding-qpm", is_t0(tau_d), p))

            induced: Dict[str, FiniteTopology] = {
                key: induced_topology(d) for key, d in _constructions(p, rng).items()
            }
            buckets["d1"].append(_outcome("d1", "bounded-metric-qpm", finer_than(induced["d1"], tau_a), p))
            buckets["d2"].append(_outcome("d2", "halved-metric-qpm", finer_than(induced["d2"], tau_a), p))
            buckets["d3"].append(_outcome("d3", "utility-qpm", induced["d3"] == tau_a, p))
            buckets["d4"].append(_outcome("d4", "halved-utility-qpm", finer_than(induced["d4"], tau_a), p))
            d4_equal += induced["d4"] == tau_a

            for q in preorders:
                if not refines(q, p):
                    continue
                ok = all(
                    finer_than(tau, alexandroff_topology(q)) and is_lower_continuous(q, tau)
                    for tau in induced.values()
                )
                buckets["extension"].append(_outcome("extension", "extension-continuity", ok, q))

        yield aggregate(f"encode-alexandroff-n{n}", SUITE, "order-encoding-qpm", buckets["encode"])
        yield aggregate(f"encode-t0-n{n}", SUITE, "order-encoding-qpm", buckets["t0"])
        yield aggregate(f"possibility-n{n}", SUITE, "qpm-possibility", buckets["possibility"])
        yield aggregate(f"d1-finer-n{n}", SUITE, "bounded-metric-qpm", buckets["d1"], seed=cfg.seed)
        yield aggregate(f"d2-finer-n{n}", SUITE, "halved-metric-qpm", buckets["d2"], seed=cfg.seed)
        yield aggregate(f"d3-equals-alexandroff-n{n}", SUITE, "utility-qpm", buckets["d3"])
        yield aggregate(
            f"d4-finer-n{n}", SUITE, "halved-utility-qpm", buckets["d4"],
            extra=[("equal_to_alexandroff", f"{d4_equal}/{len(preorders)}")],
        )
        yield aggregate(f"extension-n{n}", SUITE, "extension-continuity", buckets["extension"], seed=cfg.seed)

    yield _metric_bases(rng, cfg)
    yield _left_distance(rng, cfg)


def _metric_bases(rng: random.Random, cfg: RunConfig) -> CheckReport:
    """A metric only encodes equality: its induced preorder is the identity."""
    reports = []
    for n in range(1, cfg.pair_carrier + 1):
        identity = identity_preorder(n)
        for _ in range(LEFT_DISTANCE_SAMPLES):
            ok = induced_preorder(random_base_metric(n, rng)) == identity
            reports.append(_outcome("metric", "order-encoding-qpm", ok, identity))
    return aggregate("metric-induces-identity", SUITE, "order-encoding-qpm", reports, seed=cfg.seed)


def _left_distance(rng: random.Random, cfg: RunConfig) -> CheckReport:
    reports = []
    for _ in range(LEFT_DISTANCE_SAMPLES):
        n = rng.randint(1, cfg.pair_carrier)
        values = [random_fraction(rng) for _ in range(n)]
        usual = preorder_from_pairs(n, [(i, j) for i in range(n) for j in range(n) if values[i] <= values[j]])
        d = left_distance(values)
        symmetric_ok = all(
            symmetrize(d).dist[i][j] == abs(values[i] - values[j]) for i in range(n) for j in range(n)
        )
        ok = induced_topology(d) == upper_topology(usual) and symmetric_ok
        reports.append(_outcome("left-distance", "left-distance-topology", ok, usual))
    return aggregate("left-distance", SUITE, "left-distance-topology", reports, seed=cfg.seed)
