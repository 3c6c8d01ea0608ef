"""multiutility: indicator families represent every small preorder exactly."""
import logging
from typing import Iterator

from ordtopia.core.generators import MAX_PREORDER_ENUMERATION, all_preorders
from ordtopia.core.summary import aggregate
from ordtopia.core.topology import (
    alexandroff_topology,
    is_lower_semicontinuous,
    multi_utility,
    represents,
    upper_multi_utility,
    upper_topology,
)
from ordtopia.schemas.config import RunConfig
from ordtopia.schemas.report import CheckReport

logger = logging.getLogger(__name__)

SUITE = "multiutility"


def run(cfg: RunConfig) -> Iterator[CheckReport]:
    # cheap enough to cover every carrier the enumerator supports
    for n in range(1, MAX_PREORDER_ENUMERATION + 1):
        indicator, upper = [], []
        for p in all_preorders(n):
            family = multi_utility(p)
            tau_a = alexandroff_topology(p)
            indicator.append(
                CheckReport.from_outcome(
                    name="indicator", suite=SUITE, anchor="multi-utility-representation",
                    ok=represents(family, p) and all(is_lower_semicontinuous(u, tau_a) for u in family.members),
                    observed=[("preorder", str(p.strict_pairs()))],
                )
            )
            lsc_family = upper_multi_utility(p)
            tau_u = upper_topology(p)
            upper.append(
                CheckReport.from_outcome(
                    name="upper", suite=SUITE, anchor="semicontinuous-multi-utility",
                    ok=represents(lsc_family, p) and all(is_lower_semicontinuous(u, tau_u) for u in lsc_family.members),
                    observed=[("preorder", str(p.strict_pairs()))],
                )
            )
        logger.debug("Multi-utility n=%d: %d preorders", n, len(indicator))
        yield aggregate(f"indicator-family-n{n}", SUITE, "multi-utility-representation", indicator,
                        extra=[("preorders", str(len(indicator)))])
        yield aggregate(f"upper-family-n{n}", SUITE, "semicontinuous-multi-utility", upper,
                        extra=[("preorders", str(len(upper)))])
