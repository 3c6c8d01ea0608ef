"""lgiltza: refining a preorder shrinks its Alexandroff topology, exhaustively."""
import logging
from typing import Iterator

from ordtopia.core.generators import all_preorders
from ordtopia.core.summary import aggregate
from ordtopia.core.topology import check_refinement_reversal
from ordtopia.schemas.config import RunConfig
from ordtopia.schemas.report import CheckReport

logger = logging.getLogger(__name__)

SUITE = "lgiltza"


def run(cfg: RunConfig) -> Iterator[CheckReport]:
    for n in range(1, cfg.pair_carrier + 1):
        preorders = all_preorders(n)
        reports = [check_refinement_reversal(p, q, suite=SUITE) for p in preorders for q in preorders]
        refining = sum(1 for r in reports if ("refines", "True") in r.observed)
        logger.debug("Refinement n=%d: %d pairs, %d refining", n, len(reports), refining)
        yield aggregate(
            f"refinement-exhaustive-n{n}", SUITE, "refinement-reverses-alexandroff", reports,
            extra=[("refining_pairs", str(refining))],
        )
