"""
Verification suites and worked-example reproductions, keyed by CLI id.

Every entry takes a RunConfig and yields CheckReports. The descriptive
aliases resolve to the same entries.
"""
from typing import Dict

from ordtopia.suites import (
    continuity,
    multiutility,
    qpm_axioms,
    qpm_topologies,
    refinement,
    repro,
    welfare_axioms,
)

SUITES = {
    continuity.SUITE: continuity.run,
    refinement.SUITE: refinement.run,
    qpm_axioms.SUITE: qpm_axioms.run,
    qpm_topologies.SUITE: qpm_topologies.run,
    multiutility.SUITE: multiutility.run,
    welfare_axioms.SUITE: welfare_axioms.run,
}

EXAMPLES = {
    "svensson-seq": repro.shifted_blocks,
    "lsupnorm": repro.shifted_blocks_lp,
    "eneg": repro.half_threshold,
    "simplex": repro.simplex,
    "overtaking-demo": repro.overtaking_demo,
}

SUITE_ALIASES: Dict[str, str] = {
    "refinement": refinement.SUITE,
    "welfare-axioms": welfare_axioms.SUITE,
}

EXAMPLE_ALIASES: Dict[str, str] = {
    "shifted-blocks": "svensson-seq",
    "shifted-blocks-lp": "lsupnorm",
    "half-threshold": "eneg",
}

__all__ = ["EXAMPLES", "EXAMPLE_ALIASES", "SUITES", "SUITE_ALIASES"]
