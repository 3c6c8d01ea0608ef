"""
Check report schema for ordtopia output.

Defines the outcome of a single verification and the versioned JSON
document the CLI writes.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple
from enum import Enum

from ordtopia.errors import InvalidReport


SCHEMA_VERSION = 1

# Every report names the result it exercises. Keys are stable slugs; values
# are the human description shown in text output.
ANCHORS: Dict[str, str] = {
    "preorder-closure": "Reflexive-transitive closure of a finite relation",
    "specialization-preorder": "Upper and Alexandroff topologies induce the preorder",
    "upper-vs-alexandroff": "Upper and Alexandroff topologies agree on finite carriers",
    "continuity-characterization": "τ-continuity ⇔ τ finer than join of upper and lower topologies",
    "lower-continuity-characterization": "Lower τ-continuity ⇔ τ finer than the upper topology",
    "alexandroff-sufficient": "τ finer than Alexandroff topologies ⇒ (lower) continuity",
    "refinement-reverses-alexandroff": "Refinement ⇔ reverse inclusion of Alexandroff topologies",
    "multi-utility-representation": "Indicator family represents the preorder",
    "semicontinuous-multi-utility": "Lower semicontinuous multi-utility representation",
    "order-encoding-qpm": "0/1 quasi-pseudo-metric encodes the preorder",
    "qpm-possibility": "Encoding topologies contain upper and lower topologies",
    "bounded-metric-qpm": "Bounded-metric construction is a quasi-pseudo-metric",
    "halved-metric-qpm": "Halved-metric construction is a quasi-pseudo-metric",
    "parametric-metric-qpm": "Parametric halved-metric family",
    "utility-qpm": "Utility construction generates the Alexandroff topology",
    "halved-utility-qpm": "Halved utility construction is a quasi-pseudo-metric",
    "extension-continuity": "Refinements stay lower continuous under the constructions",
    "left-distance-topology": "Left distance induces the upper topology of the usual order",
    "shifted-blocks-sup-distance": "Sup distance of the shifted-blocks sequence is 1/n",
    "shifted-blocks-lp-distance": "ℓp distance of the shifted-blocks sequence is n^(1/p)/n",
    "half-threshold-lp-distance": "ℓp distance of the half-threshold sequence is 2^(1/p)/2^n",
    "simplex-condition": "Distance from zero to the unit simplex",
    "grading-principle": "Grading principle as sorted dominance",
    "overtaking-criterion": "Overtaking criterion satisfies the equity and Pareto axioms",
}

# Published result each slug reproduces, written to the `paper_anchor` field.
PAPER_ANCHORS: Dict[str, str] = {
    "preorder-closure": "§2 Preliminaries",
    "specialization-preorder": "§2 Preliminaries",
    "upper-vs-alexandroff": "Corollary Alex1",
    "continuity-characterization": "Theorem Cont1",
    "lower-continuity-characterization": "Theorem Cont2",
    "alexandroff-sufficient": "Corollary Alex2",
    "refinement-reverses-alexandroff": "Lemma Lgiltza",
    "multi-utility-representation": "Eq. (mult1)",
    "semicontinuous-multi-utility": "§3.1 Semi-continuous multi-utility",
    "order-encoding-qpm": "§4 Order encoding",
    "qpm-possibility": "Theorem possibilityQPM",
    "bounded-metric-qpm": "Theorem L1",
    "halved-metric-qpm": "Theorem L2",
    "parametric-metric-qpm": "§5 Parametric variant",
    "utility-qpm": "Theorem Lrefinado",
    "halved-utility-qpm": "Theorem FAP5",
    "extension-continuity": "§5 Corollary",
    "left-distance-topology": "§4 Order encoding",
    "shifted-blocks-sup-distance": "Example SvenEx1",
    "shifted-blocks-lp-distance": "Proposition Lsupnorm",
    "half-threshold-lp-distance": "Example Eneg",
    "simplex-condition": "Proposition Simplex",
    "grading-principle": "Proposition Pminpreorder",
    "overtaking-criterion": "Theorem DiamondNew",
}


class Status(str, Enum):
    """Outcome of a single check."""

    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


Pair = Tuple[str, str]


@dataclass
class CheckReport:
    """
    Structured outcome of one verification.

    A passing report must have every observed value match its expected
    counterpart within `tolerance`. `seed` is recorded whenever the check
    drew random instances.
    """

    name: str
    suite: str
    anchor: str
    status: Status
    observed: List[Pair] = field(default_factory=list)
    expected: List[Pair] = field(default_factory=list)
    tolerance: str = "exact"
    seed: Optional[int] = None
    elapsed_ms: int = 0

    def __post_init__(self) -> None:
        if self.anchor not in ANCHORS:
            raise InvalidReport(f"Cannot build report: unknown anchor '{self.anchor}'")

    @classmethod
    def from_outcome(
        cls,
        name: str,
        suite: str,
        anchor: str,
        ok: bool,
        observed: Optional[List[Pair]] = None,
        expected: Optional[List[Pair]] = None,
        tolerance: str = "exact",
        seed: Optional[int] = None,
    ) -> "CheckReport":
        """Build a pass/fail report from a boolean outcome."""
        return cls(
            name=name,
            suite=suite,
            anchor=anchor,
            status=Status.PASS if ok else Status.FAIL,
            observed=list(observed or []),
            expected=list(expected or []),
            tolerance=tolerance,
            seed=seed,
        )

    @property
    def paper_anchor(self) -> str:
        return PAPER_ANCHORS[self.anchor]

    @property
    def passed(self) -> bool:
        return self.status == Status.PASS

    def sort_key(self) -> Tuple[str, str]:
        return (self.suite, self.name)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary. Timing is kept out of it."""
        return {
            "name": self.name,
            "suite": self.suite,
            "anchor": self.anchor,
            "paper_anchor": self.paper_anchor,
            "status": self.status.value,
            "observed": [[label, value] for label, value in self.observed],
            "expected": [[label, value] for label, value in self.expected],
            "tolerance": self.tolerance,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], elapsed_ms: int = 0) -> "CheckReport":
        return cls(
            name=data["name"],
            suite=data["suite"],
            anchor=data["anchor"],
            status=Status(data["status"]),
            observed=[(str(a), str(b)) for a, b in data.get("observed", [])],
            expected=[(str(a), str(b)) for a, b in data.get("expected", [])],
            tolerance=data.get("tolerance", "exact"),
            seed=data.get("seed"),
            elapsed_ms=elapsed_ms,
        )


@dataclass
class ReportDocument:
    """
    Complete output of one CLI invocation.

    This is what gets written to disk. `checks` is kept sorted by
    (suite, name) so the serialized array does not depend on execution order.
    """

    checks: List[CheckReport]
    schema: int = SCHEMA_VERSION

    def __post_init__(self) -> None:
        self.checks = sorted(self.checks, key=CheckReport.sort_key)

    def summary(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in Status}
        for check in self.checks:
            counts[check.status.value] += 1
        return counts

    def to_dict(self) -> Dict[str, Any]:
        """Convert document to dictionary for JSON serialization."""
        return {
            "schema": self.schema,
            "summary": self.summary(),
            "checks": [check.to_dict() for check in self.checks],
            "timing": {
                f"{check.suite}/{check.name}": check.elapsed_ms for check in self.checks
            },
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ReportDocument":
        if data.get("schema") != SCHEMA_VERSION:
            raise InvalidReport(
                f"Cannot load report: unsupported schema {data.get('schema')!r}"
            )
        timing = data.get("timing", {})
        checks = [
            CheckReport.from_dict(
                item, elapsed_ms=int(timing.get(f"{item['suite']}/{item['name']}", 0))
            )
            for item in data.get("checks", [])
        ]
        return cls(checks=checks)
