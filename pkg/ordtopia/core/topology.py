"""
Finite topologies generated from preorders.

Open families are frozensets of carrier bitsets (see core/order.py). Explicit
enumeration of opens is capped at MAX_ENUMERATION_CARRIER points; above that
only the is_up_set() predicate is available.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from ordtopia.core.order import (
    ElementSet,
    FinitePreorder,
    bits_to_indices,
    dual,
    is_isotonic,
    lower_contour,
    upper_contour,
    refines,
)
from ordtopia.errors import CarrierTooLarge, IndexOutOfRange, NotATopology, SizeMismatch
from ordtopia.schemas.report import CheckReport

logger = logging.getLogger(__name__)

MAX_ENUMERATION_CARRIER = 16

SetLike = Union[ElementSet, int]
Utility = Sequence[Fraction]


@dataclass(frozen=True)
class FiniteTopology:
    """
    Family of open subsets of {0..n-1}.

    Always contains ∅ and the carrier. Closure under union and intersection
    is guaranteed by the constructors in this module; use is_valid() for
    families built by hand.
    """

    n: int
    opens: FrozenSet[int]

    def __post_init__(self) -> None:
        full = (1 << self.n) - 1
        if 0 not in self.opens or full not in self.opens:
            raise NotATopology("Cannot build topology: ∅ and the carrier must be open")
        if any(o < 0 or o & ~full for o in self.opens):
            raise IndexOutOfRange(f"Cannot build topology: open set exceeds carrier of size {self.n}")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def is_open(self, s: SetLike) -> bool:
        return _bits(s) in self.opens

    def is_valid(self) -> bool:
        opens = self.opens
        return all(a | b in opens and a & b in opens for a in opens for b in opens)

    def sorted_opens(self) -> List[List[int]]:
        return sorted(bits_to_indices(o) for o in self.opens)

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "opens": self.sorted_opens()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "FiniteTopology":
        n = int(data["n"])
        topology = cls(n, frozenset(ElementSet.of(n, o).members for o in data["opens"]))
        if not topology.is_valid():
            raise NotATopology("Cannot load topology: family is not closed under union and intersection")
        return topology


@dataclass(frozen=True)
class UtilityFamily:
    """Utility vectors over {0..n-1}, one value per carrier element."""

    n: int
    members: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        for u in self.members:
            if len(u) != self.n:
                raise SizeMismatch(f"Utility of length {len(u)} on carrier of size {self.n}")


def _bits(s: SetLike) -> int:
    return s.members if isinstance(s, ElementSet) else s


def _check_same_carrier(a: FiniteTopology, b: FiniteTopology) -> None:
    if a.n != b.n:
        raise SizeMismatch(f"Carrier sizes differ: {a.n} vs {b.n}")


def _union_closure(n: int, generators: Iterable[int]) -> FrozenSet[int]:
    opens = {0, (1 << n) - 1}
    for g in generators:
        if g in opens:
            continue
        opens |= {o | g for o in opens}
    return frozenset(opens)


def topology_from_subbasis(n: int, sets: Iterable[SetLike]) -> FiniteTopology:
    """
    Smallest topology on {0..n-1} containing every set.

    Finite intersections of the sub-basis form a basis; all unions of the
    basis form the topology. ∅ and the carrier are always added.
    """
    full = (1 << n) - 1
    basis = {full}
    for s in sets:
        bits = _bits(s)
        if bits < 0 or bits & ~full:
            raise IndexOutOfRange(f"Cannot build topology: set exceeds carrier of size {n}")
        if bits in basis:
            continue
        basis |= {b & bits for b in basis}
    return FiniteTopology(n, _union_closure(n, sorted(basis)))


def discrete_topology(n: int) -> FiniteTopology:
    return topology_from_subbasis(n, [1 << i for i in range(n)])


def indiscrete_topology(n: int) -> FiniteTopology:
    return FiniteTopology(n, frozenset({0, (1 << n) - 1}))


@lru_cache(maxsize=8192)
def upper_topology(p: FinitePreorder) -> FiniteTopology:
    """τ_U: generated by the complements of the lower contour sets."""
    return topology_from_subbasis(p.n, [lower_contour(p, x).complement() for x in range(p.n)])


def lower_topology(p: FinitePreorder) -> FiniteTopology:
    """τ_L: the upper topology of the dual preorder."""
    return upper_topology(dual(p))


@lru_cache(maxsize=8192)
def alexandroff_topology(p: FinitePreorder) -> FiniteTopology:
    """
    τ_A: every up-set of p.

    Up-sets are exactly the unions of principal up-sets U(x).

    Raises:
        CarrierTooLarge: If p.n exceeds MAX_ENUMERATION_CARRIER
    """
    if p.n > MAX_ENUMERATION_CARRIER:
        raise CarrierTooLarge(
            f"Cannot enumerate up-sets: carrier of size {p.n} exceeds {MAX_ENUMERATION_CARRIER}"
        )
    return FiniteTopology(p.n, _union_closure(p.n, sorted(set(p.rows))))


def is_up_set(p: FinitePreorder, s: SetLike) -> bool:
    bits = _bits(s)
    return all(p.rows[x] & ~bits == 0 for x in bits_to_indices(bits))


def specialization_preorder(t: FiniteTopology) -> FinitePreorder:
    """x ≾ y iff every open set containing x also contains y."""
    rows = []
    for x in range(t.n):
        row = t.full
        for o in t.opens:
            if o >> x & 1:
                row &= o
        rows.append(row)
    return FinitePreorder(t.n, tuple(rows))


def closure(t: FiniteTopology, s: SetLike) -> ElementSet:
    """Smallest closed set containing s."""
    bits = _bits(s)
    closed = t.full
    for o in t.opens:
        if o & bits == 0:
            closed &= ~o & t.full
    return ElementSet(t.n, closed)


def is_t0(t: FiniteTopology) -> bool:
    """Distinct points are told apart by some open set."""
    p = specialization_preorder(t)
    return all(p.rows[x] & p.columns[x] == 1 << x for x in range(t.n))


def is_t1(t: FiniteTopology) -> bool:
    """Every singleton is closed; on a finite carrier this means discrete."""
    return all(t.is_open(t.full & ~(1 << x)) for x in range(t.n))


def finer_than(t1: FiniteTopology, t2: FiniteTopology) -> bool:
    """True iff every open set of t2 is open in t1."""
    _check_same_carrier(t1, t2)
    return t2.opens <= t1.opens


def join_topology(t1: FiniteTopology, t2: FiniteTopology) -> FiniteTopology:
    """Coarsest topology finer than both."""
    _check_same_carrier(t1, t2)
    return topology_from_subbasis(t1.n, sorted(t1.opens | t2.opens))


def is_lower_continuous(p: FinitePreorder, t: FiniteTopology) -> bool:
    """Every lower contour set is closed in t."""
    if p.n != t.n:
        raise SizeMismatch(f"Carrier sizes differ: {p.n} vs {t.n}")
    return all(t.is_open(lower_contour(p, x).complement()) for x in range(p.n))


def is_continuous(p: FinitePreorder, t: FiniteTopology) -> bool:
    """Every lower and upper contour set is closed in t."""
    return is_lower_continuous(p, t) and all(
        t.is_open(upper_contour(p, x).complement()) for x in range(p.n)
    )


def multi_utility(p: FinitePreorder) -> UtilityFamily:
    """
    Indicator family {u_z}: u_z(w) = 1 if z ≾ w else 0.

    Each u_z is the indicator of the principal up-set U(z).
    """
    members = tuple(
        tuple(Fraction(1) if p.rows[z] >> w & 1 else Fraction(0) for w in range(p.n))
        for z in range(p.n)
    )
    return UtilityFamily(p.n, members)


def upper_multi_utility(p: FinitePreorder) -> UtilityFamily:
    """
    Family {v_z}: v_z(w) = 0 if w ≾ z else 1.

    Each v_z is the indicator of the complement of L(z), so it is lower
    semicontinuous for every topology finer than the upper topology.
    """
    members = tuple(
        tuple(Fraction(0) if p.columns[z] >> w & 1 else Fraction(1) for w in range(p.n))
        for z in range(p.n)
    )
    return UtilityFamily(p.n, members)


def family_preorder(family: UtilityFamily) -> FinitePreorder:
    """Preorder x ≾ y ⇔ u(x) ≤ u(y) for every member u."""
    rows = []
    for x in range(family.n):
        row = 0
        for y in range(family.n):
            if all(u[x] <= u[y] for u in family.members):
                row |= 1 << y
        rows.append(row)
    return FinitePreorder(family.n, tuple(rows))


def represents(family: UtilityFamily, p: FinitePreorder) -> bool:
    """True iff every member is isotonic and the family recovers p exactly."""
    if family.n != p.n:
        raise SizeMismatch(f"Carrier sizes differ: {family.n} vs {p.n}")
    return all(is_isotonic(p, u) for u in family.members) and family_preorder(family) == p


def is_lower_semicontinuous(u: Utility, t: FiniteTopology) -> bool:
    """
    {x : u(x) > a} is open for every threshold a.

    On a finite carrier only the distinct values of u matter as thresholds,
    plus one below the minimum (which yields the whole carrier).
    """
    if len(u) != t.n:
        raise SizeMismatch(f"Utility of length {len(u)} on carrier of size {t.n}")
    for a in sorted(set(u)):
        above = sum(1 << x for x in range(t.n) if u[x] > a)
        if not t.is_open(above):
            return False
    return True


def upper_alexandroff_gap(
    preorders: Iterable[FinitePreorder],
) -> Optional[Tuple[FinitePreorder, ElementSet]]:
    """First preorder whose Alexandroff topology has an open set missing from its upper topology."""
    for p in preorders:
        missing = alexandroff_topology(p).opens - upper_topology(p).opens
        if missing:
            return p, ElementSet(p.n, min(missing))
    return None


def _describe(p: FinitePreorder, t: FiniteTopology) -> List[Tuple[str, str]]:
    return [("preorder", str(p.strict_pairs())), ("opens", str(len(t.opens)))]


def check_continuity_characterization(
    p: FinitePreorder, t: FiniteTopology, suite: str = "topo"
) -> CheckReport:
    """P is τ-continuous ⇔ τ is finer than the join of τ_U and τ_L."""
    continuous = is_continuous(p, t)
    finer = finer_than(t, join_topology(upper_topology(p), lower_topology(p)))
    return CheckReport.from_outcome(
        name=f"continuity-n{p.n}",
        suite=suite,
        anchor="continuity-characterization",
        ok=continuous == finer,
        observed=_describe(p, t) + [("continuous", str(continuous)), ("finer_than_join", str(finer))],
        expected=[("biconditional", "True")],
    )


def check_lower_continuity_characterization(
    p: FinitePreorder, t: FiniteTopology, suite: str = "topo"
) -> CheckReport:
    """P is lower τ-continuous ⇔ τ is finer than τ_U."""
    lower = is_lower_continuous(p, t)
    finer = finer_than(t, upper_topology(p))
    return CheckReport.from_outcome(
        name=f"lower-continuity-n{p.n}",
        suite=suite,
        anchor="lower-continuity-characterization",
        ok=lower == finer,
        observed=_describe(p, t) + [("lower_continuous", str(lower)), ("finer_than_upper", str(finer))],
        expected=[("biconditional", "True")],
    )


def check_refinement_reversal(
    p: FinitePreorder, q: FinitePreorder, suite: str = "topo"
) -> CheckReport:
    """p refines q ⇔ τ_A(p) ⊆ τ_A(q); the inclusion runs backwards."""
    refined = refines(p, q)
    included = finer_than(alexandroff_topology(q), alexandroff_topology(p))
    return CheckReport.from_outcome(
        name=f"refinement-n{p.n}",
        suite=suite,
        anchor="refinement-reverses-alexandroff",
        ok=refined == included,
        observed=[
            ("p", str(p.strict_pairs())),
            ("q", str(q.strict_pairs())),
            ("refines", str(refined)),
            ("alexandroff_included", str(included)),
        ],
        expected=[("biconditional", "True")],
    )


def check_alexandroff_sufficient(
    p: FinitePreorder, t: FiniteTopology, suite: str = "topo"
) -> CheckReport:
    """
    Sufficient conditions through Alexandroff topologies.

    τ finer than τ_A(p) and τ_A(p⁻¹) ⇒ continuous;
    τ finer than τ_A(p) ⇒ lower continuous.
    """
    above_alexandroff = finer_than(t, alexandroff_topology(p))
    above_dual = finer_than(t, alexandroff_topology(dual(p)))
    lower = is_lower_continuous(p, t)
    continuous = is_continuous(p, t)
    ok = (not above_alexandroff or lower) and (not (above_alexandroff and above_dual) or continuous)
    return CheckReport.from_outcome(
        name=f"alexandroff-sufficient-n{p.n}",
        suite=suite,
        anchor="alexandroff-sufficient",
        ok=ok,
        observed=_describe(p, t)
        + [
            ("finer_than_alexandroff", str(above_alexandroff)),
            ("finer_than_dual_alexandroff", str(above_dual)),
            ("lower_continuous", str(lower)),
            ("continuous", str(continuous)),
        ],
        expected=[("implications", "True")],
    )


def check_semicontinuous_representation(
    p: FinitePreorder, t: FiniteTopology, suite: str = "topo"
) -> CheckReport:
    """τ finer than τ_U(p) ⇒ upper_multi_utility(p) is an lsc multi-utility representation."""
    finer = finer_than(t, upper_topology(p))
    family = upper_multi_utility(p)
    lsc = all(is_lower_semicontinuous(u, t) for u in family.members)
    exact = represents(family, p)
    return CheckReport.from_outcome(
        name=f"semicontinuous-representation-n{p.n}",
        suite=suite,
        anchor="semicontinuous-multi-utility",
        ok=exact and (not finer or lsc),
        observed=_describe(p, t)
        + [("finer_than_upper", str(finer)), ("represents", str(exact)), ("all_lsc", str(lsc))],
        expected=[("represents", "True"), ("lsc_when_finer", "True")],
    )
