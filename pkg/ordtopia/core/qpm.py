"""
Quasi-pseudo-metrics on finite carriers.

Covers the 0/1 order encoding, symmetrization, the induced preorder and
topology, and the four constructions that combine a preorder with a base
metric or a weak-utility. All arithmetic is exact (fractions.Fraction), so
axiom scans need no tolerance.
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Type, TypeVar, Union

import numpy as np

from ordtopia.core.order import FinitePreorder, is_isotonic, lower_contour
from ordtopia.core.topology import FiniteTopology, topology_from_subbasis
from ordtopia.errors import (
    InvalidDistance,
    NotOneBounded,
    ParamOutOfRange,
    SizeMismatch,
    UtilityNotIsotonic,
    UtilityOutOfRange,
)
from ordtopia.schemas.report import CheckReport

logger = logging.getLogger(__name__)

Table = Tuple[Tuple[Fraction, ...], ...]
Number = Union[int, Fraction]
Q = TypeVar("Q", bound="QuasiPseudoMetric")

# numpy int64 headroom for the vectorised triangle scan (sums of two entries)
_INT64_SAFE = 2**61
# tables per stacked scan; bounds the (batch, n, n, n) triangle array
SCAN_CHUNK = 1024


def _as_table(rows: Sequence[Sequence[Any]]) -> Table:
    n = len(rows)
    table = tuple(tuple(Fraction(v) for v in row) for row in rows)
    for row in table:
        if len(row) != n:
            raise SizeMismatch(f"Distance table is not square: row of length {len(row)} for n={n}")
    return table


def format_fraction(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True)
class QuasiPseudoMetric:
    """
    Nonnegative distance table with zero diagonal.

    The triangle inequality is not enforced here because some constructions
    are validated at runtime; see validate_qpm().
    """

    n: int
    dist: Table

    def __post_init__(self) -> None:
        if len(self.dist) != self.n or any(len(row) != self.n for row in self.dist):
            raise SizeMismatch(f"Cannot build distance table: expected {self.n}x{self.n}")
        for i, row in enumerate(self.dist):
            if row[i] != 0:
                raise InvalidDistance(f"Cannot build distance table: d({i},{i}) = {row[i]} is not 0")
            if any(v < 0 for v in row):
                raise InvalidDistance(f"Cannot build distance table: negative entry in row {i}")

    @classmethod
    def from_rows(cls: Type[Q], rows: Sequence[Sequence[Any]]) -> Q:
        table = _as_table(rows)
        return cls(len(table), table)

    def __call__(self, x: int, y: int) -> Fraction:
        return self.dist[x][y]

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "dist": [[format_fraction(v) for v in row] for row in self.dist]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "QuasiPseudoMetric":
        metric = cls.from_rows([[Fraction(v) for v in row] for row in data["dist"]])
        if metric.n != int(data["n"]):
            raise SizeMismatch(f"Cannot load distance table: n={data['n']} but {metric.n} rows")
        return metric


@dataclass(frozen=True)
class BaseMetric(QuasiPseudoMetric):
    """Symmetric pseudo-metric table."""

    def __post_init__(self) -> None:
        super().__post_init__()
        for i in range(self.n):
            for j in range(i):
                if self.dist[i][j] != self.dist[j][i]:
                    raise InvalidDistance(f"Cannot build base metric: d({i},{j}) != d({j},{i})")
        witness = triangle_witness(self.dist)
        if witness is not None:
            raise InvalidDistance(f"Cannot build base metric: triangle inequality fails at {witness}")

    @property
    def is_one_bounded(self) -> bool:
        return all(v <= 1 for row in self.dist for v in row)


class MetricKind(str, Enum):
    """Strongest axiom set a table satisfies."""

    INVALID = "invalid"
    QUASI_PSEUDO_METRIC = "quasi-pseudo-metric"
    QUASI_METRIC = "quasi-metric"
    T1_QUASI_METRIC = "t1-quasi-metric"
    PSEUDO_METRIC = "pseudo-metric"
    METRIC = "metric"


@dataclass(frozen=True)
class AxiomScan:
    """Result of scanning a table against the quasi-(pseudo-)metric axioms."""

    kind: MetricKind
    negative_entry: Optional[Tuple[int, int]]
    nonzero_diagonal: Optional[int]
    triangle_witness: Optional[Tuple[int, int, int]]
    symmetric: bool
    separates_pairs: bool  # d(x,y) = d(y,x) = 0 ⇒ x = y
    separates_points: bool  # d(x,y) = 0 ⇒ x = y

    @property
    def valid(self) -> bool:
        return self.kind != MetricKind.INVALID


def _scaled_rows(table: Sequence[Sequence[Number]]) -> List[List[int]]:
    """Entries times the table's common denominator, so comparisons stay exact."""
    denominator = math.lcm(*{v.denominator for row in table for v in row})
    return [[v.numerator * (denominator // v.denominator) for v in row] for row in table]


def _stack(tables: Sequence[Sequence[Sequence[Number]]]) -> np.ndarray:
    scaled = [_scaled_rows(table) for table in tables]
    peak = max((abs(v) for table in scaled for row in table for v in row), default=0)
    return np.array(scaled, dtype=np.int64 if peak < _INT64_SAFE else object)


def _triangle_mask(d: np.ndarray) -> np.ndarray:
    """bad[b, i, j, k] ⇔ d_b(i,k) > d_b(i,j) + d_b(j,k)."""
    via = d[:, :, :, None] + d[:, None, :, :]
    return d[:, :, None, :] > via


def _first(mask: np.ndarray) -> Tuple[int, ...]:
    return tuple(int(v) for v in np.argwhere(mask)[0])


def triangle_witness(table: Sequence[Sequence[Number]]) -> Optional[Tuple[int, int, int]]:
    """
    First (i, j, k) in lexicographic order with d(i,k) > d(i,j) + d(j,k).

    Entries are scaled to integers by the common denominator so the scan is
    exact; numpy does the bulk comparison.
    """
    if len(table) == 0:
        return None
    bad = _triangle_mask(_stack([table]))[0]
    if not bad.any():
        return None
    i, j, k = _first(bad)
    return (i, j, k)


def _classify(
    negative: bool, diagonal: bool, witness: bool, symmetric: bool, separates_pairs: bool, separates_points: bool
) -> MetricKind:
    if negative or diagonal or witness:
        return MetricKind.INVALID
    if symmetric:
        return MetricKind.METRIC if separates_points else MetricKind.PSEUDO_METRIC
    if separates_points:
        return MetricKind.T1_QUASI_METRIC
    if separates_pairs:
        return MetricKind.QUASI_METRIC
    return MetricKind.QUASI_PSEUDO_METRIC


def _scan_stack(n: int, tables: Sequence[Table]) -> List[AxiomScan]:
    """Scan equally sized tables with one numpy pass per axiom."""
    if n == 0:
        return [AxiomScan(MetricKind.METRIC, None, None, None, True, True, True) for _ in tables]
    d = _stack(tables)
    eye = np.eye(n, dtype=bool)
    negative = d < 0
    diagonal = d[:, eye] != 0
    bad = _triangle_mask(d)
    zero = d == 0
    symmetric = (d == d.transpose(0, 2, 1)).all(axis=(1, 2))
    separates_points = ~(zero & ~eye).any(axis=(1, 2))
    separates_pairs = ~(zero & zero.transpose(0, 2, 1) & ~eye).any(axis=(1, 2))
    has_negative = negative.any(axis=(1, 2))
    has_diagonal = diagonal.any(axis=1)
    has_witness = bad.any(axis=(1, 2, 3))

    scans = []
    for b in range(len(tables)):
        negative_entry = _first(negative[b]) if has_negative[b] else None
        nonzero_diagonal = int(np.argmax(diagonal[b])) if has_diagonal[b] else None
        witness = _first(bad[b]) if has_witness[b] else None
        kind = _classify(
            bool(has_negative[b]), bool(has_diagonal[b]), bool(has_witness[b]),
            bool(symmetric[b]), bool(separates_pairs[b]), bool(separates_points[b]),
        )
        scans.append(AxiomScan(
            kind,
            (negative_entry[0], negative_entry[1]) if negative_entry else None,
            nonzero_diagonal,
            (witness[0], witness[1], witness[2]) if witness else None,
            bool(symmetric[b]),
            bool(separates_pairs[b]),
            bool(separates_points[b]),
        ))
    return scans


def scan_axioms_batch(tables: Sequence[Union[QuasiPseudoMetric, Sequence[Sequence[Any]]]]) -> List[AxiomScan]:
    """
    Scan many tables at once; results come back in input order.

    Tables of one carrier size are stacked into a (batch, n, n) array and
    scanned SCAN_CHUNK at a time.
    """
    rows = [table.dist if isinstance(table, QuasiPseudoMetric) else _as_table(table) for table in tables]
    by_size: Dict[int, List[int]] = {}
    for index, table in enumerate(rows):
        by_size.setdefault(len(table), []).append(index)
    scans: Dict[int, AxiomScan] = {}
    for n, indices in by_size.items():
        for start in range(0, len(indices), SCAN_CHUNK):
            chunk = indices[start:start + SCAN_CHUNK]
            scans.update(zip(chunk, _scan_stack(n, [rows[i] for i in chunk])))
    return [scans[index] for index in range(len(rows))]


def scan_axioms(table: Union[QuasiPseudoMetric, Sequence[Sequence[Any]]]) -> AxiomScan:
    return scan_axioms_batch([table])[0]


def scan_report(
    scan: AxiomScan, name: str, suite: str, anchor: str, require_t1: bool, seed: Optional[int]
) -> CheckReport:
    """Report for an existing scan; see validate_qpm()."""
    observed = [("kind", scan.kind.value)]
    if scan.negative_entry is not None:
        observed.append(("negative_entry", str(scan.negative_entry)))
    if scan.nonzero_diagonal is not None:
        observed.append(("nonzero_diagonal", str(scan.nonzero_diagonal)))
    if scan.triangle_witness is not None:
        observed.append(("triangle_witness", str(scan.triangle_witness)))
    observed.append(("t1", str(scan.separates_points)))
    expected = [("axioms", "zero diagonal, triangle inequality")]
    if require_t1:
        expected.append(("t1", "True"))
    ok = scan.valid and (scan.separates_points or not require_t1)
    if not ok:
        logger.debug("Table %s failed validation: %s", name, observed)
    return CheckReport.from_outcome(
        name=name, suite=suite, anchor=anchor, ok=ok, observed=observed, expected=expected, seed=seed
    )


def validate_qpm(
    table: Union[QuasiPseudoMetric, Sequence[Sequence[Any]]],
    name: str = "validate",
    suite: str = "qpm",
    anchor: str = "order-encoding-qpm",
    require_t1: bool = False,
    seed: Optional[int] = None,
) -> CheckReport:
    """
    Classify a table and report the first violated axiom.

    Passes iff axioms (i) and (ii) hold, and additionally d(x,y) = 0 ⇒ x = y
    when require_t1 is set.
    """
    return scan_report(scan_axioms(table), name, suite, anchor, require_t1, seed)



def encode_preorder(p: FinitePreorder) -> QuasiPseudoMetric:
    """d(x,y) = 0 if x ≾ y, 1 otherwise."""
    return QuasiPseudoMetric(
        p.n,
        tuple(
            tuple(Fraction(0) if p.rows[x] >> y & 1 else Fraction(1) for y in range(p.n))
            for x in range(p.n)
        ),
    )


def symmetrize(d: QuasiPseudoMetric) -> BaseMetric:
    """d^s(x,y) = max{d(x,y), d(y,x)}."""
    return BaseMetric(
        d.n, tuple(tuple(max(d.dist[x][y], d.dist[y][x]) for y in range(d.n)) for x in range(d.n))
    )


def induced_preorder(d: QuasiPseudoMetric) -> FinitePreorder:
    """x ≾_d y ⇔ d(x,y) = 0."""
    rows = tuple(
        sum(1 << y for y in range(d.n) if d.dist[x][y] == 0) for x in range(d.n)
    )
    return FinitePreorder(d.n, rows)


def induced_topology(d: QuasiPseudoMetric) -> FiniteTopology:
    """
    Topology generated by the open balls B(x, ε) = {y : d(x,y) < ε}.

    Only radii equal to a distance value from x (plus one past the largest)
    give distinct balls.
    """
    balls = set()
    for x in range(d.n):
        row = d.dist[x]
        for radius in sorted(set(row)):
            balls.add(sum(1 << y for y in range(d.n) if row[y] < radius))
    return topology_from_subbasis(d.n, sorted(balls))


def _check_carrier(p: FinitePreorder, n: int) -> None:
    if p.n != n:
        raise SizeMismatch(f"Carrier sizes differ: preorder {p.n} vs table {n}")


def construct_d1(p: FinitePreorder, d: BaseMetric) -> QuasiPseudoMetric:
    """
    d¹(x,y) = d(x,y) if x ≾ y, 1 otherwise.

    Raises:
        NotOneBounded: If some d(x,y) > 1
    """
    _check_carrier(p, d.n)
    if not d.is_one_bounded:
        raise NotOneBounded("Cannot build bounded-metric construction: base metric exceeds 1")
    return QuasiPseudoMetric(
        p.n,
        tuple(
            tuple(d.dist[x][y] if p.rows[x] >> y & 1 else Fraction(1) for y in range(p.n))
            for x in range(p.n)
        ),
    )


def construct_d2(p: FinitePreorder, d: BaseMetric) -> QuasiPseudoMetric:
    """d²(x,y) = d(x,y)/2 if x ≾ y, 1/2 + d(x,y)/2 otherwise."""
    return construct_d2_param(p, d, Fraction(1), Fraction(2))


def construct_d2_param(p: FinitePreorder, d: BaseMetric, k: Number, m: Number) -> QuasiPseudoMetric:
    """
    k·d(x,y)/m if x ≾ y, k/m + (m−k)·d(x,y)/m otherwise.

    The result is not guaranteed to satisfy the triangle inequality for
    every (k, m); run validate_qpm() on it.

    Raises:
        ParamOutOfRange: Unless m > 0 and 0 <= k <= m
    """
    _check_carrier(p, d.n)
    k, m = Fraction(k), Fraction(m)
    if m <= 0 or not 0 <= k <= m:
        raise ParamOutOfRange(f"Cannot build parametric construction: need m > 0 and 0 <= k <= m, got k={k}, m={m}")
    return QuasiPseudoMetric(
        p.n,
        tuple(
            tuple(
                k * d.dist[x][y] / m if p.rows[x] >> y & 1 else k / m + (m - k) * d.dist[x][y] / m
                for y in range(p.n)
            )
            for x in range(p.n)
        ),
    )


def check_weak_utility(p: FinitePreorder, u: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """
    Validate a weak-utility into (0, 1).

    Raises:
        UtilityOutOfRange: If some value is outside the open unit interval
        UtilityNotIsotonic: If x ≾ y but u(x) > u(y)
    """
    values = tuple(Fraction(v) for v in u)
    if len(values) != p.n:
        raise SizeMismatch(f"Utility of length {len(values)} on carrier of size {p.n}")
    for x, v in enumerate(values):
        if not 0 < v < 1:
            raise UtilityOutOfRange(f"Utility value u({x}) = {v} is outside (0, 1)")
    if not is_isotonic(p, values):
        raise UtilityNotIsotonic("Utility is not isotonic for the preorder")
    return values


def construct_d3(p: FinitePreorder, u: Sequence[Fraction]) -> QuasiPseudoMetric:
    """0 if x ≾ y; 1 + |u(x) − u(y)| if y ≺ x; 1 otherwise."""
    values = check_weak_utility(p, u)

    def entry(x: int, y: int) -> Fraction:
        if p.rows[x] >> y & 1:
            return Fraction(0)
        if p.rows[y] >> x & 1:
            return 1 + abs(values[x] - values[y])
        return Fraction(1)

    return QuasiPseudoMetric(p.n, tuple(tuple(entry(x, y) for y in range(p.n)) for x in range(p.n)))


def construct_d4(p: FinitePreorder, u: Sequence[Fraction]) -> QuasiPseudoMetric:
    """(u(y) − u(x))/2 if x ≾ y; 1/2 + (u(x) − u(y))/2 if y ≺ x; 1/2 otherwise."""
    values = check_weak_utility(p, u)
    half = Fraction(1, 2)

    def entry(x: int, y: int) -> Fraction:
        if p.rows[x] >> y & 1:
            return (values[y] - values[x]) / 2
        if p.rows[y] >> x & 1:
            return half + (values[x] - values[y]) / 2
        return half

    return QuasiPseudoMetric(p.n, tuple(tuple(entry(x, y) for y in range(p.n)) for x in range(p.n)))


def default_weak_utility(p: FinitePreorder) -> Tuple[Fraction, ...]:
    """u(x) = (1 + |L(x)|) / (n + 2); isotonic because x ≾ y ⇒ L(x) ⊆ L(y)."""
    return tuple(Fraction(1 + len(lower_contour(p, x)), p.n + 2) for x in range(p.n))


def scale_to_unit(d: BaseMetric) -> BaseMetric:
    """d / (1 + max entry), which is 1-bounded and induces the same topology."""
    factor = 1 + max((v for row in d.dist for v in row), default=Fraction(0))
    return BaseMetric(d.n, tuple(tuple(v / factor for v in row) for row in d.dist))


def left_distance(values: Sequence[Number]) -> QuasiPseudoMetric:
    """d_L(x,y) = max{v_x − v_y, 0} on a finite set of reals."""
    vs = [Fraction(v) for v in values]
    return QuasiPseudoMetric.from_rows([[max(a - b, Fraction(0)) for b in vs] for a in vs])
