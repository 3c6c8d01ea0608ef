"""
The classical distances on bounded sequences.

Arguments must share a tail, so every difference has finite support and
each supremum or series reduces to a finite computation. d_s, d_c and d_1
are exact; d_p and d_q go through numpy floats.
"""
from fractions import Fraction
from typing import Callable, Dict, Union

import numpy as np

from ordtopia.errors import ParamOutOfRange
from ordtopia.seq.model import SeqModel, differences

Real = Union[float, Fraction]


def _abs_differences(x: SeqModel, y: SeqModel) -> np.ndarray:
    return np.array([float(abs(d)) for d in differences(x, y)], dtype=np.float64)


def metric_ds(x: SeqModel, y: SeqModel) -> Fraction:
    """sup_t |x_t − y_t|."""
    return max((abs(d) for d in differences(x, y)), default=Fraction(0))


def metric_dc(x: SeqModel, y: SeqModel) -> Fraction:
    """Σ |x_t − y_t| / 2^t with 1-based t."""
    return sum(
        (abs(d) / 2 ** (t + 1) for t, d in enumerate(differences(x, y))),
        Fraction(0),
    )


def metric_d1(x: SeqModel, y: SeqModel) -> Fraction:
    """min{1, Σ |x_t − y_t|}."""
    return min(Fraction(1), sum((abs(d) for d in differences(x, y)), Fraction(0)))


def metric_dp(x: SeqModel, y: SeqModel, p: Real) -> float:
    """
    min{1, (Σ |x_t − y_t|^p)^(1/p)}.

    Raises:
        ParamOutOfRange: If p <= 1
    """
    if p <= 1:
        raise ParamOutOfRange(f"Cannot compute d_p: p must exceed 1, got {p}")
    diff = _abs_differences(x, y)
    if diff.size == 0:
        return 0.0
    # rescale by the largest entry so tiny differences do not underflow
    top = float(diff.max())
    if top == 0.0:
        return 0.0
    norm = top * float(np.sum((diff / top) ** float(p)) ** (1.0 / float(p)))
    return min(1.0, norm)


def metric_dq(x: SeqModel, y: SeqModel, q: Real) -> float:
    """
    min{1, Σ |x_t − y_t|^q}.

    Raises:
        ParamOutOfRange: If q is outside (0, 1)
    """
    if not 0 < q < 1:
        raise ParamOutOfRange(f"Cannot compute d_q: q must lie in (0, 1), got {q}")
    diff = _abs_differences(x, y)
    nonzero = diff[diff > 0]
    return min(1.0, float(np.sum(nonzero ** float(q))))


SeqMetric = Callable[[SeqModel, SeqModel], Real]


def metric_catalog(p: Real = 2.0, q: Real = Fraction(1, 2)) -> Dict[str, SeqMetric]:
    """The five metrics by id, with d_p and d_q bound to the given exponents."""
    return {
        "ds": metric_ds,
        "dc": metric_dc,
        "dp": lambda x, y: metric_dp(x, y, p),
        "d1": metric_d1,
        "dq": lambda x, y: metric_dq(x, y, q),
    }
