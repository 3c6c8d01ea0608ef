"""Bounded-sequence layer: models, metrics, welfare criteria and their axioms."""

from ordtopia.seq.model import (
    ExtendedCount,
    FinitePermutation,
    SeqModel,
    TailKind,
    TailRef,
    align,
    apply_perm,
    product_le,
    register_tail,
)
from ordtopia.seq.metrics import metric_d1, metric_dc, metric_dp, metric_dq, metric_ds
from ordtopia.seq.grading import (
    Comparison,
    criterion_from_le,
    grading_le,
    pre_half,
    pre_plus,
    sigma_below,
)
from ordtopia.seq.overtaking import overtaking_compare, overtaking_criterion
from ordtopia.seq.witnesses import simplex_witnesses

__all__ = [
    "Comparison",
    "ExtendedCount",
    "FinitePermutation",
    "SeqModel",
    "TailKind",
    "TailRef",
    "align",
    "apply_perm",
    "criterion_from_le",
    "grading_le",
    "metric_d1",
    "metric_dc",
    "metric_dp",
    "metric_dq",
    "metric_ds",
    "overtaking_compare",
    "overtaking_criterion",
    "pre_half",
    "pre_plus",
    "product_le",
    "register_tail",
    "sigma_below",
    "simplex_witnesses",
]
