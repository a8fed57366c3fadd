"""
Tau module.

This module provides the nested hypergeometric tau-functions:
    - NestedSpec / Sign / load_spec: the data of a tau-function and its JSON form.
    - enumerate_chains: chains of nested partitions under the truncation caps.
    - expand_tau / TauSeries: the skew Schur expansion and its double-Schur view.
    - double_schur_coefficient, coefficient_of, superintegrability_prediction: targeted queries.
    - dual_spec, reduce_spec (with relabel_dual / lift_reduced): structural transformations.
    - hirota_check: the truncated KP bilinear identity.
"""
from .nested_spec import (
    NestedSpec, Sign, block_name, load_spec, hypergeometric_spec, fully_simple_spec
)
from .chain_enumerator import Chain, enumerate_chains
from .tau_expansion import (
    TauSeries, ChainEvaluator,
    expand_tau, double_schur_coefficient, coefficient_of, superintegrability_prediction,
    series_from_view, middle_blocks, corrupt_series
)
from .tau_transforms import (
    ReductionKind, dual_spec, relabel_dual, reduction_kind, reduce_spec, lift_reduced
)
from .hirota import HirotaResult, hirota_check


__all__ = [
    "NestedSpec",
    "Sign",
    "block_name",
    "load_spec",
    "hypergeometric_spec",
    "fully_simple_spec",
    "Chain",
    "enumerate_chains",
    "TauSeries",
    "ChainEvaluator",
    "expand_tau",
    "double_schur_coefficient",
    "coefficient_of",
    "superintegrability_prediction",
    "series_from_view",
    "middle_blocks",
    "corrupt_series",
    "ReductionKind",
    "dual_spec",
    "relabel_dual",
    "reduction_kind",
    "reduce_spec",
    "lift_reduced",
    "HirotaResult",
    "hirota_check",
]
