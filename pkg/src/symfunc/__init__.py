"""
Symfunc module.

This module provides exact truncated series in time variables and the Schur-function
toolkit built on them:
    - Scalar: rationals extended by nilpotent parameters.
    - GradedSeries / MultiSeries: truncated series over named blocks of times.
    - h_poly, p_poly, schur, skew_schur: Jacobi-Trudi constructions.
    - cauchy_kernel, shift_block, log_series, exp_series.
    - to_schur_basis / from_schur_basis / schur_components: basis changes.
    - specialize with the rules ExplicitTimes, CountingLocus, DeltaLocus and Miwa.
"""
from .scalar import (
    Scalar, Coeff,
    as_coeff, is_zero, inverse, exp_nilpotent, coeff_to_json, coeff_from_json,
    param_parts, param_orders
)
from .series import (
    GradedSeries, MultiSeries,
    Exps, Key, make_key, make_series, merge_keys, key_to_str, key_degrees, exps_degree,
    exps_from_mapping
)
from .jacobi_trudi import h_poly, p_poly, schur, skew_schur, schur_exps, skew_schur_exps
from .kernels import cauchy_kernel, shift_block, log_series, exp_series
from .schur_basis import (
    to_schur_basis, from_schur_basis, schur_components, assemble_from_components
)
from .specialization import (
    SpecializationRule, ExplicitTimes, CountingLocus, DeltaLocus, Miwa,
    specialize, specialize_block, rule_from_json
)


__all__ = [
    "Scalar",
    "Coeff",
    "as_coeff",
    "is_zero",
    "inverse",
    "exp_nilpotent",
    "coeff_to_json",
    "coeff_from_json",
    "param_parts",
    "param_orders",
    "GradedSeries",
    "MultiSeries",
    "Exps",
    "Key",
    "make_key",
    "make_series",
    "merge_keys",
    "key_to_str",
    "key_degrees",
    "exps_degree",
    "exps_from_mapping",
    "h_poly",
    "p_poly",
    "schur",
    "skew_schur",
    "schur_exps",
    "skew_schur_exps",
    "cauchy_kernel",
    "shift_block",
    "log_series",
    "exp_series",
    "to_schur_basis",
    "from_schur_basis",
    "schur_components",
    "assemble_from_components",
    "SpecializationRule",
    "ExplicitTimes",
    "CountingLocus",
    "DeltaLocus",
    "Miwa",
    "specialize",
    "specialize_block",
    "rule_from_json",
]
