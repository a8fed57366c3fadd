"""
Cutjoin module.

This module provides the operator side of nested tau-functions:
    - LinearOperator: Schur-basis matrices on one block of times, with their algebra.
    - diagonal_operator, power_sum_*, w_operator / w_family, classical_cutjoin: concrete operators.
    - exp_operator_action / exp_nilpotent_action: exponentials of operator families.
    - tau_by_recursion / recursion_step, single_plus_route: level-by-level constructions.
    - ConjugatedSpec / w_construction, maps_w_series, fully_simple_w_series: W-mode forms.
"""
from .linear_operator import Components, LinearOperator, commute_pairwise
from .operators import (
    diagonal_operator, power_sum_multiplication, power_sum_derivative,
    w_operator, w_family, classical_cutjoin, cutjoin_differential, cutjoin_from_differential
)
from .exponential_action import exp_operator_action, exp_nilpotent_action
from .recursion import (
    Route, top_caps, hypergeometric_operator_form, recursion_step, tau_by_recursion,
    single_plus_route, finish_series, schur_view_of
)
from .w_constructions import (
    ConjugatedSpec, working_caps, w_construction, maps_w_series, maps_spec, fully_simple_w_series,
    hypergeometric_w_series
)


__all__ = [
    "Components",
    "LinearOperator",
    "commute_pairwise",
    "diagonal_operator",
    "power_sum_multiplication",
    "power_sum_derivative",
    "w_operator",
    "w_family",
    "classical_cutjoin",
    "cutjoin_differential",
    "cutjoin_from_differential",
    "exp_operator_action",
    "exp_nilpotent_action",
    "Route",
    "top_caps",
    "hypergeometric_operator_form",
    "recursion_step",
    "tau_by_recursion",
    "single_plus_route",
    "finish_series",
    "schur_view_of",
    "ConjugatedSpec",
    "working_caps",
    "w_construction",
    "maps_w_series",
    "maps_spec",
    "fully_simple_w_series",
    "hypergeometric_w_series",
]
