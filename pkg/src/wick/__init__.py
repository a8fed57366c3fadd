"""
Wick module.

This module provides the matrix-integral oracle, computed at entry level:
    - hermitian_moment / complex_moment / unitary_moment and the joint `expectation`.
    - weingarten: Wg(mu, N) by the character sum.
    - schur_of_matrix, genus_expansion_check.
    - MatrixChainPlan and its builders: chains of complex, unitary and normal matrices.
    - chain_evaluate: coefficients of chain integrals by expanding the couplings.
"""
from .weingarten import unitary_dimension, weingarten, cycle_type, weingarten_of_pair
from .moments import (
    Ensemble, Letter, DiagonalLetter, EntryLetter, MomentQuery,
    parse_letter, expectation, index_assignment_count,
    hermitian_moment, complex_moment, unitary_moment, schur_of_matrix,
    hermitian_genus_counts, GenusExpansion, genus_expansion_check
)
from .chain_plan import (
    NodeKind, CouplingKind, ChainNode, Coupling, Attachment, SchurInsertion, MatrixChainPlan,
    simpfs_plan, chain3_plan, dvapl_plan, plan_from_spec
)
from .chain_evaluator import coupling_terms, balanced_orders, chain_evaluate


__all__ = [
    "unitary_dimension",
    "weingarten",
    "cycle_type",
    "weingarten_of_pair",
    "Ensemble",
    "Letter",
    "DiagonalLetter",
    "EntryLetter",
    "MomentQuery",
    "parse_letter",
    "expectation",
    "index_assignment_count",
    "hermitian_moment",
    "complex_moment",
    "unitary_moment",
    "schur_of_matrix",
    "hermitian_genus_counts",
    "GenusExpansion",
    "genus_expansion_check",
    "NodeKind",
    "CouplingKind",
    "ChainNode",
    "Coupling",
    "Attachment",
    "SchurInsertion",
    "MatrixChainPlan",
    "simpfs_plan",
    "chain3_plan",
    "dvapl_plan",
    "plan_from_spec",
    "coupling_terms",
    "balanced_orders",
    "chain_evaluate",
]
