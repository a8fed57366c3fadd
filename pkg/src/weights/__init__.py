"""
Weights module.

This module provides the diagonal group-element data:
    - WeightGen / ExpWeight: generating functions G(z) with G(0) = 1.
    - eval_G, content_product, c_norm: G(c), r_{lam,n} and c_n (T_0 = 0).
    - DiagonalData: a weight together with its charge.
    - schur_ratio: N^{-|lam|} s_lam(N/k) / s_lam(delta_{k,1}).
"""
from .weight_gen import WeightGen, ExpWeight
from .content_product import (
    eval_G, eval_G_inverse, content_product, exp_T, c_norm, DiagonalData, schur_ratio
)


__all__ = [
    "WeightGen",
    "ExpWeight",
    "eval_G",
    "eval_G_inverse",
    "content_product",
    "exp_T",
    "c_norm",
    "DiagonalData",
    "schur_ratio",
]
