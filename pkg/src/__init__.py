"""
TauForge: exact coefficients of nested hypergeometric tau-functions.

Subpackages:
    partitions, symfunc, weights, tau, cutjoin, wick, cli.
"""
