"""
Partitions module.

This module provides the combinatorial substrate: integer partitions and Young-diagram
geometry, deterministic enumeration, symmetric-group characters (Murnaghan-Nakayama)
with the ribbon moves behind them, and Littlewood-Richardson coefficients.
"""
from .partition import (
    Partition, FrobeniusCoords,
    contains, transpose, frobenius, content_sum, z_centralizer, dimension
)
from .partition_enumerator import (
    enumerate_partitions, partitions_of, subpartitions, superpartitions
)
from .characters import (
    sym_character, character_table, class_size, add_ribbons, remove_ribbons
)
from .littlewood_richardson import lr_coefficient, lr_coefficient_characters


__all__ = [
    "Partition",
    "FrobeniusCoords",
    "contains",
    "transpose",
    "frobenius",
    "content_sum",
    "z_centralizer",
    "dimension",
    "enumerate_partitions",
    "partitions_of",
    "subpartitions",
    "superpartitions",
    "sym_character",
    "character_table",
    "class_size",
    "add_ribbons",
    "remove_ribbons",
    "lr_coefficient",
    "lr_coefficient_characters",
]
