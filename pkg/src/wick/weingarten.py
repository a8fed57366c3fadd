"""
Weingarten function of the unitary group.

    Wg(mu, N) = 1 / k!^2 sum_{lam |- k, l(lam) <= N} chi^lam(1)^2 chi^lam(mu) / s_lam(1^N)

with s_lam(1^N) = s_lam(t_k = N / k). Shapes with more than N rows drop out, which gives
the pseudo-inverse that still integrates every polynomial correctly when N < k.
"""
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from sympy.combinatorics import Permutation

from src.constant import MEMO_MAXSIZE, WEINGARTEN_MAX_LETTERS
from src.errors import DomainError
from src.partitions import Partition, dimension, partitions_of, sym_character
from src.symfunc import CountingLocus, schur, specialize


@lru_cache(maxsize=MEMO_MAXSIZE)
def unitary_dimension(lam: Partition, size: int) -> Fraction:
    """s_lam(1^N), the dimension of the U(N) irreducible of highest weight lam."""
    if lam.size == 0:
        return Fraction(1)
    value = specialize(schur(lam, "t", lam.size), CountingLocus(size))
    return Fraction(value)


@lru_cache(maxsize=MEMO_MAXSIZE)
def weingarten(mu: Partition, size: int) -> Fraction:
    """
    Wg(mu, N) by the character sum.

    Example:
        ```python
        weingarten(Partition.of(2), 2)   # Fraction(-1, 6)
        ```
    Raises:
        DomainError: N < 1 or |mu| above WEINGARTEN_MAX_LETTERS.
    """
    if size < 1:
        raise DomainError(f"Matrix size must be positive, got {size}")
    k = mu.size
    if k > WEINGARTEN_MAX_LETTERS:
        raise DomainError(f"Weingarten order {k} exceeds the bound {WEINGARTEN_MAX_LETTERS}")
    total = Fraction(0)
    for lam in partitions_of(k, max_length=size):
        total += Fraction(dimension(lam) ** 2 * sym_character(lam, mu)) / unitary_dimension(lam, size)
    return total / factorial(k) ** 2


def cycle_type(permutation: Sequence[int]) -> Partition:
    """Cycle type of a permutation of 0..n-1 given in one-line notation."""
    if not permutation:
        return Partition.EMPTY
    structure = Permutation(list(permutation)).cycle_structure
    parts = [length for length, count in structure.items() for _ in range(count)]
    return Partition(tuple(sorted(parts, reverse=True)))


def weingarten_of_pair(sigma: Sequence[int], tau: Sequence[int], size: int) -> Fraction:
    """Wg(sigma tau^-1, N); the class of sigma tau^-1 is that of tau^-1 sigma."""
    combined = Permutation(list(sigma)) * ~Permutation(list(tau)) if sigma else Permutation([])
    return weingarten(cycle_type(combined.array_form), size)
