"""
Littlewood-Richardson coefficients.

`lr_coefficient` counts LR tableaux (semistandard fillings of lam/mu of content nu whose
reverse reading word is a lattice word). `lr_coefficient_characters` computes the same
number from characters; the two must agree, and both agree with the product of
Jacobi-Trudi determinants in `src.symfunc`.
"""
from fractions import Fraction
from functools import lru_cache

from src.constant import MEMO_MAXSIZE
from .partition import Partition, contains, z_centralizer
from .partition_enumerator import partitions_of
from .characters import sym_character


@lru_cache(maxsize=MEMO_MAXSIZE)
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """
    Coefficient of s_lam in s_mu * s_nu.

    Returns 0 when |lam| != |mu| + |nu| or when mu or nu does not fit inside lam.
    """
    if lam.size != mu.size + nu.size or not contains(lam, mu) or not contains(lam, nu):
        return 0
    if not nu:
        return 1
    # Reading order: rows top to bottom, each row right to left
    cells = [
        (i, j)
        for i in range(lam.length)
        for j in range(lam.part(i) - 1, mu.part(i) - 1, -1)
    ]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (nu.length + 1)

    def place(position: int) -> int:
        if position == len(cells):
            return 1
        i, j = cells[position]
        upper = filling.get((i, j + 1), nu.length)
        lower = filling.get((i - 1, j), 0) + 1
        total = 0
        for letter in range(lower, upper + 1):
            if counts[letter] >= nu.part(letter - 1):
                continue
            if letter > 1 and counts[letter] + 1 > counts[letter - 1]:
                continue
            counts[letter] += 1
            filling[(i, j)] = letter
            total += place(position + 1)
            del filling[(i, j)]
            counts[letter] -= 1
        return total

    return place(0)


def _union(alpha: Partition, beta: Partition) -> Partition:
    return Partition(tuple(sorted(alpha.parts + beta.parts, reverse=True)))


@lru_cache(maxsize=MEMO_MAXSIZE)
def lr_coefficient_characters(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Same as `lr_coefficient`, from sum chi^mu(a) chi^nu(b) chi^lam(a u b) / (z_a z_b)."""
    if lam.size != mu.size + nu.size:
        return 0
    total = Fraction(0)
    for alpha in partitions_of(mu.size):
        chi_mu = sym_character(mu, alpha)
        if chi_mu == 0:
            continue
        for beta in partitions_of(nu.size):
            chi_nu = sym_character(nu, beta)
            if chi_nu == 0:
                continue
            total += Fraction(
                chi_mu * chi_nu * sym_character(lam, _union(alpha, beta)),
                z_centralizer(alpha) * z_centralizer(beta),
            )
    if total.denominator != 1:
        raise ArithmeticError(f"Non-integral LR coefficient for {lam}, {mu}, {nu}: {total}")
    return int(total)
