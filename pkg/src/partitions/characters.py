"""
Symmetric-group characters.

Characters are computed by the Murnaghan-Nakayama rule on beta-sets: removing a
k-ribbon from lambda moves one bead of the beta-set k steps down, with sign
(-1)^(number of beads jumped over). The same ribbon moves give the action of the
power sums p_k and of d/dt_k on Schur functions, which `src.cutjoin` reuses.
"""
from functools import lru_cache
from math import factorial

from src.constant import MEMO_MAXSIZE
from src.errors import DomainError
from .partition import Partition, z_centralizer
from .partition_enumerator import partitions_of


def _move_bead(betas: tuple[int, ...], source: int, target: int) -> tuple[Partition, int]:
    low, high = min(source, target), max(source, target)
    jumped = sum(1 for b in betas if low < b < high)
    moved = tuple(target if b == source else b for b in betas)
    return Partition.from_beta_numbers(moved), -1 if jumped % 2 else 1


@lru_cache(maxsize=MEMO_MAXSIZE)
def remove_ribbons(lam: Partition, k: int) -> tuple[tuple[Partition, int], ...]:
    """
    All (mu, sign) with lam / mu a k-ribbon, sign = (-1)^(height of the ribbon).

    Args:
        lam (Partition): The outer shape.
        k (int): Ribbon size, positive.
    """
    if k <= 0:
        raise ValueError(f"Ribbon size must be positive, got {k}")
    betas = lam.beta_numbers()
    occupied = set(betas)
    found = [
        _move_bead(betas, b, b - k)
        for b in betas if b - k >= 0 and (b - k) not in occupied
    ]
    return tuple(sorted(found, key=lambda pair: pair[0].sort_key()))


@lru_cache(maxsize=MEMO_MAXSIZE)
def add_ribbons(lam: Partition, k: int) -> tuple[tuple[Partition, int], ...]:
    """All (mu, sign) with mu / lam a k-ribbon, sign = (-1)^(height of the ribbon)."""
    if k <= 0:
        raise ValueError(f"Ribbon size must be positive, got {k}")
    betas = lam.beta_numbers(lam.length + k)
    occupied = set(betas)
    found = [_move_bead(betas, b, b + k) for b in betas if (b + k) not in occupied]
    return tuple(sorted(found, key=lambda pair: pair[0].sort_key()))


@lru_cache(maxsize=MEMO_MAXSIZE)
def _character(lam: Partition, mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    head, rest = mu[0], mu[1:]
    return sum(sign * _character(nu, rest) for nu, sign in remove_ribbons(lam, head))


def sym_character(lam: Partition, mu: Partition) -> int:
    """
    Irreducible character chi^lam evaluated on the class of cycle type mu.

    Raises:
        DomainError: |lam| != |mu|.
    """
    if lam.size != mu.size:
        raise DomainError(f"Character size mismatch: |{lam}| != |{mu}|")
    return _character(lam, mu.parts)


@lru_cache(maxsize=MEMO_MAXSIZE)
def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    """Full character table of S_n keyed by (lam, mu)."""
    shapes = partitions_of(n)
    return {(lam, mu): sym_character(lam, mu) for lam in shapes for mu in shapes}


def class_size(mu: Partition) -> int:
    """Number of permutations of cycle type mu."""
    return factorial(mu.size) // z_centralizer(mu)
