"""
Partition enumeration.

All enumerations are deterministic and follow the (size, reverse-lex) order of
`Partition.sort_key`, so serialized coefficient maps are reproducible byte for byte.
"""
from functools import lru_cache

from src.constant import MEMO_MAXSIZE
from .partition import Partition, contains


def _descending(n: int, max_part: int, max_length: int | None) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    if max_length is not None and max_length <= 0:
        return []
    found = []
    for first in range(min(n, max_part), 0, -1):
        rest_length = None if max_length is None else max_length - 1
        for tail in _descending(n - first, first, rest_length):
            found.append((first,) + tail)
    return found


@lru_cache(maxsize=MEMO_MAXSIZE)
def partitions_of(n: int, max_length: int | None = None) -> tuple[Partition, ...]:
    """
    Partitions of exactly n, in reverse-lex order.

    Args:
        n (int): The size.
        max_length (int | None): Keep only partitions with at most this many rows.
    Raises:
        ValueError: n is negative.
    """
    if n < 0:
        raise ValueError(f"Cannot enumerate partitions of a negative size: {n}")
    return tuple(Partition(parts) for parts in _descending(n, n, max_length))


@lru_cache(maxsize=MEMO_MAXSIZE)
def enumerate_partitions(max_size: int, max_length: int | None = None) -> tuple[Partition, ...]:
    """
    Every partition of size 0..max_size, ordered by (size, reverse-lex).

    Example:
        ```python
        enumerate_partitions(2)  # (), (1), (2), (1,1)
        ```
    """
    if max_size < 0:
        raise ValueError(f"max_size must be non-negative, got {max_size}")
    return tuple(
        lam for size in range(max_size + 1) for lam in partitions_of(size, max_length)
    )


@lru_cache(maxsize=MEMO_MAXSIZE)
def subpartitions(lam: Partition, min_size: int = 0) -> tuple[Partition, ...]:
    """All mu contained in lam with |mu| >= min_size, in enumeration order."""
    found: list[Partition] = []

    def grow(row: int, bound: int, acc: tuple[int, ...]):
        if row == lam.length or bound == 0:
            found.append(Partition(acc))
            return
        for value in range(min(bound, lam.parts[row]), -1, -1):
            if value == 0:
                found.append(Partition(acc))
            else:
                grow(row + 1, value, acc + (value,))

    grow(0, lam.part(0), ())
    return tuple(sorted((mu for mu in found if mu.size >= min_size), key=Partition.sort_key))


@lru_cache(maxsize=MEMO_MAXSIZE)
def superpartitions(
    lam: Partition, max_size: int, max_length: int | None = None
) -> tuple[Partition, ...]:
    """All mu containing lam with |mu| <= max_size (and l(mu) <= max_length if given)."""
    if max_size < lam.size:
        return ()
    return tuple(
        mu for mu in enumerate_partitions(max_size, max_length)
        if mu.size >= lam.size and contains(mu, lam)
    )
