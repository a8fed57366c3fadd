"""
Chain enumeration.

The expansion of a nested tau-function runs over chains (lam_0, ..., lam_m) where
lam_i is inside lam_{i-1} when s_i = + and contains it when s_i = -. Under the caps,
|lam_0| <= D_0, |lam_m| <= D_{m+1} and every skew step has size at most D_i (exactly
|nu| at an inserted position). Chains are produced depth first in enumeration order.
"""
from typing import Iterator, Mapping

from src.partitions import (
    Partition, enumerate_partitions, partitions_of, subpartitions, superpartitions
)
from .nested_spec import NestedSpec, Sign

Chain = tuple[Partition, ...]


def step_bounds(spec: NestedSpec, i: int, exact_sizes: Mapping[int, int]) -> tuple[int, int]:
    """(smallest, largest) size of the skew step at position i."""
    nu = spec.insertion(i)
    if nu is not None:
        return nu.size, nu.size
    if i in exact_sizes:
        return exact_sizes[i], exact_sizes[i]
    return 0, spec.cap(i)


def _reach(spec: NestedSpec, exact_sizes: Mapping[int, int]) -> tuple[list[int], list[int]]:
    """Largest total shrink and growth still available after each position."""
    down = [0] * (spec.m + 2)
    up = [0] * (spec.m + 2)
    for i in range(spec.m, 0, -1):
        _, largest = step_bounds(spec, i, exact_sizes)
        down[i - 1] = down[i] + (largest if spec.sign(i) is Sign.PLUS else 0)
        up[i - 1] = up[i] + (largest if spec.sign(i) is Sign.MINUS else 0)
    return down, up


def _fits_length(spec: NestedSpec, lam: Partition) -> bool:
    return spec.max_length is None or lam.length <= spec.max_length


def enumerate_chains(
    spec: NestedSpec,
    exact_sizes: Mapping[int, int] | None = None,
    *,
    start: Partition | None = None,
    end: Partition | None = None,
) -> Iterator[Chain]:
    """
    Chains (lam_0, ..., lam_m) compatible with the spec and its caps.

    Args:
        spec (NestedSpec): The spec.
        exact_sizes (Mapping[int, int] | None): Block j -> exact degree of its factor
            (|lam_0| for j = 0, |lam_m| for j = m+1, the skew size otherwise).
        start (Partition | None): Fix lam_0.
        end (Partition | None): Fix lam_m.
    """
    exact_sizes = dict(exact_sizes or {})
    end_low, end_high = 0, spec.cap(spec.m + 1)
    if spec.m + 1 in exact_sizes:
        end_low = end_high = exact_sizes[spec.m + 1]
    if end is not None:
        if not end_low <= end.size <= end_high or not _fits_length(spec, end):
            return
        end_low = end_high = end.size
    down, up = _reach(spec, exact_sizes)

    if start is not None:
        starts: tuple[Partition, ...] = (start,)
    elif 0 in exact_sizes:
        starts = partitions_of(exact_sizes[0], spec.max_length)
    else:
        starts = enumerate_partitions(spec.cap(0), spec.max_length)

    def can_finish(lam: Partition, i: int) -> bool:
        return lam.size - down[i] <= end_high and lam.size + up[i] >= end_low

    def extend(chain: list[Partition]) -> Iterator[Chain]:
        i = len(chain)
        previous = chain[-1]
        if i == spec.m + 1:
            if end_low <= previous.size <= end_high and (end is None or previous == end):
                yield tuple(chain)
            return
        smallest, largest = step_bounds(spec, i, exact_sizes)
        if spec.sign(i) is Sign.PLUS:
            candidates = (
                mu for mu in subpartitions(previous, max(previous.size - largest, 0))
                if previous.size - mu.size >= smallest
            )
        else:
            candidates = (
                mu for mu in superpartitions(previous, previous.size + largest, spec.max_length)
                if mu.size - previous.size >= smallest
            )
        for mu in candidates:
            if not _fits_length(spec, mu) or not can_finish(mu, i):
                continue
            chain.append(mu)
            yield from extend(chain)
            chain.pop()

    for lam0 in starts:
        if lam0.size > spec.cap(0) or not _fits_length(spec, lam0) or not can_finish(lam0, 0):
            continue
        yield from extend([lam0])
