"""
Jacobi-Trudi construction of Schur and skew Schur functions.

Homogeneous polynomials are handled here as plain dicts exps -> Fraction, which keeps the
determinant expansion free of truncation bookkeeping; the public functions wrap the
result as a `GradedSeries` at the requested cap.

Functions:
    h_poly: Complete homogeneous h_k(t), from exp(sum t_k z^k) = sum h_k z^k.
    p_poly: Power sum p_k = k t_k.
    schur: s_lam = det h_{lam_i - i + j}.
    skew_schur: s_{lam/mu} = det h_{lam_i - mu_j - i + j}.
"""
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from src.constant import MEMO_MAXSIZE
from src.partitions import Partition, contains, partitions_of
from .series import Exps, GradedSeries, merge_exps

Poly = dict[Exps, Fraction]


def _poly_mul(left: Poly, right: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in left.items():
        for e2, c2 in right.items():
            e = merge_exps(e1, e2)
            out[e] = out.get(e, Fraction(0)) + c1 * c2
    return {e: c for e, c in out.items() if c != 0}


def _poly_add(acc: Poly, other: Poly, sign: int) -> None:
    for e, c in other.items():
        value = acc.get(e, Fraction(0)) + sign * c
        if value:
            acc[e] = value
        else:
            acc.pop(e, None)


@lru_cache(maxsize=MEMO_MAXSIZE)
def h_exps(k: int) -> tuple[tuple[Exps, Fraction], ...]:
    """h_k as (exps, coefficient) pairs: sum over mu |- k of prod t_j^{m_j} / m_j!."""
    if k < 0:
        return ()
    return tuple(
        (
            tuple(sorted(mu.multiplicities().items())),
            Fraction(1, prod(factorial(m) for m in mu.multiplicities().values())),
        )
        for mu in partitions_of(k)
    )


def _determinant(entries: list[list[int]]) -> Poly:
    """det [h_{entries[i][j]}] by Laplace expansion along rows, memoized on used columns."""
    size = len(entries)
    memo: dict[tuple[int, frozenset], Poly] = {}

    def minor(row: int, free: frozenset) -> Poly:
        if row == size:
            return {(): Fraction(1)}
        cache_key = (row, free)
        if cache_key in memo:
            return memo[cache_key]
        acc: Poly = {}
        ordered = sorted(free)
        for position, col in enumerate(ordered):
            index = entries[row][col]
            if index < 0:
                continue
            sub = minor(row + 1, free - {col})
            if not sub:
                continue
            _poly_add(acc, _poly_mul(dict(h_exps(index)), sub), -1 if position % 2 else 1)
        memo[cache_key] = acc
        return acc

    return minor(0, frozenset(range(size)))


@lru_cache(maxsize=MEMO_MAXSIZE)
def skew_schur_exps(lam: Partition, mu: Partition) -> tuple[tuple[Exps, Fraction], ...]:
    """s_{lam/mu} as sorted (exps, coefficient) pairs; empty unless mu is inside lam."""
    if not contains(lam, mu):
        return ()
    size = lam.length
    entries = [
        [lam.part(i) - mu.part(j) - i + j for j in range(size)] for i in range(size)
    ]
    return tuple(sorted(_determinant(entries).items()))


def schur_exps(lam: Partition) -> tuple[tuple[Exps, Fraction], ...]:
    """s_lam as sorted (exps, coefficient) pairs."""
    return skew_schur_exps(lam, Partition.EMPTY)


def h_poly(k: int, block: str = "t", cap: int | None = None) -> GradedSeries:
    """h_k(t) truncated at cap (default: exactly k); h_0 = 1 and h_k = 0 for k < 0."""
    cap = max(k, 0) if cap is None else cap
    return GradedSeries.from_exps(block, cap, h_exps(k))


def p_poly(k: int, block: str = "t", cap: int | None = None) -> GradedSeries:
    """Power sum p_k = k t_k."""
    if k <= 0:
        raise ValueError(f"Power sum index must be positive, got {k}")
    cap = k if cap is None else cap
    return GradedSeries.from_exps(block, cap, {((k, 1),): Fraction(k)})


def schur(lam: Partition, block: str = "t", cap: int | None = None) -> GradedSeries:
    """
    Schur function s_lam(t) by Jacobi-Trudi.

    Args:
        lam (Partition): The shape.
        block (str): Name of the time block.
        cap (int | None): Degree cap, |lam| by default. Zero series when |lam| > cap.
    """
    cap = lam.size if cap is None else cap
    return GradedSeries.from_exps(block, cap, schur_exps(lam))


def skew_schur(
    lam: Partition, mu: Partition, block: str = "t", cap: int | None = None
) -> GradedSeries:
    """Skew Schur function s_{lam/mu}(t); zero unless mu is inside lam."""
    cap = max(lam.size - mu.size, 0) if cap is None else cap
    return GradedSeries.from_exps(block, cap, skew_schur_exps(lam, mu))
