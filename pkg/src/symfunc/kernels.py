"""
Kernels and formal functions of series.

Functions:
    cauchy_kernel: exp(sum_k k t_k s_k) over two blocks.
    shift_block: f(t) -> f(t + s).
    log_series / exp_series: formal logarithm and exponential, truncated.
"""
from fractions import Fraction
from math import factorial, prod

from src.errors import DomainError
from src.partitions import enumerate_partitions
from .scalar import Coeff, is_zero
from .series import Key, MultiSeries, make_series, binomial_shift


def cauchy_kernel(block_a: str, block_b: str, cap_a: int, cap_b: int) -> MultiSeries:
    """
    exp(sum_k k t_k s_k) with t in `block_a`, s in `block_b`.

    The coefficient of t^a s^a is prod k^{a_k} / a_k!.
    """
    if block_a == block_b:
        raise ValueError(f"Cauchy kernel needs two distinct blocks, got {block_a!r} twice")
    terms: dict[Key, Coeff] = {}
    for mu in enumerate_partitions(min(cap_a, cap_b)):
        exps = tuple(sorted(mu.multiplicities().items()))
        value = Fraction(
            prod(k ** a for k, a in exps), prod(factorial(a) for _, a in exps)
        )
        key = tuple(sorted(((block_a, exps), (block_b, exps)))) if exps else ()
        terms[key] = value
    return make_series(((block_a, cap_a), (block_b, cap_b)), terms)


def shift_block(
    f: MultiSeries,
    new_block: str,
    *,
    source: str | None = None,
    new_cap: int | None = None,
) -> MultiSeries:
    """
    Substitute t -> t + s, with s the variables of `new_block`.

    Args:
        f (MultiSeries): The series; `source` may be omitted when it has one block.
        new_block (str): Name of the block s, not declared in f.
        source (str | None): The block t that is shifted.
        new_cap (int | None): Cap of s, the cap of t by default.
    """
    if source is None:
        if len(f.blocks) != 1:
            raise ValueError("shift_block needs `source` for a multi-block series")
        source = f.blocks[0][0]
    cap = f.cap_of(source)
    if new_block in f.caps:
        raise ValueError(f"Block {new_block!r} already present")
    blocks = f.blocks + ((new_block, cap if new_cap is None else new_cap),)
    terms: dict[Key, Coeff] = {}
    for key, value in f.terms.items():
        per_block = dict(key)
        exps = per_block.pop(source, ())
        for kept, moved, weight in binomial_shift(exps):
            new_key = dict(per_block)
            if kept:
                new_key[source] = kept
            if moved:
                new_key[new_block] = moved
            k = tuple(sorted(new_key.items()))
            terms[k] = terms[k] + value * weight if k in terms else value * weight
    return make_series(blocks, terms)


def log_series(f: MultiSeries) -> MultiSeries:
    """
    Formal logarithm log f = sum_{k>=1} (-1)^{k+1} g^k / k with f = 1 + g.

    Raises:
        DomainError: The constant term of f is not 1.
    """
    if f.constant != 1:
        raise DomainError(f"log_series needs constant term 1, got {f.constant}")
    g = f - 1
    total = make_series(f.blocks, {})
    power = MultiSeries.one(f.blocks)
    k = 0
    while True:
        k += 1
        power = power * g
        if power.is_zero():
            return total
        total = total + power.scaled(Fraction((-1) ** (k + 1), k))


def exp_series(f: MultiSeries) -> MultiSeries:
    """
    Formal exponential sum g^k / k!.

    Raises:
        DomainError: The constant term of f is not 0.
    """
    if not is_zero(f.constant):
        raise DomainError(f"exp_series needs constant term 0, got {f.constant}")
    total = MultiSeries.one(f.blocks)
    power = MultiSeries.one(f.blocks)
    k = 0
    while True:
        k += 1
        power = (power * f).scaled(Fraction(1, k))
        if power.is_zero():
            return total
        total = total + power
