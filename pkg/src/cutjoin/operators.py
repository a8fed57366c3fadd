"""
Concrete operators in the Schur basis.

    diagonal_operator:   s_lam -> c_n r_{lam,n} s_lam
    power_sum_*:         k t_k and d/dt_k through ribbon additions and removals
    w_operator:          O k t_k O^-1 (sign -) or O^-1 d/dt_k O (sign +), O = prod O_+(u_j)
    classical_cutjoin:   s_lam -> (sum of contents at charge n) s_lam
    cutjoin_differential: the same operator as an explicit second-order differential operator
"""
from fractions import Fraction
from typing import Iterable

from src.partitions import Partition, add_ribbons, content_sum, enumerate_partitions, remove_ribbons
from src.errors import DomainError
from src.symfunc import Coeff, MultiSeries, inverse, is_zero, make_series
from src.tau import Sign
from src.weights import WeightGen, c_norm, content_product
from .linear_operator import LinearOperator


def diagonal_operator(g: WeightGen, n: int, block: str, cap: int) -> LinearOperator:
    """
    The operator with eigenvalue c_n r_{lam,n} on s_lam.

    Raises:
        PoleAtContent: G has a pole at a content of some |lam| <= cap.
    """
    normalization = c_norm(g, n)
    return LinearOperator.diagonal(
        block, cap, lambda lam: normalization * content_product(g, lam, n)
    )


def power_sum_multiplication(k: int, block: str, cap: int) -> LinearOperator:
    """Multiplication by p_k = k t_k: s_lam -> sum over k-ribbons mu/lam of (-1)^ht s_mu."""
    matrix = {
        (mu, lam): Fraction(sign)
        for lam in enumerate_partitions(cap) if lam.size + k <= cap
        for mu, sign in add_ribbons(lam, k)
    }
    return LinearOperator(block, cap, matrix, k)


def power_sum_derivative(k: int, block: str, cap: int) -> LinearOperator:
    """d/dt_k: s_lam -> sum over k-ribbons lam/mu of (-1)^ht s_mu."""
    matrix = {
        (mu, lam): Fraction(sign)
        for lam in enumerate_partitions(cap)
        for mu, sign in remove_ribbons(lam, k)
    }
    return LinearOperator(block, cap, matrix, -k)


def _as_sign(sign: Sign | str) -> Sign:
    return sign if isinstance(sign, Sign) else Sign.from_char(sign)


def w_operator(
    p_params: Iterable[Coeff], sign: Sign | str, k: int, block: str, n: int, cap: int,
    *, image_only: bool = False
) -> LinearOperator:
    """
    Conjugated bosonic mode with O = prod_j O_+(u_j).

    sign "-": O (k t_k) O^-1, entries r_mu / r_lam on the ribbon additions (raises degree by k).
    sign "+": O^-1 (d/dt_k) O, entries r_lam / r_mu on the ribbon removals (lowers degree by k).

    O must be invertible up to the cap. With `image_only` the operator is taken on the image of O
    instead: the smaller diagram of every entry sits inside the larger one, so a vanishing
    denominator comes with a vanishing numerator and those entries are 0.

    Example:
        ```python
        w = w_operator([u], "-", 1, "t", 0, 2)
        w.apply(schur(Partition.of(1), "t", 2))  # t_1^2 + 2 u t_2
        ```
    Raises:
        ValueError: k is not positive.
        DomainError: O has a zero eigenvalue at some |lam| <= cap and `image_only` is unset.
    """
    if k <= 0:
        raise ValueError(f"Mode index must be positive, got {k}")
    g = WeightGen.g_plus(*p_params)
    if not image_only:
        for lam in enumerate_partitions(cap):
            if is_zero(content_product(g, lam, n)):
                raise DomainError(f"O is not invertible: r_{{lam}} vanishes for lam = {lam}")
    sign = _as_sign(sign)
    if sign is Sign.MINUS:
        base, numerator_first = power_sum_multiplication(k, block, cap), True
    else:
        base, numerator_first = power_sum_derivative(k, block, cap), False
    r_cache: dict[Partition, Coeff] = {}

    def r(lam: Partition) -> Coeff:
        if lam not in r_cache:
            r_cache[lam] = content_product(g, lam, n)
        return r_cache[lam]

    matrix = {}
    for (mu, lam), value in base.matrix.items():
        top, bottom = (mu, lam) if numerator_first else (lam, mu)
        if is_zero(r(bottom)):
            continue
        matrix[(mu, lam)] = value * r(top) * inverse(r(bottom))
    return LinearOperator(block, cap, matrix, base.degree_shift)


def w_family(
    p_params: Iterable[Coeff], sign: Sign | str, block: str, n: int, cap: int, max_k: int,
    *, image_only: bool = False
) -> dict[int, LinearOperator]:
    """{k: w_operator(...)} for k = 1..max_k."""
    params = tuple(p_params)
    return {
        k: w_operator(params, sign, k, block, n, cap, image_only=image_only)
        for k in range(1, max_k + 1)
    }


def classical_cutjoin(block: str, n: int, cap: int) -> LinearOperator:
    """Diagonal operator with eigenvalue sum over cells of (n + j - i)."""
    return LinearOperator.diagonal(block, cap, lambda lam: Fraction(content_sum(lam, n)))


def cutjoin_differential(f: MultiSeries, block: str, n: int = 0) -> MultiSeries:
    """
    Apply 1/2 sum_{i,j} [i j t_i t_j d_{i+j} + (i+j) t_{i+j} d_i d_j] + n sum_k k t_k d_k.

    The operator preserves degree, so the result keeps the blocks and caps of f.
    """
    cap = f.cap_of(block)
    half = Fraction(1, 2)
    total = make_series(f.blocks, {})
    for i in range(1, cap + 1):
        for j in range(1, cap + 1 - i):
            join = f.derivative(block, i + j).multiply_by_time(block, i).multiply_by_time(block, j)
            total = total + join.scaled(half * i * j)
            cut = f.derivative(block, i).derivative(block, j).multiply_by_time(block, i + j)
            total = total + cut.scaled(half * (i + j))
    if n:
        for k in range(1, cap + 1):
            total = total + f.derivative(block, k).multiply_by_time(block, k).scaled(n * k)
    return total


def cutjoin_from_differential(block: str, n: int, cap: int) -> LinearOperator:
    """Schur-basis matrix of `cutjoin_differential`."""
    return LinearOperator.from_series_map(
        lambda s: cutjoin_differential(s, block, n), block, cap, 0
    )
