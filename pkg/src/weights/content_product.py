"""
Content products and normalization constants.

For a weight G and charge n:
    r_{lam,n} = prod over cells (i, j) of G(n + j - i)
    c_0 = 1, c_{n+1} / c_n = e^{T_n}, with T_0 = 0 and e^{T_i - T_{i-1}} = G(i).
"""
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from src.constant import MEMO_MAXSIZE
from src.errors import PoleAtContent
from src.partitions import Partition
from src.symfunc import (
    Coeff, CountingLocus, DeltaLocus, exp_nilpotent, inverse, is_zero, schur, specialize
)
from .weight_gen import WeightGen


def _linear_factor(value: Coeff, content: int) -> Coeff:
    return 1 + value * content


@lru_cache(maxsize=MEMO_MAXSIZE)
def eval_G(g: WeightGen, content: int) -> Coeff:
    """
    G(content), exact.

    Raises:
        PoleAtContent: 1 + v_j * content is not invertible.
    """
    numerator: Coeff = Fraction(1)
    for x in g.u:
        numerator = numerator * _linear_factor(x, content)
    denominator: Coeff = Fraction(1)
    for index, x in enumerate(g.v):
        factor = _linear_factor(x, content)
        try:
            denominator = denominator * inverse(factor)
        except ZeroDivisionError as exc:
            raise PoleAtContent(index, content) from exc
    value = numerator * denominator
    for e in g.w:
        value = value * exp_nilpotent(e.exponent(content))
    return value


@lru_cache(maxsize=MEMO_MAXSIZE)
def eval_G_inverse(g: WeightGen, content: int) -> Coeff:
    """
    1 / G(content).

    Raises:
        PoleAtContent: G vanishes at content; `factor_index` counts numerator factors.
    """
    try:
        return eval_G(g.inverse(), content)
    except PoleAtContent as exc:
        raise PoleAtContent(
            exc.factor_index, content,
            f"weight vanishes at content {content} (numerator factor {exc.factor_index})",
        ) from exc


def content_product(g: WeightGen, lam: Partition, n: int = 0) -> Coeff:
    """
    r_{lam,n} = prod G(n + j - i) over the cells of lam.

    Raises:
        PoleAtContent: G has a pole at one of the contents.
    """
    value: Coeff = Fraction(1)
    for content, multiplicity in sorted(Counter(lam.contents(n)).items()):
        value = value * eval_G(g, content) ** multiplicity
        if is_zero(value):
            return Fraction(0)
    return value


def exp_T(g: WeightGen, i: int) -> Coeff:
    """e^{T_i} under T_0 = 0."""
    value: Coeff = Fraction(1)
    if i > 0:
        for j in range(1, i + 1):
            value = value * eval_G(g, j)
    elif i < 0:
        for j in range(i + 1, 1):
            value = value * eval_G_inverse(g, j)
    return value


@lru_cache(maxsize=MEMO_MAXSIZE)
def c_norm(g: WeightGen, n: int) -> Coeff:
    """
    Normalization constant c_n.

    Example:
        ```python
        c_norm(WeightGen.g_plus(u), 2)  # 1 + u
        ```
    Raises:
        PoleAtContent: A needed e^{T_i} is singular or not invertible.
    """
    value: Coeff = Fraction(1)
    if n > 0:
        for i in range(n):
            value = value * exp_T(g, i)
    elif n < 0:
        for i in range(n, 0):
            t_value = exp_T(g, i)
            try:
                value = value * inverse(t_value)
            except ZeroDivisionError as exc:
                raise PoleAtContent(-1, i, f"e^T_{i} vanishes, c_{n} undefined") from exc
    return value


@dataclass(frozen=True)
class DiagonalData:
    """
    A diagonal group element: weight and charge.

    Attributes:
        gen (WeightGen): The weight generating function.
        charge (int): The charge n.
    """
    gen: WeightGen
    charge: int = 0

    def content_product(self, lam: Partition) -> Coeff:
        """r_{lam,n}"""
        return content_product(self.gen, lam, self.charge)

    @property
    def normalization(self) -> Coeff:
        """c_n"""
        return c_norm(self.gen, self.charge)

    def eigenvalue(self, lam: Partition) -> Coeff:
        """c_n * r_{lam,n}, the eigenvalue on s_lam."""
        return self.normalization * self.content_product(lam)


def schur_ratio(lam: Partition, size: int) -> Fraction:
    """
    N^{-|lam|} s_lam(t_k = N/k) / s_lam(t_k = delta_{k,1}).

    Equals the content product of G^+(1/N) at charge 0.
    """
    if size <= 0:
        raise ValueError(f"Matrix size must be positive, got {size}")
    s = schur(lam)
    at_counting = specialize(s, CountingLocus(size))
    at_delta = specialize(s, DeltaLocus(1)) if lam.size else Fraction(1)
    return Fraction(at_counting) / Fraction(at_delta) / Fraction(size) ** lam.size
