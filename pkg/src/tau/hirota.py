"""
Truncated Hirota bilinear check.

The KP bilinear identity for a tau-function in the block t, the other blocks held fixed:

    res_z tau(t - [z^-1]) tau(t' + [z^-1]) exp(sum_k (t_k - t'_k) z^k) = 0,  [z^-1]_k = z^-k / k

Every term of the residue of total (t, t') degree d only involves coefficients of tau of
degree at most d + 1 in t, so a series known through degree D decides the identity
through degree D - 1.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from src.computation_monitor import computation_monitor
from src.errors import DomainError
from src.symfunc import Coeff, Key, MultiSeries, h_poly, key_degrees, key_to_str, shift_block
from .tau_expansion import TauSeries
from .nested_spec import block_name

logger = logging.getLogger(__name__)

SHIFT_BLOCK = "z"
LEFT_BLOCK = "hirota_t"
RIGHT_BLOCK = "hirota_t'"


@dataclass(frozen=True)
class HirotaResult:
    """
    Outcome of a Hirota check.

    Attributes:
        passed (bool): The residue vanishes through the checked degree.
        first_failure (tuple[Key, Coeff] | None): First non-zero residue term, if any.
        degree (int): The degree D the series was checked at.
    """
    passed: bool
    first_failure: tuple[Key, Coeff] | None
    degree: int

    def __bool__(self) -> bool:
        return self.passed

    def describe(self) -> str:
        """One line for reports."""
        if self.passed:
            return f"residue vanishes through degree {self.degree - 1}"
        key, value = self.first_failure
        return f"residue coefficient of {key_to_str(key)} is {value}"


def _laurent_parts(series: MultiSeries, block: str, sign: int) -> dict[int, MultiSeries]:
    """tau(t + sign [z^-1]) grouped by power of z."""
    shifted = shift_block(series, SHIFT_BLOCK, source=block)
    parts: dict[int, MultiSeries] = {}
    for exps, rest in shifted.split_block(SHIFT_BLOCK).items():
        factor = Fraction(1)
        power = 0
        for k, a in exps:
            factor *= Fraction(sign, k) ** a
            power -= k * a
        term = rest.scaled(factor)
        parts[power] = parts[power] + term if power in parts else term
    return parts


def _exponential_parts(degree: int, blocks) -> dict[int, MultiSeries]:
    """z^p coefficients of exp(sum (t_k - t'_k) z^k) for p < degree."""
    parts: dict[int, MultiSeries] = {}
    for p in range(degree):
        total = MultiSeries(blocks)
        for i in range(p + 1):
            left = h_poly(i, LEFT_BLOCK, degree).with_blocks(blocks)
            right = h_poly(p - i, RIGHT_BLOCK, degree).scale_block(RIGHT_BLOCK, -1).with_blocks(blocks)
            total = total + left * right
        parts[p] = total
    return parts


@computation_monitor(logged_args=("active_block", "degree"))
def hirota_check(
    tau: TauSeries | MultiSeries, active_block: str | None = None, degree: int = 4
) -> HirotaResult:
    """
    Check the KP bilinear identity in one block through degree `degree - 1`.

    Args:
        tau (TauSeries | MultiSeries): The tau-function; other blocks act as parameters.
        active_block (str | None): The block t, t_{m+1} of the spec by default.
        degree (int): D; the series must be known through degree D in `active_block`. Residue
            terms of total (t, t') degree at most D - 1 are checked, the degree D terms are not.
    Returns:
        HirotaResult: Pass flag and the first failing residue term.
    Raises:
        DomainError: The block is missing or its cap is below D.
    """
    if isinstance(tau, TauSeries):
        series = tau.series
        if active_block is None:
            active_block = block_name(tau.spec.m + 1)
    else:
        series = tau
    if active_block is None:
        raise DomainError("hirota_check needs an active block for a bare series")
    if active_block not in series.caps:
        raise DomainError(f"Block {active_block!r} is not a variable of the series")
    if degree < 1:
        raise DomainError(f"Hirota degree must be positive, got {degree}")
    cap = series.cap_of(active_block)
    if cap < degree:
        raise DomainError(
            f"Block {active_block!r} has cap {cap}, the check at degree {degree} needs {degree}"
        )
    series = series.truncate({active_block: degree})
    left = _laurent_parts(series.rename_block(active_block, LEFT_BLOCK), LEFT_BLOCK, -1)
    right = _laurent_parts(series.rename_block(active_block, RIGHT_BLOCK), RIGHT_BLOCK, 1)
    shared = tuple((name, c) for name, c in series.blocks if name != active_block)
    blocks = ((LEFT_BLOCK, degree), (RIGHT_BLOCK, degree)) + shared
    exponential = _exponential_parts(degree, blocks)

    residue = MultiSeries(blocks)
    for p_left, a_part in left.items():
        for p_right, b_part in right.items():
            p_exp = -1 - p_left - p_right
            if p_exp not in exponential:
                continue
            residue = residue + a_part.with_blocks(blocks) * b_part.with_blocks(blocks) * exponential[p_exp]

    failures = [
        (key, value) for key, value in residue.items()
        if key_degrees(key).get(LEFT_BLOCK, 0) + key_degrees(key).get(RIGHT_BLOCK, 0) < degree
    ]
    if failures:
        logger.debug("Hirota residue has %d non-zero terms", len(failures))
        return HirotaResult(False, failures[0], degree)
    return HirotaResult(True, None, degree)
