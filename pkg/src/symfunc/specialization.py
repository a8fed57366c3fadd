"""
Specializations of time variables.

A `SpecializationRule` assigns a value to every time t_k of one block. Rules with finite
support (explicit values, delta loci) need every supported t_k to be below the cap of the
block; otherwise the truncated series no longer determines the result.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Protocol, runtime_checkable

from src.errors import TruncationError
from .scalar import Coeff, as_coeff, coeff_to_json, coeff_from_json
from .series import Key, MultiSeries, make_series


# pylint: disable=too-few-public-methods
@runtime_checkable
class SpecializationRule(Protocol):
    """
    Protocol for substitutions t_k := value(k) on one block.

    Attributes:
        support (int | None): Largest k with a non-zero value, None when unbounded.
    """
    support: int | None

    def value(self, k: int) -> Coeff:
        """The value substituted for t_k."""
        return Fraction(0)


@dataclass(frozen=True)
class ExplicitTimes:
    """t_k := values[k-1], zero past the end."""
    values: tuple[Coeff, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(as_coeff(v) for v in self.values))

    @property
    def support(self) -> int | None:
        nonzero = [k for k, v in enumerate(self.values, start=1) if v != 0]
        return max(nonzero, default=0)

    def value(self, k: int) -> Coeff:
        return self.values[k - 1] if 1 <= k <= len(self.values) else Fraction(0)

    def to_json(self) -> dict:
        return {"kind": "explicit", "values": [coeff_to_json(v) for v in self.values]}


@dataclass(frozen=True)
class CountingLocus:
    """t_k := N / k, the Miwa point of the N x N identity matrix."""
    size: Coeff
    support: int | None = field(default=None, init=False)

    def __post_init__(self):
        object.__setattr__(self, "size", as_coeff(self.size))

    def value(self, k: int) -> Coeff:
        return self.size * Fraction(1, k)

    def to_json(self) -> dict:
        return {"kind": "counting", "N": coeff_to_json(self.size)}


@dataclass(frozen=True)
class DeltaLocus:
    """t_k := c * delta_{k, k0}."""
    index: int
    scale: Coeff = Fraction(1)

    def __post_init__(self):
        if self.index <= 0:
            raise ValueError(f"Delta locus index must be positive, got {self.index}")
        object.__setattr__(self, "scale", as_coeff(self.scale))

    @property
    def support(self) -> int | None:
        return self.index if self.scale != 0 else 0

    def value(self, k: int) -> Coeff:
        return self.scale if k == self.index else Fraction(0)

    def to_json(self) -> dict:
        return {"kind": "delta", "k": self.index, "c": coeff_to_json(self.scale)}


@dataclass(frozen=True)
class Miwa:
    """t_k := (sum_i a_i^k) / k for an explicit eigenvalue list."""
    eigenvalues: tuple[Coeff, ...]
    support: int | None = field(default=None, init=False)

    def __post_init__(self):
        object.__setattr__(self, "eigenvalues", tuple(as_coeff(a) for a in self.eigenvalues))

    def value(self, k: int) -> Coeff:
        total: Coeff = Fraction(0)
        for a in self.eigenvalues:
            total = total + a ** k
        return total * Fraction(1, k)

    def to_json(self) -> dict:
        return {"kind": "miwa", "eigenvalues": [coeff_to_json(a) for a in self.eigenvalues]}


def rule_from_json(data: dict) -> SpecializationRule:
    """Read a rule from its JSON form."""
    kind = data.get("kind")
    if kind == "explicit":
        return ExplicitTimes(tuple(coeff_from_json(v) for v in data["values"]))
    if kind == "counting":
        return CountingLocus(coeff_from_json(data["N"]))
    if kind == "delta":
        return DeltaLocus(int(data["k"]), coeff_from_json(data.get("c", "1")))
    if kind == "miwa":
        return Miwa(tuple(coeff_from_json(a) for a in data["eigenvalues"]))
    raise ValueError(f"Unknown specialization kind {kind!r}")


def _check_support(series: MultiSeries, block: str, rule: SpecializationRule) -> None:
    cap = series.cap_of(block)
    if rule.support is not None and rule.support > cap:
        raise TruncationError(
            f"Specializing {block} needs t_{rule.support} but the block cap is {cap}"
        )


def specialize_block(
    series: MultiSeries, block: str, rule: SpecializationRule
) -> MultiSeries:
    """Substitute t_{block,k} := rule.value(k) and drop the block."""
    _check_support(series, block, rule)
    values: dict[int, Coeff] = {}
    rest_blocks = tuple((n, c) for n, c in series.blocks if n != block)
    terms: dict[Key, Coeff] = {}
    for key, coeff in series.terms.items():
        per_block = dict(key)
        exps = per_block.pop(block, ())
        factor: Coeff = Fraction(1)
        for k, a in exps:
            if k not in values:
                values[k] = rule.value(k)
            factor = factor * values[k] ** a
            if factor == 0:
                break
        if factor == 0:
            continue
        rest = tuple(sorted(per_block.items()))
        piece = coeff * factor
        terms[rest] = terms[rest] + piece if rest in terms else piece
    return make_series(rest_blocks, terms)


def specialize(
    f: MultiSeries, rule: SpecializationRule, block: str | None = None
) -> Coeff | MultiSeries:
    """
    Exact substitution of a specialization rule.

    Args:
        f (MultiSeries): The series.
        rule (SpecializationRule): The substitution.
        block (str | None): The block to specialize; may be omitted for single-block input.
    Returns:
        The resulting scalar when no block remains, otherwise the remaining series.
    Raises:
        TruncationError: The rule needs a time variable above the cap.
    """
    if block is None:
        if len(f.blocks) != 1:
            raise ValueError("specialize needs `block` for a multi-block series")
        block = f.blocks[0][0]
    result = specialize_block(f, block, rule)
    if not result.blocks:
        return result.constant
    return result


assert isinstance(CountingLocus(1), SpecializationRule)
