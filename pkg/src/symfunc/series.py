"""
Truncated graded series in time variables.

A `MultiSeries` is a sparse element of Q[params][t_{b,k}] over named blocks b of time
variables, graded by deg t_{b,k} = k and truncated per block: any monomial whose degree
in block b exceeds the cap of b is discarded at every operation. `GradedSeries` is the
single-block case.

Terms are keyed by `Key = ((block, exps), ...)` sorted by block name, with
`exps = ((k, a_k), ...)` sorted by k and every a_k > 0; the empty key is the constant term.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, prod
from typing import Iterable, Iterator, Mapping, TYPE_CHECKING

if TYPE_CHECKING:  # typing.Self needs Python 3.11+
    from typing import Self

from src.constant import MEMO_MAXSIZE
from .scalar import Coeff, Scalar, as_coeff, is_zero, coeff_to_json, coeff_from_json

Exps = tuple[tuple[int, int], ...]
Key = tuple[tuple[str, Exps], ...]
Blocks = tuple[tuple[str, int], ...]

ONE_KEY: Key = ()


def exps_degree(exps: Exps) -> int:
    """Sum of k * a_k."""
    return sum(k * a for k, a in exps)


def exps_from_mapping(powers: Mapping[int, int]) -> Exps:
    """Normalize {k: a_k} to sorted exps, dropping zero powers."""
    if any(k <= 0 or a < 0 for k, a in powers.items()):
        raise ValueError(f"Invalid exponents: {dict(powers)!r}")
    return tuple(sorted((k, a) for k, a in powers.items() if a > 0))


def merge_exps(left: Exps, right: Exps) -> Exps:
    """Exponents of the product of two monomials in one block."""
    if not left:
        return right
    if not right:
        return left
    powers = dict(left)
    for k, a in right:
        powers[k] = powers.get(k, 0) + a
    return tuple(sorted(powers.items()))


def merge_keys(left: Key, right: Key) -> Key:
    """Key of the product of two monomials."""
    if not left:
        return right
    if not right:
        return left
    merged = dict(left)
    for block, exps in right:
        merged[block] = merge_exps(merged[block], exps) if block in merged else exps
    return tuple(sorted(merged.items()))


@lru_cache(maxsize=MEMO_MAXSIZE)
def key_degrees(key: Key) -> dict[str, int]:
    """Degree of the monomial in each block it involves."""
    return {block: exps_degree(exps) for block, exps in key}


def make_key(monomial: Mapping[str, Mapping[int, int]]) -> Key:
    """Build a key from {block: {k: a_k}}."""
    items = []
    for block, powers in monomial.items():
        exps = exps_from_mapping(powers)
        if exps:
            items.append((block, exps))
    return tuple(sorted(items))


def key_to_str(key: Key) -> str:
    """Render a key as `t1_2^2*t0_1`, `1` for the constant monomial."""
    if not key:
        return "1"
    pieces = []
    for block, exps in key:
        for k, a in exps:
            pieces.append(f"{block}_{k}" if a == 1 else f"{block}_{k}^{a}")
    return "*".join(pieces)


def _normalize_blocks(blocks: Iterable[tuple[str, int]] | Mapping[str, int]) -> Blocks:
    if isinstance(blocks, Mapping):
        blocks = blocks.items()
    seen: dict[str, int] = {}
    ordered = []
    for name, cap in blocks:
        if not isinstance(name, str) or not name:
            raise ValueError(f"Block name must be a non-empty string, got {name!r}")
        if cap < 0:
            raise ValueError(f"Cap of block {name!r} must be non-negative, got {cap}")
        if name in seen:
            raise ValueError(f"Duplicate block {name!r}")
        seen[name] = cap
        ordered.append((name, int(cap)))
    return tuple(ordered)


class MultiSeries:
    """
    Truncated series over several named blocks of time variables.

    Attributes:
        blocks (Blocks): Declared (name, cap) pairs, in display order.
        terms (dict[Key, Coeff]): Non-zero coefficients.

    Equality compares terms only, so caps and block order do not matter.
    """
    __slots__ = ("blocks", "terms", "_caps")

    def __init__(
        self,
        blocks: Iterable[tuple[str, int]] | Mapping[str, int] = (),
        terms: Mapping[Key, Coeff] | None = None,
    ):
        self.blocks = _normalize_blocks(blocks)
        self._caps = dict(self.blocks)
        clean: dict[Key, Coeff] = {}
        for key, value in (terms or {}).items():
            value = as_coeff(value)
            if is_zero(value):
                continue
            if not self._fits(key):
                continue
            clean[key] = value
        self.terms = clean

    def _fits(self, key: Key) -> bool:
        for block, exps in key:
            cap = self._caps.get(block)
            if cap is None:
                raise ValueError(f"Monomial uses undeclared block {block!r}")
            if exps_degree(exps) > cap:
                return False
        return True

    @classmethod
    def one(cls, blocks: Iterable[tuple[str, int]] | Mapping[str, int] = ()) -> "MultiSeries":
        """The constant series 1."""
        return make_series(blocks, {ONE_KEY: Fraction(1)})

    @classmethod
    def constant_series(cls, value: Coeff, blocks=()) -> "MultiSeries":
        """The constant series `value`."""
        return make_series(blocks, {ONE_KEY: value})

    @classmethod
    def monomial(
        cls, blocks, monomial: Mapping[str, Mapping[int, int]], coeff: Coeff = Fraction(1)
    ) -> "MultiSeries":
        """A single term, zero if it exceeds a cap."""
        return make_series(blocks, {make_key(monomial): coeff})

    @property
    def block_names(self) -> tuple[str, ...]:
        """Declared block names, in order."""
        return tuple(name for name, _ in self.blocks)

    @property
    def caps(self) -> dict[str, int]:
        """Map block -> cap."""
        return dict(self._caps)

    def cap_of(self, block: str) -> int:
        """Cap of a declared block."""
        if block not in self._caps:
            raise ValueError(f"Block {block!r} is not declared in {self.block_names}")
        return self._caps[block]

    @property
    def constant(self) -> Coeff:
        """The constant term."""
        return self.terms.get(ONE_KEY, Fraction(0))

    def coefficient(self, key: Key | Mapping[str, Mapping[int, int]]) -> Coeff:
        """Coefficient of a monomial, given as a key or as {block: {k: a_k}}."""
        if isinstance(key, Mapping):
            key = make_key(key)
        return self.terms.get(key, Fraction(0))

    def is_zero(self) -> bool:
        """True when no term is stored."""
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def sort_key(self, key: Key) -> tuple:
        """Graded-lex order per block, blocks in declared order."""
        per_block = dict(key)
        extra = tuple(sorted(b for b in per_block if b not in self._caps))
        return tuple(
            (exps_degree(per_block.get(name, ())), per_block.get(name, ()))
            for name in self.block_names + extra
        )

    def items(self) -> list[tuple[Key, Coeff]]:
        """Terms in canonical order."""
        return sorted(self.terms.items(), key=lambda item: self.sort_key(item[0]))

    def __iter__(self) -> Iterator[tuple[Key, Coeff]]:
        return iter(self.items())

    # Arithmetic

    def _union_blocks(self, other: "MultiSeries") -> Blocks:
        caps = dict(self.blocks)
        order = list(self.block_names)
        for name, cap in other.blocks:
            if name in caps:
                caps[name] = min(cap, caps[name])
            else:
                caps[name] = cap
                order.append(name)
        return tuple((name, caps[name]) for name in order)

    def __add__(self, other):
        if isinstance(other, MultiSeries):
            terms = dict(self.terms)
            for key, value in other.terms.items():
                terms[key] = terms[key] + value if key in terms else value
            return make_series(self._union_blocks(other), terms)
        try:
            value = as_coeff(other)
        except ValueError:
            return NotImplemented
        return self + MultiSeries.constant_series(value, self.blocks)

    __radd__ = __add__

    def __neg__(self):
        return make_series(self.blocks, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, MultiSeries):
            return self + (-other)
        try:
            value = as_coeff(other)
        except ValueError:
            return NotImplemented
        return self + (-value)

    def __rsub__(self, other):
        return (-self) + other

    def scaled(self, factor: Coeff) -> Self:
        """Multiply every coefficient by a scalar."""
        factor = as_coeff(factor)
        if is_zero(factor):
            return make_series(self.blocks, {})
        return make_series(self.blocks, {k: v * factor for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiSeries):
            if isinstance(other, (int, Fraction, Scalar)):
                return self.scaled(other)
            return NotImplemented
        blocks = self._union_blocks(other)
        caps = dict(blocks)
        terms: dict[Key, Coeff] = {}
        for k1, v1 in self.terms.items():
            d1 = key_degrees(k1)
            for k2, v2 in other.terms.items():
                d2 = key_degrees(k2)
                if any(d + d1.get(b, 0) > caps[b] for b, d in d2.items()):
                    continue
                if any(d > caps[b] for b, d in d1.items()):
                    continue
                key = merge_keys(k1, k2)
                product = v1 * v2
                terms[key] = terms[key] + product if key in terms else product
        return make_series(blocks, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scaled(other)
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = MultiSeries.one(self.blocks)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, MultiSeries):
            return self.terms == other.terms
        try:
            value = as_coeff(other)
        except ValueError:
            return NotImplemented
        expected = {} if is_zero(value) else {ONE_KEY: value}
        return self.terms == expected

    __hash__ = None

    # Structural operations

    def with_blocks(self, blocks: Iterable[tuple[str, int]] | Mapping[str, int]) -> "MultiSeries":
        """Redeclare the blocks (caps may shrink); every used block must stay declared."""
        return make_series(blocks, self.terms)

    def truncate(self, caps: Mapping[str, int]) -> "MultiSeries":
        """Lower some caps, dropping the terms above them."""
        blocks = tuple(
            (name, min(cap, caps.get(name, cap))) for name, cap in self.blocks
        )
        return make_series(blocks, self.terms)

    def add_block(self, name: str, cap: int) -> "MultiSeries":
        """Declare an extra block the series does not depend on yet."""
        return make_series(self.blocks + ((name, cap),), self.terms)

    def homogeneous(self, block: str, degree: int) -> "MultiSeries":
        """Terms whose degree in `block` equals `degree`."""
        return make_series(
            self.blocks,
            {k: v for k, v in self.terms.items() if key_degrees(k).get(block, 0) == degree},
        )

    def max_degree(self, block: str) -> int:
        """Highest degree in `block` over the stored terms, 0 for the zero series."""
        return max((key_degrees(k).get(block, 0) for k in self.terms), default=0)

    def derivative(self, block: str, k: int) -> "MultiSeries":
        """d/dt_{block,k}."""
        self.cap_of(block)
        terms: dict[Key, Coeff] = {}
        for key, value in self.terms.items():
            per_block = dict(key)
            powers = dict(per_block.get(block, ()))
            a = powers.get(k, 0)
            if a == 0:
                continue
            powers[k] = a - 1
            exps = exps_from_mapping(powers)
            if exps:
                per_block[block] = exps
            else:
                per_block.pop(block)
            new_key = tuple(sorted(per_block.items()))
            terms[new_key] = terms.get(new_key, Fraction(0)) + value * a
        return make_series(self.blocks, terms)

    def multiply_by_time(self, block: str, k: int, coeff: Coeff = Fraction(1)) -> "MultiSeries":
        """coeff * t_{block,k} * self, truncated."""
        factor = MultiSeries.monomial(self.blocks, {block: {k: 1}}, coeff)
        return self * factor

    def scale_block(self, block: str, factor: Coeff) -> "MultiSeries":
        """Substitute t_{block,k} -> factor * t_{block,k} for every k."""
        factor = as_coeff(factor)
        terms = {}
        for key, value in self.terms.items():
            count = sum(a for _, a in dict(key).get(block, ()))
            terms[key] = value * factor ** count if count else value
        return make_series(self.blocks, terms)

    def grade_block(self, block: str, factor: Coeff) -> "MultiSeries":
        """Substitute t_{block,k} -> factor**k * t_{block,k}."""
        factor = as_coeff(factor)
        terms = {}
        for key, value in self.terms.items():
            degree = key_degrees(key).get(block, 0)
            terms[key] = value * factor ** degree if degree else value
        return make_series(self.blocks, terms)

    def rename_block(self, old: str, new: str) -> "MultiSeries":
        """Rename a block, keeping its cap and position."""
        return self.rename_blocks({old: new})

    def rename_blocks(self, mapping: Mapping[str, str]) -> "MultiSeries":
        """Rename several blocks at once (a permutation is allowed)."""
        for old in mapping:
            self.cap_of(old)
        blocks = tuple((mapping.get(name, name), cap) for name, cap in self.blocks)
        terms = {
            tuple(sorted((mapping.get(b, b), e) for b, e in key)): value
            for key, value in self.terms.items()
        }
        return make_series(blocks, terms)

    def drop_block(self, block: str) -> "MultiSeries":
        """Set every variable of `block` to zero and forget the block."""
        self.cap_of(block)
        blocks = tuple((n, c) for n, c in self.blocks if n != block)
        terms = {k: v for k, v in self.terms.items() if block not in dict(k)}
        return make_series(blocks, terms)

    def split_block(self, block: str) -> dict[Exps, "MultiSeries"]:
        """Group terms by their exponents in `block`; values live on the other blocks."""
        rest_blocks = tuple((n, c) for n, c in self.blocks if n != block)
        grouped: dict[Exps, dict[Key, Coeff]] = {}
        for key, value in self.terms.items():
            per_block = dict(key)
            exps = per_block.pop(block, ())
            grouped.setdefault(exps, {})[tuple(sorted(per_block.items()))] = value
        return {exps: make_series(rest_blocks, terms) for exps, terms in grouped.items()}

    def map_coefficients(self, func) -> "MultiSeries":
        """Apply `func` to every coefficient."""
        return make_series(self.blocks, {k: func(v) for k, v in self.terms.items()})

    # Serialization

    def to_json(self) -> dict:
        """JSON form with deterministic term order."""
        return {
            "blocks": [[name, cap] for name, cap in self.blocks],
            "terms": [
                {
                    "exps": {block: [[k, a] for k, a in exps] for block, exps in key},
                    "coeff": coeff_to_json(value),
                }
                for key, value in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MultiSeries":
        """Inverse of `to_json` (also accepts the single-block form of `GradedSeries`)."""
        try:
            if "block" in data:
                return GradedSeries.from_json(data)
            blocks = [(str(n), int(c)) for n, c in data["blocks"]]
            terms = {}
            for term in data["terms"]:
                key = make_key(
                    {b: {int(k): int(a) for k, a in exps} for b, exps in term["exps"].items()}
                )
                terms[key] = coeff_from_json(term["coeff"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"Malformed series JSON: {exc}") from exc
        return make_series(blocks, terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for key, value in self.items():
            text = key_to_str(key)
            if key == ONE_KEY:
                pieces.append(f"({value})" if isinstance(value, Scalar) else str(value))
            elif value == 1:
                pieces.append(text)
            else:
                shown = f"({value})" if isinstance(value, Scalar) or value < 0 else str(value)
                pieces.append(f"{shown}*{text}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.blocks!r}: {self})"


class GradedSeries(MultiSeries):
    """
    Truncated series in a single block t = (t_1, t_2, ...).

    Properties:
        block (str): The block name.
        cap (int): Maximal degree kept.
    """
    __slots__ = ()

    @classmethod
    def from_exps(
        cls, block: str, cap: int, terms: Mapping[Exps, Coeff] | Iterable[tuple[Exps, Coeff]]
    ) -> "GradedSeries":
        """Build from exps -> coefficient."""
        if isinstance(terms, Mapping):
            terms = terms.items()
        return cls(((block, cap),), {((block, e),) if e else ONE_KEY: c for e, c in terms})

    @property
    def block(self) -> str:
        """Name of the only block."""
        return self.blocks[0][0]

    @property
    def cap(self) -> int:  # type: ignore[override]
        return self.blocks[0][1]

    def exps_items(self) -> list[tuple[Exps, Coeff]]:
        """(exps, coefficient) pairs in canonical order."""
        return [(key[0][1] if key else (), value) for key, value in self.items()]

    def to_json(self) -> dict:
        return {
            "block": self.block,
            "cap": self.cap,
            "terms": [
                {"exps": [[k, a] for k, a in exps], "coeff": coeff_to_json(value)}
                for exps, value in self.exps_items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "GradedSeries":
        try:
            return cls.from_exps(
                str(data["block"]),
                int(data["cap"]),
                {
                    exps_from_mapping({int(k): int(a) for k, a in t["exps"]}):
                        coeff_from_json(t["coeff"])
                    for t in data["terms"]
                },
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"Malformed series JSON: {exc}") from exc


def make_series(
    blocks: Iterable[tuple[str, int]] | Mapping[str, int], terms: Mapping[Key, Coeff]
) -> MultiSeries:
    """A `GradedSeries` when exactly one block is declared, a `MultiSeries` otherwise."""
    normalized = _normalize_blocks(blocks)
    if len(normalized) == 1:
        return GradedSeries(normalized, terms)
    return MultiSeries(normalized, terms)


def binomial_shift(exps: Exps) -> Iterator[tuple[Exps, Exps, int]]:
    """Expand t^exps with t -> t + s: yields (exps of t, exps of s, binomial weight)."""
    splits = [[(k, a - b, b, comb(a, b)) for b in range(a + 1)] for k, a in exps]
    for choice in product(*splits):
        kept = tuple((k, rest) for k, rest, _, _ in choice if rest)
        moved = tuple((k, b) for k, _, b, _ in choice if b)
        yield kept, moved, prod(w for _, _, _, w in choice)
