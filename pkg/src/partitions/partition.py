"""
This module defines the `Partition` class, an integer partition seen as a Young diagram,
together with the diagram geometry the rest of TauForge relies on.

Classes:
    Partition: Weakly decreasing tuple of positive integers with tuple-like behavior.
    FrobeniusCoords: The (alpha | beta) coordinates of a partition and b(lambda).

Functions:
    contains, transpose, frobenius, content_sum, z_centralizer
"""
from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from math import factorial, prod
from typing import ClassVar, TYPE_CHECKING

if TYPE_CHECKING:  # typing.Self needs Python 3.11+
    from typing import Self


@dataclass(frozen=True)
class Partition(Sequence[int]):
    """
    Represents an integer partition, acts like `tuple[int, ...]`.

    Trailing zeros are stripped on construction; any other non-positive or increasing
    entry raises `ValueError`.

    Attributes:
        parts (tuple[int, ...]): The rows of the Young diagram, longest first.

    Properties:
        size (int): |lambda|, the number of cells.
        length (int): l(lambda), the number of rows.

    Methods:
        part(i): The i-th row (0-indexed), 0 past the last row.
        cells(): Iterate over (row, column) cells, 0-indexed.
        contents(n): Iterate over the shifted contents n + j - i.
        multiplicities(): Map part -> multiplicity.
        beta_numbers(length): The beta-set lambda_i - i + length.
        sort_key(): Key of the enumeration order (size, then reverse-lex).
    """
    parts: tuple[int, ...] = ()
    EMPTY: ClassVar["Partition"]

    def __post_init__(self):
        raw = tuple(int(p) for p in self.parts)
        while raw and raw[-1] == 0:
            raw = raw[:-1]
        if any(p <= 0 for p in raw):
            raise ValueError(f"Partition parts must be positive: {self.parts!r}")
        if any(raw[i] < raw[i + 1] for i in range(len(raw) - 1)):
            raise ValueError(f"Partition parts must be weakly decreasing: {self.parts!r}")
        object.__setattr__(self, "parts", raw)

    @classmethod
    def of(cls, *parts: int) -> Self:
        """Build a partition from its parts given as arguments."""
        return cls(tuple(parts))

    @classmethod
    def from_json(cls, data: Iterable[int]) -> Self:
        """Read a JSON array of integers, e.g. `[3, 1]`."""
        if isinstance(data, (str, bytes)) or not isinstance(data, Iterable):
            raise ValueError(f"Partition JSON must be an array of integers, got {data!r}")
        values = list(data)
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in values):
            raise ValueError(f"Partition JSON must be an array of integers, got {data!r}")
        return cls(tuple(values))

    @classmethod
    def from_beta_numbers(cls, betas: Iterable[int]) -> Self:
        """Inverse of `beta_numbers`: distinct non-negative integers to a partition."""
        ordered = sorted(betas, reverse=True)
        if len(set(ordered)) != len(ordered) or (ordered and ordered[-1] < 0):
            raise ValueError(f"Beta numbers must be distinct and non-negative: {ordered!r}")
        length = len(ordered)
        return cls(tuple(b - (length - 1 - i) for i, b in enumerate(ordered)))

    def to_json(self) -> list[int]:
        """Serialize as a JSON array, `[]` for the empty partition."""
        return list(self.parts)

    @property
    def size(self) -> int:
        """|lambda|"""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """l(lambda)"""
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th row, 0-indexed, reading missing rows as 0."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def cells(self) -> Iterator[tuple[int, int]]:
        """Iterate over cells (row, column), 0-indexed, row by row."""
        for i, row in enumerate(self.parts):
            for j in range(row):
                yield (i, j)

    def contents(self, n: int = 0) -> Iterator[int]:
        """Iterate over n + j - i for every cell."""
        for i, j in self.cells():
            yield n + j - i

    def multiplicities(self) -> dict[int, int]:
        """Map each distinct part to its multiplicity."""
        return dict(Counter(self.parts))

    def beta_numbers(self, length: int | None = None) -> tuple[int, ...]:
        """The beta-set {lambda_i - i + length}, strictly decreasing."""
        length = self.length if length is None else length
        if length < self.length:
            raise ValueError(f"Beta-set length {length} shorter than {self}")
        return tuple(self.part(i) - i - 1 + length for i in range(length))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """(size, reverse-lex) key of the enumeration order."""
        return (self.size, tuple(-p for p in self.parts))

    def __lt__(self, other: "Partition") -> bool:
        return self.sort_key() < other.sort_key()

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __len__(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __repr__(self) -> str:
        return f"Partition{self.parts!r}"


Partition.EMPTY = Partition(())


@dataclass(frozen=True)
class FrobeniusCoords:
    """
    Frobenius coordinates (alpha | beta) of a partition.

    Attributes:
        alpha (tuple[int, ...]): lambda_i - i over the diagonal, strictly decreasing.
        beta (tuple[int, ...]): lambda'_i - i over the diagonal, strictly decreasing.
        b (int): sum of (beta_i + 1).
    """
    alpha: tuple[int, ...] = field(default=())
    beta: tuple[int, ...] = field(default=())

    @property
    def b(self) -> int:
        """b(lambda)"""
        return sum(x + 1 for x in self.beta)

    @property
    def rank(self) -> int:
        """d(lambda), the number of diagonal cells."""
        return len(self.alpha)


def contains(lam: Partition, mu: Partition) -> bool:
    """True iff mu is a subdiagram of lam (mu_i <= lam_i for all i)."""
    if mu.length > lam.length:
        return False
    return all(m <= lam.part(i) for i, m in enumerate(mu.parts))


def transpose(lam: Partition) -> Partition:
    """The conjugate partition (column lengths)."""
    if not lam:
        return Partition.EMPTY
    return Partition(tuple(sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0])))


def frobenius(lam: Partition) -> FrobeniusCoords:
    """Frobenius coordinates of a partition."""
    conj = transpose(lam)
    rank = sum(1 for i, p in enumerate(lam.parts) if p > i)
    return FrobeniusCoords(
        alpha=tuple(lam.parts[i] - i - 1 for i in range(rank)),
        beta=tuple(conj.parts[i] - i - 1 for i in range(rank)),
    )


def content_sum(lam: Partition, n: int = 0) -> int:
    """Sum of n + j - i over the cells of lam."""
    return sum(lam.contents(n))


def z_centralizer(mu: Partition) -> int:
    """z_mu = prod k^{m_k} m_k!"""
    return prod(k ** m * factorial(m) for k, m in mu.multiplicities().items())


def dimension(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    conj = transpose(lam)
    hooks = prod(lam.part(i) - j + conj.part(j) - i - 1 for i, j in lam.cells())
    return factorial(lam.size) // hooks
