"""
Linear operators on truncated symmetric functions, stored as Schur-basis matrices.

An operator on block t with cap D is a sparse matrix M with s_lam -> sum_mu M[mu, lam] s_mu
over |lam|, |mu| <= D, homogeneous of a fixed degree shift d (M[mu, lam] = 0 unless
|mu| = |lam| + d). Products of two operators are exact whenever their degree shifts do not
have opposite signs; otherwise shapes above the cap are lost in between.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from src.errors import DomainError
from src.partitions import Partition, enumerate_partitions
from src.symfunc import (
    Coeff, MultiSeries, as_coeff, coeff_to_json, exp_nilpotent, inverse, is_zero,
    schur, schur_components, assemble_from_components, to_schur_basis
)

Components = dict[Partition, MultiSeries]


@dataclass(frozen=True, eq=False)
class LinearOperator:
    """
    A Schur-basis operator on one block of times.

    Attributes:
        block (str): The block the operator acts on.
        cap (int): Degree cap of the block.
        matrix (Mapping[tuple[Partition, Partition], Coeff]): (mu, lam) -> M[mu, lam].
        degree_shift (int): |mu| - |lam| for every non-zero entry.
    """
    block: str
    cap: int
    matrix: Mapping[tuple[Partition, Partition], Coeff] = field(default_factory=dict)
    degree_shift: int = 0

    def __post_init__(self):
        clean = {}
        for (mu, lam), value in self.matrix.items():
            value = as_coeff(value)
            if is_zero(value):
                continue
            if mu.size > self.cap or lam.size > self.cap:
                continue
            if mu.size != lam.size + self.degree_shift:
                raise ValueError(
                    f"Entry ({mu}, {lam}) breaks the degree shift {self.degree_shift}"
                )
            clean[(mu, lam)] = value
        object.__setattr__(self, "matrix", clean)
        columns: dict[Partition, list[tuple[Partition, Coeff]]] = {}
        for (mu, lam), value in sorted(
            clean.items(), key=lambda item: (item[0][1].sort_key(), item[0][0].sort_key())
        ):
            columns.setdefault(lam, []).append((mu, value))
        object.__setattr__(self, "_columns", columns)

    # Constructors

    @classmethod
    def identity(cls, block: str, cap: int) -> "LinearOperator":
        """The Kronecker matrix."""
        return cls.diagonal(block, cap, lambda lam: Fraction(1))

    @classmethod
    def diagonal(cls, block: str, cap: int, eigenvalue: Callable[[Partition], Coeff]) -> "LinearOperator":
        """s_lam -> eigenvalue(lam) s_lam for |lam| <= cap."""
        return cls(block, cap, {(lam, lam): eigenvalue(lam) for lam in enumerate_partitions(cap)})

    @classmethod
    def from_series_map(
        cls,
        func: Callable[[MultiSeries], MultiSeries],
        block: str,
        cap: int,
        degree_shift: int = 0,
    ) -> "LinearOperator":
        """Matrix of a map on single-block series, read off Schur function by Schur function."""
        matrix = {}
        for lam in enumerate_partitions(cap):
            image = func(schur(lam, block, cap))
            for mu, value in to_schur_basis(image.with_blocks(((block, cap),))).items():
                matrix[(mu, lam)] = value
        return cls(block, cap, matrix, degree_shift)

    # Queries

    def entry(self, mu: Partition, lam: Partition) -> Coeff:
        """M[mu, lam]"""
        return self.matrix.get((mu, lam), Fraction(0))

    def column(self, lam: Partition) -> list[tuple[Partition, Coeff]]:
        """(mu, M[mu, lam]) pairs in enumeration order."""
        return self._columns.get(lam, [])

    def is_diagonal(self) -> bool:
        """True when every entry sits on the diagonal."""
        return all(mu == lam for mu, lam in self.matrix)

    def is_zero(self) -> bool:
        return not self.matrix

    def eigenvalue(self, lam: Partition) -> Coeff:
        """Diagonal entry at lam."""
        return self.entry(lam, lam)

    # Action

    def apply_components(self, components: Mapping[Partition, MultiSeries]) -> Components:
        """Act on {lam: coefficient series}, the Schur decomposition along `block`."""
        result: Components = {}
        for lam, component in components.items():
            for mu, value in self.column(lam):
                piece = component.scaled(value)
                result[mu] = result[mu] + piece if mu in result else piece
        return {
            mu: result[mu] for mu in sorted(result, key=Partition.sort_key)
            if not result[mu].is_zero()
        }

    def apply(self, series: MultiSeries) -> MultiSeries:
        """Act on a series in which `block` is one of the blocks."""
        if self.block not in series.caps:
            raise DomainError(f"Series has no block {self.block!r}")
        if series.cap_of(self.block) > self.cap:
            raise DomainError(
                f"Series cap {series.cap_of(self.block)} on {self.block!r} exceeds operator cap {self.cap}"
            )
        components = self.apply_components(schur_components(series, self.block))
        result = assemble_from_components(components, self.block, series.cap_of(self.block))
        return result.with_blocks(series.blocks)

    __call__ = apply

    # Algebra

    def _check_compatible(self, other: "LinearOperator") -> None:
        if self.block != other.block or self.cap != other.cap:
            raise DomainError(
                f"Operators act on ({self.block}, {self.cap}) and ({other.block}, {other.cap})"
            )

    def compose(self, other: "LinearOperator") -> "LinearOperator":
        """self after other."""
        self._check_compatible(other)
        matrix: dict[tuple[Partition, Partition], Coeff] = {}
        for (nu, lam), right in other.matrix.items():
            for mu, left in self.column(nu):
                key = (mu, lam)
                matrix[key] = matrix[key] + left * right if key in matrix else left * right
        return LinearOperator(self.block, self.cap, matrix, self.degree_shift + other.degree_shift)

    __matmul__ = compose

    def scaled(self, factor: Coeff) -> "LinearOperator":
        factor = as_coeff(factor)
        return LinearOperator(
            self.block, self.cap, {k: v * factor for k, v in self.matrix.items()}, self.degree_shift
        )

    def plus(self, other: "LinearOperator") -> "LinearOperator":
        """Sum of two operators with the same degree shift."""
        self._check_compatible(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree_shift != other.degree_shift:
            raise DomainError(
                f"Cannot add degree shifts {self.degree_shift} and {other.degree_shift}"
            )
        matrix = dict(self.matrix)
        for key, value in other.matrix.items():
            matrix[key] = matrix[key] + value if key in matrix else value
        return LinearOperator(self.block, self.cap, matrix, self.degree_shift)

    __add__ = plus

    def __sub__(self, other: "LinearOperator") -> "LinearOperator":
        return self.plus(other.scaled(-1))

    def commutator(self, other: "LinearOperator") -> "LinearOperator":
        """[self, other]"""
        return (self @ other) - (other @ self)

    def inverse(self) -> "LinearOperator":
        """
        Inverse of a diagonal operator.

        Raises:
            DomainError: The operator is not diagonal or has a zero eigenvalue.
        """
        if not self.is_diagonal():
            raise DomainError("Only diagonal operators are inverted")
        matrix = {}
        for lam in enumerate_partitions(self.cap):
            value = self.eigenvalue(lam)
            try:
                matrix[(lam, lam)] = inverse(value)
            except ZeroDivisionError as exc:
                raise DomainError(f"Zero eigenvalue on s_{lam}, operator is not invertible") from exc
        return LinearOperator(self.block, self.cap, matrix, 0)

    def exp_nilpotent(self) -> "LinearOperator":
        """
        exp of a diagonal operator whose eigenvalues are nilpotent parameters.

        Raises:
            DomainError: The operator is not diagonal or an eigenvalue has a constant part.
        """
        if not self.is_diagonal():
            raise DomainError("Only diagonal operators are exponentiated entrywise")
        try:
            return LinearOperator.diagonal(
                self.block, self.cap, lambda lam: exp_nilpotent(self.eigenvalue(lam))
            )
        except ValueError as exc:
            raise DomainError(f"Operator exponential is not exact: {exc}") from exc

    def __eq__(self, other):
        if not isinstance(other, LinearOperator):
            return NotImplemented
        return (
            self.block == other.block and self.cap == other.cap
            and (self.matrix == other.matrix)
            and (self.is_zero() or self.degree_shift == other.degree_shift)
        )

    def to_json(self) -> dict:
        """Sparse matrix keyed by partition pairs, in enumeration order."""
        return {
            "block": self.block,
            "cap": self.cap,
            "degree_shift": self.degree_shift,
            "entries": [
                {"row": mu.to_json(), "col": lam.to_json(), "value": coeff_to_json(value)}
                for lam in enumerate_partitions(self.cap)
                for mu, value in self.column(lam)
            ],
        }


def commute_pairwise(operators: Iterable[LinearOperator]) -> bool:
    """True when every pair commutes on the Schur basis up to the cap."""
    ops = list(operators)
    return all(
        ops[i].commutator(ops[j]).is_zero()
        for i in range(len(ops)) for j in range(i + 1, len(ops))
    )
