"""
Chain matrix models.

A plan is a path of matrix nodes with pairwise couplings between neighbours,

    exp(s Tr A B)                                  (exp_trace)
    1 / det(I x I - A x B) = exp(sum_k Tr A^k Tr B^k / k)     (inverse_det)

and blocks of times attached to single matrices through exp(sum_k c t_k Tr A^k).
A unitary pair node holds two Haar matrices U, U~ with the internal weight exp(N Tr U U~^dagger).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Mapping, TYPE_CHECKING

if TYPE_CHECKING:  # typing.Self needs Python 3.11+
    from typing import Self

from src.errors import DomainError, UnsupportedError
from src.partitions import Partition
from src.symfunc import Coeff, as_coeff, coeff_from_json, coeff_to_json
from src.tau.nested_spec import NestedSpec, Sign
from src.weights import WeightGen
from .moments import DAGGER_SUFFIX, Ensemble, Letter, parse_letter

PAIR_SUFFIX = "~"


class NodeKind(Enum):
    """Kinds of matrix integrals in a chain."""
    COMPLEX = "complex"
    UNITARY_PAIR = "unitary_pair"
    UNITARY = "unitary"
    NORMAL = "normal"

    @classmethod
    def from_char(cls, name: str) -> "NodeKind":
        """Parse a node kind name."""
        try:
            return cls(name)
        except ValueError as exc:
            raise ValueError(f"Unknown node kind {name!r}") from exc


class CouplingKind(Enum):
    """Pairwise interactions between neighbouring matrices."""
    EXP_TRACE = "exp_trace"
    INVERSE_DET = "inverse_det"

    @classmethod
    def from_char(cls, name: str) -> "CouplingKind":
        """Parse a coupling kind name."""
        try:
            return cls(name)
        except ValueError as exc:
            raise ValueError(f"Unknown coupling kind {name!r}") from exc


@dataclass(frozen=True)
class ChainNode:
    """
    One matrix integral of the chain.

    Attributes:
        name (str): Instance name of the matrix; a unitary pair also owns `name~`.
        kind (NodeKind): The integral.
        size (int): N.
    """
    name: str
    kind: NodeKind
    size: int

    def __post_init__(self):
        kind = self.kind if isinstance(self.kind, NodeKind) else NodeKind.from_char(self.kind)
        object.__setattr__(self, "kind", kind)
        if self.size < 1:
            raise ValueError(f"Node {self.name!r} needs a positive size, got {self.size}")
        if not self.name or self.name.endswith(DAGGER_SUFFIX) or PAIR_SUFFIX in self.name:
            raise ValueError(
                f"Node name {self.name!r} must be non-empty, without {PAIR_SUFFIX!r} "
                f"and not ending in {DAGGER_SUFFIX!r}"
            )

    @property
    def instances(self) -> tuple[str, ...]:
        if self.kind is NodeKind.UNITARY_PAIR:
            return self.name, self.name + PAIR_SUFFIX
        return (self.name,)

    @property
    def partner(self) -> Letter:
        """U~ of a unitary pair."""
        return Letter(self.name + PAIR_SUFFIX)

    def internal_couplings(self) -> tuple["Coupling", ...]:
        if self.kind is NodeKind.UNITARY_PAIR:
            return (Coupling(CouplingKind.EXP_TRACE, Letter(self.name), self.partner.conjugate, self.size),)
        return ()

    def __str__(self) -> str:
        return f"{self.name} {self.kind.value} N={self.size}"


@dataclass(frozen=True)
class Coupling:
    """exp(strength Tr left right) or 1 / det(I x I - left x right)."""
    kind: CouplingKind
    left: Letter
    right: Letter
    strength: Coeff = Fraction(1)

    def __post_init__(self):
        kind = self.kind if isinstance(self.kind, CouplingKind) else CouplingKind.from_char(self.kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "strength", as_coeff(self.strength))
        if kind is CouplingKind.INVERSE_DET and self.strength != 1:
            raise ValueError("An inverse determinant coupling carries no strength")

    def __str__(self) -> str:
        if self.kind is CouplingKind.EXP_TRACE:
            return f"exp({self.strength} Tr {self.left} {self.right})"
        return f"1/det(I - {self.left} x {self.right})"


@dataclass(frozen=True)
class Attachment:
    """The block `block` enters as exp(sum_k scale t_k Tr letter^k)."""
    block: str
    letter: Letter
    scale: Coeff = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "scale", as_coeff(self.scale))

    def __str__(self) -> str:
        factor = "" if self.scale == 1 else f"{self.scale} "
        return f"{self.block} -> {factor}Tr {self.letter}^k"


@dataclass(frozen=True)
class SchurInsertion:
    """A factor s_partition(letter) in the integrand."""
    partition: Partition
    letter: Letter

    def __str__(self) -> str:
        return f"s_{self.partition}({self.letter})"


def _block_index(block: str) -> int:
    if not block.startswith("t") or not block[1:].isdigit():
        raise ValueError(f"Block name {block!r} is not of the form t<j>")
    return int(block[1:])


@dataclass(frozen=True)
class MatrixChainPlan:
    """
    A chain of matrix integrals with pairwise couplings.

    Attributes:
        nodes (tuple[ChainNode, ...]): The chain, end to end.
        couplings (tuple[Coupling, ...]): Couplings between neighbours; the internal weight
            of unitary pairs is implied.
        attachments (tuple[Attachment, ...]): Where the blocks of times enter.
        insertion (SchurInsertion | None): Optional Schur function of one matrix.

    Raises:
        ValueError: Duplicate names, unknown letters, couplings between non-neighbours or
            the lowest and highest blocks attached away from the ends of the chain.
    """
    nodes: tuple[ChainNode, ...]
    couplings: tuple[Coupling, ...] = field(default=())
    attachments: tuple[Attachment, ...] = field(default=())
    insertion: SchurInsertion | None = None

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "couplings", tuple(self.couplings))
        object.__setattr__(self, "attachments", tuple(self.attachments))
        if not self.nodes:
            raise ValueError("A chain needs at least one node")
        owner: dict[str, int] = {}
        for position, node in enumerate(self.nodes):
            for instance in node.instances:
                if instance in owner:
                    raise ValueError(f"Duplicate matrix {instance!r}")
                owner[instance] = position
        object.__setattr__(self, "_owner", owner)

        for coupling in self.couplings:
            left, right = self.position(coupling.left), self.position(coupling.right)
            if abs(left - right) != 1:
                raise ValueError(f"Coupling {coupling} does not join neighbouring nodes")
        seen = set()
        for attachment in self.attachments:
            self.position(attachment.letter)
            if attachment.block in seen:
                raise ValueError(f"Block {attachment.block} is attached twice")
            seen.add(attachment.block)
        if self.attachments:
            ordered = sorted(self.attachments, key=lambda a: _block_index(a.block))
            ends = {0, len(self.nodes) - 1}
            for boundary in (ordered[0], ordered[-1]):
                if self.position(boundary.letter) not in ends:
                    raise ValueError(f"Boundary block {boundary.block} is not attached at an end")
        if self.insertion is not None:
            self.position(self.insertion.letter)

    def position(self, letter: Letter) -> int:
        """Index of the node owning a letter."""
        try:
            return self._owner[letter.instance]
        except KeyError as exc:
            raise ValueError(f"Letter {letter} belongs to no node of the chain") from exc

    @property
    def all_couplings(self) -> tuple[Coupling, ...]:
        """Internal pair weights followed by the explicit couplings."""
        internal = tuple(c for node in self.nodes for c in node.internal_couplings())
        return internal + self.couplings

    def attachment(self, block: str) -> Attachment:
        """
        The attachment of a block.

        Raises:
            DomainError: The block is not attached.
        """
        for attachment in self.attachments:
            if attachment.block == block:
                return attachment
        raise DomainError(f"Block {block} is not attached to the chain")

    def ensembles(self) -> dict[str, tuple[Ensemble, int]]:
        """
        instance -> (ensemble, N) for the moment oracle.

        Raises:
            UnsupportedError: The chain holds a normal matrix node.
        """
        result = {}
        for node in self.nodes:
            if node.kind is NodeKind.NORMAL:
                raise UnsupportedError(f"Normal matrix node {node.name!r} has no moment oracle")
            ensemble = Ensemble.COMPLEX if node.kind is NodeKind.COMPLEX else Ensemble.UNITARY
            for instance in node.instances:
                result[instance] = (ensemble, node.size)
        return result

    def with_insertion(self, partition: Partition, letter: Letter) -> "MatrixChainPlan":
        """Same chain with a Schur insertion."""
        return MatrixChainPlan(self.nodes, self.couplings, self.attachments, SchurInsertion(partition, letter))

    def pretty(self) -> str:
        """Human readable chain."""
        lines = ["nodes:"]
        lines += [f"  {node}" for node in self.nodes]
        if self.all_couplings:
            lines.append("couplings:")
            lines += [f"  {coupling}" for coupling in self.all_couplings]
        if self.attachments:
            lines.append("boundary:")
            lines += [f"  {attachment}" for attachment in self.attachments]
        if self.insertion is not None:
            lines.append(f"insertion: {self.insertion}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "nodes": [{"name": n.name, "kind": n.kind.value, "size": n.size} for n in self.nodes],
            "couplings": [
                {"kind": c.kind.value, "left": str(c.left), "right": str(c.right),
                 "strength": coeff_to_json(c.strength)}
                for c in self.couplings
            ],
            "attachments": [
                {"block": a.block, "letter": str(a.letter), "scale": coeff_to_json(a.scale)}
                for a in self.attachments
            ],
            "insertion": None if self.insertion is None else {
                "partition": self.insertion.partition.to_json(),
                "letter": str(self.insertion.letter),
            },
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> Self:
        """
        Read a plan from its JSON form.

        Raises:
            ValueError: Missing fields or an invalid chain.
        """
        try:
            insertion = data.get("insertion")
            return cls(
                nodes=tuple(
                    ChainNode(n["name"], NodeKind.from_char(n["kind"]), int(n["size"]))
                    for n in data["nodes"]
                ),
                couplings=tuple(
                    Coupling(
                        CouplingKind.from_char(c["kind"]), parse_letter(c["left"]),
                        parse_letter(c["right"]), coeff_from_json(c.get("strength", "1")),
                    )
                    for c in data.get("couplings", [])
                ),
                attachments=tuple(
                    Attachment(a["block"], parse_letter(a["letter"]), coeff_from_json(a.get("scale", "1")))
                    for a in data.get("attachments", [])
                ),
                insertion=None if insertion is None else SchurInsertion(
                    Partition.from_json(insertion["partition"]), parse_letter(insertion["letter"])
                ),
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"Invalid chain plan: {exc}") from exc

    def __str__(self) -> str:
        return json.dumps(self.to_json())


# Builders


def simpfs_plan(size: int, scale: Coeff | None = None) -> MatrixChainPlan:
    """
    Haar U coupled to a complex Z by exp(N Tr U^dagger Z):

        t_2 -> Tr U^k,  t_1 -> N Tr Z^k,  t_0 -> N Tr Z^dagger^k

    The m = 1 chain with O_1 = O_+(1/N)^-1, O_0 = O_+(1/N) and t_1, t_0 scaled by N.
    """
    scale = Fraction(size) if scale is None else as_coeff(scale)
    u, z = Letter("U"), Letter("Z")
    return MatrixChainPlan(
        nodes=(ChainNode("U", NodeKind.UNITARY, size), ChainNode("Z", NodeKind.COMPLEX, size)),
        couplings=(Coupling(CouplingKind.EXP_TRACE, u.conjugate, z, size),),
        attachments=(
            Attachment("t2", u), Attachment("t1", z, scale), Attachment("t0", z.conjugate, scale),
        ),
    )


def chain3_plan(n1: int, n2: int | None = None, n3: int | None = None) -> MatrixChainPlan:
    """
    Complex Z_3 and unitary pairs U_2, U_1 joined by inverse determinants, the m = 0 chain of

        G(z) = (1 + z / N_3) / ((1 + z / N_1)(1 + z / N_2))
    """
    n2 = n1 if n2 is None else n2
    n3 = n1 if n3 is None else n3
    z3, u2, u1 = (
        ChainNode("Z3", NodeKind.COMPLEX, n3),
        ChainNode("U2", NodeKind.UNITARY_PAIR, n2),
        ChainNode("U1", NodeKind.UNITARY_PAIR, n1),
    )
    return MatrixChainPlan(
        nodes=(z3, u2, u1),
        couplings=(
            Coupling(CouplingKind.INVERSE_DET, Letter("Z3", True), u2.partner),
            Coupling(CouplingKind.INVERSE_DET, Letter("U2", True), u1.partner),
        ),
        attachments=(Attachment("t1", Letter("Z3")), Attachment("t0", Letter("U1", True))),
    )


def _plus_chain(sizes: Mapping[int, int], scales: Mapping[int, Coeff]) -> MatrixChainPlan:
    """Pairs (U_i, Z_i), i = m..1, for the all-plus chain with O_+(1/N_i) conjugations."""
    m = len(sizes)
    nodes, couplings, attachments = [], [], []
    for i in range(m, 0, -1):
        u, z = Letter(f"U{i}"), Letter(f"Z{i}")
        nodes += [ChainNode(u.instance, NodeKind.UNITARY, sizes[i]), ChainNode(z.instance, NodeKind.COMPLEX, sizes[i])]
        if i < m:
            couplings.append(Coupling(CouplingKind.INVERSE_DET, u, Letter(f"Z{i + 1}", True)))
        couplings.append(Coupling(CouplingKind.EXP_TRACE, u.conjugate, z, sizes[i]))
        attachments.append(Attachment(f"t{i}", z, scales.get(i, 1)))
    attachments.insert(0, Attachment(f"t{m + 1}", Letter(f"U{m}"), scales.get(m + 1, 1)))
    attachments.append(Attachment("t0", Letter("Z1", True), scales.get(0, 1)))
    return MatrixChainPlan(tuple(nodes), tuple(couplings), tuple(attachments))


def dvapl_plan(n1: int, n2: int | None = None) -> MatrixChainPlan:
    """
    Two unitary-complex pairs, (U_2, Z_2) and (U_1, Z_1), joined by 1 / det(I - U_1 x Z_2^dagger):
    the m = 2 all-plus chain with O_0 = O_+(1/N_1), O_1 = O_+(1/N_2) O_+(1/N_1)^-1, O_2 = O_+(1/N_2)^-1.
    """
    n2 = n1 if n2 is None else n2
    return _plus_chain({1: n1, 2: n2}, {})


def _size_of(value: Coeff) -> int:
    if isinstance(value, Fraction) and value > 0 and value.numerator == 1:
        return value.denominator
    raise UnsupportedError(f"Weight parameter {value} is not 1/N for a positive integer N")


def _hypergeometric_plan(spec: NestedSpec, size: int) -> MatrixChainPlan:
    weight = spec.weight(0)
    nodes: list[ChainNode] = []
    ports: list[tuple[Letter, Letter]] = []
    for index, u in enumerate(weight.u, start=1):
        node = ChainNode(f"Z{index}", NodeKind.COMPLEX, _size_of(u))
        nodes.append(node)
        ports.append((Letter(node.name), Letter(node.name, True)))
    for index, v in enumerate(weight.v, start=1):
        node = ChainNode(f"U{index}", NodeKind.UNITARY_PAIR, _size_of(v))
        nodes.append(node)
        ports.append((node.partner, Letter(node.name, True)))
    if weight.w:
        node = ChainNode("M", NodeKind.NORMAL, size)
        nodes.append(node)
        ports.append((Letter(node.name), Letter(node.name, True)))
    if not nodes:
        raise UnsupportedError("The trivial weight has no matrix model")
    couplings = tuple(
        Coupling(CouplingKind.INVERSE_DET, ports[i][1], ports[i + 1][0]) for i in range(len(nodes) - 1)
    )
    attachments = (
        Attachment("t1", ports[0][0], spec.scale(1) or 1),
        Attachment("t0", ports[-1][1], spec.scale(0) or 1),
    )
    return MatrixChainPlan(tuple(nodes), couplings, attachments)


def _plus_chain_sizes(spec: NestedSpec) -> dict[int, int]:
    m = spec.m
    if any(spec.sign(i) is not Sign.PLUS for i in range(1, m + 1)):
        raise UnsupportedError("Only all-plus nested chains have a matrix model builder")
    top = spec.weight(m)
    if top.u or top.w or len(top.v) != 1:
        raise UnsupportedError(f"O_{m} = {top} is not O_+(1/N)^-1")
    sizes = {m: _size_of(top.v[0])}
    for j in range(m - 1, 0, -1):
        rest = spec.weight(j) * WeightGen.g_plus(Fraction(1, sizes[j + 1])).inverse()
        if rest.is_trivial():
            sizes[j] = sizes[j + 1]
        elif not rest.u and not rest.w and len(rest.v) == 1:
            sizes[j] = _size_of(rest.v[0])
        else:
            raise UnsupportedError(f"O_{j} = {spec.weight(j)} is not O_+(1/N') O_+(1/N)^-1")
    if not (spec.weight(0) * WeightGen.g_plus(Fraction(1, sizes[1])).inverse()).is_trivial():
        raise UnsupportedError(f"O_0 = {spec.weight(0)} is not O_+(1/N_1)")
    return sizes


def plan_from_spec(spec: NestedSpec, size: int = 1) -> MatrixChainPlan:
    """
    The chain matrix model of a spec.

    m = 0 weights prod (1 + z/N_i) / prod (1 + z/M_j) become complex nodes and unitary pairs
    joined by inverse determinants; an exponential factor adds a normal node of size `size`.
    For m >= 1 the all-plus chains with O_+(1/N_i) conjugations are supported. Block scales
    become attachment scales.

    Raises:
        UnsupportedError: Non-zero charge, insertions, specialized blocks or weights outside
            the families above.
    """
    if spec.n != 0:
        raise UnsupportedError("Matrix models describe the charge 0 tau-function only")
    if spec.insertions or spec.loci:
        raise UnsupportedError("Insertions and specialized blocks have no matrix model builder")
    if spec.m == 0:
        return _hypergeometric_plan(spec, size)
    scales = {j: c for j, c in spec.scales}
    return _plus_chain(_plus_chain_sizes(spec), scales)
