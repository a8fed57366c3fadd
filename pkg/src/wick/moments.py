"""
Exact moments of Gaussian and Haar random matrices at entry level.

Every trace Tr(A_1 ... A_k) is written as sum over indices i_1..i_k of
A_1[i_1, i_2] ... A_k[i_k, i_1]. The expectation of a product of random entries is a sum
over pairings (Wick) or permutation pairs (Weingarten); each term imposes index equalities,
and the number of index assignments satisfying them is counted with a union-find pass.

    Hermitian:  <X_ij X_kl> = d_il d_jk / N          measure exp(-N Tr X^2 / 2)
    Complex:    <Z_ij Zd_kl> = d_il d_jk / N         measure exp(-N Tr Z Zd)
    Unitary:    <U_i1j1 .. U_injn conj(U_i'1j'1 .. U_i'nj'n)>
                  = sum_{s,t} prod d(i_k, i'_s(k)) d(j_k, j'_t(k)) Wg(s t^-1, N)
"""
import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np
import sympy

from src.errors import DomainError
from src.partitions import Partition, partitions_of, sym_character, z_centralizer
from src.symfunc import Coeff, as_coeff
from .weingarten import weingarten_of_pair

logger = logging.getLogger(__name__)

DAGGER_SUFFIX = "d"


class Ensemble(Enum):
    """Random matrix ensembles with an exact oracle."""
    HERMITIAN = "hermitian"
    COMPLEX = "complex"
    UNITARY = "unitary"

    @classmethod
    def from_char(cls, name: str) -> "Ensemble":
        """Parse an ensemble name."""
        try:
            return cls(name)
        except ValueError as exc:
            raise DomainError(f"Unknown ensemble {name!r}") from exc


@dataclass(frozen=True)
class Letter:
    """One random matrix (or its conjugate transpose) of a named instance."""
    instance: str
    dagger: bool = False

    @property
    def conjugate(self) -> "Letter":
        return Letter(self.instance, not self.dagger)

    def __str__(self) -> str:
        return self.instance + (DAGGER_SUFFIX if self.dagger else "")


@dataclass(frozen=True)
class DiagonalLetter:
    """A constant diagonal matrix, e.g. the eigenvalues of a Miwa point."""
    eigenvalues: tuple[Coeff, ...]

    def __post_init__(self):
        if not self.eigenvalues:
            raise ValueError("A diagonal letter needs at least one eigenvalue")
        object.__setattr__(self, "eigenvalues", tuple(as_coeff(x) for x in self.eigenvalues))

    def __str__(self) -> str:
        return "diag(" + ", ".join(str(x) for x in self.eigenvalues) + ")"


@dataclass(frozen=True)
class EntryLetter:
    """A single matrix entry M[row, col], 1-based."""
    letter: Letter
    row: int
    col: int

    def __str__(self) -> str:
        return f"{self.letter}[{self.row},{self.col}]"


Trace = tuple[Letter | DiagonalLetter, ...]


def parse_letter(symbol: str) -> Letter:
    """"Z" -> Z, "Zd" -> Z^dagger."""
    if len(symbol) > 1 and symbol.endswith(DAGGER_SUFFIX):
        return Letter(symbol[:-1], True)
    return Letter(symbol, False)


def _as_trace(word: Iterable) -> Trace:
    return tuple(parse_letter(x) if isinstance(x, str) else x for x in word)


@dataclass(frozen=True)
class MomentQuery:
    """
    <prod of traces * prod of entries> in one ensemble of N x N matrices.

    Attributes:
        ensemble (Ensemble): The matrix ensemble.
        size (int): N.
        word (tuple[Trace, ...]): Trace factors; letters given as symbols "X", "Z", "Zd",
            "U", "Ud" or as `DiagonalLetter` constants.
        entries (tuple[EntryLetter, ...]): Fixed entry factors.
    """
    ensemble: Ensemble
    size: int
    word: tuple = ()
    entries: tuple[EntryLetter, ...] = field(default=())

    def __post_init__(self):
        ensemble = self.ensemble if isinstance(self.ensemble, Ensemble) else Ensemble.from_char(self.ensemble)
        object.__setattr__(self, "ensemble", ensemble)
        object.__setattr__(self, "word", tuple(_as_trace(trace) for trace in self.word))
        if self.size < 1:
            raise DomainError(f"Matrix size must be positive, got {self.size}")


# Index bookkeeping


@dataclass
class _Slot:
    dagger: bool
    row: int
    col: int


class _IndexSystem:
    """Index variables of one integrand, with their sizes, fixed values and diagonal weights."""

    def __init__(self, sizes: Mapping[str, int]):
        self.instance_sizes = dict(sizes)
        self.sizes: list[int] = []
        self.fixed: dict[int, int] = {}
        self.merges: list[tuple[int, int]] = []
        self.weights: list[tuple[int, tuple[Coeff, ...]]] = []
        self.slots: dict[str, list[_Slot]] = {name: [] for name in sizes}
        self.vanishes = False

    def new_var(self, size: int, fixed: int | None = None) -> int:
        self.sizes.append(size)
        var = len(self.sizes) - 1
        if fixed is not None:
            if not 0 <= fixed < size:
                self.vanishes = True
            self.fixed[var] = fixed
        return var

    def letter_size(self, letter: Letter | DiagonalLetter) -> int:
        if isinstance(letter, DiagonalLetter):
            return len(letter.eigenvalues)
        if letter.instance not in self.instance_sizes:
            raise DomainError(f"Letter {letter} belongs to no declared matrix")
        return self.instance_sizes[letter.instance]

    def add_trace(self, trace: Trace) -> None:
        if not trace:
            raise ValueError("Empty trace word")
        sizes = {self.letter_size(letter) for letter in trace}
        if len(sizes) != 1:
            raise DomainError(f"Trace mixes matrix sizes {sorted(sizes)}")
        size = sizes.pop()
        variables = [self.new_var(size) for _ in trace]
        for position, letter in enumerate(trace):
            row, col = variables[position], variables[(position + 1) % len(trace)]
            if isinstance(letter, DiagonalLetter):
                self.merges.append((row, col))
                self.weights.append((row, letter.eigenvalues))
            else:
                self.slots[letter.instance].append(_Slot(letter.dagger, row, col))

    def add_entry(self, entry: EntryLetter) -> None:
        size = self.letter_size(entry.letter)
        row = self.new_var(size, entry.row - 1)
        col = self.new_var(size, entry.col - 1)
        self.slots[entry.letter.instance].append(_Slot(entry.letter.dagger, row, col))


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _classes(count: int, equalities: Iterable[tuple[int, int]]) -> dict[int, list[int]]:
    parent = list(range(count))
    for a, b in equalities:
        ra, rb = _find(parent, a), _find(parent, b)
        if ra != rb:
            parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for x in range(count):
        groups.setdefault(_find(parent, x), []).append(x)
    return groups


def _assignment_sum(system: _IndexSystem, equalities: Sequence[tuple[int, int]]) -> Coeff:
    """Weighted number of index assignments obeying the equalities."""
    groups = _classes(len(system.sizes), list(system.merges) + list(equalities))
    weights_by_var: dict[int, list[tuple[Coeff, ...]]] = {}
    for var, eigenvalues in system.weights:
        weights_by_var.setdefault(var, []).append(eigenvalues)
    total: Coeff = Fraction(1)
    for members in groups.values():
        sizes = {system.sizes[x] for x in members}
        if len(sizes) != 1:
            raise DomainError("Index equality between matrices of different sizes")
        size = sizes.pop()
        values = {system.fixed[x] for x in members if x in system.fixed}
        if len(values) > 1:
            return Fraction(0)
        lists = [w for x in members for w in weights_by_var.get(x, ())]
        candidates = values if values else range(size)
        factor: Coeff = Fraction(0)
        for v in candidates:
            term: Coeff = Fraction(1)
            for eigenvalues in lists:
                term = term * eigenvalues[v]
            factor = factor + term
        total = total * factor
        if total == 0:
            return Fraction(0)
    return total


def index_assignment_count(
    sizes: Sequence[int], equalities: Sequence[tuple[int, int]], method: str = "union_find"
) -> int:
    """
    Number of assignments x_v in range(sizes[v]) with x_a = x_b for every equality.

    `method="numpy"` enumerates the full index grid and serves as a cross-check.
    """
    if method == "union_find":
        total = 1
        for members in _classes(len(sizes), equalities).values():
            total *= min(sizes[x] for x in members)
        return total
    if method == "numpy":
        if not sizes:
            return 1
        grid = np.indices(tuple(sizes)).reshape(len(sizes), -1)
        mask = np.ones(grid.shape[1], dtype=bool)
        for a, b in equalities:
            mask &= grid[a] == grid[b]
        return int(np.count_nonzero(mask))
    raise ValueError(f"Unknown counting method {method!r}")


# Pairing enumeration


Option = tuple[Coeff, tuple[tuple[int, int], ...]]


def _perfect_matchings(items: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, partner in enumerate(rest):
        for tail in _perfect_matchings(rest[:i] + rest[i + 1:]):
            yield [(first, partner)] + tail


def _hermitian_options(slots: list[_Slot], size: int) -> list[Option]:
    if len(slots) % 2:
        return []
    weight = Fraction(1, size) ** (len(slots) // 2)
    options = []
    for matching in _perfect_matchings(list(range(len(slots)))):
        equalities = []
        for p, q in matching:
            equalities += [(slots[p].row, slots[q].col), (slots[p].col, slots[q].row)]
        options.append((weight, tuple(equalities)))
    return options


def _complex_options(slots: list[_Slot], size: int) -> list[Option]:
    plain = [s for s in slots if not s.dagger]
    daggered = [s for s in slots if s.dagger]
    if len(plain) != len(daggered):
        return []
    weight = Fraction(1, size) ** len(plain)
    options = []
    for perm in itertools.permutations(range(len(daggered))):
        equalities = []
        for k, target in enumerate(perm):
            equalities += [(plain[k].row, daggered[target].col), (plain[k].col, daggered[target].row)]
        options.append((weight, tuple(equalities)))
    return options


def _unitary_options(slots: list[_Slot], size: int) -> list[Option]:
    plain = [s for s in slots if not s.dagger]
    daggered = [s for s in slots if s.dagger]
    n = len(plain)
    if n != len(daggered):
        return []
    options = []
    perms = list(itertools.permutations(range(n)))
    for sigma in perms:
        rows = tuple((plain[k].row, daggered[sigma[k]].col) for k in range(n))
        for tau in perms:
            weight = weingarten_of_pair(sigma, tau, size)
            if weight == 0:
                continue
            cols = tuple((plain[k].col, daggered[tau[k]].row) for k in range(n))
            options.append((weight, rows + cols))
    return options


_OPTIONS = {
    Ensemble.HERMITIAN: _hermitian_options,
    Ensemble.COMPLEX: _complex_options,
    Ensemble.UNITARY: _unitary_options,
}


def expectation(
    traces: Sequence[Trace],
    ensembles: Mapping[str, tuple[Ensemble, int]],
    entries: Sequence[EntryLetter] = (),
) -> Coeff:
    """
    Joint expectation over independent matrices of a product of traces and entries.

    Args:
        traces (Sequence[Trace]): Trace factors; letters refer to instances in `ensembles`.
        ensembles (Mapping[str, tuple[Ensemble, int]]): instance -> (ensemble, N).
        entries (Sequence[EntryLetter]): Fixed entry factors.
    Returns:
        Coeff: The exact moment.
    """
    system = _IndexSystem({name: size for name, (_, size) in ensembles.items()})
    for trace in traces:
        system.add_trace(_as_trace(trace))
    for entry in entries:
        system.add_entry(entry)
    if system.vanishes:
        return Fraction(0)

    per_instance: list[list[Option]] = []
    for name, (ensemble, size) in ensembles.items():
        slots = system.slots[name]
        if not slots:
            continue
        if ensemble is Ensemble.HERMITIAN:
            slots = [_Slot(False, s.row, s.col) for s in slots]
        options = _OPTIONS[ensemble](slots, size)
        if not options:
            return Fraction(0)
        per_instance.append(options)

    total: Coeff = Fraction(0)
    for combination in itertools.product(*per_instance):
        weight: Coeff = Fraction(1)
        equalities: list[tuple[int, int]] = []
        for option_weight, option_equalities in combination:
            weight = weight * option_weight
            equalities.extend(option_equalities)
        total = total + weight * _assignment_sum(system, equalities)
    return total


_DEFAULT_INSTANCE = {Ensemble.HERMITIAN: "X", Ensemble.COMPLEX: "Z", Ensemble.UNITARY: "U"}


def _single_ensemble_moment(q: MomentQuery, expected: Ensemble) -> Coeff:
    if q.ensemble is not expected:
        raise DomainError(f"Query is for the {q.ensemble.value} ensemble, not {expected.value}")
    name = _DEFAULT_INSTANCE[expected]
    for trace in q.word:
        for letter in trace:
            if isinstance(letter, Letter) and letter.instance != name:
                raise DomainError(f"Letter {letter} is not a {expected.value} letter {name}")
    return expectation(q.word, {name: (expected, q.size)}, q.entries)


def hermitian_moment(q: MomentQuery) -> Coeff:
    """
    Gaussian Hermitian moment with <X_ij X_kl> = d_il d_jk / N.

    Example:
        ```python
        hermitian_moment(MomentQuery("hermitian", 3, (("X", "X", "X", "X"),)))  # 19/3
        ```
    """
    return _single_ensemble_moment(q, Ensemble.HERMITIAN)


def complex_moment(q: MomentQuery) -> Coeff:
    """Gaussian complex moment with <Z_ij Zd_kl> = d_il d_jk / N; unbalanced words give 0."""
    return _single_ensemble_moment(q, Ensemble.COMPLEX)


def unitary_moment(q: MomentQuery) -> Coeff:
    """
    Haar moment through the Weingarten calculus; unbalanced words give 0.

    Raises:
        DomainError: More U letters than the Weingarten bound.
    """
    return _single_ensemble_moment(q, Ensemble.UNITARY)


def schur_of_matrix(lam: Partition, letter: Letter | DiagonalLetter) -> list[tuple[Fraction, tuple[Trace, ...]]]:
    """s_lam(A) = sum_mu chi^lam(mu) / z_mu prod_i Tr A^{mu_i}, as (coefficient, traces) terms."""
    terms = []
    for mu in partitions_of(lam.size):
        chi = sym_character(lam, mu)
        if chi == 0:
            continue
        traces = tuple((letter,) * part for part in mu)
        terms.append((Fraction(chi, z_centralizer(mu)), traces))
    return terms


def hermitian_genus_counts(k: int) -> dict[int, int]:
    """
    Pairings of Tr X^{2k} grouped by their number of free index cycles.

    <Tr X^{2k}> = sum_c count[c] N^{c - k}; the c = k + 1 pairings are the planar ones.
    """
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    system = _IndexSystem({"X": 1})
    system.add_trace((Letter("X"),) * (2 * k))
    counts: dict[int, int] = {}
    for _, equalities in _hermitian_options(system.slots["X"], 1):
        cycles = len(_classes(len(system.sizes), equalities))
        counts[cycles] = counts.get(cycles, 0) + 1
    return dict(sorted(counts.items()))


@dataclass(frozen=True)
class GenusExpansion:
    """
    <Tr X^{2k}> as a polynomial in N.

    Attributes:
        k (int): Half the power.
        counts (dict[int, int]): Power of N -> number of pairings (shifted by -k).
        planar (int): Quotient of N^k <Tr X^{2k}> by N^{k+1}.
        catalan (int): The k-th Catalan number.
        value (Fraction): The polynomial at the checked N.
        moment (Fraction): hermitian_moment at the checked N.
        grid_value (Fraction): The same moment with every pairing counted on the full index grid.
    """
    k: int
    counts: dict[int, int]
    planar: int
    catalan: int
    value: Fraction
    moment: Fraction
    grid_value: Fraction

    @property
    def passed(self) -> bool:
        return self.planar == self.catalan and self.value == self.moment == self.grid_value


def genus_expansion_check(k: int, size: int) -> GenusExpansion:
    """
    Leading coefficient of <Tr X^{2k}> is Catalan(k), and the polynomial matches the moment.

    The pairings are also recounted by brute force over all N^{2k} index assignments.
    """
    n = sympy.Symbol("N")
    counts = hermitian_genus_counts(k)
    polynomial = sympy.Poly(sum(c * n ** e for e, c in counts.items()), n)
    quotient, _ = sympy.div(polynomial, sympy.Poly(n ** (k + 1), n))
    planar = int(quotient.as_expr())
    value = Fraction(sum(c * Fraction(size) ** (e - k) for e, c in counts.items()))
    moment = Fraction(hermitian_moment(MomentQuery(Ensemble.HERMITIAN, size, (("X",) * (2 * k),))))
    system = _IndexSystem({"X": size})
    system.add_trace((Letter("X"),) * (2 * k))
    grid_total = sum(
        index_assignment_count(system.sizes, equalities, method="numpy")
        for _, equalities in _hermitian_options(system.slots["X"], size)
    )
    grid_value = Fraction(grid_total, size ** k)
    return GenusExpansion(k, counts, planar, int(sympy.catalan(k)), value, moment, grid_value)
