"""
Skew Schur expansion of nested hypergeometric tau-functions.

    tau = sum over chains of prod_j c_n^(j)
          * s_{lam_m}(t_{m+1}) prod_{i=1..m} r^(i)_{lam_i,n} s_{(lam_{i-1}/lam_i)^{s_i}}(t_i)
          * r^(0)_{lam_0,n} s_{lam_0}(t_0)

where (lam_{i-1}/lam_i)^+ = lam_{i-1}/lam_i and (lam_{i-1}/lam_i)^- = lam_i/lam_{i-1}.
At an inserted position i the skew factor is replaced by the Littlewood-Richardson
coefficient c^{lam_{i-1}}_{lam_i nu} (s_i = +) or c^{lam_i}_{lam_{i-1} nu} (s_i = -).
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from src.computation_monitor import computation_monitor
from src.constant import WORKERS
from src.errors import DomainError, TruncationError
from src.partitions import Partition, enumerate_partitions, lr_coefficient
from src.symfunc import (
    Coeff, Exps, Key, MultiSeries, SpecializationRule,
    exps_degree, is_zero, make_series, merge_keys, schur_exps, skew_schur_exps
)
from src.weights import c_norm, content_product
from .chain_enumerator import Chain, enumerate_chains
from .nested_spec import NestedSpec, Sign, block_name

logger = logging.getLogger(__name__)

Poly = tuple[tuple[Exps, Fraction], ...]


def _specialized_value(poly: Poly, rule: SpecializationRule, scale: Coeff | None) -> Coeff:
    total: Coeff = Fraction(0)
    for exps, coeff in poly:
        value: Coeff = coeff
        for k, a in exps:
            time = rule.value(k)
            if scale is not None:
                time = time * scale
            value = value * time ** a
            if is_zero(value):
                break
        total = total + value
    return total


class ChainEvaluator:
    """
    Evaluates the factors of the expansion for individual chains, with memo tables.

    Methods:
        weight(chain): prod c_n^(j) * prod r^(i)_{lam_i} * LR coefficients.
        factor(j, chain): The block-j factor, either a polynomial or a specialized value.
        middle_terms(chain): weight times the product of the middle-block factors.
    """

    def __init__(self, spec: NestedSpec):
        self.spec = spec
        self.normalization: Coeff = Fraction(1)
        for i in range(spec.m + 1):
            self.normalization = self.normalization * c_norm(spec.weight(i), spec.n)
        self._content: dict[tuple[int, Partition], Coeff] = {}
        self._factor: dict[tuple[int, Partition, Partition], tuple[Poly | None, Coeff | None]] = {}
        for j, rule in spec.loci:
            if rule.support is not None and rule.support > spec.cap(j):
                raise TruncationError(
                    f"Specializing t{j} needs t_{rule.support} but D_{j} = {spec.cap(j)}"
                )

    def content(self, i: int, lam: Partition) -> Coeff:
        """r^(i)_{lam,n}"""
        key = (i, lam)
        if key not in self._content:
            self._content[key] = content_product(self.spec.weight(i), lam, self.spec.n)
        return self._content[key]

    def weight(self, chain: Chain) -> Coeff:
        """Scalar weight of a chain."""
        value = self.normalization
        for i, lam in enumerate(chain):
            value = value * self.content(i, lam)
            if is_zero(value):
                return Fraction(0)
        for i, nu in self.spec.insertions:
            outer, inner = self._skew_pair(i, chain)
            value = value * lr_coefficient(outer, inner, nu)
            if is_zero(value):
                return Fraction(0)
        return value

    def _skew_pair(self, j: int, chain: Chain) -> tuple[Partition, Partition]:
        spec = self.spec
        if j == spec.m + 1:
            return chain[spec.m], Partition.EMPTY
        if j == 0:
            return chain[0], Partition.EMPTY
        if spec.sign(j) is Sign.PLUS:
            return chain[j - 1], chain[j]
        return chain[j], chain[j - 1]

    def factor(self, j: int, chain: Chain) -> tuple[Poly | None, Coeff | None]:
        """(polynomial, None) for a variable block, (None, value) for a specialized one."""
        outer, inner = self._skew_pair(j, chain)
        key = (j, outer, inner)
        if key not in self._factor:
            poly: Poly = skew_schur_exps(outer, inner)
            scale = self.spec.scale(j)
            rule = self.spec.locus(j)
            if rule is not None:
                self._factor[key] = (None, _specialized_value(poly, rule, scale))
            else:
                if scale is not None:
                    poly = tuple(
                        (exps, coeff * scale ** sum(a for _, a in exps)) for exps, coeff in poly
                    )
                self._factor[key] = (poly, None)
        return self._factor[key]

    def block_terms(self, chain: Chain, blocks: Iterable[int], start: Coeff) -> dict[Key, Coeff]:
        """start * product of the factors of `blocks` for one chain."""
        terms: dict[Key, Coeff] = {(): start}
        for j in blocks:
            if not self.spec.has_block(j):
                continue
            poly, value = self.factor(j, chain)
            if poly is None:
                if is_zero(value):
                    return {}
                terms = {k: c * value for k, c in terms.items()}
                continue
            name = block_name(j)
            grown: dict[Key, Coeff] = {}
            for key, coeff in terms.items():
                for exps, factor_coeff in poly:
                    new_key = merge_keys(key, ((name, exps),) if exps else ())
                    product = coeff * factor_coeff
                    grown[new_key] = grown[new_key] + product if new_key in grown else product
            terms = grown
            if not terms:
                break
        return terms

    def middle_terms(self, chain: Chain) -> dict[Key, Coeff]:
        """Weight times the middle-block factors t_m .. t_1."""
        weight = self.weight(chain)
        if is_zero(weight):
            return {}
        return self.block_terms(chain, range(self.spec.m, 0, -1), weight)


def middle_blocks(spec: NestedSpec) -> tuple[tuple[str, int], ...]:
    """Variable blocks strictly between t_{m+1} and t_0."""
    boundary = {block_name(0), block_name(spec.m + 1)}
    return tuple((name, cap) for name, cap in spec.blocks if name not in boundary)


def _add_into(target: dict[Key, Coeff], terms: Mapping[Key, Coeff]) -> None:
    for key, value in terms.items():
        target[key] = target[key] + value if key in target else value


@dataclass
class TauSeries:
    """
    An expanded nested tau-function.

    Attributes:
        spec (NestedSpec): The spec that was expanded.
        series (MultiSeries): The truncated series over `spec.blocks`.
        schur_view (dict[tuple[Partition, Partition], MultiSeries]): (lam_end, lam_start) ->
            coefficient of s_{lam_end}(t_{m+1}) s_{lam_start}(t_0) as a series in the middle
            blocks (before any rescaling or specialization of the two boundary blocks).
    """
    spec: NestedSpec
    series: MultiSeries
    schur_view: dict[tuple[Partition, Partition], MultiSeries] = field(default_factory=dict)

    def coefficient(self, monomial) -> Coeff:
        """Coefficient of a monomial of `series`."""
        return self.series.coefficient(monomial)

    def to_json(self) -> dict:
        """Series JSON plus a "schur_view" array in enumeration order."""
        data = self.series.to_json()
        data["spec"] = self.spec.to_json()
        data["schur_view"] = [
            {"end": end.to_json(), "start": start.to_json(), "coeff": value.to_json()}
            for (end, start), value in sorted(
                self.schur_view.items(),
                key=lambda item: (item[0][0].sort_key(), item[0][1].sort_key()),
            )
        ]
        return data


def series_from_view(
    spec: NestedSpec, view: Mapping[tuple[Partition, Partition], MultiSeries]
) -> MultiSeries:
    """Rebuild the tau series from its double-Schur view."""
    evaluator = ChainEvaluator(spec)
    terms: dict[Key, Coeff] = {}
    boundary = (spec.m + 1, 0)
    for (end, start), middle in view.items():
        chain = (start,) + (end,) * spec.m if spec.m else (start,)
        outer = _boundary_terms(evaluator, chain, boundary)
        for k1, c1 in outer.items():
            for k2, c2 in middle.terms.items():
                key = merge_keys(k1, k2)
                product = c1 * c2
                terms[key] = terms[key] + product if key in terms else product
    return make_series(spec.blocks, terms)


def _boundary_terms(evaluator: ChainEvaluator, chain: Chain, boundary) -> dict[Key, Coeff]:
    return evaluator.block_terms(chain, boundary, Fraction(1))


def _expand_from(spec: NestedSpec, evaluator: ChainEvaluator, start: Partition):
    view: dict[tuple[Partition, Partition], dict[Key, Coeff]] = {}
    count = 0
    for chain in enumerate_chains(spec, start=start):
        count += 1
        middle = evaluator.middle_terms(chain)
        if middle:
            _add_into(view.setdefault((chain[-1], chain[0]), {}), middle)
    return view, count


def _series_size(tau: "TauSeries") -> int:
    return len(tau.series)


@computation_monitor(logged_args=("spec",), size=_series_size)
def expand_tau(spec: NestedSpec, jobs: int = 1) -> TauSeries:
    """
    Expand a nested tau-function up to the caps of the spec.

    Args:
        spec (NestedSpec): The spec.
        jobs (int): Worker threads; chains are split by lam_0 and merged in order.
    Returns:
        TauSeries: The series and its double-Schur view.
    Raises:
        PoleAtContent: A weight has a pole at a reachable content.
        TruncationError: A specialized block needs times above its cap.
    """
    evaluator = ChainEvaluator(spec)
    starts = enumerate_partitions(spec.cap(0), spec.max_length)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=min(jobs, WORKERS * 4)) as executor:
            parts = list(executor.map(lambda lam: _expand_from(spec, evaluator, lam), starts))
    else:
        parts = [_expand_from(spec, evaluator, lam) for lam in starts]

    mids = middle_blocks(spec)
    view: dict[tuple[Partition, Partition], MultiSeries] = {}
    chains = 0
    for partial, count in parts:
        chains += count
        for pair, terms in partial.items():
            series = make_series(mids, terms)
            if not series.is_zero():
                view[pair] = series
    series = series_from_view(spec, view)
    logger.debug("expanded %d chains into %d terms", chains, len(series))
    return TauSeries(spec, series, view)


def double_schur_coefficient(
    spec: NestedSpec, lam_end: Partition, lam_start: Partition
) -> MultiSeries:
    """Coefficient of s_{lam_end}(t_{m+1}) s_{lam_start}(t_0) as a series in t_m .. t_1."""
    evaluator = ChainEvaluator(spec)
    terms: dict[Key, Coeff] = {}
    for chain in enumerate_chains(spec, start=lam_start, end=lam_end):
        _add_into(terms, evaluator.middle_terms(chain))
    return make_series(middle_blocks(spec), terms)


def superintegrability_prediction(
    spec: NestedSpec, lam: Partition, side: str = "end"
) -> MultiSeries:
    """
    Coefficient of s_lam(t_{m+1}) (side "end") or s_lam(t_0) (side "start") in tau,
    as a series in the remaining blocks.
    """
    if side not in ("end", "start"):
        raise ValueError(f"side must be 'end' or 'start', got {side!r}")
    evaluator = ChainEvaluator(spec)
    other = 0 if side == "end" else spec.m + 1
    fixed = {"end": lam} if side == "end" else {"start": lam}
    terms: dict[Key, Coeff] = {}
    for chain in enumerate_chains(spec, **fixed):
        middle = evaluator.middle_terms(chain)
        if not middle:
            continue
        for k1, c1 in evaluator.block_terms(chain, (other,), Fraction(1)).items():
            for k2, c2 in middle.items():
                key = merge_keys(k1, k2)
                product = c1 * c2
                terms[key] = terms[key] + product if key in terms else product
    removed = block_name(spec.m + 1 if side == "end" else 0)
    return make_series(tuple(b for b in spec.blocks if b[0] != removed), terms)


def coefficient_of(spec: NestedSpec, monomial: Key) -> Coeff:
    """
    A single coefficient of tau, enumerating only the chains of matching degrees.

    Raises:
        DomainError: The monomial uses a block that is not a variable of the spec.
        TruncationError: The monomial exceeds a cap.
    """
    variable = dict(spec.blocks)
    per_block = dict(monomial)
    for name, exps in per_block.items():
        if name not in variable:
            raise DomainError(f"Block {name!r} is not a variable block of the spec")
        if exps_degree(exps) > variable[name]:
            raise TruncationError(
                f"Monomial degree {exps_degree(exps)} in {name} exceeds cap {variable[name]}"
            )
    exact = {
        j: exps_degree(per_block.get(block_name(j), ()))
        for j in range(spec.m + 2)
        if block_name(j) in variable
    }
    evaluator = ChainEvaluator(spec)
    total: Coeff = Fraction(0)
    all_blocks = range(spec.m + 1, -1, -1)
    for chain in enumerate_chains(spec, exact):
        weight = evaluator.weight(chain)
        if is_zero(weight):
            continue
        value = weight
        for j in all_blocks:
            if not spec.has_block(j):
                continue
            poly, special = evaluator.factor(j, chain)
            if poly is None:
                value = value * special
                continue
            wanted = per_block.get(block_name(j), ())
            value = value * dict(poly).get(wanted, Fraction(0))
            if is_zero(value):
                break
        total = total + value
    return total


def corrupt_series(
    series: MultiSeries, block: str, lam: Partition, amount: Coeff = Fraction(1)
) -> MultiSeries:
    """series + amount * s_lam(t_block), used as a negative control."""
    exps_terms = {((block, exps),) if exps else (): coeff * amount for exps, coeff in schur_exps(lam)}
    return series + make_series(series.blocks, exps_terms)
