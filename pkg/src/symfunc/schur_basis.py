"""
Change of basis between time monomials and Schur functions.

With p_k = k t_k, the monomial t^a of cycle type mu equals p_mu / prod k^{a_k}, and
p_mu = sum_lam chi^lam(mu) s_lam. The "solve" method instead solves the square linear
system against Jacobi-Trudi with sympy, one parameter monomial at a time.
"""
import logging
from fractions import Fraction
from math import prod
from typing import Literal, Mapping

import sympy

from src.partitions import Partition, partitions_of, sym_character
from .scalar import Coeff, Scalar, param_parts, param_orders
from .series import Exps, GradedSeries, MultiSeries, exps_degree, make_series
from .jacobi_trudi import schur, schur_exps

logger = logging.getLogger(__name__)

BasisMethod = Literal["characters", "solve"]


def _cycle_type(exps: Exps) -> Partition:
    return Partition(tuple(k for k, a in sorted(exps, reverse=True) for _ in range(a)))


def _monomial_in_schur(exps: Exps) -> dict[Partition, Fraction]:
    mu = _cycle_type(exps)
    scale = prod(k ** a for k, a in exps)
    found = {}
    for lam in partitions_of(mu.size):
        chi = sym_character(lam, mu)
        if chi:
            found[lam] = Fraction(chi, scale)
    return found


def _accumulate(
    target: dict[Partition, object], lam: Partition, value
) -> None:
    target[lam] = target[lam] + value if lam in target else value


def _solve_degree(
    degree: int, coeffs: Mapping[Exps, Coeff]
) -> dict[Partition, Coeff]:
    shapes = partitions_of(degree)
    rows = [tuple(sorted(mu.multiplicities().items())) for mu in shapes]
    row_index = {exps: i for i, exps in enumerate(rows)}
    matrix = sympy.zeros(len(rows), len(shapes))
    for j, lam in enumerate(shapes):
        for exps, value in schur_exps(lam):
            matrix[row_index[exps], j] = sympy.Rational(value.numerator, value.denominator)

    by_param: dict[tuple, dict[Exps, Fraction]] = {}
    orders: tuple = ()
    for exps, value in coeffs.items():
        orders = orders + param_orders(value)
        for monomial, part in param_parts(value).items():
            by_param.setdefault(monomial, {})[exps] = part

    solution: dict[Partition, Coeff] = {}
    for monomial, parts in by_param.items():
        rhs = sympy.zeros(len(rows), 1)
        for exps, part in parts.items():
            rhs[row_index[exps], 0] = sympy.Rational(part.numerator, part.denominator)
        answer = matrix.LUsolve(rhs)
        for j, lam in enumerate(shapes):
            value = sympy.Rational(answer[j, 0])
            if value == 0:
                continue
            frac = Fraction(int(value.p), int(value.q))
            piece = Scalar({monomial: frac}, orders).collapse() if monomial else frac
            _accumulate(solution, lam, piece)
    return solution


def to_schur_basis(
    f: GradedSeries, method: BasisMethod = "characters"
) -> dict[Partition, Coeff]:
    """
    Coefficients c_lam with f = sum_lam c_lam s_lam.

    Args:
        f (GradedSeries): A single-block series.
        method: "characters" (default) or "solve" (sympy linear solve); both agree.
    Returns:
        dict[Partition, Coeff]: Non-zero coefficients in enumeration order.
    """
    if len(f.blocks) != 1:
        raise ValueError(f"to_schur_basis needs a single-block series, got {f.block_names}")
    items = dict(f.exps_items()) if isinstance(f, GradedSeries) else {
        (key[0][1] if key else ()): value for key, value in f.terms.items()
    }
    result: dict[Partition, Coeff] = {}
    if method == "characters":
        for exps, value in items.items():
            for lam, weight in _monomial_in_schur(exps).items():
                _accumulate(result, lam, value * weight)
    elif method == "solve":
        by_degree: dict[int, dict[Exps, Coeff]] = {}
        for exps, value in items.items():
            by_degree.setdefault(exps_degree(exps), {})[exps] = value
        for degree in sorted(by_degree):
            for lam, value in _solve_degree(degree, by_degree[degree]).items():
                _accumulate(result, lam, value)
    else:
        raise ValueError(f"Unknown basis method {method!r}")
    return {lam: result[lam] for lam in sorted(result, key=Partition.sort_key) if result[lam] != 0}


def from_schur_basis(
    coeffs: Mapping[Partition, Coeff], block: str = "t", cap: int | None = None
) -> GradedSeries:
    """sum_lam c_lam s_lam(t) as a series (cap defaults to the largest |lam|)."""
    if cap is None:
        cap = max((lam.size for lam in coeffs), default=0)
    terms: dict[Exps, Coeff] = {}
    for lam, value in coeffs.items():
        if lam.size > cap:
            continue
        for exps, weight in schur_exps(lam):
            product = value * weight
            terms[exps] = terms[exps] + product if exps in terms else product
    return GradedSeries.from_exps(block, cap, terms)


def schur_components(series: MultiSeries, block: str) -> dict[Partition, MultiSeries]:
    """
    Decompose along one block: series = sum_lam s_lam(t_block) * component_lam.

    Components are series over the remaining blocks, keyed in enumeration order.
    """
    series.cap_of(block)
    rest_blocks = tuple((n, c) for n, c in series.blocks if n != block)
    components: dict[Partition, MultiSeries] = {}
    for exps, rest in series.split_block(block).items():
        for lam, weight in _monomial_in_schur(exps).items():
            piece = rest.scaled(weight)
            components[lam] = components[lam] + piece if lam in components else piece
    logger.debug("decomposed %d terms into %d Schur components", len(series), len(components))
    return {
        lam: components[lam].with_blocks(rest_blocks)
        for lam in sorted(components, key=Partition.sort_key)
        if not components[lam].is_zero()
    }


def assemble_from_components(
    components: Mapping[Partition, MultiSeries], block: str, cap: int
) -> MultiSeries:
    """Inverse of `schur_components`: sum_lam s_lam(t_block) * component_lam."""
    total: MultiSeries | None = None
    for lam, component in components.items():
        piece = schur(lam, block, cap) * component
        total = piece if total is None else total + piece
    if total is None:
        return make_series(((block, cap),), {})
    return total
