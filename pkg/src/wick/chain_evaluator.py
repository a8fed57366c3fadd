"""
Perturbative evaluation of chain matrix models.

The coefficient of a monomial in the boundary times is a finite sum: every coupling is
expanded to a fixed order, the orders are pinned by letter balance (each complex or unitary
matrix needs as many daggered letters as plain ones), and each surviving term is a joint
moment of independent ensembles, evaluated by `expectation`.
"""
import itertools
import logging
from fractions import Fraction
from math import factorial
from typing import Sequence

from src.computation_monitor import computation_monitor
from src.constant import CHAIN_MAX_N, CHAIN_MAX_ORDER
from src.errors import BudgetError
from src.partitions import partitions_of, z_centralizer
from src.symfunc import Coeff, Key
from .chain_plan import Coupling, CouplingKind, MatrixChainPlan
from .moments import Letter, Trace, expectation, schur_of_matrix

logger = logging.getLogger(__name__)

Term = tuple[Coeff, tuple[Trace, ...]]


def _count(counts: dict[Letter, int], letter: Letter, times: int) -> None:
    counts[letter] = counts.get(letter, 0) + times


def coupling_terms(coupling: Coupling, order: int) -> list[Term]:
    """
    The order-`order` part of a coupling as trace monomials.

        exp(s Tr AB):        s^q / q! (Tr AB)^q
        1/det(I - A x B):    sum_{mu |- d} prod_i Tr A^{mu_i} Tr B^{mu_i} / z_mu
    """
    a, b = coupling.left, coupling.right
    if coupling.kind is CouplingKind.EXP_TRACE:
        coeff = coupling.strength ** order * Fraction(1, factorial(order))
        return [(coeff, ((a, b),) * order)]
    terms = []
    for mu in partitions_of(order):
        traces = tuple((a,) * part for part in mu) + tuple((b,) * part for part in mu)
        terms.append((Fraction(1, z_centralizer(mu)), traces))
    return terms


def _boundary_term(plan: MatrixChainPlan, query: Key) -> tuple[Term, dict[Letter, int]]:
    coeff: Coeff = Fraction(1)
    traces: list[Trace] = []
    counts: dict[Letter, int] = {}
    for block, exps in query:
        attachment = plan.attachment(block)
        for k, power in exps:
            coeff = coeff * attachment.scale ** power * Fraction(1, factorial(power))
            traces += [(attachment.letter,) * k] * power
            _count(counts, attachment.letter, k * power)
    return (coeff, tuple(traces)), counts


def _balanced(counts: dict[Letter, int], instances: Sequence[str]) -> bool:
    return all(counts.get(Letter(name), 0) == counts.get(Letter(name, True), 0) for name in instances)


def balanced_orders(
    plan: MatrixChainPlan, base_counts: dict[Letter, int], bounds: Sequence[int]
) -> list[tuple[int, ...]]:
    """Coupling orders, each within its bound, under which every matrix is balanced."""
    couplings = plan.all_couplings
    instances = [name for node in plan.nodes for name in node.instances]
    result = []
    for orders in itertools.product(*(range(bound + 1) for bound in bounds)):
        counts = dict(base_counts)
        for coupling, order in zip(couplings, orders):
            _count(counts, coupling.left, order)
            _count(counts, coupling.right, order)
        if _balanced(counts, instances):
            result.append(orders)
    return result


def _check_budget(plan: MatrixChainPlan) -> None:
    for node in plan.nodes:
        if node.size > CHAIN_MAX_N:
            raise BudgetError(f"Node {node.name!r} of size {node.size} exceeds the bound {CHAIN_MAX_N}")


@computation_monitor(logged_args=("query", "orders"))
def chain_evaluate(plan: MatrixChainPlan, query: Key = (), orders: Sequence[int] | None = None) -> Coeff:
    """
    Coefficient of a monomial of the boundary times in the chain integral.

    Args:
        plan (MatrixChainPlan): The chain.
        query (Key): The monomial, e.g. `make_key({"t1": {1: 1}, "t0": {1: 1}})`.
        orders (Sequence[int] | None): Highest expansion order per coupling of
            `plan.all_couplings`; by default the letter count of the query.
    Returns:
        Coeff: The exact coefficient.
    Raises:
        UnsupportedError: The chain holds a normal matrix node.
        BudgetError: A node is larger than CHAIN_MAX_N or the expansion needs a total order
            above CHAIN_MAX_ORDER.
        DomainError: The query uses a block that is not attached.

    Example:
        ```python
        chain_evaluate(chain3_plan(2), make_key({"t1": {1: 1}, "t0": {1: 1}}))  # 1
        ```
    """
    ensembles = plan.ensembles()
    _check_budget(plan)
    couplings = plan.all_couplings
    (base_coeff, base_traces), base_counts = _boundary_term(plan, query)
    insertion_terms: list[Term] = [(Fraction(1), ())]
    if plan.insertion is not None:
        lam, letter = plan.insertion.partition, plan.insertion.letter
        insertion_terms = schur_of_matrix(lam, letter)
        _count(base_counts, letter, lam.size)

    if orders is None:
        letters = sum(base_counts.values())
        bounds = [letters] * len(couplings)
    else:
        bounds = list(orders)
        if len(bounds) != len(couplings):
            raise ValueError(f"Expected {len(couplings)} orders, got {len(bounds)}")
        if sum(bounds) > CHAIN_MAX_ORDER:
            raise BudgetError(f"Total expansion order {sum(bounds)} exceeds {CHAIN_MAX_ORDER}")

    total: Coeff = Fraction(0)
    for combination in balanced_orders(plan, base_counts, bounds):
        if sum(combination) > CHAIN_MAX_ORDER:
            raise BudgetError(f"Coupling orders {combination} exceed the total order {CHAIN_MAX_ORDER}")
        factors = [coupling_terms(c, order) for c, order in zip(couplings, combination)]
        logger.debug("Expanding coupling orders %s", combination)
        for parts in itertools.product(insertion_terms, *factors):
            coeff: Coeff = base_coeff
            traces = list(base_traces)
            for part_coeff, part_traces in parts:
                coeff = coeff * part_coeff
                traces += part_traces
            if coeff == 0:
                continue
            total = total + coeff * expectation(traces, ensembles)
    return total
