"""
Exponentials of operators acting on truncated series.

    exp(sum_k c_k A_k) f = sum over monomials c^a of prod_k c_k^{a_k} / a_k! * prod_k A_k^{a_k} f

for a commuting family {A_k} acting on one block and coefficients c_k = t_{coeff,k} taken
from a fresh block of times. The sum is finite because the coefficient block is truncated.
"""
import logging
from fractions import Fraction
from typing import Mapping

from src.errors import DomainError
from src.symfunc import MultiSeries, assemble_from_components, schur_components
from .linear_operator import Components, LinearOperator, commute_pairwise

logger = logging.getLogger(__name__)


def _add(target: Components, source: Components) -> Components:
    for lam, piece in source.items():
        target[lam] = target[lam] + piece if lam in target else piece
    return target


def _times_monomial(components: Components, block: str, k: int, power: int) -> Components:
    if power == 0:
        return components
    scale = Fraction(1)
    for a in range(2, power + 1):
        scale /= a
    result: Components = {}
    for lam, piece in components.items():
        grown = piece
        for _ in range(power):
            grown = grown.multiply_by_time(block, k)
        grown = grown.scaled(scale)
        if not grown.is_zero():
            result[lam] = grown
    return result


def _prepare(target: MultiSeries, space: str, space_cap: int, extra: Mapping[str, int]) -> MultiSeries:
    blocks = list(target.blocks)
    declared = target.caps
    if space not in declared:
        blocks.append((space, space_cap))
    for name, cap in extra.items():
        if name not in declared:
            blocks.append((name, cap))
    return target.with_blocks(blocks)


def exp_operator_action(
    coeff_block: str,
    family: Mapping[int, LinearOperator],
    target: MultiSeries,
    cap: int,
    *,
    check: bool = True,
) -> MultiSeries:
    """
    exp(sum_k t_{coeff_block,k} A_k) applied to `target`.

    Args:
        coeff_block (str): Fresh block of coefficient times, truncated at `cap`.
        family (Mapping[int, LinearOperator]): k -> A_k, all on the same block and cap.
        target (MultiSeries): The series acted on; missing blocks are declared.
        cap (int): Cap of `coeff_block`.
        check (bool): Verify pairwise commutativity first.
    Returns:
        MultiSeries: The result, with the operator block at the operator cap.
    Raises:
        DomainError: The family does not commute, mixes blocks, or the coefficient block
            already carries terms.
    """
    if not family:
        return target if coeff_block in target.caps else target.add_block(coeff_block, cap)
    operators = [family[k] for k in sorted(family)]
    space, space_cap = operators[0].block, operators[0].cap
    if any(op.block != space or op.cap != space_cap for op in operators):
        raise DomainError("Operator family acts on different blocks or caps")
    if coeff_block == space:
        raise DomainError(f"Coefficient block {coeff_block!r} is the block acted on")
    if coeff_block in target.caps and target.max_degree(coeff_block) > 0:
        raise DomainError(f"Coefficient block {coeff_block!r} is not fresh")
    if check and not commute_pairwise(operators):
        raise DomainError("Operator family does not commute; refusing to pick an ordering")

    prepared = _prepare(target, space, space_cap, {coeff_block: cap})
    if prepared.cap_of(space) > space_cap:
        prepared = prepared.truncate({space: space_cap})
    state = schur_components(prepared, space)
    for k in sorted(family):
        if k > cap:
            continue
        op = family[k]
        result: Components = {}
        power = state
        for a in range(cap // k + 1):
            _add(result, _times_monomial(power, coeff_block, k, a))
            if a < cap // k:
                power = op.apply_components(power)
                if not power:
                    break
        state = result
    logger.debug("exponential action produced %d Schur components", len(state))
    output = assemble_from_components(state, space, space_cap)
    blocks = [(name, c) for name, c in prepared.blocks]
    return output.with_blocks(blocks)


def exp_nilpotent_action(op: LinearOperator, target: MultiSeries) -> MultiSeries:
    """
    exp(A) applied to `target` for an operator raising degree (sum A^a / a! terminates).

    Raises:
        DomainError: The operator does not raise degree.
    """
    if op.degree_shift <= 0 and not op.is_zero():
        raise DomainError("exp(A) is only summed for degree-raising operators")
    prepared = _prepare(target, op.block, op.cap, {})
    state = schur_components(prepared, op.block)
    total: Components = dict(state)
    power = state
    a = 0
    while power:
        a += 1
        power = {lam: piece.scaled(Fraction(1, a)) for lam, piece in op.apply_components(power).items()}
        _add(total, power)
    return assemble_from_components(total, op.block, op.cap).with_blocks(prepared.blocks)

