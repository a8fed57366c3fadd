"""
Structural transformations of nested specs.

Functions:
    dual_spec / relabel_dual: reverse the operator order, flipping every sign.
    reduction_kind / reduce_spec / lift_reduced: collapse one block of a spec and map
        the reduced series back onto the blocks of the original spec.
"""
from dataclasses import replace
from enum import Enum

from src.errors import DomainError
from src.symfunc import MultiSeries, shift_block
from .nested_spec import NestedSpec, block_name


def dual_spec(spec: NestedSpec) -> NestedSpec:
    """
    The dual spec: block j becomes block m+1-j, O'_i = O_{m-i} and s'_i = -s_{m+1-i}.

    Expanding the dual spec gives the original series with t_j and t_{m+1-j} swapped.
    """
    m = spec.m

    def mirror(j: int) -> int:
        return m + 1 - j

    return NestedSpec(
        n=spec.n,
        m=m,
        # stored as (s'_m, ..., s'_1)
        sigma=tuple(spec.sign(mirror(i)).flipped for i in range(m, 0, -1)),
        # stored as (O'_m, ..., O'_0)
        weights=tuple(spec.weight(m - i) for i in range(m, -1, -1)),
        caps=tuple(spec.cap(mirror(j)) for j in range(m + 2)),
        insertions=tuple((mirror(i), nu) for i, nu in spec.insertions),
        scales=tuple((mirror(j), c) for j, c in spec.scales),
        loci=tuple((mirror(j), rule) for j, rule in spec.loci),
        max_length=spec.max_length,
    )


def relabel_dual(series: MultiSeries, m: int) -> MultiSeries:
    """Rename t_j -> t_{m+1-j} on every declared block."""
    mapping = {
        block_name(j): block_name(m + 1 - j)
        for j in range(m + 2)
        if block_name(j) in series.caps
    }
    return series.rename_blocks(mapping)


class ReductionKind(Enum):
    """How a block is collapsed."""
    DROP = "drop"
    MERGE = "merge"


def reduction_kind(spec: NestedSpec, j: int) -> ReductionKind:
    """
    Decide how block j collapses.

    DROP: a middle block 1 <= j <= m with cap 0 and no insertion; then lam_{j-1} = lam_j.
    MERGE: O_j trivial and s_j = s_{j+1} (s_0 = -, s_{m+1} = +); blocks j and j+1 merge.

    Raises:
        DomainError: Neither condition holds.
    """
    if not 0 <= j <= spec.m + 1:
        raise DomainError(f"Block index {j} outside 0..{spec.m + 1}")
    if 1 <= j <= spec.m and spec.cap(j) == 0 and spec.insertion(j) is None:
        return ReductionKind.DROP
    if j <= spec.m and spec.weight(j).is_trivial() and spec.sign(j) is spec.sign(j + 1):
        for block in (j, j + 1):
            if spec.insertion(block) is not None:
                raise DomainError(f"Cannot merge t{j} and t{j + 1}: t{block} carries an insertion")
            if spec.scale(block) is not None or spec.locus(block) is not None:
                raise DomainError(
                    f"Cannot merge t{j} and t{j + 1}: t{block} is rescaled or specialized"
                )
        return ReductionKind.MERGE
    raise DomainError(
        f"Block t{j} cannot be reduced: it needs cap 0 in the middle, "
        f"or a trivial O_{j} with s_{j} = s_{j + 1}"
    )


def _shift_down(pairs, removed: int):
    return tuple((i - 1 if i > removed else i, value) for i, value in pairs if i != removed)


def reduce_spec(spec: NestedSpec, j: int) -> NestedSpec:
    """
    The (m-1)-spec obtained by collapsing block j.

    Example:
        ```python
        spec = NestedSpec(n=0, m=1, sigma=("+",), weights=(WeightGen.trivial(), g), caps=(3, 3, 3))
        reduce_spec(spec, 1)  # m = 0, weight g, t_1' = t_1 + t_2 with cap 6
        ```
    Raises:
        DomainError: The block cannot be reduced.
    """
    kind = reduction_kind(spec, j)
    m = spec.m
    signs = [spec.sign(i) for i in range(1, m + 1)]
    weights = [spec.weight(i) for i in range(m + 1)]
    caps = list(spec.caps)

    if kind is ReductionKind.DROP:
        del signs[j - 1]
        weights[j - 1] = weights[j].product(weights[j - 1])
        del weights[j]
        del caps[j]
        insertions = _shift_down(spec.insertions, j)
        scales = _shift_down(spec.scales, j)
        loci = _shift_down(spec.loci, j)
    else:
        del signs[j if j < m else m - 1]
        del weights[j]
        caps[j] = caps[j] + caps[j + 1]
        del caps[j + 1]
        insertions = _shift_down(spec.insertions, j + 1)
        scales = _shift_down(spec.scales, j + 1)
        loci = _shift_down(spec.loci, j + 1)

    return replace(
        spec,
        m=m - 1,
        sigma=tuple(reversed(signs)),
        weights=tuple(reversed(weights)),
        caps=tuple(caps),
        insertions=insertions,
        scales=scales,
        loci=loci,
    )


def lift_reduced(series: MultiSeries, spec: NestedSpec, j: int) -> MultiSeries:
    """
    Map the expansion of `reduce_spec(spec, j)` onto the blocks of `spec`.

    Blocks above the collapsed one move up by one; in the MERGE case the merged block is
    shifted, t -> t_j + t_{j+1}. The result is truncated to the caps of `spec`.
    """
    kind = reduction_kind(spec, j)
    mapping = {
        block_name(i): block_name(i + 1)
        for i in range(j, spec.m + 1)
        if block_name(i) in series.caps
    }
    lifted = series.rename_blocks(mapping)
    if kind is ReductionKind.MERGE:
        lifted = shift_block(
            lifted, block_name(j), source=block_name(j + 1), new_cap=lifted.cap_of(block_name(j + 1))
        )
    return lifted.with_blocks(spec.blocks)
