"""
Nested tau-functions built level by level with diagonal operators.

    level 0:           tau_0 = O_0(t_1) exp(sum_k k t_{1,k} t_{0,k})
    level l, s_l = -:  tau_l = O_l(t_{l+1}) [exp(sum_k k t_{l+1,k} t_{l,k}) tau_{l-1}(t_{l+1}, ...)]
    level l, s_l = +:  tau_l = O_l(t_{l+1}) tau_{l-1}(t_{l+1} + t_l, ...)

O_l(t) is the diagonal operator s_lam(t) -> c_n r_{lam,n} s_lam(t). A shift by t_l spends
degree of the top block, so the top cap at level l is D_{m+1} plus the caps of the later
blocks entered with a + sign.

Functions:
    recursion_step / tau_by_recursion: the level-by-level construction.
    hypergeometric_operator_form: the m = 0 tau-function from one operator and the kernel.
    single_plus_route: three operator routes to the m = 1, s = + tau-function.
"""
import logging
from enum import Enum

from src.computation_monitor import computation_monitor
from src.errors import DomainError
from src.symfunc import (
    MultiSeries, cauchy_kernel, schur_components, shift_block, specialize_block
)
from src.tau import NestedSpec, Sign, TauSeries, block_name, middle_blocks
from src.weights import WeightGen
from .operators import diagonal_operator

logger = logging.getLogger(__name__)


class Route(Enum):
    """Operator routes to the m = 1, s = + tau-function."""
    MERGE = "merge"
    BOTH = "both"
    START = "start"

    @classmethod
    def from_char(cls, name: str) -> "Route":
        """Parse a route name."""
        try:
            return cls(name)
        except ValueError as exc:
            raise DomainError(f"Unknown route {name!r}, expected one of merge/both/start") from exc


def top_caps(spec: NestedSpec) -> tuple[int, ...]:
    """Cap of the top block at levels 0..m."""
    caps = [spec.cap(spec.m + 1)]
    for level in range(spec.m, 0, -1):
        extra = spec.cap(level) if spec.sign(level) is Sign.PLUS else 0
        caps.append(caps[-1] + extra)
    return tuple(reversed(caps))


def hypergeometric_operator_form(
    weight: WeightGen, cap_end: int, cap_start: int, n: int = 0, side: str = "end"
) -> MultiSeries:
    """
    sum_lam c_n r_{lam,n} s_lam(t_1) s_lam(t_0) as O(t_1) or O(t_0) acting on the kernel.

    Raises:
        ValueError: `side` is neither "end" nor "start".
    """
    kernel = cauchy_kernel(block_name(1), block_name(0), cap_end, cap_start)
    if side == "end":
        return diagonal_operator(weight, n, block_name(1), cap_end).apply(kernel)
    if side == "start":
        return diagonal_operator(weight, n, block_name(0), cap_start).apply(kernel)
    raise ValueError(f"side must be 'end' or 'start', got {side!r}")


def _extended_spec(spec: NestedSpec, weight: WeightGen, sign: Sign, cap_new: int, cap_top: int) -> NestedSpec:
    if spec.insertions or spec.scales or spec.loci or spec.max_length is not None:
        raise DomainError("Only plain specs are extended by a recursion step")
    return NestedSpec(
        n=spec.n, m=spec.m + 1, sigma=(sign,) + spec.sigma, weights=(weight,) + spec.weights,
        caps=spec.caps[:-1] + (cap_new, cap_top),
    )


def recursion_step(
    previous: TauSeries | MultiSeries,
    level: int,
    weight: WeightGen,
    sign: Sign | str,
    cap_new: int,
    cap_top: int | None = None,
    n: int = 0,
) -> TauSeries | MultiSeries:
    """
    Add block t_level below a new top block t_{level+1}.

    Args:
        previous (TauSeries | MultiSeries): tau_{level-1}, whose top block is t_level.
        level (int): The new level, at least 1.
        weight (WeightGen): O_level.
        sign (Sign | str): s_level.
        cap_new (int): Cap of the new middle block t_level.
        cap_top (int | None): Cap of the new top block; as large as `previous` allows by default.
        n (int): The charge, taken from the spec for a TauSeries.
    Returns:
        tau_level with blocks t_{level+1}, t_level, then the older blocks; a TauSeries over the
        extended spec when `previous` is one.
    Raises:
        DomainError: The top cap of `previous` is too small, or the layout does not match.
    """
    if level < 1:
        raise DomainError(f"Recursion levels start at 1, got {level}")
    sign = sign if isinstance(sign, Sign) else Sign.from_char(sign)
    if isinstance(previous, TauSeries):
        if previous.spec.m != level - 1:
            raise DomainError(f"Level {level} needs a tau-function with m = {level - 1}")
        raw = recursion_step(previous.series, level, weight, sign, cap_new, cap_top, previous.spec.n)
        spec = _extended_spec(previous.spec, weight, sign, cap_new, raw.cap_of(block_name(level + 1)))
        return TauSeries(spec, raw.with_blocks(spec.blocks), schur_view_of(spec, raw))
    old_top, new_top, new_block = block_name(level), block_name(level + 1), block_name(level)
    if old_top not in previous.caps or new_top in previous.caps:
        raise DomainError(f"Level {level} needs top block {old_top} and no block {new_top}")
    available = previous.cap_of(old_top)
    needed_extra = cap_new if sign is Sign.PLUS else 0
    if cap_top is None:
        cap_top = available - needed_extra
    if cap_top < 0 or cap_top + needed_extra > available:
        raise DomainError(
            f"Level {level} needs top cap {cap_top + needed_extra}, previous level has {available}"
        )
    lifted = previous.rename_block(old_top, new_top)
    if sign is Sign.MINUS:
        kernel = cauchy_kernel(new_top, new_block, cap_top, cap_new)
        body = (lifted * kernel).truncate({new_top: cap_top})
    else:
        body = shift_block(lifted, new_block, source=new_top, new_cap=cap_new)
        body = body.truncate({new_top: cap_top})
    rest = tuple((name, cap) for name, cap in body.blocks if name not in (new_top, new_block))
    body = body.with_blocks(((new_top, cap_top), (new_block, cap_new)) + rest)
    return diagonal_operator(weight, n, new_top, cap_top).apply(body)


def _check_plain(spec: NestedSpec) -> None:
    if spec.insertions:
        raise DomainError("The operator construction has no Schur insertions")
    if spec.max_length is not None:
        raise DomainError("The operator construction does not bound partition lengths")


def finish_series(spec: NestedSpec, raw: MultiSeries) -> MultiSeries:
    """Apply the scales and loci of the spec and declare its variable blocks."""
    series = raw
    for j, factor in spec.scales:
        series = series.scale_block(block_name(j), factor)
    for j, rule in spec.loci:
        series = specialize_block(series, block_name(j), rule)
    return series.with_blocks(spec.blocks)


def schur_view_of(spec: NestedSpec, raw: MultiSeries) -> dict:
    """Double-Schur view of a raw series; empty when a boundary block is rescaled or specialized."""
    top, bottom = spec.m + 1, 0
    if any(spec.scale(j) is not None or spec.locus(j) is not None for j in (top, bottom)):
        return {}
    middle = raw
    for j, factor in spec.scales:
        middle = middle.scale_block(block_name(j), factor)
    for j, rule in spec.loci:
        middle = specialize_block(middle, block_name(j), rule)
    mids = middle_blocks(spec)
    view = {}
    for end, component in schur_components(middle, block_name(top)).items():
        for start, inner in schur_components(component, block_name(bottom)).items():
            inner = inner.with_blocks(mids)
            if not inner.is_zero():
                view[(end, start)] = inner
    return view


def _series_size(tau: TauSeries) -> int:
    return len(tau.series)


@computation_monitor(logged_args=("spec",), size=_series_size)
def tau_by_recursion(spec: NestedSpec) -> TauSeries:
    """
    The tau-function of a spec without insertions, built level by level.

    Raises:
        DomainError: The spec carries insertions or a length bound.
        PoleAtContent: A weight has a pole at a reachable content.
    """
    _check_plain(spec)
    caps = top_caps(spec)
    raw = hypergeometric_operator_form(spec.weight(0), caps[0], spec.cap(0), spec.n)
    for level in range(1, spec.m + 1):
        raw = recursion_step(
            raw, level, spec.weight(level), spec.sign(level),
            spec.cap(level), caps[level], spec.n,
        )
        logger.debug("level %d holds %d terms", level, len(raw))
    return TauSeries(spec, finish_series(spec, raw), schur_view_of(spec, raw))


def single_plus_route(spec: NestedSpec, route: Route | str) -> MultiSeries:
    """
    The m = 1, s = + tau-function through one of three operator routes.

        merge: O_1(t_2) [O_0(t_2) exp(sum k t_2 t_0)] at t_2 -> t_1 + t_2
        both:  O_1(t_2) O_0(t_0) exp(sum k (t_1 + t_2) t_0)
        start: O_0(t_0) [exp(sum k t_0 t_1) O_1(t_0) exp(sum k t_0 t_2)]

    Raises:
        DomainError: The spec is not m = 1 with s_1 = +, or carries insertions.
    """
    _check_plain(spec)
    if spec.m != 1 or spec.sign(1) is not Sign.PLUS:
        raise DomainError("Operator routes exist for m = 1 with s_1 = + only")
    route = route if isinstance(route, Route) else Route.from_char(route)
    d0, d1, d2 = spec.cap(0), spec.cap(1), spec.cap(2)
    t0, t1, t2 = block_name(0), block_name(1), block_name(2)
    outer, inner, n = spec.weight(1), spec.weight(0), spec.n
    blocks = ((t2, d2), (t1, d1), (t0, d0))

    if route is Route.MERGE:
        kernel = cauchy_kernel(t2, t0, d2 + d1, d0)
        seed = diagonal_operator(inner, n, t2, d2 + d1).apply(kernel)
        body = shift_block(seed, t1, source=t2, new_cap=d1).truncate({t2: d2}).with_blocks(blocks)
        raw = diagonal_operator(outer, n, t2, d2).apply(body)
    elif route is Route.BOTH:
        kernel = cauchy_kernel(t2, t0, d2 + d1, d0)
        body = shift_block(kernel, t1, source=t2, new_cap=d1).truncate({t2: d2}).with_blocks(blocks)
        body = diagonal_operator(inner, n, t0, d0).apply(body)
        raw = diagonal_operator(outer, n, t2, d2).apply(body)
    else:
        right = diagonal_operator(outer, n, t0, d0).apply(cauchy_kernel(t0, t2, d0, d2))
        body = (cauchy_kernel(t0, t1, d0, d1) * right).with_blocks(blocks)
        raw = diagonal_operator(inner, n, t0, d0).apply(body)
    return finish_series(spec, raw)
