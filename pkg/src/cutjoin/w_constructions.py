"""
Nested tau-functions as exponentials of conjugated bosonic modes acting on the kernel.

A conjugated spec fixes one O_+(p_i) = prod_j (1 + p_{i,j} z) per middle block and a base
weight O_(p_0). The weights of the nested spec are

    O_m = O_(p_m)^{-s_m}
    O_j = O_(p_{j+1})^{s_{j+1}} O_(p_j)^{-s_j}     (1 <= j <= m - 1)
    O_0 = O_(p_1)^{s_1} O_(p_0)                    (O_(p_0) alone when m = 0)

and the tau-function is, for every split 0 <= j <= m,

    O_(p_0)(t_0) prod_{i=1..j} exp(sum_k t_{i,k} W^{(p_i)}_{-s_i k}(t_0))
                 prod_{i=j+1..m} exp(sum_k t_{i,k} W^{(p_i)}_{s_i k}(t_{m+1})) exp(sum_k k t_{m+1,k} t_{0,k})

with W_{-k} = O k t_k O^-1 and W_k = O^-1 d/dt_k O.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from src.computation_monitor import computation_monitor
from src.errors import DomainError
from src.symfunc import Coeff, DeltaLocus, MultiSeries, as_coeff, cauchy_kernel, exp_series
from src.tau import NestedSpec, Sign, TauSeries, block_name
from src.weights import WeightGen, c_norm
from .exponential_action import exp_nilpotent_action, exp_operator_action
from .operators import diagonal_operator, w_family, w_operator
from .recursion import finish_series, schur_view_of

logger = logging.getLogger(__name__)


def _power(params: tuple[Coeff, ...], sign: Sign) -> WeightGen:
    g = WeightGen.g_plus(*params)
    return g if sign is Sign.PLUS else g.inverse()


@dataclass(frozen=True)
class ConjugatedSpec:
    """
    A nested tau-function given by conjugation parameters.

    Attributes:
        n (int): The charge.
        base (WeightGen): O_(p_0).
        params (tuple[tuple[Coeff, ...], ...]): (p_m, ..., p_1), each the roots of one O_+.
        sigma (tuple[Sign, ...]): (s_m, ..., s_1).
        caps (tuple[int, ...]): (D_0, ..., D_{m+1}).
        scales, loci: As in `NestedSpec`.
    """
    n: int
    base: WeightGen
    params: tuple[tuple[Coeff, ...], ...]
    sigma: tuple[Sign, ...]
    caps: tuple[int, ...]
    scales: tuple[tuple[int, Coeff], ...] = field(default=())
    loci: tuple[tuple[int, Any], ...] = field(default=())

    def __post_init__(self):
        sigma = tuple(s if isinstance(s, Sign) else Sign.from_char(s) for s in self.sigma)
        object.__setattr__(self, "sigma", sigma)
        params = tuple(tuple(as_coeff(u) for u in p) for p in self.params)
        object.__setattr__(self, "params", params)
        if len(params) != len(sigma):
            raise ValueError(f"Expected {len(sigma)} parameter tuples, got {len(params)}")
        if len(self.caps) != len(sigma) + 2:
            raise ValueError(f"Expected {len(sigma) + 2} caps, got {len(self.caps)}")

    @property
    def m(self) -> int:
        return len(self.sigma)

    def sign(self, i: int) -> Sign:
        """s_i for i in 1..m."""
        return self.sigma[self.m - i]

    def param(self, i: int) -> tuple[Coeff, ...]:
        """p_i for i in 1..m."""
        return self.params[self.m - i]

    def to_nested(self) -> NestedSpec:
        """The nested spec with the conjugated weights."""
        m = self.m
        if m == 0:
            weights = [self.base]
        else:
            by_level = {m: _power(self.param(m), self.sign(m).flipped)}
            for j in range(1, m):
                by_level[j] = _power(self.param(j + 1), self.sign(j + 1)) * _power(
                    self.param(j), self.sign(j).flipped
                )
            by_level[0] = _power(self.param(1), self.sign(1)) * self.base
            weights = [by_level[i] for i in range(m, -1, -1)]
        return NestedSpec(
            n=self.n, m=m, sigma=self.sigma, weights=tuple(weights), caps=self.caps,
            scales=self.scales, loci=self.loci,
        )


def working_caps(conj: ConjugatedSpec, split: int) -> tuple[int, int]:
    """Caps of t_{m+1} and t_0 while the lowering modes still have to act."""
    m = conj.m
    top = conj.caps[m + 1] + sum(
        conj.caps[i] for i in range(split + 1, m + 1) if conj.sign(i) is Sign.PLUS
    )
    bottom = conj.caps[0] + sum(
        conj.caps[i] for i in range(1, split + 1) if conj.sign(i) is Sign.MINUS
    )
    return top, bottom


@computation_monitor(logged_args=("split",))
def w_construction(conj: ConjugatedSpec, split: int = 0, *, check: bool = False) -> TauSeries:
    """
    Build the tau-function of `conj.to_nested()` from W-mode exponentials.

    Args:
        conj (ConjugatedSpec): The conjugation data.
        split (int): Blocks 1..split act on t_0, blocks split+1..m on t_{m+1}.
        check (bool): Verify that every mode family commutes before exponentiating.
    Raises:
        DomainError: `split` is outside 0..m.
        PoleAtContent: The base weight has a pole at a reachable content.
    """
    m = conj.m
    if not 0 <= split <= m:
        raise DomainError(f"Split {split} outside 0..{m}")
    top, bottom = block_name(m + 1), block_name(0)
    cap_top, cap_bottom = working_caps(conj, split)
    series = cauchy_kernel(top, bottom, cap_top, cap_bottom)

    for i in range(split + 1, m + 1):
        family = w_family(
            conj.param(i), conj.sign(i), top, conj.n, cap_top, conj.caps[i], image_only=True
        )
        series = exp_operator_action(block_name(i), family, series, conj.caps[i], check=check)
    for i in range(split, 0, -1):
        family = w_family(
            conj.param(i), conj.sign(i).flipped, bottom, conj.n, cap_bottom, conj.caps[i],
            image_only=True,
        )
        series = exp_operator_action(block_name(i), family, series, conj.caps[i], check=check)
    series = diagonal_operator(conj.base, conj.n, bottom, cap_bottom).apply(series)

    raw = series.truncate({top: conj.caps[m + 1], bottom: conj.caps[0]})
    spec = conj.to_nested()
    logger.debug("W construction with split %d holds %d terms", split, len(raw))
    return TauSeries(spec, finish_series(spec, raw), schur_view_of(spec, raw))


def _check_hbar(hbar) -> Fraction:
    hbar = Fraction(hbar)
    if hbar == 0:
        raise DomainError("hbar must be a non-zero rational")
    return hbar


def maps_w_series(hbar, cap: int) -> MultiSeries:
    """
    exp(W_{-2}(t_1) / (2 hbar)) 1 with O = O_+(hbar), a series in t_1.

    Equals the m = 0 tau-function with weight O_+(hbar) and t_0 = delta_{k,2} / (2 hbar).
    """
    hbar = _check_hbar(hbar)
    block = block_name(1)
    mode = w_operator((hbar,), Sign.MINUS, 2, block, 0, cap, image_only=True)
    mode = mode.scaled(1 / (2 * hbar))
    return exp_nilpotent_action(mode, MultiSeries.one(((block, cap),)))


def maps_spec(hbar, cap: int) -> NestedSpec:
    """The m = 0 spec `maps_w_series` reproduces."""
    hbar = _check_hbar(hbar)
    return NestedSpec(
        n=0, m=0, sigma=(), weights=(WeightGen.g_plus(hbar),), caps=(cap, cap),
        loci=((0, DeltaLocus(2, 1 / (2 * hbar))),),
    )


def fully_simple_w_series(hbar, cap_end: int, cap_middle: int) -> MultiSeries:
    """
    exp((1/hbar) sum_k t_{1,k} W_k(t_2)) exp(t_{2,2} / hbar) with O = O_+(hbar).

    Matches `fully_simple_spec(hbar, cap_end, cap_middle, cap_start)` for every
    cap_start >= cap_end + cap_middle.
    """
    hbar = _check_hbar(hbar)
    end, middle = block_name(2), block_name(1)
    working = cap_end + cap_middle
    seed = exp_series(MultiSeries.monomial(((end, working),), {end: {2: 1}}, 1 / hbar))
    family = w_family((hbar,), Sign.PLUS, end, 0, working, cap_middle, image_only=True)
    series = exp_operator_action(middle, family, seed, cap_middle, check=False)
    series = series.scale_block(middle, 1 / hbar).truncate({end: cap_end})
    return series.with_blocks(((end, cap_end), (middle, cap_middle)))


def hypergeometric_w_series(params, cap_end: int, cap_start: int, n: int = 0) -> MultiSeries:
    """
    c_n exp(sum_k t_{1,k} W_{-k}(t_0)) 1 with O = prod_j O_+(params_j).

    Equals `hypergeometric_operator_form(WeightGen.g_plus(*params), cap_end, cap_start, n)`.
    """
    params = tuple(params)
    start, end = block_name(0), block_name(1)
    family = w_family(params, Sign.MINUS, start, n, cap_start, cap_end, image_only=True)
    series = exp_operator_action(end, family, MultiSeries.one(((start, cap_start),)), cap_end)
    normalization = c_norm(WeightGen.g_plus(*params), n)
    return series.scaled(normalization).with_blocks(((end, cap_end), (start, cap_start)))
