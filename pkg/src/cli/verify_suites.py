"""
Verification suites.

Each suite is a list of named checks; a check returns (passed, detail) and never raises for
a mathematical mismatch. Library errors raised inside a check are reported as failures.

Suites:
    cauchy, hirota, cutjoin, superint, fullysimple, duality, reduction, stuffed, weights,
    recursion, wops; "all" runs every suite in that order.
"""
import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable

from src.computation_monitor import computation_monitor
from src.cutjoin import (
    ConjugatedSpec, Route, classical_cutjoin, commute_pairwise, cutjoin_from_differential,
    diagonal_operator, fully_simple_w_series, hypergeometric_operator_form,
    hypergeometric_w_series, maps_spec, maps_w_series, single_plus_route, tau_by_recursion,
    w_construction, w_family
)
from src.errors import SpecParseError, TauForgeError
from src.partitions import (
    Partition, contains, content_sum, enumerate_partitions, lr_coefficient,
    lr_coefficient_characters, partitions_of, sym_character, z_centralizer
)
from src.symfunc import (
    Key, Miwa, MultiSeries, Scalar, cauchy_kernel, exp_nilpotent, exps_from_mapping,
    key_to_str, schur, skew_schur, specialize, to_schur_basis
)
from src.tau import (
    NestedSpec, Sign, corrupt_series, dual_spec, expand_tau, fully_simple_spec, hirota_check,
    hypergeometric_spec, lift_reduced, reduce_spec, relabel_dual
)
from src.weights import WeightGen, content_product, schur_ratio
from src.wick import (
    Attachment, ChainNode, DiagonalLetter, Ensemble, Letter, MatrixChainPlan, NodeKind,
    SchurInsertion, chain_evaluate, expectation, plan_from_spec, simpfs_plan
)

logger = logging.getLogger(__name__)

Outcome = tuple[bool, str]
CheckFunc = Callable[[bool], Outcome]


@dataclass(frozen=True)
class Check:
    """A named check; `run(corrupt)` returns (passed, detail)."""
    name: str
    caps: str
    run: CheckFunc


@dataclass(frozen=True)
class CheckResult:
    """
    One row of a verification report.

    Attributes:
        check (str): Check name, prefixed by its suite.
        caps (str): The truncation the check ran at.
        passed (bool): Whether both sides agreed.
        elapsed (float): Wall time in seconds.
        detail (str): Agreement summary or the first disagreement.
    """
    check: str
    caps: str
    passed: bool
    elapsed: float
    detail: str

    def to_row(self) -> list[str]:
        return [self.check, self.caps, str(self.passed).lower(), f"{self.elapsed:.3f}", self.detail]

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "caps": self.caps,
            "passed": self.passed,
            "elapsed": round(self.elapsed, 6),
            "detail": self.detail,
        }


REPORT_COLUMNS = ("check", "caps", "passed", "elapsed", "detail")


def compare_series(left: MultiSeries, right: MultiSeries) -> Outcome:
    """(equal, detail naming the first differing monomial)."""
    if left == right:
        return True, f"{len(left)} terms agree"
    keys = sorted(set(left.terms) | set(right.terms), key=left.sort_key)
    for key in keys:
        a, b = left.coefficient(key), right.coefficient(key)
        if a != b:
            return False, f"coefficient of {key_to_str(key)}: {a} != {b}"
    return False, "series differ"


def _all_of(outcomes: list[tuple[str, Outcome]]) -> Outcome:
    for label, (passed, detail) in outcomes:
        if not passed:
            return False, f"{label}: {detail}"
    return True, f"{len(outcomes)} cases agree"


def _partition_key(block: str, mu: Partition) -> Key:
    return ((block, exps_from_mapping(mu.multiplicities())),) if mu else ()


def _monomials(blocks: tuple[str, ...], max_degree: int, cap: int | None = None) -> list[Key]:
    """Every monomial in the blocks of total degree at most max_degree, each block within `cap`."""
    keys: list[Key] = [()]
    for block in blocks:
        extended = []
        for key in keys:
            used = sum(k * a for _, exps in key for k, a in exps)
            room = max_degree - used if cap is None else min(cap, max_degree - used)
            for mu in enumerate_partitions(room):
                extended.append(tuple(sorted(key + _partition_key(block, mu))))
        keys = extended
    return keys


# Cauchy and Littlewood-Richardson

def _cauchy_sum(corrupt: bool) -> Outcome:
    cap = 4
    blocks = (("a", cap), ("b", cap))
    total = MultiSeries(blocks)
    for lam in enumerate_partitions(cap):
        total = total + schur(lam, "a", cap).with_blocks(blocks) * schur(lam, "b", cap).with_blocks(blocks)
    return compare_series(total, cauchy_kernel("a", "b", cap, cap))


def _skew_cauchy(corrupt: bool) -> Outcome:
    cap = 3
    blocks = (("a", cap), ("b", cap))
    kernel = cauchy_kernel("a", "b", cap, cap)
    outcomes = []
    for mu in enumerate_partitions(2):
        for nu in enumerate_partitions(2):
            left = MultiSeries(blocks)
            for lam in enumerate_partitions(min(mu.size, nu.size) + cap):
                if not (contains(lam, mu) and contains(lam, nu)):
                    continue
                left = left + (
                    skew_schur(lam, mu, "a", cap).with_blocks(blocks)
                    * skew_schur(lam, nu, "b", cap).with_blocks(blocks)
                )
            inner = MultiSeries(blocks)
            for tau in enumerate_partitions(min(mu.size, nu.size)):
                if not (contains(nu, tau) and contains(mu, tau)):
                    continue
                inner = inner + (
                    skew_schur(nu, tau, "a", cap).with_blocks(blocks)
                    * skew_schur(mu, tau, "b", cap).with_blocks(blocks)
                )
            outcomes.append((f"mu={mu} nu={nu}", compare_series(left, kernel * inner)))
    return _all_of(outcomes)


def _lr_three_ways(corrupt: bool) -> Outcome:
    outcomes = []
    for mu in enumerate_partitions(3):
        for nu in enumerate_partitions(3):
            degree = mu.size + nu.size
            if degree > 5:
                continue
            expansion = to_schur_basis(schur(mu, "t", degree) * schur(nu, "t", degree))
            for lam in partitions_of(degree):
                tableau = lr_coefficient(lam, mu, nu)
                characters = lr_coefficient_characters(lam, mu, nu)
                product = expansion.get(lam, 0)
                outcomes.append((
                    f"c^{lam}_{mu},{nu}",
                    (tableau == characters == product, f"{tableau}, {characters}, {product}"),
                ))
    return _all_of(outcomes)


# Hirota

def _hirota_outcome(series: MultiSeries, block: str, degree: int = 4) -> Outcome:
    result = hirota_check(series, block, degree)
    return result.passed, result.describe()


def _hirota_vacuum(corrupt: bool) -> Outcome:
    return _hirota_outcome(cauchy_kernel("t1", "t0", 4, 4), "t1")


def _hirota_hypergeometric(corrupt: bool) -> Outcome:
    spec = hypergeometric_spec(WeightGen.g_plus(Fraction(1, 2)), 4, 4)
    series = expand_tau(spec).series
    if corrupt:
        series = corrupt_series(series, "t1", Partition.of(1))
    return _hirota_outcome(series, "t1")


def _hirota_nested(corrupt: bool) -> Outcome:
    spec = NestedSpec(
        n=0, m=1, sigma=(Sign.PLUS,),
        weights=(WeightGen.g_minus(Fraction(2, 3)), WeightGen.g_plus(Fraction(1, 2))),
        caps=(3, 2, 4),
    )
    series = expand_tau(spec).series
    if corrupt:
        series = corrupt_series(series, "t2", Partition.of(2))
    return _hirota_outcome(series, "t2")


# Cut-and-join

def _gexp_is_cutjoin(corrupt: bool) -> Outcome:
    cap = 5
    lhs = diagonal_operator(WeightGen.g_exp(1, "w", 4), 0, "t", cap)
    rhs = classical_cutjoin("t", 0, cap).scaled(Scalar.param("w", 4)).exp_nilpotent()
    outcomes = [
        (f"lam={lam}", (lhs.eigenvalue(lam) == rhs.eigenvalue(lam), f"{lhs.eigenvalue(lam)} != {rhs.eigenvalue(lam)}"))
        for lam in enumerate_partitions(cap)
    ]
    outcomes.append(("diagonal", (rhs.is_diagonal(), "exp of the cut-and-join is not diagonal")))
    return _all_of(outcomes)


def _cutjoin_differential(corrupt: bool) -> Outcome:
    outcomes = []
    for n in (0, 1, 2):
        differential = cutjoin_from_differential("t", n, 4)
        classical = classical_cutjoin("t", n, 4)
        agree = differential.is_diagonal() and all(
            differential.eigenvalue(lam) == classical.eigenvalue(lam) for lam in enumerate_partitions(4)
        )
        outcomes.append((f"n={n}", (agree, "operators differ")))
    return _all_of(outcomes)


def _w_commute(corrupt: bool) -> Outcome:
    outcomes = []
    for sign in (Sign.PLUS, Sign.MINUS):
        family = w_family((Fraction(1, 2), Fraction(1, 3)), sign, "t", 0, 4, 3, image_only=True)
        outcomes.append((f"sign {sign.value}", (commute_pairwise(family.values()), "a commutator is non-zero")))
    return _all_of(outcomes)


def _operator_sides(corrupt: bool) -> Outcome:
    weight = WeightGen.g_plus(Fraction(1, 2)) * WeightGen.g_exp(1, "w", 3)
    expanded = expand_tau(hypergeometric_spec(weight, 3, 3)).series
    return _all_of([
        (side, compare_series(hypergeometric_operator_form(weight, 3, 3, side=side), expanded))
        for side in ("end", "start")
    ])


# Superintegrability

def _complex_superint(corrupt: bool) -> Outcome:
    outcomes = []
    for size in (1, 2, 3):
        for lam in enumerate_partitions(3):
            plan = MatrixChainPlan(
                nodes=(ChainNode("Z", NodeKind.COMPLEX, size),),
                attachments=(Attachment("t1", Letter("Z")),),
                insertion=SchurInsertion(lam, Letter("Z", True)),
            )
            ratio = content_product(WeightGen.g_plus(Fraction(1, size)), lam)
            expected_series = schur(lam, "t1", lam.size)
            for mu in partitions_of(lam.size):
                key = _partition_key("t1", mu)
                expected = ratio * expected_series.coefficient(key)
                got = chain_evaluate(plan, key)
                outcomes.append((f"N={size} lam={lam} p_{mu}", (got == expected, f"{got} != {expected}")))
    return _all_of(outcomes)


def _unitary_superint(corrupt: bool) -> Outcome:
    outcomes = []
    for size in (1, 2):
        spec = NestedSpec(
            n=0, m=0, sigma=(), weights=(WeightGen.g_minus(Fraction(1, size)),), caps=(2, 2),
            max_length=size,
        )
        series = expand_tau(spec).series
        plan = plan_from_spec(spec, size)
        for key in _monomials(("t1", "t0"), 4, cap=2):
            expected = series.coefficient(key)
            got = chain_evaluate(plan, key)
            outcomes.append((f"N={size} {key_to_str(key)}", (got == expected, f"{got} != {expected}")))
    return _all_of(outcomes)


def _hciz(corrupt: bool) -> Outcome:
    size = 2
    a, b = (Fraction(1), Fraction(2)), (Fraction(1), Fraction(3))
    ensembles = {"U": (Ensemble.UNITARY, size)}
    word = (DiagonalLetter(a), Letter("U"), DiagonalLetter(b), Letter("U", True))
    outcomes = []
    for lam in enumerate_partitions(2):
        if lam.length > size:
            continue
        total = Fraction(0)
        for coeff, traces in _schur_of_word(lam, word):
            total = total + coeff * expectation(traces, ensembles)
        s_a = specialize(schur(lam, "t"), Miwa(a))
        s_b = specialize(schur(lam, "t"), Miwa(b))
        s_one = specialize(schur(lam, "t"), Miwa((Fraction(1),) * size))
        expected = s_a * s_b / s_one
        outcomes.append((f"lam={lam}", (total == expected, f"{total} != {expected}")))
    return _all_of(outcomes)


def _schur_of_word(lam: Partition, word: tuple) -> list:
    """s_lam of the product matrix `word` as (coefficient, traces) terms."""
    terms = []
    for mu in partitions_of(lam.size):
        chi = sym_character(lam, mu)
        if chi != 0:
            terms.append((Fraction(chi, z_centralizer(mu)), tuple(word * part for part in mu)))
    return terms


# Fully simple and maps

def _simpfs_spec(size: int, cap: int) -> NestedSpec:
    weight = WeightGen.g_plus(Fraction(1, size))
    return NestedSpec(
        n=0, m=1, sigma=(Sign.PLUS,), weights=(weight.inverse(), weight), caps=(cap, cap, cap),
        scales=((1, size), (0, size)), max_length=size,
    )


def _simpfs_matrix_model(corrupt: bool) -> Outcome:
    outcomes = []
    for size in (2, 3):
        series = expand_tau(_simpfs_spec(size, 4)).series
        plan = simpfs_plan(size)
        for key in _monomials(("t2", "t1", "t0"), 4):
            expected = series.coefficient(key)
            got = chain_evaluate(plan, key)
            outcomes.append((f"N={size} {key_to_str(key)}", (got == expected, f"{got} != {expected}")))
    return _all_of(outcomes)


def _maps(corrupt: bool) -> Outcome:
    return compare_series(maps_w_series(1, 4), expand_tau(maps_spec(1, 4)).series)


def _fully_simple(corrupt: bool) -> Outcome:
    return compare_series(
        fully_simple_w_series(1, 2, 2), expand_tau(fully_simple_spec(Fraction(1), 2, 2, 4)).series
    )


# Duality and reduction

_PARAM_POOL = (Fraction(2, 3), Fraction(3, 5), Fraction(-2, 5))


def _random_weight(rng: random.Random) -> WeightGen:
    weight = WeightGen.trivial()
    for _ in range(rng.randint(0, 2)):
        factor = rng.choice((WeightGen.g_plus, WeightGen.g_minus))
        weight = weight * factor(rng.choice(_PARAM_POOL))
    return weight


def random_specs(seed: int, count: int, max_m: int = 2, max_cap: int = 3) -> list[NestedSpec]:
    """Random plain specs whose weights have no pole at an integer content."""
    rng = random.Random(seed)
    specs = []
    for _ in range(count):
        m = rng.randint(0, max_m)
        specs.append(NestedSpec(
            n=rng.randint(0, 1), m=m,
            sigma=tuple(rng.choice((Sign.PLUS, Sign.MINUS)) for _ in range(m)),
            weights=tuple(_random_weight(rng) for _ in range(m + 1)),
            caps=tuple(rng.randint(1, max_cap) for _ in range(m + 2)),
        ))
    return specs


def _duality(corrupt: bool) -> Outcome:
    outcomes = []
    for index, spec in enumerate(random_specs(seed=7, count=20)):
        direct = expand_tau(spec).series
        mirrored = relabel_dual(expand_tau(dual_spec(spec)).series, spec.m)
        outcomes.append((f"spec {index}", compare_series(mirrored, direct)))
    return _all_of(outcomes)


def _reduction_outcome(spec: NestedSpec, j: int) -> Outcome:
    lifted = lift_reduced(expand_tau(reduce_spec(spec, j)).series, spec, j)
    return compare_series(lifted, expand_tau(spec).series)


def _reduction_drop(corrupt: bool) -> Outcome:
    outcomes = []
    for index, spec in enumerate(random_specs(seed=11, count=12)):
        if spec.m == 0:
            continue
        caps = list(spec.caps)
        caps[1] = 0
        outcomes.append((f"spec {index}", _reduction_outcome(spec.with_caps(tuple(caps)), 1)))
    return _all_of(outcomes)


def _reduction_merge(corrupt: bool) -> Outcome:
    g = WeightGen.g_plus(Fraction(1, 2))
    h = WeightGen.g_minus(Fraction(2, 3))
    top = NestedSpec(n=0, m=1, sigma=(Sign.PLUS,), weights=(WeightGen.trivial(), g), caps=(3, 2, 3))
    bottom = NestedSpec(n=0, m=1, sigma=(Sign.MINUS,), weights=(g, WeightGen.trivial()), caps=(3, 2, 3))
    deep = NestedSpec(
        n=1, m=2, sigma=(Sign.MINUS, Sign.MINUS), weights=(h, WeightGen.trivial(), g), caps=(2, 2, 2, 2),
    )
    return _all_of([
        ("top merge", _reduction_outcome(top, 1)),
        ("bottom merge", _reduction_outcome(bottom, 0)),
        ("middle merge", _reduction_outcome(deep, 1)),
    ])


# Stuffed insertions

def _insertion_resummation(corrupt: bool) -> Outcome:
    outcomes = []
    for sign in (Sign.PLUS, Sign.MINUS):
        base = NestedSpec(
            n=0, m=1, sigma=(sign,),
            weights=(WeightGen.g_minus(Fraction(2, 3)), WeightGen.g_plus(Fraction(1, 2))),
            caps=(3, 2, 3),
        )
        blocks = base.blocks
        total = MultiSeries(blocks)
        for nu in enumerate_partitions(base.cap(1)):
            inserted = expand_tau(replace(base, insertions=((1, nu),))).series
            total = total + inserted.with_blocks(blocks) * schur(nu, "t1", base.cap(1)).with_blocks(blocks)
        outcomes.append((f"sign {sign.value}", compare_series(total, expand_tau(base).series)))
    return _all_of(outcomes)


def _skew_lr(corrupt: bool) -> Outcome:
    outcomes = []
    for lam in enumerate_partitions(4):
        for mu in enumerate_partitions(lam.size):
            if not contains(lam, mu):
                continue
            expansion = to_schur_basis(skew_schur(lam, mu, "t"))
            for nu in partitions_of(lam.size - mu.size):
                expected = lr_coefficient(lam, mu, nu)
                got = expansion.get(nu, 0)
                outcomes.append((f"{lam}/{mu} on {nu}", (got == expected, f"{got} != {expected}")))
    return _all_of(outcomes)


# Weights

def _schur_ratio(corrupt: bool) -> Outcome:
    outcomes = []
    for size in range(1, 5):
        weight = WeightGen.g_plus(Fraction(1, size))
        for lam in enumerate_partitions(4):
            got, expected = schur_ratio(lam, size), content_product(weight, lam)
            outcomes.append((f"N={size} lam={lam}", (got == expected, f"{got} != {expected}")))
    return _all_of(outcomes)


def _reciprocity(corrupt: bool) -> Outcome:
    outcomes = []
    for u in _PARAM_POOL:
        for n in (0, 1):
            for lam in enumerate_partitions(4):
                value = content_product(WeightGen.g_plus(u), lam, n) * content_product(WeightGen.g_minus(u), lam, n)
                outcomes.append((f"u={u} n={n} lam={lam}", (value == 1, f"product is {value}")))
    return _all_of(outcomes)


def _multiplicativity(corrupt: bool) -> Outcome:
    first = WeightGen.g_plus(Fraction(1, 2))
    second = WeightGen.g_minus(Fraction(2, 3)) * WeightGen.g_exp(1, "w", 3)
    outcomes = []
    for lam in enumerate_partitions(4):
        joint = content_product(first * second, lam)
        split = content_product(first, lam) * content_product(second, lam)
        outcomes.append((f"lam={lam}", (joint == split, f"{joint} != {split}")))
        exp_side = exp_nilpotent(Scalar.param("w", 3, content_sum(lam)))
        exp_direct = content_product(WeightGen.g_exp(1, "w", 3), lam)
        outcomes.append((f"exp lam={lam}", (exp_side == exp_direct, f"{exp_side} != {exp_direct}")))
    return _all_of(outcomes)


# Recursion and W-operators

def _recursion_specs() -> list[NestedSpec]:
    g = WeightGen.g_plus(Fraction(1, 2))
    h = WeightGen.g_minus(Fraction(2, 3))
    return [
        NestedSpec(n=0, m=1, sigma=(Sign.PLUS,), weights=(h, g), caps=(3, 2, 3)),
        NestedSpec(n=1, m=1, sigma=(Sign.MINUS,), weights=(g, h), caps=(3, 2, 3)),
        NestedSpec(n=0, m=2, sigma=(Sign.PLUS, Sign.MINUS), weights=(g, h, g), caps=(2, 2, 2, 2)),
        NestedSpec(n=0, m=2, sigma=(Sign.MINUS, Sign.PLUS), weights=(h, g, h), caps=(2, 2, 2, 2)),
    ]


def _recursion(corrupt: bool) -> Outcome:
    return _all_of([
        (f"spec {index}", compare_series(tau_by_recursion(spec).series, expand_tau(spec).series))
        for index, spec in enumerate(_recursion_specs())
    ])


def _routes(corrupt: bool) -> Outcome:
    spec = _recursion_specs()[0]
    expected = expand_tau(spec).series
    return _all_of([(route.value, compare_series(single_plus_route(spec, route), expected)) for route in Route])


def _w_constructions(corrupt: bool) -> Outcome:
    base = WeightGen.g_plus(Fraction(1, 2))
    specs = [
        ConjugatedSpec(n=0, base=base, params=((Fraction(2, 3),),), sigma=(Sign.PLUS,), caps=(2, 2, 2)),
        ConjugatedSpec(n=0, base=base, params=((Fraction(2, 3),),), sigma=(Sign.MINUS,), caps=(2, 2, 2)),
        ConjugatedSpec(
            n=0, base=base, params=((Fraction(2, 3),), (Fraction(-2, 5),)),
            sigma=(Sign.PLUS, Sign.MINUS), caps=(2, 2, 2, 2),
        ),
    ]
    outcomes = []
    for index, conj in enumerate(specs):
        expected = expand_tau(conj.to_nested()).series
        for split in range(conj.m + 1):
            outcomes.append((f"spec {index} split {split}", compare_series(w_construction(conj, split).series, expected)))
    return _all_of(outcomes)


def _hypergeometric_w(corrupt: bool) -> Outcome:
    params = (Fraction(1, 2),)
    return compare_series(
        hypergeometric_w_series(params, 3, 3),
        hypergeometric_operator_form(WeightGen.g_plus(*params), 3, 3),
    )


SUITES: dict[str, list[Check]] = {
    "cauchy": [
        Check("cauchy.kernel_sum", "D=4,4", _cauchy_sum),
        Check("cauchy.skew_summation", "D=3,3", _skew_cauchy),
        Check("cauchy.lr_three_ways", "|lam|<=5", _lr_three_ways),
    ],
    "hirota": [
        Check("hirota.vacuum", "D=4,4", _hirota_vacuum),
        Check("hirota.hypergeometric", "D=4,4", _hirota_hypergeometric),
        Check("hirota.nested", "D=3,2,4", _hirota_nested),
    ],
    "cutjoin": [
        Check("cutjoin.gexp", "D=5", _gexp_is_cutjoin),
        Check("cutjoin.differential", "D=4", _cutjoin_differential),
        Check("cutjoin.w_commute", "D=4", _w_commute),
        Check("cutjoin.operator_sides", "D=3,3", _operator_sides),
    ],
    "superint": [
        Check("superint.complex", "N<=3,|lam|<=3", _complex_superint),
        Check("superint.unitary", "N<=2,D=2,2", _unitary_superint),
        Check("superint.hciz", "N=2,|lam|<=2", _hciz),
    ],
    "fullysimple": [
        Check("fullysimple.matrix_model", "N=2,3,deg<=4", _simpfs_matrix_model),
        Check("fullysimple.maps", "D=4", _maps),
        Check("fullysimple.w_operators", "D=2,2,4", _fully_simple),
    ],
    "duality": [Check("duality.random", "D<=3", _duality)],
    "reduction": [
        Check("reduction.drop", "D<=3", _reduction_drop),
        Check("reduction.merge", "D<=3", _reduction_merge),
    ],
    "stuffed": [
        Check("stuffed.resummation", "D=3,2,3", _insertion_resummation),
        Check("stuffed.skew_lr", "|lam|<=4", _skew_lr),
    ],
    "weights": [
        Check("weights.schur_ratio", "N<=4,|lam|<=4", _schur_ratio),
        Check("weights.reciprocity", "|lam|<=4", _reciprocity),
        Check("weights.multiplicativity", "|lam|<=4", _multiplicativity),
    ],
    "recursion": [
        Check("recursion.steps", "D<=3", _recursion),
        Check("recursion.routes", "D=3,2,3", _routes),
    ],
    "wops": [
        Check("wops.constructions", "D=2", _w_constructions),
        Check("wops.hypergeometric", "D=3,3", _hypergeometric_w),
    ],
}


def suite_checks(name: str) -> list[Check]:
    """
    The checks of a suite, "all" for every suite.

    Raises:
        SpecParseError: Unknown suite name.
    """
    if name == "all":
        return [check for checks in SUITES.values() for check in checks]
    if name not in SUITES:
        raise SpecParseError(f"Unknown suite {name!r}, expected one of {', '.join(SUITES)} or all")
    return list(SUITES[name])


def run_check(check: Check, corrupt: bool = False) -> CheckResult:
    """Run one check, timing it; library errors become failed rows."""
    start = time.perf_counter()
    try:
        passed, detail = check.run(corrupt)
    except TauForgeError as exc:
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    logger.info("%s %s in %.3fs", check.name, "passed" if passed else "FAILED", elapsed)
    return CheckResult(check.name, check.caps, passed, elapsed, detail)


@computation_monitor(logged_args=("name", "jobs", "corrupt"), size=len)
def run_suite(name: str, jobs: int = 1, corrupt: bool = False) -> list[CheckResult]:
    """
    Run a suite; results keep the suite order whatever the number of workers.

    Args:
        name (str): Suite name or "all".
        jobs (int): Worker threads.
        corrupt (bool): Perturb the checks that support it, which must then fail.
    """
    checks = suite_checks(name)
    if jobs <= 1:
        return [run_check(check, corrupt) for check in checks]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda check: run_check(check, corrupt), checks))
