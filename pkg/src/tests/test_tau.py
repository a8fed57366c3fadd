"""
Tests for tau: nested specs, chain enumeration, the skew Schur expansion, targeted
queries, duality, reductions and the Hirota check.
"""
import json
from dataclasses import replace
from fractions import Fraction

import pytest

from src.errors import DomainError, PoleAtContent, SpecParseError, TruncationError
from src.partitions import Partition, enumerate_partitions
from src.symfunc import DeltaLocus, cauchy_kernel, make_key, schur
from src.tau import (
    NestedSpec, ReductionKind, Sign, coefficient_of, corrupt_series, double_schur_coefficient,
    dual_spec, enumerate_chains, expand_tau, fully_simple_spec, hirota_check,
    hypergeometric_spec, lift_reduced, load_spec, reduce_spec, reduction_kind, relabel_dual,
    series_from_view, superintegrability_prediction
)
from src.weights import WeightGen, content_product

HALF = Fraction(1, 2)
G = WeightGen.g_plus(HALF)
H = WeightGen.g_minus(Fraction(2, 3))


def nested(sigma, weights, caps, n=0, **extra) -> NestedSpec:
    return NestedSpec(n=n, m=len(sigma), sigma=tuple(sigma), weights=tuple(weights), caps=tuple(caps), **extra)


class TestNestedSpec:
    def test_accessors(self):
        spec = nested(("+", "-"), (G, H, WeightGen.trivial()), (1, 2, 3, 4))
        assert spec.sign(2) is Sign.PLUS
        assert spec.sign(1) is Sign.MINUS
        assert spec.sign(0) is Sign.MINUS
        assert spec.sign(3) is Sign.PLUS
        assert spec.weight(2) == G
        assert spec.weight(0).is_trivial()
        assert spec.cap(3) == 4
        assert spec.blocks == (("t3", 4), ("t2", 3), ("t1", 2), ("t0", 1))

    @pytest.mark.parametrize("kwargs", [
        {"sigma": ("+",), "weights": (G,), "caps": (1, 1, 1)},
        {"sigma": (), "weights": (G, G), "caps": (1, 1, 1)},
        {"sigma": ("+",), "weights": (G, G), "caps": (1, 1)},
        {"sigma": ("+",), "weights": (G, G), "caps": (1, -1, 1)},
    ])
    def test_shape_mismatch(self, kwargs):
        with pytest.raises(ValueError):
            NestedSpec(n=0, m=1, **kwargs)

    def test_insertion_zeroes_cap(self):
        spec = nested(("+",), (H, G), (3, 2, 3), insertions=((1, Partition.of(1)),))
        assert spec.cap(1) == 0
        assert spec.blocks == (("t2", 3), ("t0", 3))

    def test_insertion_position(self):
        with pytest.raises(ValueError):
            nested(("+",), (H, G), (3, 2, 3), insertions=((2, Partition.of(1)),))

    def test_locus_removes_block(self):
        spec = fully_simple_spec(Fraction(1), 2, 2, 4)
        assert spec.blocks == (("t2", 2), ("t1", 2))

    def test_json_round_trip(self):
        spec = nested(
            ("-",), (H, G), (2, 1, 2), n=1,
            scales=((2, Fraction(3)),), loci=((0, DeltaLocus(1, HALF)),), max_length=2,
        )
        assert NestedSpec.from_json(json.loads(json.dumps(spec.to_json()))) == spec

    def test_json_errors(self):
        with pytest.raises(SpecParseError):
            NestedSpec.from_json({"m": 0})
        with pytest.raises(SpecParseError):
            NestedSpec.from_json({"m": 0, "weights": [{}], "caps": [1, 1], "sigma": ["x"]})
        with pytest.raises(SpecParseError):
            NestedSpec.from_json([1, 2])

    def test_load_spec(self):
        spec = load_spec("hypergeometric_m0")
        assert spec == hypergeometric_spec(G, 2, 2)
        assert load_spec("fully_simple.json") == fully_simple_spec(Fraction(1), 2, 2, 4)

    def test_load_spec_errors(self, tmp_path):
        with pytest.raises(SpecParseError):
            load_spec("no_such_spec")
        broken = tmp_path / "broken.json"
        broken.write_text("{ not json", encoding="utf-8")
        with pytest.raises(SpecParseError):
            load_spec(str(broken))


class TestChains:
    def test_hypergeometric_chains(self):
        spec = hypergeometric_spec(G, 2, 2)
        assert [chain[0] for chain in enumerate_chains(spec)] == list(enumerate_partitions(2))

    def test_plus_step(self):
        spec = nested(("+",), (H, G), (1, 1, 1))
        assert list(enumerate_chains(spec)) == [
            (Partition.EMPTY, Partition.EMPTY),
            (Partition.of(1), Partition.EMPTY),
            (Partition.of(1), Partition.of(1)),
        ]

    def test_minus_step(self):
        spec = nested(("-",), (H, G), (1, 1, 1))
        assert list(enumerate_chains(spec)) == [
            (Partition.EMPTY, Partition.EMPTY),
            (Partition.EMPTY, Partition.of(1)),
            (Partition.of(1), Partition.of(1)),
        ]

    def test_exact_sizes_and_length(self):
        spec = nested(("+",), (H, G), (3, 2, 3), max_length=1)
        chains = list(enumerate_chains(spec, {0: 3, 1: 1}))
        assert chains == [(Partition.of(3), Partition.of(2))]


class TestExpansion:
    def test_trivial_weight_is_kernel(self):
        series = expand_tau(hypergeometric_spec(WeightGen.trivial(), 3, 3)).series
        assert series == cauchy_kernel("t1", "t0", 3, 3)

    def test_hypergeometric_coefficients(self):
        u = Fraction(2, 3)
        series = expand_tau(hypergeometric_spec(WeightGen.g_plus(u), 2, 2)).series
        assert series.constant == 1
        assert series.coefficient({"t1": {1: 1}, "t0": {1: 1}}) == 1
        assert series.coefficient({"t1": {2: 1}, "t0": {2: 1}}) == 2
        assert series.coefficient({"t1": {1: 2}, "t0": {1: 2}}) == HALF
        assert series.coefficient({"t1": {2: 1}, "t0": {1: 2}}) == u

    def test_charge(self):
        u = HALF
        series = expand_tau(hypergeometric_spec(WeightGen.g_plus(u), 1, 1, n=2)).series
        # c_2 = 1 + u, r_(1),2 = 1 + 2u
        assert series.constant == 1 + u
        assert series.coefficient({"t1": {1: 1}, "t0": {1: 1}}) == (1 + u) * (1 + 2 * u)

    def test_pole(self):
        with pytest.raises(PoleAtContent):
            expand_tau(hypergeometric_spec(WeightGen.g_minus(Fraction(1)), 2, 2))

    def test_max_length_avoids_pole(self):
        spec = replace(hypergeometric_spec(WeightGen.g_minus(Fraction(1)), 2, 2), max_length=1)
        series = expand_tau(spec).series
        assert series.coefficient({"t1": {1: 1}, "t0": {1: 1}}) == 1

    def test_simple_matrix_chain_values(self):
        for size in (2, 3):
            weight = WeightGen.g_plus(Fraction(1, size))
            spec = nested(
                ("+",), (weight.inverse(), weight), (2, 2, 2),
                scales=((1, size), (0, size)), max_length=size,
            )
            series = expand_tau(spec).series
            assert series.coefficient({"t1": {1: 1}, "t0": {1: 1}}) == size ** 2
            assert series.coefficient({"t2": {1: 1}, "t0": {1: 1}}) == size

    def test_jobs_do_not_change_result(self):
        spec = nested(("+", "-"), (G, H, G), (2, 2, 2, 2))
        assert expand_tau(spec, jobs=3).series == expand_tau(spec).series

    def test_schur_view_rebuilds_series(self):
        spec = nested(("-",), (G, H), (2, 2, 2))
        tau = expand_tau(spec)
        assert series_from_view(spec, tau.schur_view) == tau.series

    def test_to_json(self):
        data = expand_tau(hypergeometric_spec(G, 1, 1)).to_json()
        assert data["spec"]["m"] == 0
        assert {"end": [1], "start": [1], "coeff": {"blocks": [], "terms": [{"exps": {}, "coeff": "1"}]}} in data["schur_view"]


class TestQueries:
    spec = nested(("+",), (H, G), (3, 2, 3))

    def test_coefficient_of_matches_expansion(self):
        series = expand_tau(self.spec).series
        for key, value in series.items():
            assert coefficient_of(self.spec, key) == value
        assert coefficient_of(self.spec, ()) == 1
        assert coefficient_of(self.spec, make_key({"t2": {1: 1}})) == 0

    def test_coefficient_of_errors(self):
        with pytest.raises(TruncationError):
            coefficient_of(self.spec, make_key({"t1": {3: 1}}))
        with pytest.raises(DomainError):
            coefficient_of(self.spec, make_key({"t7": {1: 1}}))

    def test_coefficient_of_specialized(self):
        spec = fully_simple_spec(Fraction(1), 2, 2, 4)
        series = expand_tau(spec).series
        key = make_key({"t2": {2: 1}})
        assert coefficient_of(spec, key) == series.coefficient(key)

    def test_double_schur_hypergeometric(self):
        spec = hypergeometric_spec(G, 3, 3)
        for lam in enumerate_partitions(3):
            assert double_schur_coefficient(spec, lam, lam) == content_product(G, lam)
        assert double_schur_coefficient(spec, Partition.of(1), Partition.of(2)).is_zero()

    def test_superintegrability(self):
        spec = hypergeometric_spec(G, 3, 3)
        lam = Partition.of(2, 1)
        prediction = superintegrability_prediction(spec, lam, "end")
        assert prediction == schur(lam, "t0", 3).scaled(content_product(G, lam))
        with pytest.raises(ValueError):
            superintegrability_prediction(spec, lam, "middle")

    def test_corrupt_series(self):
        series = expand_tau(hypergeometric_spec(G, 2, 2)).series
        corrupted = corrupt_series(series, "t1", Partition.of(1))
        assert (corrupted - series) == schur(Partition.of(1), "t1", 2).with_blocks(series.blocks)


class TestDuality:
    @pytest.mark.parametrize("sigma, weights, caps", [
        ((), (G,), (2, 3)),
        (("+",), (H, G), (3, 2, 2)),
        (("-",), (G, H), (2, 2, 3)),
        (("+", "-"), (G, H, G), (2, 1, 2, 2)),
    ])
    def test_dual_expansion(self, sigma, weights, caps):
        spec = nested(sigma, weights, caps)
        mirrored = relabel_dual(expand_tau(dual_spec(spec)).series, spec.m)
        assert mirrored == expand_tau(spec).series

    def test_dual_is_involution(self):
        spec = nested(("+", "-"), (G, H, WeightGen.trivial()), (1, 2, 3, 4), insertions=((1, Partition.of(1)),))
        assert dual_spec(dual_spec(spec)) == spec


class TestReduction:
    def test_kinds(self):
        spec = nested(("+",), (WeightGen.trivial(), G), (3, 0, 3))
        assert reduction_kind(spec, 1) is ReductionKind.DROP
        assert reduction_kind(spec.with_caps((3, 2, 3)), 1) is ReductionKind.MERGE
        with pytest.raises(DomainError):
            reduction_kind(nested(("+",), (H, G), (3, 2, 3)), 1)

    def test_merge_top(self):
        spec = nested(("+",), (WeightGen.trivial(), G), (3, 2, 3))
        reduced = reduce_spec(spec, 1)
        assert reduced == hypergeometric_spec(G, 5, 3)
        lifted = lift_reduced(expand_tau(reduced).series, spec, 1)
        assert lifted == expand_tau(spec).series

    def test_merge_bottom(self):
        spec = nested(("-",), (G, WeightGen.trivial()), (3, 2, 3))
        lifted = lift_reduced(expand_tau(reduce_spec(spec, 0)).series, spec, 0)
        assert lifted == expand_tau(spec).series

    def test_drop(self):
        spec = nested(("+", "-"), (G, H, G), (2, 0, 2, 2))
        reduced = reduce_spec(spec, 1)
        assert reduced.m == 1
        assert reduced.weight(0) == H * G
        lifted = lift_reduced(expand_tau(reduced).series, spec, 1)
        assert lifted == expand_tau(spec).series

    def test_boundary_cap_zero_rejected(self):
        # t0 with cap 0 next to a nontrivial weight is neither droppable nor mergeable
        spec = nested(("+",), (H, G), (0, 2, 2))
        with pytest.raises(DomainError):
            reduction_kind(spec, 0)
        with pytest.raises(DomainError):
            reduce_spec(spec, 0)
        with pytest.raises(DomainError):
            reduce_spec(spec.with_caps((2, 2, 0)), 2)


class TestHirota:
    def test_vacuum(self):
        assert hirota_check(cauchy_kernel("t1", "t0", 4, 4), "t1", 4).passed

    def test_hypergeometric(self):
        tau = expand_tau(hypergeometric_spec(G, 4, 4))
        result = hirota_check(tau)
        assert result.passed
        assert result.describe() == "residue vanishes through degree 3"

    @pytest.mark.parametrize("degree", [1, 2, 4])
    def test_degree_bound(self, degree):
        result = hirota_check(cauchy_kernel("t1", "t0", degree, degree), "t1", degree)
        assert result.passed
        assert result.degree == degree
        assert result.describe() == f"residue vanishes through degree {degree - 1}"

    def test_nested(self):
        tau = expand_tau(nested(("+",), (H, G), (3, 2, 4)))
        assert hirota_check(tau, "t2", 4)

    def test_corruption_fails(self):
        series = expand_tau(hypergeometric_spec(G, 4, 4)).series
        result = hirota_check(corrupt_series(series, "t1", Partition.of(1)), "t1", 4)
        assert not result.passed
        assert result.first_failure is not None
        assert result.describe().startswith("residue coefficient of")

    def test_errors(self):
        series = expand_tau(hypergeometric_spec(G, 2, 2)).series
        with pytest.raises(DomainError):
            hirota_check(series, "t1", 4)
        with pytest.raises(DomainError):
            hirota_check(series)
        with pytest.raises(DomainError):
            hirota_check(series, "t9", 1)
