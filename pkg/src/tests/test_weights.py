"""
Tests for weights: generating functions, content products, e^T and the normalization c_n.
"""
from fractions import Fraction

import pytest

from src.errors import PoleAtContent
from src.partitions import Partition, content_sum, enumerate_partitions
from src.symfunc import Scalar, exp_nilpotent
from src.weights import (
    DiagonalData, WeightGen, c_norm, content_product, eval_G, eval_G_inverse, exp_T, schur_ratio
)

HALF = Fraction(1, 2)


class TestWeightGen:
    def test_cancellation(self):
        weight = WeightGen.g_plus(HALF) * WeightGen.g_minus(HALF)
        assert weight.is_trivial()
        assert weight == WeightGen.trivial()

    def test_inverse(self):
        weight = WeightGen.g_plus(HALF, 2) * WeightGen.g_exp(3)
        assert (weight * weight.inverse()).is_trivial()

    def test_exp_factors_merge(self):
        weight = WeightGen.g_exp(1) * WeightGen.g_exp(2)
        assert weight == WeightGen.g_exp(3)

    def test_json(self):
        weight = WeightGen.g_plus(HALF) * WeightGen.g_minus(Fraction(-2, 5)) * WeightGen.g_exp(1, "w", 3)
        assert WeightGen.from_json(weight.to_json()) == weight

    def test_json_single_exp_object(self):
        weight = WeightGen.from_json({"w": {"coeff": "1", "order": 2}})
        assert weight == WeightGen.g_exp(1, "w", 2)

    def test_json_unknown_field(self):
        with pytest.raises(ValueError):
            WeightGen.from_json({"x": []})


class TestEvaluation:
    def test_eval_g(self):
        assert eval_G(WeightGen.g_plus(HALF), 3) == Fraction(5, 2)
        assert eval_G(WeightGen.g_minus(HALF), 2) == HALF

    def test_eval_exp(self):
        w = Scalar.param("w", 2)
        assert eval_G(WeightGen.g_exp(1, "w", 2), 1) == 1 + w + w ** 2 / 2

    def test_pole(self):
        with pytest.raises(PoleAtContent) as info:
            eval_G(WeightGen.g_minus(Fraction(1)), -1)
        assert info.value.content == -1
        assert info.value.factor_index == 0

    def test_inverse_zero(self):
        with pytest.raises(PoleAtContent):
            eval_G_inverse(WeightGen.g_plus(Fraction(1)), -1)


class TestContentProduct:
    def test_known_value(self):
        # contents 0, 1, -1
        assert content_product(WeightGen.g_plus(HALF), Partition.of(2, 1)) == Fraction(3, 4)

    def test_charge_shift(self):
        # contents 1, 2, 0
        assert content_product(WeightGen.g_plus(HALF), Partition.of(2, 1), n=1) == 3

    def test_empty_partition(self):
        assert content_product(WeightGen.g_minus(Fraction(1)), Partition.EMPTY) == 1

    def test_vanishing_factor(self):
        # 1 + z at content -1 vanishes before any later factor is evaluated
        assert content_product(WeightGen.g_plus(Fraction(1)), Partition.of(1, 1)) == 0

    def test_pole_in_partition(self):
        with pytest.raises(PoleAtContent):
            content_product(WeightGen.g_minus(Fraction(1)), Partition.of(1, 1))

    def test_reciprocity(self):
        for u in (Fraction(2, 3), Fraction(-2, 5)):
            for lam in enumerate_partitions(4):
                assert content_product(WeightGen.g_plus(u), lam) * content_product(WeightGen.g_minus(u), lam) == 1

    def test_multiplicativity(self):
        first, second = WeightGen.g_plus(HALF), WeightGen.g_minus(Fraction(2, 3)) * WeightGen.g_exp(1, "w", 3)
        for lam in enumerate_partitions(4):
            assert content_product(first * second, lam) == content_product(first, lam) * content_product(second, lam)

    def test_exp_weight_is_content_sum(self):
        for lam in enumerate_partitions(4):
            expected = exp_nilpotent(Scalar.param("w", 4, content_sum(lam)))
            assert content_product(WeightGen.g_exp(1, "w", 4), lam) == expected


class TestNormalization:
    u = HALF
    weight = WeightGen.g_plus(HALF)

    def test_exp_t(self):
        assert exp_T(self.weight, 0) == 1
        assert exp_T(self.weight, 2) == Fraction(3, 2) * 2
        assert exp_T(self.weight, -1) == 1
        assert exp_T(self.weight, -2) == 1 / (1 - self.u)

    def test_c_norm(self):
        assert c_norm(self.weight, 0) == 1
        assert c_norm(self.weight, 2) == 1 + self.u
        assert c_norm(self.weight, -2) == 1 - self.u

    def test_diagonal_data(self):
        data = DiagonalData(self.weight, 2)
        lam = Partition.of(1)
        # content 2
        assert data.eigenvalue(lam) == (1 + self.u) * 2


class TestSchurRatio:
    @pytest.mark.parametrize("size", [1, 2, 3, 4, 5])
    def test_matches_content_product(self, size):
        for lam in enumerate_partitions(5):
            assert schur_ratio(lam, size) == content_product(WeightGen.g_plus(Fraction(1, size)), lam)

    def test_known_value(self):
        assert schur_ratio(Partition.of(1, 1), 2) == HALF

    def test_invalid_size(self):
        with pytest.raises(ValueError):
            schur_ratio(Partition.of(1), 0)
