"""
Tests for symfunc: exact scalars, truncated series, Schur functions, kernels,
the Schur basis and specializations.
"""
from fractions import Fraction

import pytest

from src.errors import DomainError, TruncationError
from src.partitions import Partition, dimension, enumerate_partitions, partitions_of
from src.symfunc import (
    CountingLocus, DeltaLocus, ExplicitTimes, GradedSeries, Miwa, MultiSeries, Scalar,
    as_coeff, assemble_from_components, cauchy_kernel, coeff_from_json, coeff_to_json,
    exp_nilpotent, exp_series, from_schur_basis, h_poly, key_to_str, log_series, make_key,
    p_poly, rule_from_json, schur, schur_components, shift_block, skew_schur, specialize,
    to_schur_basis
)


def t_series(cap: int, terms: dict, block: str = "t") -> GradedSeries:
    """Build a single-block series from {((k, a), ...): coeff}."""
    return GradedSeries.from_exps(block, cap, terms)


class TestScalar:
    w = Scalar.param("w", 2)

    def test_truncated_power(self):
        cube = (1 + self.w) ** 3
        assert cube == Scalar({(): 1, (("w", 1),): 3, (("w", 2),): 3}, {"w": 2})
        assert self.w ** 3 == 0

    def test_collapse_to_fraction(self):
        value = (self.w + 1) - self.w
        assert as_coeff(value) == 1
        assert isinstance(as_coeff(value), Fraction)

    def test_inverse(self):
        assert (1 + self.w).inverse() == 1 - self.w + self.w ** 2

    def test_exp_nilpotent(self):
        assert exp_nilpotent(self.w) == 1 + self.w + self.w ** 2 / 2
        assert exp_nilpotent(Fraction(0)) == 1
        with pytest.raises(ValueError):
            exp_nilpotent(Fraction(1))

    def test_json(self):
        assert coeff_to_json(Fraction(-3, 4)) == "-3/4"
        assert coeff_from_json("-3/4") == Fraction(-3, 4)
        value = 2 + Fraction(1, 3) * self.w
        assert coeff_from_json(coeff_to_json(value)) == value

    def test_as_coeff_rejects_garbage(self):
        with pytest.raises(ValueError):
            as_coeff("one half")
        with pytest.raises(ValueError):
            as_coeff(True)


class TestSeries:
    def test_keys(self):
        key = make_key({"t1": {2: 2}, "t0": {1: 1}})
        assert key == (("t0", ((1, 1),)), ("t1", ((2, 2),)))
        assert key_to_str(key) == "t0_1*t1_2^2"
        assert key_to_str(()) == "1"

    def test_product_respects_caps(self):
        t1 = t_series(2, {((1, 1),): 1})
        assert t1 * t1 == t_series(2, {((1, 2),): 1})
        assert (t1 * t1 * t1).is_zero()

    def test_multi_block_product(self):
        blocks = (("a", 1), ("b", 1))
        a = MultiSeries.monomial(blocks, {"a": {1: 1}})
        b = MultiSeries.monomial(blocks, {"b": {1: 1}}, Fraction(2))
        assert (a * b).coefficient({"a": {1: 1}, "b": {1: 1}}) == 2
        assert (a * a).is_zero()

    def test_undeclared_block(self):
        with pytest.raises(ValueError):
            MultiSeries((("a", 2),), {make_key({"b": {1: 1}}): 1})

    def test_derivative_and_rename(self):
        f = t_series(3, {((1, 3),): 1, ((2, 1),): 5})
        assert f.derivative("t", 1) == t_series(3, {((1, 2),): 3})
        renamed = f.rename_block("t", "s")
        assert renamed.coefficient({"s": {2: 1}}) == 5

    def test_scale_and_grade(self):
        f = t_series(3, {((1, 1), (2, 1)): 1})
        assert f.scale_block("t", 2).coefficient({"t": {1: 1, 2: 1}}) == 4
        assert f.grade_block("t", 2).coefficient({"t": {1: 1, 2: 1}}) == 8

    def test_json_round_trip(self):
        kernel = cauchy_kernel("t1", "t0", 2, 2)
        assert MultiSeries.from_json(kernel.to_json()) == kernel

    def test_shift_block(self):
        f = t_series(2, {((1, 2),): 1})
        shifted = shift_block(f, "s")
        assert shifted.coefficient({"t": {1: 1}, "s": {1: 1}}) == 2
        assert shifted.coefficient({"s": {1: 2}}) == 1


class TestSchurFunctions:
    def test_complete_and_power_sums(self):
        assert h_poly(2) == t_series(2, {((2, 1),): 1, ((1, 2),): Fraction(1, 2)})
        assert p_poly(3) == t_series(3, {((3, 1),): 3})

    def test_small_schur(self):
        assert schur(Partition.of(1, 1)) == t_series(2, {((1, 2),): Fraction(1, 2), ((2, 1),): -1})
        assert schur(Partition.of(2, 1)) == t_series(3, {((1, 3),): Fraction(1, 3), ((3, 1),): -1})
        assert schur(Partition.EMPTY) == 1

    def test_schur_above_cap_is_zero(self):
        assert schur(Partition.of(3), "t", 2).is_zero()

    def test_skew_schur(self):
        assert skew_schur(Partition.of(2, 1), Partition.of(1)) == t_series(2, {((1, 2),): 1})
        assert skew_schur(Partition.of(2), Partition.of(1, 1)).is_zero()

    def test_coefficient_of_t1_power(self):
        # s_lam(t_k = delta_{k,1}) = dim(lam) / |lam|!
        for lam in partitions_of(4):
            value = specialize(schur(lam), DeltaLocus(1))
            assert value == Fraction(dimension(lam), 24)


class TestKernels:
    def test_cauchy_kernel_terms(self):
        kernel = cauchy_kernel("a", "b", 2, 2)
        assert kernel.constant == 1
        assert kernel.coefficient({"a": {1: 1}, "b": {1: 1}}) == 1
        assert kernel.coefficient({"a": {2: 1}, "b": {2: 1}}) == 2
        assert kernel.coefficient({"a": {1: 2}, "b": {1: 2}}) == Fraction(1, 2)
        assert len(kernel) == 4

    def test_cauchy_littlewood(self):
        cap = 4
        blocks = (("a", cap), ("b", cap))
        total = MultiSeries(blocks)
        for lam in enumerate_partitions(cap):
            total = total + schur(lam, "a", cap).with_blocks(blocks) * schur(lam, "b", cap).with_blocks(blocks)
        assert total == cauchy_kernel("a", "b", cap, cap)

    def test_cauchy_same_block(self):
        with pytest.raises(ValueError):
            cauchy_kernel("t", "t", 2, 2)

    def test_exp_and_log(self):
        f = t_series(3, {((1, 1),): 1})
        expected = t_series(3, {(): 1, ((1, 1),): 1, ((1, 2),): Fraction(1, 2), ((1, 3),): Fraction(1, 6)})
        assert exp_series(f) == expected
        assert log_series(expected) == f

    def test_log_needs_unit_constant(self):
        with pytest.raises(DomainError):
            log_series(t_series(2, {(): 2}))


class TestSchurBasis:
    def test_power_sum(self):
        assert to_schur_basis(p_poly(2)) == {Partition.of(2): 1, Partition.of(1, 1): -1}

    @pytest.mark.parametrize("method", ["characters", "solve"])
    def test_methods_agree(self, method):
        f = schur(Partition.of(2, 1), "t", 3) * 3 + schur(Partition.of(1), "t", 3)
        assert to_schur_basis(f, method=method) == {Partition.of(1): 1, Partition.of(2, 1): 3}

    def test_from_schur_basis(self):
        coeffs = {Partition.of(2): Fraction(1, 2), Partition.of(1, 1, 1): -1}
        assert to_schur_basis(from_schur_basis(coeffs)) == coeffs

    def test_components(self):
        kernel = cauchy_kernel("t1", "t0", 3, 3)
        components = schur_components(kernel, "t1")
        for lam, component in components.items():
            assert component == schur(lam, "t0", 3)
        assert assemble_from_components(components, "t1", 3) == kernel


class TestSpecialization:
    @pytest.mark.parametrize("lam, size, value", [((2, 1), 2, 2), ((2, 1), 3, 8), ((1, 1, 1), 2, 0), ((2,), 3, 6)])
    def test_counting_locus(self, lam, size, value):
        assert specialize(schur(Partition(lam)), CountingLocus(size)) == value

    def test_miwa_matches_counting(self):
        for lam in partitions_of(3):
            assert specialize(schur(lam), Miwa((1, 1, 1))) == specialize(schur(lam), CountingLocus(3))

    def test_miwa_eigenvalues(self):
        # s_(1,1)(x1, x2) = x1 x2
        assert specialize(schur(Partition.of(1, 1)), Miwa((2, 3))) == 6

    def test_explicit_times(self):
        assert specialize(schur(Partition.of(1, 1)), ExplicitTimes((2, 1))) == 1

    def test_block_specialization(self):
        kernel = cauchy_kernel("t1", "t0", 2, 2)
        rest = specialize(kernel, DeltaLocus(1, 3), "t0")
        assert rest == t_series(2, {(): 1, ((1, 1),): 3, ((1, 2),): Fraction(9, 2)}, "t1")

    def test_support_above_cap(self):
        with pytest.raises(TruncationError):
            specialize(schur(Partition.of(2)), DeltaLocus(3))

    def test_rule_json(self):
        for rule in (CountingLocus(2), DeltaLocus(2, Fraction(1, 2)), Miwa((1, 2)), ExplicitTimes((1,))):
            assert rule_from_json(rule.to_json()) == rule
