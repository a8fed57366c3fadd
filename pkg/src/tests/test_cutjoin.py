"""
Tests for cutjoin: Schur-basis operators, cut-and-join, conjugated modes, the level-by-level
recursion and the W-mode constructions.
"""
from fractions import Fraction

import pytest

from src.cutjoin import (
    ConjugatedSpec, LinearOperator, Route, classical_cutjoin, commute_pairwise,
    cutjoin_differential, cutjoin_from_differential, diagonal_operator, exp_nilpotent_action,
    fully_simple_w_series, hypergeometric_operator_form, hypergeometric_w_series, maps_spec,
    maps_w_series, power_sum_derivative, power_sum_multiplication, single_plus_route,
    tau_by_recursion, w_construction, w_family, w_operator
)
from src.errors import DomainError, PoleAtContent
from src.partitions import Partition, enumerate_partitions
from src.symfunc import GradedSeries, MultiSeries, Scalar, schur
from src.tau import NestedSpec, Sign, expand_tau, fully_simple_spec, hypergeometric_spec
from src.weights import WeightGen

HALF = Fraction(1, 2)
G = WeightGen.g_plus(HALF)
H = WeightGen.g_minus(Fraction(2, 3))


class TestLinearOperator:
    def test_identity(self):
        f = schur(Partition.of(2, 1), "t", 3)
        assert LinearOperator.identity("t", 3).apply(f) == f

    def test_degree_shift_is_enforced(self):
        with pytest.raises(ValueError):
            LinearOperator("t", 2, {(Partition.of(2), Partition.of(1)): 1}, 0)

    def test_power_sum_multiplication(self):
        # p_1 s_(1) = t_1^2
        op = power_sum_multiplication(1, "t", 2)
        assert op.apply(schur(Partition.of(1), "t", 2)) == GradedSeries.from_exps("t", 2, {((1, 2),): 1})

    def test_power_sum_derivative(self):
        op = power_sum_derivative(2, "t", 2)
        assert op.apply(schur(Partition.of(2), "t", 2)) == 1
        assert op.apply(schur(Partition.of(1, 1), "t", 2)) == -1

    def test_heisenberg_commutator(self):
        # [d/dt_1, p_1] = 1 on degrees that stay under the cap
        commutator = power_sum_derivative(1, "t", 3).commutator(power_sum_multiplication(1, "t", 3))
        for lam in enumerate_partitions(2):
            assert commutator.eigenvalue(lam) == 1

    def test_inverse(self):
        op = diagonal_operator(G, 0, "t", 2)
        assert (op @ op.inverse()) == LinearOperator.identity("t", 2)
        with pytest.raises(DomainError):
            diagonal_operator(G, 0, "t", 3).inverse()
        with pytest.raises(DomainError):
            power_sum_multiplication(1, "t", 3).inverse()

    def test_apply_needs_block(self):
        with pytest.raises(DomainError):
            LinearOperator.identity("s", 2).apply(schur(Partition.of(1), "t", 2))

    def test_exp_nilpotent_rejects_constants(self):
        with pytest.raises(DomainError):
            LinearOperator.identity("t", 2).exp_nilpotent()


class TestOperators:
    def test_diagonal_pole(self):
        with pytest.raises(PoleAtContent):
            diagonal_operator(WeightGen.g_minus(Fraction(1)), 0, "t", 2)

    def test_gexp_is_exp_of_cutjoin(self):
        cap = 5
        lhs = diagonal_operator(WeightGen.g_exp(1, "w", 4), 0, "t", cap)
        rhs = classical_cutjoin("t", 0, cap).scaled(Scalar.param("w", 4)).exp_nilpotent()
        assert rhs.is_diagonal()
        for lam in enumerate_partitions(cap):
            assert lhs.eigenvalue(lam) == rhs.eigenvalue(lam)

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_cutjoin_differential_matches_contents(self, n):
        differential = cutjoin_from_differential("t", n, 4)
        classical = classical_cutjoin("t", n, 4)
        assert differential.is_diagonal()
        for lam in enumerate_partitions(4):
            assert differential.eigenvalue(lam) == classical.eigenvalue(lam)

    def test_cutjoin_on_t2(self):
        # t_2 = (s_(2) - s_(1,1)) / 2 with content sums 1 and -1
        f = GradedSeries.from_exps("t", 2, {((2, 1),): 1})
        expected = GradedSeries.from_exps("t", 2, {((1, 2),): HALF})
        assert cutjoin_differential(f, "t") == expected

    def test_w_mode_on_t1(self):
        u = Fraction(2, 3)
        w = w_operator([u], "-", 1, "t", 0, 2)
        assert w.apply(schur(Partition.of(1), "t", 2)) == GradedSeries.from_exps(
            "t", 2, {((1, 2),): 1, ((2, 1),): 2 * u}
        )

    def test_w_mode_index(self):
        with pytest.raises(ValueError):
            w_operator([HALF], "+", 0, "t", 0, 2)

    @pytest.mark.parametrize("sign", [Sign.PLUS, Sign.MINUS])
    def test_w_family_commutes(self, sign):
        family = w_family((HALF, Fraction(1, 3)), sign, "t", 0, 4, 3, image_only=True)
        assert sorted(family) == [1, 2, 3]
        assert commute_pairwise(family.values())

    def test_w_family_needs_invertible_o(self):
        # O_+(1/2) annihilates s_(1,1,1)
        with pytest.raises(DomainError):
            w_family((HALF, Fraction(1, 3)), Sign.PLUS, "t", 0, 4, 3)
        assert sorted(w_family((HALF,), Sign.PLUS, "t", 0, 2, 2)) == [1, 2]

    def test_w_vanishing_content_product(self):
        with pytest.raises(DomainError):
            w_operator([Fraction(1)], "-", 1, "t", 0, 3)

    def test_w_on_image(self):
        # r_(1,1) = 0 for O_+(1), so the column of s_(1,1) is empty
        w = w_operator([Fraction(1)], "-", 1, "t", 0, 3, image_only=True)
        assert w.column(Partition.of(1, 1)) == []
        assert w.entry(Partition.of(2), Partition.of(1)) == 2

    def test_exp_nilpotent_action_needs_raising(self):
        with pytest.raises(DomainError):
            exp_nilpotent_action(power_sum_derivative(1, "t", 2), MultiSeries.one((("t", 2),)))


class TestRecursion:
    specs = [
        NestedSpec(n=0, m=1, sigma=(Sign.PLUS,), weights=(H, G), caps=(3, 2, 3)),
        NestedSpec(n=1, m=1, sigma=(Sign.MINUS,), weights=(G, H), caps=(3, 2, 3)),
        NestedSpec(n=0, m=2, sigma=(Sign.PLUS, Sign.MINUS), weights=(G, H, G), caps=(2, 2, 2, 2)),
    ]

    @pytest.mark.parametrize("side", ["end", "start"])
    def test_operator_sides(self, side):
        weight = G * WeightGen.g_exp(1, "w", 3)
        expected = expand_tau(hypergeometric_spec(weight, 3, 3)).series
        assert hypergeometric_operator_form(weight, 3, 3, side=side) == expected

    def test_operator_side_name(self):
        with pytest.raises(ValueError):
            hypergeometric_operator_form(G, 2, 2, side="middle")

    @pytest.mark.parametrize("index", [0, 1, 2])
    def test_recursion_matches_expansion(self, index):
        spec = self.specs[index]
        assert tau_by_recursion(spec).series == expand_tau(spec).series

    def test_recursion_rejects_insertions(self):
        spec = NestedSpec(
            n=0, m=1, sigma=(Sign.PLUS,), weights=(H, G), caps=(3, 2, 3),
            insertions=((1, Partition.of(1)),),
        )
        with pytest.raises(DomainError):
            tau_by_recursion(spec)

    @pytest.mark.parametrize("route", list(Route))
    def test_routes(self, route):
        spec = self.specs[0]
        assert single_plus_route(spec, route) == expand_tau(spec).series

    def test_route_errors(self):
        with pytest.raises(DomainError):
            single_plus_route(self.specs[1], Route.MERGE)
        with pytest.raises(DomainError):
            Route.from_char("sideways")


class TestWConstructions:
    base = G
    specs = [
        ConjugatedSpec(n=0, base=G, params=((Fraction(2, 3),),), sigma=(Sign.PLUS,), caps=(2, 2, 2)),
        ConjugatedSpec(n=0, base=G, params=((Fraction(2, 3),),), sigma=(Sign.MINUS,), caps=(2, 2, 2)),
        ConjugatedSpec(
            n=0, base=G, params=((Fraction(2, 3),), (Fraction(-2, 5),)),
            sigma=(Sign.PLUS, Sign.MINUS), caps=(2, 2, 2, 2),
        ),
    ]

    def test_to_nested_weights(self):
        nested = self.specs[0].to_nested()
        assert nested.weight(1) == WeightGen.g_minus(Fraction(2, 3))
        assert nested.weight(0) == WeightGen.g_plus(Fraction(2, 3)) * G

    @pytest.mark.parametrize("index", [0, 1, 2])
    def test_every_split(self, index):
        conj = self.specs[index]
        expected = expand_tau(conj.to_nested()).series
        for split in range(conj.m + 1):
            assert w_construction(conj, split).series == expected

    def test_split_range(self):
        with pytest.raises(DomainError):
            w_construction(self.specs[0], 2)

    def test_shape(self):
        with pytest.raises(ValueError):
            ConjugatedSpec(n=0, base=G, params=(), sigma=(Sign.PLUS,), caps=(2, 2, 2))

    def test_maps_low_degree(self):
        hbar = HALF
        series = maps_w_series(hbar, 2)
        assert series.coefficient({"t1": {2: 1}}) == 1 / hbar
        assert series.coefficient({"t1": {1: 2}}) == HALF
        assert series.coefficient({"t1": {1: 1}}) == 0

    @pytest.mark.parametrize("hbar", [Fraction(1), HALF])
    def test_maps_matches_expansion(self, hbar):
        assert maps_w_series(hbar, 4) == expand_tau(maps_spec(hbar, 4)).series

    def test_fully_simple(self):
        expected = expand_tau(fully_simple_spec(Fraction(1), 2, 2, 4)).series
        assert fully_simple_w_series(1, 2, 2) == expected

    def test_hbar_must_be_nonzero(self):
        with pytest.raises(DomainError):
            maps_w_series(0, 2)

    def test_hypergeometric_modes(self):
        params = (HALF,)
        assert hypergeometric_w_series(params, 3, 3) == hypergeometric_operator_form(
            WeightGen.g_plus(*params), 3, 3
        )
