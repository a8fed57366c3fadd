"""
Tests for wick: Gaussian and Haar moments, Weingarten functions and chain matrix models.
"""
from fractions import Fraction

import pytest

from src.errors import BudgetError, DomainError, UnsupportedError
from src.partitions import Partition
from src.symfunc import make_key
from src.tau import NestedSpec, Sign, expand_tau, hypergeometric_spec, load_spec
from src.weights import WeightGen
from src.wick import (
    Attachment, ChainNode, Coupling, CouplingKind, DiagonalLetter, Ensemble, Letter,
    MatrixChainPlan, MomentQuery, NodeKind, chain3_plan, chain_evaluate, complex_moment,
    cycle_type, dvapl_plan, expectation, genus_expansion_check, hermitian_genus_counts,
    hermitian_moment, index_assignment_count, parse_letter, plan_from_spec, schur_of_matrix,
    simpfs_plan, unitary_dimension, unitary_moment, weingarten, weingarten_of_pair
)

X, Z, ZD, U, UD = Letter("X"), Letter("Z"), Letter("Z", True), Letter("U"), Letter("U", True)


class TestWeingarten:
    @pytest.mark.parametrize("mu, size, value", [
        ((1,), 1, Fraction(1)),
        ((1,), 3, Fraction(1, 3)),
        ((2,), 2, Fraction(-1, 6)),
        ((1, 1), 2, Fraction(1, 3)),
    ])
    def test_known_values(self, mu, size, value):
        assert weingarten(Partition(mu), size) == value

    def test_unitary_dimension(self):
        assert unitary_dimension(Partition.of(2), 2) == 3
        assert unitary_dimension(Partition.of(1, 1), 2) == 1
        assert unitary_dimension(Partition.of(1, 1, 1), 2) == 0

    def test_cycle_type(self):
        assert cycle_type([1, 0, 2]) == Partition.of(2, 1)
        assert cycle_type([1, 2, 0]) == Partition.of(3)
        assert cycle_type([]) == Partition.EMPTY

    def test_pair(self):
        assert weingarten_of_pair([0, 1], [1, 0], 2) == Fraction(-1, 6)
        assert weingarten_of_pair([0, 1], [0, 1], 2) == Fraction(1, 3)

    def test_bounds(self):
        with pytest.raises(DomainError):
            weingarten(Partition.of(1), 0)
        with pytest.raises(DomainError):
            weingarten(Partition.of(7), 3)


class TestMoments:
    @pytest.mark.parametrize("power, value", [(2, Fraction(3)), (4, Fraction(19, 3)), (6, Fraction(55, 3))])
    def test_hermitian(self, power, value):
        assert hermitian_moment(MomentQuery(Ensemble.HERMITIAN, 3, (("X",) * power,))) == value

    def test_hermitian_odd_power(self):
        assert hermitian_moment(MomentQuery("hermitian", 2, (("X",) * 3,))) == 0

    def test_complex(self):
        assert complex_moment(MomentQuery("complex", 2, (("Z", "Z"), ("Zd", "Zd")))) == 2
        assert complex_moment(MomentQuery("complex", 3, (("Z",), ("Zd",)))) == 1
        assert complex_moment(MomentQuery("complex", 2, (("Z", "Z"),))) == 0

    def test_unitary(self):
        assert unitary_moment(MomentQuery("unitary", 2, (("U",), ("Ud",)))) == 1
        assert unitary_moment(MomentQuery("unitary", 2, (("U", "Ud"),))) == 2
        assert unitary_moment(MomentQuery("unitary", 2, (("U",),))) == 0

    def test_joint_expectation(self):
        ensembles = {"Z": (Ensemble.COMPLEX, 2), "U": (Ensemble.UNITARY, 2)}
        assert expectation([(Z,), (ZD,), (U,), (UD,)], ensembles) == 1

    def test_wrong_ensemble(self):
        with pytest.raises(DomainError):
            hermitian_moment(MomentQuery("complex", 2, (("Z", "Zd"),)))
        with pytest.raises(DomainError):
            complex_moment(MomentQuery("complex", 2, (("X", "X"),)))

    def test_query_validation(self):
        with pytest.raises(DomainError):
            MomentQuery("hermitian", 0, ())
        with pytest.raises(DomainError):
            MomentQuery("gaussian", 2, ())
        with pytest.raises(ValueError):
            DiagonalLetter(())

    def test_parse_letter(self):
        assert parse_letter("Zd") == ZD
        assert parse_letter("Z") == Z
        assert parse_letter("d") == Letter("d")

    def test_schur_of_matrix(self):
        assert schur_of_matrix(Partition.of(1, 1), X) == [
            (Fraction(-1, 2), ((X, X),)),
            (Fraction(1, 2), ((X,), (X,))),
        ]

    def test_genus_counts(self):
        assert hermitian_genus_counts(2) == {1: 1, 3: 2}
        check = genus_expansion_check(3, 2)
        assert check.planar == check.catalan == 5
        # 5 N + 10 / N at N = 2
        assert check.grid_value == check.value == 15
        assert check.passed

    @pytest.mark.parametrize("sizes, equalities, count", [
        ((), (), 1),
        ((3,), (), 3),
        ((2, 3, 2), ((0, 1),), 4),
        ((2, 2, 2, 2), ((0, 1), (1, 2), (3, 3)), 4),
        ((3, 3, 3), ((0, 1), (2, 1)), 3),
    ])
    def test_index_assignment_count(self, sizes, equalities, count):
        assert index_assignment_count(sizes, equalities) == count
        assert index_assignment_count(sizes, equalities, method="numpy") == count

    def test_index_assignment_count_method(self):
        with pytest.raises(ValueError):
            index_assignment_count((2,), (), method="sympy")


class TestChainPlan:
    def test_simpfs_plan(self):
        plan = simpfs_plan(2)
        assert [node.kind for node in plan.nodes] == [NodeKind.UNITARY, NodeKind.COMPLEX]
        assert plan.attachment("t1").scale == 2
        assert "U unitary N=2" in plan.pretty()

    def test_json_round_trip(self):
        for plan in (simpfs_plan(2), chain3_plan(2), dvapl_plan(2, 3)):
            assert MatrixChainPlan.from_json(plan.to_json()) == plan

    def test_json_errors(self):
        with pytest.raises(ValueError):
            MatrixChainPlan.from_json({"couplings": []})
        with pytest.raises(ValueError):
            MatrixChainPlan.from_json({"nodes": [{"name": "A", "kind": "gaussian", "size": 2}]})

    def test_unitary_pair_internal_coupling(self):
        plan = chain3_plan(2)
        internal = [c for c in plan.all_couplings if c not in plan.couplings]
        assert len(internal) == 2
        assert all(c.kind is CouplingKind.EXP_TRACE and c.strength == 2 for c in internal)

    def test_validation(self):
        a, b, c = (ChainNode(name, NodeKind.COMPLEX, 2) for name in "ABC")
        with pytest.raises(ValueError):
            MatrixChainPlan(())
        with pytest.raises(ValueError):
            MatrixChainPlan((a, ChainNode("A", NodeKind.UNITARY, 2)))
        with pytest.raises(ValueError):
            MatrixChainPlan((a, b, c), couplings=(Coupling(CouplingKind.EXP_TRACE, Letter("A"), Letter("C")),))
        with pytest.raises(ValueError):
            MatrixChainPlan((a, b, c), attachments=(Attachment("t1", Letter("B")), Attachment("t0", Letter("C"))))
        with pytest.raises(ValueError):
            MatrixChainPlan((a,), attachments=(Attachment("t1", Letter("Q")),))

    def test_node_validation(self):
        with pytest.raises(ValueError):
            ChainNode("A", NodeKind.COMPLEX, 0)
        with pytest.raises(ValueError):
            ChainNode("Ud", NodeKind.UNITARY, 2)
        with pytest.raises(ValueError):
            Coupling(CouplingKind.INVERSE_DET, Letter("A"), Letter("B"), 2)

    def test_missing_attachment(self):
        with pytest.raises(DomainError):
            simpfs_plan(2).attachment("t7")


class TestPlanFromSpec:
    def test_hypergeometric(self):
        plan = plan_from_spec(load_spec("hypergeometric_m0"))
        assert plan.nodes == (ChainNode("Z1", NodeKind.COMPLEX, 2),)
        assert plan.attachment("t0").letter == Letter("Z1", True)

    def test_rational_weight(self):
        weight = WeightGen.g_plus(Fraction(1, 2)) * WeightGen.g_minus(Fraction(1, 3))
        plan = plan_from_spec(hypergeometric_spec(weight, 2, 2))
        assert [node.kind for node in plan.nodes] == [NodeKind.COMPLEX, NodeKind.UNITARY_PAIR]
        assert len(plan.couplings) == 1

    def test_nested_plus_chain(self):
        plan = plan_from_spec(load_spec("simpfs_n2"))
        assert [node.name for node in plan.nodes] == ["U1", "Z1"]
        assert plan.attachment("t1").scale == 2

    def test_exponential_weight_has_normal_node(self):
        plan = plan_from_spec(load_spec("gexp_m0"), size=2)
        assert plan.nodes[-1].kind is NodeKind.NORMAL
        with pytest.raises(UnsupportedError):
            chain_evaluate(plan, make_key({"t1": {1: 1}, "t0": {1: 1}}))

    @pytest.mark.parametrize("spec", [
        hypergeometric_spec(WeightGen.g_plus(Fraction(1, 2)), 2, 2, n=1),
        hypergeometric_spec(WeightGen.trivial(), 2, 2),
        hypergeometric_spec(WeightGen.g_plus(Fraction(2, 3)), 2, 2),
        NestedSpec(
            n=0, m=1, sigma=(Sign.MINUS,),
            weights=(WeightGen.g_minus(Fraction(1, 2)), WeightGen.g_plus(Fraction(1, 2))), caps=(2, 2, 2),
        ),
    ])
    def test_unsupported(self, spec):
        with pytest.raises(UnsupportedError):
            plan_from_spec(spec)


class TestChainEvaluate:
    @pytest.mark.parametrize("size", [2, 3])
    def test_simpfs_values(self, size):
        plan = simpfs_plan(size)
        assert chain_evaluate(plan, make_key({"t1": {1: 1}, "t0": {1: 1}})) == size ** 2
        assert chain_evaluate(plan, make_key({"t2": {1: 1}, "t0": {1: 1}})) == size

    def test_chain3(self):
        assert chain_evaluate(chain3_plan(2), make_key({"t1": {1: 1}, "t0": {1: 1}})) == 1

    @pytest.mark.parametrize("block", ["t3", "t2", "t1"])
    def test_dvapl(self, block):
        assert chain_evaluate(dvapl_plan(2), make_key({block: {1: 1}, "t0": {1: 1}})) == 1

    def test_matches_expansion(self):
        spec = hypergeometric_spec(WeightGen.g_plus(Fraction(1, 2)), 2, 2)
        series = expand_tau(spec).series
        plan = plan_from_spec(spec)
        for monomial in ({"t1": {1: 1}, "t0": {1: 1}}, {"t1": {2: 1}, "t0": {2: 1}}, {"t1": {1: 2}, "t0": {1: 2}}):
            assert chain_evaluate(plan, make_key(monomial)) == series.coefficient(monomial)

    def test_vacuum(self):
        assert chain_evaluate(simpfs_plan(2)) == 1

    def test_unbalanced_query(self):
        assert chain_evaluate(simpfs_plan(2), make_key({"t1": {1: 1}})) == 0

    def test_budget(self):
        with pytest.raises(BudgetError):
            chain_evaluate(simpfs_plan(4), make_key({"t1": {1: 1}, "t0": {1: 1}}))
        with pytest.raises(BudgetError):
            chain_evaluate(simpfs_plan(2), make_key({"t1": {1: 1}, "t0": {1: 1}}), orders=[9])
        with pytest.raises(ValueError):
            chain_evaluate(simpfs_plan(2), (), orders=[1, 1])

    def test_unknown_block(self):
        with pytest.raises(DomainError):
            chain_evaluate(simpfs_plan(2), make_key({"t5": {1: 1}}))
