"""
Tests for partitions: Young diagram geometry, enumeration, characters and
Littlewood-Richardson coefficients.
"""
from math import factorial

import pytest

from src.errors import DomainError
from src.partitions import (
    Partition, add_ribbons, character_table, class_size, contains, content_sum, dimension,
    enumerate_partitions, frobenius, lr_coefficient, lr_coefficient_characters,
    partitions_of, remove_ribbons, subpartitions, superpartitions, sym_character, transpose,
    z_centralizer
)


class TestPartition:
    def test_trailing_zeros_are_stripped(self):
        assert Partition.of(2, 1, 0, 0) == Partition.of(2, 1)

    @pytest.mark.parametrize("parts", [(1, 2), (2, -1), (0, 1)])
    def test_invalid_parts_raise(self, parts):
        with pytest.raises(ValueError):
            Partition(parts)

    def test_size_length_and_cells(self):
        lam = Partition.of(3, 1)
        assert lam.size == 4
        assert lam.length == 2
        assert list(lam.cells()) == [(0, 0), (0, 1), (0, 2), (1, 0)]
        assert lam.part(5) == 0

    def test_contents(self):
        assert sorted(Partition.of(2, 1).contents()) == [-1, 0, 1]
        assert content_sum(Partition.of(2, 1)) == 0
        assert content_sum(Partition.of(2, 1), n=1) == 3
        assert content_sum(Partition.of(3)) == 3

    def test_transpose(self):
        assert transpose(Partition.of(3, 1)) == Partition.of(2, 1, 1)
        assert transpose(Partition.EMPTY) == Partition.EMPTY

    def test_frobenius(self):
        coords = frobenius(Partition.of(3, 1))
        assert coords.alpha == (2,)
        assert coords.beta == (1,)
        assert coords.rank == 1
        assert coords.b == 2

    def test_beta_numbers(self):
        assert Partition.of(2, 1).beta_numbers(3) == (4, 2, 0)
        assert Partition.from_beta_numbers((4, 2, 0)) == Partition.of(2, 1)

    def test_contains(self):
        assert contains(Partition.of(3, 1), Partition.of(2, 1))
        assert not contains(Partition.of(3, 1), Partition.of(1, 1, 1))
        assert contains(Partition.of(1), Partition.EMPTY)

    def test_z_centralizer_and_class_size(self):
        assert z_centralizer(Partition.of(2, 1, 1)) == 4
        assert z_centralizer(Partition.of(1, 1, 1)) == 6
        assert class_size(Partition.of(2, 1)) == 3

    def test_dimension(self):
        assert dimension(Partition.of(2, 1)) == 2
        assert dimension(Partition.of(3, 2)) == 5
        assert sum(dimension(lam) ** 2 for lam in partitions_of(4)) == factorial(4)

    def test_json(self):
        lam = Partition.of(3, 3, 1)
        assert Partition.from_json(lam.to_json()) == lam


class TestEnumeration:
    def test_enumerate_order(self):
        assert enumerate_partitions(2) == (
            Partition.EMPTY, Partition.of(1), Partition.of(2), Partition.of(1, 1)
        )

    @pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (4, 5), (5, 7), (6, 11)])
    def test_partition_counts(self, n, count):
        assert len(partitions_of(n)) == count

    def test_max_length(self):
        assert partitions_of(4, max_length=2) == (
            Partition.of(4), Partition.of(3, 1), Partition.of(2, 2)
        )

    def test_order_is_sorted(self):
        shapes = enumerate_partitions(5)
        assert list(shapes) == sorted(shapes, key=Partition.sort_key)

    def test_subpartitions(self):
        assert len(subpartitions(Partition.of(2, 1))) == 5
        assert subpartitions(Partition.of(2, 1), min_size=3) == (Partition.of(2, 1),)

    def test_superpartitions(self):
        assert superpartitions(Partition.of(1), 2) == (
            Partition.of(1), Partition.of(2), Partition.of(1, 1)
        )
        assert superpartitions(Partition.of(2), 1) == ()


class TestCharacters:
    @pytest.mark.parametrize("lam, mu, value", [
        ((2, 1), (1, 1, 1), 2),
        ((2, 1), (3,), -1),
        ((2, 1), (2, 1), 0),
        ((1, 1, 1), (2, 1), -1),
        ((3,), (2, 1), 1),
        ((2, 2), (2, 2), 2),
    ])
    def test_known_values(self, lam, mu, value):
        assert sym_character(Partition(lam), Partition(mu)) == value

    def test_size_mismatch(self):
        with pytest.raises(DomainError):
            sym_character(Partition.of(2), Partition.of(1))

    def test_identity_class_is_dimension(self):
        for lam in partitions_of(5):
            assert sym_character(lam, Partition.of(1, 1, 1, 1, 1)) == dimension(lam)

    def test_column_orthogonality(self):
        table = character_table(4)
        shapes = partitions_of(4)
        for mu in shapes:
            for nu in shapes:
                total = sum(table[(lam, mu)] * table[(lam, nu)] for lam in shapes)
                assert total == (z_centralizer(mu) if mu == nu else 0)

    def test_ribbons(self):
        assert remove_ribbons(Partition.of(2, 1), 3) == ((Partition.EMPTY, -1),)
        added = dict(add_ribbons(Partition.EMPTY, 2))
        assert added == {Partition.of(2): 1, Partition.of(1, 1): -1}


class TestLittlewoodRichardson:
    @pytest.mark.parametrize("lam, mu, nu, value", [
        ((2, 1), (1,), (1, 1), 1),
        ((2, 1), (1,), (1,), 0),
        ((3, 2, 1), (2, 1), (2, 1), 2),
        ((2, 2), (1, 1), (1, 1), 1),
        ((3, 1), (2,), (1, 1), 1),
        ((4,), (2,), (1, 1), 0),
    ])
    def test_known_values(self, lam, mu, nu, value):
        assert lr_coefficient(Partition(lam), Partition(mu), Partition(nu)) == value

    def test_tableaux_match_characters(self):
        for lam in partitions_of(5):
            for mu in enumerate_partitions(3):
                for nu in partitions_of(5 - mu.size):
                    assert lr_coefficient(lam, mu, nu) == lr_coefficient_characters(lam, mu, nu)

    def test_symmetry(self):
        for lam in partitions_of(5):
            for mu in partitions_of(2):
                for nu in partitions_of(3):
                    assert lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu)

    def test_pieri(self):
        # s_mu * s_(1) adds one box in every possible way
        mu = Partition.of(2, 1)
        grown = [lam for lam in partitions_of(4) if lr_coefficient(lam, mu, Partition.of(1))]
        assert sorted(grown, key=Partition.sort_key) == [
            Partition.of(3, 1), Partition.of(2, 2), Partition.of(2, 1, 1)
        ]
