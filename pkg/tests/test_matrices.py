import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from leastchange import (
    BinaryMatrix,
    DimensionError,
    RationalMatrix,
    TypeSpec,
    delete_row_col,
    determinant,
    determinant_expansion,
    permanent_expansion,
    permanent_ryser,
    support,
)


def random_binary(rng, n):
    return BinaryMatrix(n, tuple(rng.randrange(1 << n) for _ in range(n)))


class TestBinaryMatrix:
    def test_from_rows_roundtrip(self):
        rows = [[1, 0, 1], [0, 1, 0], [1, 1, 1]]
        m = BinaryMatrix.from_rows(rows)
        assert m.to_lists() == rows
        assert m.entry(1, 3) == 1
        assert m.entry(2, 1) == 0

    def test_value_semantics(self):
        a = BinaryMatrix.from_rows([[1, 0], [0, 1]])
        assert a == BinaryMatrix.identity(2)
        assert a != BinaryMatrix.ones(2)
        assert hash(a) == hash(BinaryMatrix.identity(2))

    def test_rejects_bad_dimension(self):
        with pytest.raises(DimensionError):
            BinaryMatrix(0, ())
        with pytest.raises(DimensionError):
            BinaryMatrix(31, (0,) * 31)

    def test_rejects_stray_bits(self):
        with pytest.raises(ValueError):
            BinaryMatrix(2, (4, 0))

    def test_rejects_non_binary_entries(self):
        with pytest.raises(ValueError):
            BinaryMatrix.from_rows([[2, 0], [0, 1]])

    def test_one_count_and_transpose(self):
        m = BinaryMatrix.from_rows([[1, 1], [0, 1]])
        assert m.one_count() == 3
        assert m.transpose() == BinaryMatrix.from_rows([[1, 0], [1, 1]])


class TestTypeSpec:
    def test_family_masks(self):
        a = TypeSpec("A", 3)
        assert a.variable_mask == BinaryMatrix.ones(3)
        assert a.m == 9

        b = TypeSpec("B", 3)
        assert b.variable_mask == BinaryMatrix.from_rows([[1, 1, 1], [1, 0, 1], [1, 1, 0]])
        assert b.m == 7

        c = TypeSpec("C", 3)
        assert c.variable_mask == BinaryMatrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
        assert c.m == 6

    def test_targets(self):
        assert TypeSpec("A", 2).target_permanent == 0
        assert TypeSpec("B", 2).target_permanent == 0
        assert TypeSpec("C", 2).target_permanent == 1

    @pytest.mark.parametrize("family", "ABC")
    @pytest.mark.parametrize("n", range(1, 9))
    def test_extreme_count_arithmetic(self, family, n):
        spec = TypeSpec(family, n)
        assert spec.i_max + spec.j_min == spec.m
        if family == "C":
            assert spec.j_min == (n * n - n) // 2
        else:
            assert spec.j_min == n

    def test_n1_degenerate_families(self):
        # A and B coincide on a single variable cell; C is fully fixed
        assert TypeSpec("A", 1).m == 1
        assert TypeSpec("B", 1).m == 1
        assert TypeSpec("B", 1).variable_mask == BinaryMatrix.from_rows([[1]])
        assert TypeSpec("C", 1).m == 0

    def test_bits_roundtrip(self):
        spec = TypeSpec("B", 3)
        for bits in range(1 << spec.m):
            m = spec.matrix_from_bits(bits)
            assert spec.bits_from_matrix(m) == bits
        # fixed diagonal present in every assembled matrix
        m = spec.matrix_from_bits(0)
        assert m.entry(2, 2) == 1 and m.entry(3, 3) == 1 and m.entry(1, 1) == 0

    def test_rejects_unknown_family(self):
        with pytest.raises(ValueError):
            TypeSpec("D", 2)


class TestPermanent:
    def test_all_ones_2x2(self):
        assert permanent_expansion(BinaryMatrix.ones(2)) == 2

    @pytest.mark.parametrize("n", range(1, 6))
    def test_identity(self, n):
        assert permanent_expansion(BinaryMatrix.identity(n)) == 1

    def test_scaled_witness(self):
        s3 = RationalMatrix.from_rows([[1, 0, Fraction(1, 2)], [0, 1, 0], [2, 1, 1]])
        assert permanent_expansion(s3) == 2

    def test_dimension_guard(self):
        with pytest.raises(DimensionError):
            permanent_expansion(BinaryMatrix.identity(9))

    def test_ryser_small_values(self):
        assert permanent_ryser(BinaryMatrix.ones(2)) == 2
        assert permanent_ryser(BinaryMatrix.ones(4)) == 24
        assert permanent_ryser(BinaryMatrix.identity(5)) == 1

    def test_ryser_matches_expansion_exhaustively_small(self):
        for n in range(1, 4):
            for bits in range(1 << (n * n)):
                rows = tuple((bits >> (n * i)) & ((1 << n) - 1) for i in range(n))
                m = BinaryMatrix(n, rows)
                assert permanent_ryser(m) == permanent_expansion(m)

    def test_ryser_matches_expansion_random_6x6(self):
        rng = random.Random(20240607)
        for _ in range(1000):
            m = random_binary(rng, 6)
            assert permanent_ryser(m) == permanent_expansion(m)

    def test_ryser_matches_expansion_bulk(self):
        # ten thousand seeded cases spread over the 4..7 range
        rng = random.Random(987654321)
        for n, cases in ((4, 4000), (5, 3000), (6, 2000), (7, 1000)):
            for _ in range(cases):
                m = random_binary(rng, n)
                assert permanent_ryser(m) == permanent_expansion(m)

    @given(
        st.integers(2, 5).flatmap(
            lambda n: st.tuples(
                st.just(n), st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n)
            )
        )
    )
    def test_ryser_matches_expansion_property(self, case):
        n, rows = case
        m = BinaryMatrix(n, tuple(rows))
        assert permanent_ryser(m) == permanent_expansion(m)

    def test_binary_permanent_nonnegative(self):
        rng = random.Random(7)
        for _ in range(200):
            assert permanent_expansion(random_binary(rng, 4)) >= 0


class TestDeterminant:
    def test_half_offdiag(self):
        m = RationalMatrix.from_rows([[1, Fraction(1, 2)], [Fraction(1, 2), 1]])
        assert determinant(m) == Fraction(3, 4)

    def test_singular_witness(self):
        m = RationalMatrix.from_rows([[1, 0, 1], [1, 1, 0], [2, 1, 1]])
        assert determinant(m) == 0

    def test_binary_companion(self):
        m = RationalMatrix.from_rows([[1, 0, 1], [1, 1, 0], [1, 1, 1]])
        assert determinant(m) == 1

    def test_pivot_swap_path(self):
        m = RationalMatrix.from_rows([[0, 1], [1, 0]])
        assert determinant(m) == -1

    def test_matches_expansion_on_seeded_matrices(self):
        rng = random.Random(1234)
        for n in range(1, 6):
            for _ in range(40):
                rows = [
                    [Fraction(rng.randrange(-4, 5), rng.randrange(1, 4)) for _ in range(n)]
                    for _ in range(n)
                ]
                m = RationalMatrix.from_rows(rows)
                assert determinant(m) == determinant_expansion(m)


class TestDeleteRowCol:
    def test_identity_minor(self):
        assert delete_row_col(BinaryMatrix.identity(3), 1, 1) == BinaryMatrix.identity(2)

    def test_rational_minor(self):
        m = RationalMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
        assert delete_row_col(m, 2, 2) == RationalMatrix.from_rows([[1, 3], [7, 10]])

    def test_index_guard(self):
        with pytest.raises(IndexError):
            delete_row_col(BinaryMatrix.identity(3), 0, 1)
        with pytest.raises(IndexError):
            delete_row_col(BinaryMatrix.identity(3), 1, 4)

    def test_laplace_expansion_identity(self):
        # expanding along any row reproduces the determinant, n <= 5
        rng = random.Random(99)
        for n in range(2, 6):
            for _ in range(10):
                m = RationalMatrix.from_rows(
                    [[rng.randrange(-3, 4) for _ in range(n)] for _ in range(n)]
                )
                d = determinant(m)
                for i in range(1, n + 1):
                    expanded = sum(
                        m.entry(i, j)
                        * (-1) ** (i + j)
                        * determinant(delete_row_col(m, i, j))
                        for j in range(1, n + 1)
                    )
                    assert expanded == d


class TestSupport:
    def test_zero_matrix(self):
        z = RationalMatrix.from_rows([[0, 0], [0, 0]])
        assert support(z) == BinaryMatrix.zero(2)

    def test_scaled_witness_pattern(self):
        m = RationalMatrix.from_rows([[1, 0, Fraction(1, 2)], [0, 1, 0], [2, 1, 1]])
        assert support(m) == BinaryMatrix.from_rows([[1, 0, 1], [0, 1, 0], [1, 1, 1]])

    def test_idempotent_on_binary(self):
        m = BinaryMatrix.from_rows([[1, 0], [1, 1]])
        assert support(m.to_rational()) == m
        assert support(m) is m
