import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from leastchange import (
    DimensionError,
    Polynomial,
    TypeSpec,
    WeightedSeries,
    count_dags_by_edges,
    count_pertinent,
    edge_polynomial,
    gf_edge_table,
    one_plus_t_power,
    reciprocal,
    z_series,
    z_series_neg,
)
from leastchange.reference import REFERENCE_COUNTS
from leastchange.tables import ROUTE_GENERATING_FUNCTION


class TestPolynomial:
    def test_trailing_zeros_stripped(self):
        assert Polynomial((1, 2, 0, 0)).coefficients == (1, 2)
        assert Polynomial((0, 0)).is_zero()

    def test_arithmetic(self):
        p = Polynomial((1, 1))
        assert (p * p).coefficients == (1, 2, 1)
        assert (p + Polynomial((0, 0, 3))).coefficients == (1, 1, 3)
        assert (p - p).is_zero()
        assert (2 * p).coefficients == (2, 2)
        assert (p**3).coefficients == (1, 3, 3, 1)

    def test_evaluate(self):
        p = Polynomial((1, 0, -1))
        assert p.evaluate(Fraction(1, 2)) == Fraction(3, 4)
        assert p.evaluate(2) == -3

    def test_derivative(self):
        assert Polynomial((5, 3, 2)).derivative().coefficients == (3, 4)

    def test_integral_fractions_normalize_to_int(self):
        p = Polynomial((Fraction(2, 1), Fraction(1, 2)))
        assert p.coefficients == (2, Fraction(1, 2))
        assert isinstance(p.coefficients[0], int)

    def test_one_plus_t_power(self):
        assert one_plus_t_power(0) == Polynomial((1,))
        assert one_plus_t_power(3).coefficients == (1, 3, 3, 1)


class TestBaseSeries:
    def test_order_zero(self):
        assert z_series(0).terms == (Polynomial((1,)),)

    def test_negated_alternates(self):
        assert [p.coefficients for p in z_series_neg(2).terms] == [(1,), (-1,), (1,)]

    def test_unfolded_coefficients_at_t0(self):
        # negated base series at t = 0 is 1 - z + z^2/2 - z^3/6 + z^4/24
        s = z_series_neg(4)
        expected = [Fraction((-1) ** n, math.factorial(n)) for n in range(5)]
        assert [s.coefficient_at(n, 0) for n in range(5)] == expected

    def test_rejects_negative_order(self):
        with pytest.raises(ValueError):
            z_series(-1)


class TestReciprocal:
    def test_unit_series_is_self_inverse(self):
        unit = WeightedSeries.unit(5)
        assert reciprocal(unit) == unit

    def test_term_four_is_the_published_polynomial(self):
        r = reciprocal(z_series_neg(4))
        assert r.terms[4].coefficients == (1, 12, 60, 152, 186, 108, 24)

    def test_term_two(self):
        assert reciprocal(z_series_neg(2)).terms[2].coefficients == (1, 2)

    def test_requires_unit_constant_term(self):
        with pytest.raises(ValueError):
            reciprocal(WeightedSeries([Polynomial((2,)), Polynomial((1,))]))

    def test_product_with_reciprocal_is_unit_to_order_8(self):
        rng = random.Random(31337)
        for _ in range(5):
            terms = [Polynomial((1,))] + [
                Polynomial([rng.randrange(-3, 4) for _ in range(rng.randrange(1, 4))])
                for _ in range(8)
            ]
            s = WeightedSeries(terms)
            assert s * reciprocal(s) == WeightedSeries.unit(8)
            assert reciprocal(s) * s == WeightedSeries.unit(8)


class TestWeightedRingLaws:
    def _random_series(self, rng, order):
        return WeightedSeries(
            [
                Polynomial([rng.randrange(-3, 4) for _ in range(rng.randrange(1, 4))])
                for _ in range(order + 1)
            ]
        )

    def test_associative_and_commutative_order_8(self):
        rng = random.Random(4242)
        for _ in range(3):
            a = self._random_series(rng, 8)
            b = self._random_series(rng, 8)
            c = self._random_series(rng, 8)
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)

    small_poly = st.lists(st.integers(-2, 2), min_size=1, max_size=3).map(Polynomial)
    small_series = st.lists(small_poly, min_size=4, max_size=4).map(WeightedSeries)

    @given(small_series, small_series)
    def test_commutative_property(self, a, b):
        assert a * b == b * a

    @given(small_series, small_series, small_series)
    def test_associative_property(self, a, b, c):
        assert (a * b) * c == a * (b * c)


class TestEdgePolynomial:
    def test_published_n4(self):
        p = edge_polynomial(4)
        assert p.coefficients == (1, 12, 60, 152, 186, 108, 24)
        assert p.degree == 6

    def test_n1_is_constant_one(self):
        assert edge_polynomial(1) == Polynomial((1,))

    def test_truncation_stability(self):
        base = edge_polynomial(4)
        for order in range(4, 9):
            assert edge_polynomial(4, order=order) == base

    @pytest.mark.parametrize("n", range(1, 7))
    def test_shape_invariants(self, n):
        p = edge_polynomial(n)
        assert p.degree == (n * n - n) // 2
        assert p[0] == 1
        assert all(c > 0 for c in p.coefficients)
        assert p.coefficients[-1] == math.factorial(n)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_leading_coefficient_against_census(self, n):
        # count of transitive tournaments, checked rather than assumed
        assert edge_polynomial(n).coefficients[-1] == count_dags_by_edges(n).coeffs[-1]

    def test_integer_coefficients_only(self):
        for n in range(1, 11):
            assert all(isinstance(c, int) for c in edge_polynomial(n).coefficients)

    def test_derivative_extraction_agrees_with_indexing(self):
        p = edge_polynomial(5)
        for e in range(p.degree + 1):
            assert p.coefficient_by_differentiation(e) == p[e]

    def test_dimension_guard(self):
        with pytest.raises(DimensionError):
            edge_polynomial(0)
        with pytest.raises(DimensionError):
            edge_polynomial(25)

    def test_large_n_coefficient_sum_is_odd(self):
        # the t=1 value counts labeled DAGs, which is odd for every n
        # (pair each non-self-converse DAG with its converse)
        for n in (8, 12):
            assert sum(edge_polynomial(n).coefficients) % 2 == 1


class TestGfTable:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_reference_rows(self, n):
        table = gf_edge_table(n)
        assert table.coeffs == REFERENCE_COUNTS["C"][n]
        assert table.route == ROUTE_GENERATING_FUNCTION

    def test_triple_route_agreement(self):
        for n in range(1, 6):
            enum = count_pertinent(TypeSpec("C", n)).coeffs
            census = count_dags_by_edges(n).coeffs
            series = gf_edge_table(n).coeffs
            assert enum == census == series

    def test_beyond_enumeration_range(self):
        table = gf_edge_table(6)
        assert table.total == 3781503
        assert len(table.coeffs) == 16
