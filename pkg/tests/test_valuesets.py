import itertools
from fractions import Fraction

import pytest

from leastchange import (
    AttainingSet,
    BinaryMatrix,
    BudgetError,
    RationalMatrix,
    TypeSpec,
    ValueSet,
    attaining_matrices,
    attaining_patterns,
    check_inclusion,
    complement_identity_check,
    counterexample_report,
    determinant,
    least_determinant,
    least_determinant_binary,
)

HALF = Fraction(1, 2)


def rational(rows):
    return RationalMatrix.from_rows(rows)


def binary(rows):
    return BinaryMatrix.from_rows(rows)


class TestValueSet:
    def test_parse_with_weights(self):
        xset = ValueSet.parse("0,1/2@1/2,2@1/2")
        assert xset.values == (0, HALF, 2)
        assert xset.weight(HALF) == HALF
        assert xset.weight(2) == HALF

    def test_parse_uniform_default(self):
        xset = ValueSet.parse("0,1/2,2")
        assert xset.weight(HALF) == HALF
        assert xset.weight(2) == HALF

    def test_requires_zero(self):
        with pytest.raises(ValueError):
            ValueSet.discrete([1, 2])

    def test_requires_positive_weights_summing_to_one(self):
        with pytest.raises(ValueError):
            ValueSet.discrete([0, 1, 2], {1: HALF, 2: HALF * HALF})
        with pytest.raises(ValueError):
            ValueSet.discrete([0, 1], {1: Fraction(-1)})

    def test_weights_must_cover_nonzero_values(self):
        with pytest.raises(ValueError):
            ValueSet.discrete([0, 1, 2], {1: Fraction(1)})

    def test_continuous_contains_zero(self):
        with pytest.raises(ValueError):
            ValueSet.continuous(1, 2)
        with pytest.raises(ValueError):
            ValueSet.continuous(2, 2)
        assert ValueSet.continuous(0, 2).contains(HALF)

    def test_str_forms(self):
        assert str(ValueSet.discrete([0, HALF, 2])) == "{0, 1/2, 2}"
        assert str(ValueSet.continuous(0, 1)) == "[0, 1]"


class TestLeastDeterminant:
    def test_c2_with_reciprocal_pair(self):
        xset = ValueSet.discrete([0, HALF, 2])
        assert least_determinant(TypeSpec("C", 2), xset) == 0

    def test_c2_without_reciprocal_pair(self):
        xset = ValueSet.discrete([0, HALF])
        assert least_determinant(TypeSpec("C", 2), xset) == Fraction(3, 4)

    def test_c2_continuous(self):
        assert least_determinant(TypeSpec("C", 2), ValueSet.continuous(0, 2)) == 1

    def test_minimality_by_hand(self):
        # only four assignments exist over {0, 1/2}; their determinants are
        # 1, 1, 1 and 3/4, so nothing beats 3/4
        dets = set()
        for b, c in itertools.product([0, HALF], repeat=2):
            dets.add(determinant(rational([[1, b], [c, 1]])))
        assert dets == {Fraction(1), Fraction(3, 4)}

    def test_sign_tiebreak_prefers_nonnegative(self):
        # dets over {0, 1/2, 7/2}: 1, 3/4, -3/4, -45/4; both signs of 3/4 attain
        xset = ValueSet.discrete([0, HALF, Fraction(7, 2)])
        spec = TypeSpec("C", 2)
        assert least_determinant(spec, xset) == Fraction(3, 4)
        members = attaining_matrices(spec, xset).members
        assert members == (rational([[1, HALF], [HALF, 1]]),)

    def test_budget_guard(self):
        with pytest.raises(BudgetError):
            least_determinant(TypeSpec("A", 5), ValueSet.discrete([0, 1]))

    def test_budget_guard_on_pattern_scan(self):
        with pytest.raises(BudgetError):
            attaining_matrices(TypeSpec("A", 5), ValueSet.continuous(0, 1))

    def test_zero_line_witnesses_for_a_and_b(self):
        # least value 0 on both the rational and binary sides, witnessed by
        # a matrix whose variable row or column is entirely zero
        xset = ValueSet.discrete([0, HALF, 2])
        for family in "AB":
            spec = TypeSpec(family, 2)
            assert least_determinant(spec, xset) == 0
            assert least_determinant_binary(spec, xset) == 0
            members = attaining_matrices(spec, xset).members

            def has_zero_line(m):
                rows = [[m.entry(i, j) for j in (1, 2)] for i in (1, 2)]
                return any(all(v == 0 for v in row) for row in rows) or any(
                    all(row[j] == 0 for row in rows) for j in (0, 1)
                )

            assert any(has_zero_line(m) for m in members)


class TestAttainingSets:
    def test_c2_discrete_members(self):
        xset = ValueSet.discrete([0, HALF, 2])
        attaining = attaining_matrices(TypeSpec("C", 2), xset)
        assert set(attaining.members) == {
            rational([[1, 2], [HALF, 1]]),
            rational([[1, HALF], [2, 1]]),
        }
        assert attaining.partition() == {2: attaining.members}

    def test_c2_continuous_support_classes(self):
        attaining = attaining_matrices(TypeSpec("C", 2), ValueSet.continuous(0, 2))
        assert set(attaining.members) == {
            binary([[1, 0], [0, 1]]),
            binary([[1, 1], [0, 1]]),
            binary([[1, 0], [1, 1]]),
        }
        part = attaining.partition()
        assert [len(part.get(i, ())) for i in (0, 1)] == [1, 2]
        assert part[0] == (BinaryMatrix.identity(2),)

    def test_c2_discrete_patterns(self):
        xset = ValueSet.discrete([0, HALF, 2])
        patterns = attaining_patterns(TypeSpec("C", 2), xset)
        assert patterns.value == 0
        assert patterns.members == (BinaryMatrix.ones(2),)
        assert patterns.partition() == {2: (BinaryMatrix.ones(2),)}

    def test_c2_continuous_patterns(self):
        patterns = attaining_patterns(TypeSpec("C", 2), ValueSet.continuous(0, 2))
        assert patterns.value == 1
        assert set(patterns.members) == {
            binary([[1, 0], [0, 1]]),
            binary([[1, 1], [0, 1]]),
            binary([[1, 0], [1, 1]]),
        }

    def test_a2_continuous_patterns_are_the_nine(self):
        patterns = attaining_patterns(TypeSpec("A", 2), ValueSet.continuous(0, 2))
        assert patterns.value == 0
        assert len(patterns) == 9
        # all nine have a zero row or a zero column
        for m in patterns.members:
            rows_zero = any(r == 0 for r in m.rows)
            cols_zero = any(r == 0 for r in m.transpose().rows)
            assert rows_zero or cols_zero

    def test_a2_discrete_patterns_add_all_ones(self):
        dis = attaining_patterns(TypeSpec("A", 2), ValueSet.discrete([0, HALF, 2]))
        cnt = attaining_patterns(TypeSpec("A", 2), ValueSet.continuous(0, 2))
        assert set(dis.members) == set(cnt.members) | {BinaryMatrix.ones(2)}

    def test_members_attain_the_value_exactly(self):
        xset = ValueSet.discrete([0, HALF, 2])
        for family in "ABC":
            spec = TypeSpec(family, 2)
            attaining = attaining_matrices(spec, xset)
            for member in attaining.members:
                assert determinant(member) == attaining.value

    def test_partition_counts_sum_to_cardinality(self):
        xset = ValueSet.discrete([0, HALF, 2])
        attaining = attaining_matrices(TypeSpec("A", 2), xset)
        part = attaining.partition()
        assert sum(len(v) for v in part.values()) == len(attaining)
        for i, members in part.items():
            for m in members:
                assert attaining.nonzero_count(m) == i


class TestZeroOneInstance:
    # value sets [0,1] and {0,1}: the least values genuinely diverge
    def test_continuous_side(self):
        spec = TypeSpec("C", 2)
        cnt = ValueSet.continuous(0, 1)
        assert least_determinant(spec, cnt) == 1
        assert least_determinant_binary(spec, cnt) == 1
        assert len(attaining_matrices(spec, cnt)) == 3

    def test_discrete_side(self):
        spec = TypeSpec("C", 2)
        dis = ValueSet.discrete([0, 1])
        assert least_determinant(spec, dis) == 0
        assert least_determinant_binary(spec, dis) == 0
        attaining = attaining_matrices(spec, dis)
        patterns = attaining_patterns(spec, dis)
        assert attaining.members == (BinaryMatrix.ones(2).to_rational(),)
        assert patterns.members == (BinaryMatrix.ones(2),)

    def test_pattern_sets_disjoint(self):
        report = check_inclusion("C", 2, ValueSet.discrete([0, 1]), ValueSet.continuous(0, 1))
        assert report.disjoint
        assert not report.holds


class TestInclusion:
    def test_a2_inclusion_with_all_ones_difference(self):
        report = check_inclusion(
            "A", 2, ValueSet.discrete([0, HALF, 2]), ValueSet.continuous(0, 2)
        )
        assert report.holds
        assert report.difference == (BinaryMatrix.ones(2),)
        assert not report.missing

    def test_b2_inclusion_holds(self):
        report = check_inclusion(
            "B", 2, ValueSet.discrete([0, HALF, 2]), ValueSet.continuous(0, 2)
        )
        assert report.holds

    def test_c2_inclusion_fails(self):
        report = check_inclusion(
            "C", 2, ValueSet.discrete([0, HALF, 2]), ValueSet.continuous(0, 2)
        )
        assert not report.holds
        assert len(report.missing) == 3

    def test_nesting_precondition(self):
        with pytest.raises(ValueError):
            check_inclusion("A", 2, ValueSet.discrete([0, 3]), ValueSet.continuous(0, 2))
        with pytest.raises(ValueError):
            check_inclusion(
                "A", 2, ValueSet.discrete([0, 1]), ValueSet.discrete([0, 1, 2])
            )

    def test_as_dict_shape(self):
        report = check_inclusion(
            "A", 2, ValueSet.discrete([0, HALF, 2]), ValueSet.continuous(0, 2)
        )
        d = report.as_dict()
        assert d["family"] == "A" and d["holds"] is True
        assert d["difference"] == [[[1, 1], [1, 1]]]


class TestComplementIdentity:
    def test_exact_polynomial_identity(self):
        report = complement_identity_check()
        assert report.ok
        assert report.continuous_coeffs == (1, 0, -1)
        assert report.discrete_coeffs == (0, 0, 1)
        assert report.sum_coeffs == (1,)

    def test_as_dict(self):
        d = complement_identity_check().as_dict()
        assert d["ok"] is True
        assert d["sum"] == ["1"]


class TestCounterexampleReport:
    def test_every_claim_passes(self):
        report = counterexample_report()
        failures = [c for c in report.claims if not c.ok]
        assert not failures, failures
        assert report.ok

    def test_report_serializes(self):
        d = counterexample_report().as_dict()
        assert d["ok"] is True
        assert len(d["claims"]) >= 20
        assert all(set(c) == {"description", "expected", "computed", "pass"} for c in d["claims"])
