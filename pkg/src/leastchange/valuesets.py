"""Least attainable |det| over a value set, and the sets of attaining matrices.

Variable elements draw from a value set containing 0.  Two questions are
answered exhaustively: which determinant value of least absolute value can a
family matrix attain with positive probability (over rational assignments,
and over the induced 0/1 patterns), and which matrices attain it.

For a continuous value set only the support pattern of an assignment
matters: matrices sharing the locations of their nonzero variable elements
form one equivalence class, represented here by the pattern itself.  A class
attains the least value exactly when its pattern is pertinent (permanent
equal to the family target), because then every determinant term beyond the
forced ones vanishes identically.  For a discrete set every assignment has
positive probability, so plain minimization over assignments applies.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .dags import is_acyclic, matrix_to_digraph
from .enumeration import has_perfect_matching
from .errors import BudgetError, DimensionError
from .genfunc import Polynomial
from .matrices import (
    BinaryMatrix,
    RationalMatrix,
    TypeSpec,
    determinant,
    permanent_expansion,
    support,
)

DISCRETE_BUDGET = 20_000_000
CONTINUOUS_MAX_N = 5


@dataclass(frozen=True)
class ValueSet:
    """Finite rational value set with weights, or an interval around 0."""

    kind: str
    values: tuple[Fraction, ...] = ()
    weights: tuple[tuple[Fraction, Fraction], ...] = ()
    interval: tuple[Fraction, Fraction] | None = None

    @classmethod
    def discrete(cls, values, weights=None) -> "ValueSet":
        vals = sorted({Fraction(v) for v in values})
        if Fraction(0) not in vals:
            raise ValueError("a value set must contain 0")
        nonzero = [v for v in vals if v != 0]
        if not nonzero:
            raise ValueError("a discrete value set needs at least one nonzero value")
        if weights is None:
            w = Fraction(1, len(nonzero))
            weights = {v: w for v in nonzero}
        else:
            weights = {Fraction(v): Fraction(w) for v, w in weights.items()}
        if sorted(weights) != nonzero:
            raise ValueError("weights must cover exactly the nonzero values")
        if any(w <= 0 for w in weights.values()) or sum(weights.values()) != 1:
            raise ValueError("weights must be positive and sum to 1")
        return cls("discrete", tuple(vals), tuple(sorted(weights.items())))

    @classmethod
    def continuous(cls, lo, hi) -> "ValueSet":
        lo, hi = Fraction(lo), Fraction(hi)
        if not lo < hi:
            raise ValueError("interval must be non-trivial")
        if not lo <= 0 <= hi:
            raise ValueError("a value set must contain 0")
        return cls("continuous", interval=(lo, hi))

    @classmethod
    def parse(cls, text: str) -> "ValueSet":
        """Literal like ``0,1/2@1/2,2@1/2``; weights default to uniform."""
        values = []
        weights = {}
        for token in text.split(","):
            token = token.strip()
            if not token:
                raise ValueError("empty entry in value-set literal")
            if "@" in token:
                v, w = token.split("@", 1)
                value = Fraction(v)
                weights[value] = Fraction(w)
            else:
                value = Fraction(token)
            values.append(value)
        return cls.discrete(values, weights or None)

    def weight(self, value) -> Fraction:
        for v, w in self.weights:
            if v == value:
                return w
        raise KeyError(f"{value} has no weight")

    def contains(self, value) -> bool:
        value = Fraction(value)
        if self.kind == "discrete":
            return value in self.values
        lo, hi = self.interval
        return lo <= value <= hi

    def __str__(self):
        if self.kind == "discrete":
            return "{" + ", ".join(str(v) for v in self.values) + "}"
        return f"[{self.interval[0]}, {self.interval[1]}]"


@dataclass(frozen=True)
class AttainingSet:
    """Matrices (or support patterns) attaining the least |det| value."""

    spec: TypeSpec
    xset: ValueSet
    value: Fraction
    members: tuple

    def __len__(self):
        return len(self.members)

    def nonzero_count(self, member) -> int:
        """Number of nonzero variable elements of a member."""
        pattern = support(member)
        count = 0
        for i, j in self.spec.variable_positions():
            count += pattern.entry(i, j)
        return count

    def partition(self) -> dict[int, tuple]:
        """Members grouped by number of nonzero variable elements."""
        groups: dict[int, list] = {}
        for member in self.members:
            groups.setdefault(self.nonzero_count(member), []).append(member)
        return {i: tuple(ms) for i, ms in sorted(groups.items())}


def _check_continuous_dim(spec: TypeSpec) -> None:
    if spec.n > CONTINUOUS_MAX_N:
        raise DimensionError(f"continuous analysis supports n <= {CONTINUOUS_MAX_N}")


def _pattern_budget(spec: TypeSpec) -> None:
    if 1 << spec.m > DISCRETE_BUDGET:
        raise BudgetError(f"2^{spec.m} patterns exceed the {DISCRETE_BUDGET} budget")


def _pattern_is_pertinent(spec: TypeSpec, pattern: BinaryMatrix) -> bool:
    # validated shortcuts: permanent 0 <=> no perfect matching (A, B);
    # permanent 1 <=> off-diagonal digraph acyclic (C)
    if spec.family == "C":
        return is_acyclic(matrix_to_digraph(pattern))
    return not has_perfect_matching(pattern)


def _iter_patterns(spec: TypeSpec):
    for bits in range(1 << spec.m):
        yield spec.matrix_from_bits(bits)


def least_determinant(spec: TypeSpec, xset: ValueSet) -> Fraction:
    """Determinant value of least absolute value attainable with positive
    probability; ties between +u and -u resolve to the nonnegative one."""
    if xset.kind == "continuous":
        _check_continuous_dim(spec)
        return Fraction(spec.target_permanent)
    value, _ = _discrete_scan(spec, xset)
    return value


def attaining_matrices(spec: TypeSpec, xset: ValueSet) -> AttainingSet:
    """All attaining assignments (discrete) or support classes (continuous)."""
    if xset.kind == "continuous":
        _check_continuous_dim(spec)
        _pattern_budget(spec)
        members = tuple(
            p for p in _iter_patterns(spec) if _pattern_is_pertinent(spec, p)
        )
        return AttainingSet(spec, xset, Fraction(spec.target_permanent), members)
    value, members = _discrete_scan(spec, xset)
    return AttainingSet(spec, xset, value, members)


def least_determinant_binary(spec: TypeSpec, xset: ValueSet) -> Fraction:
    """Least |det| over the induced 0/1 matrices.

    Discrete sets induce every pattern with positive probability, so this
    minimizes over patterns directly; for continuous sets the attaining
    classes are the pertinent patterns, whose determinant is exactly the
    family target.
    """
    if xset.kind == "continuous":
        _check_continuous_dim(spec)
        return Fraction(spec.target_permanent)
    value, _ = _pattern_scan(spec)
    return value


def attaining_patterns(spec: TypeSpec, xset: ValueSet) -> AttainingSet:
    """Binary matrices attaining the least binary determinant value."""
    if xset.kind == "continuous":
        attaining = attaining_matrices(spec, xset)
        return AttainingSet(spec, xset, attaining.value, attaining.members)
    value, members = _pattern_scan(spec)
    return AttainingSet(spec, xset, value, members)


@lru_cache(maxsize=256)
def _discrete_scan(spec: TypeSpec, xset: ValueSet) -> tuple[Fraction, tuple]:
    if xset.kind != "discrete":
        raise ValueError("discrete scan needs a discrete value set")
    values = list(xset.values)
    m = spec.m
    if len(values) ** m > DISCRETE_BUDGET:
        raise BudgetError(
            f"{len(values)}^{m} assignments exceed the {DISCRETE_BUDGET} budget"
        )
    n = spec.n
    scale = math.lcm(*(v.denominator for v in values))
    scaled = [int(v * scale) for v in values]
    positions = [(i - 1, j - 1) for i, j in spec.variable_positions()]
    base = [[0] * n for _ in range(n)]
    for i, fixed in enumerate(spec.fixed_rows()):
        for j in range(n):
            if (fixed >> j) & 1:
                base[i][j] = scale

    best: int | None = None
    kept: list[tuple[int, tuple[int, ...]]] = []
    for combo in itertools.product(range(len(values)), repeat=m):
        for k, (i, j) in enumerate(positions):
            base[i][j] = scaled[combo[k]]
        d = _det_int([row[:] for row in base], n)
        a = abs(d)
        if best is None or a < best:
            best = a
            kept = [(d, combo)]
        elif a == best:
            kept.append((d, combo))
    u_scaled = best if any(d == best for d, _ in kept) else -best
    members = []
    for d, combo in kept:
        if d != u_scaled:
            continue
        rows = [[Fraction(1) if base_fixed else Fraction(0) for base_fixed in row] for row in _fixed_grid(spec)]
        for k, (i, j) in enumerate(positions):
            rows[i][j] = values[combo[k]]
        members.append(RationalMatrix.from_rows(rows))
    return Fraction(u_scaled, scale**n), tuple(members)


def _fixed_grid(spec: TypeSpec) -> list[list[int]]:
    n = spec.n
    return [[(fixed >> j) & 1 for j in range(n)] for fixed in spec.fixed_rows()]


@lru_cache(maxsize=256)
def _pattern_scan(spec: TypeSpec) -> tuple[Fraction, tuple]:
    _pattern_budget(spec)
    best: Fraction | None = None
    kept: list[tuple[Fraction, BinaryMatrix]] = []
    for pattern in _iter_patterns(spec):
        d = determinant(pattern)
        a = abs(d)
        if best is None or a < best:
            best = a
            kept = [(d, pattern)]
        elif a == best:
            kept.append((d, pattern))
    u = best if any(d == best for d, _ in kept) else -best
    members = tuple(p for d, p in kept if d == u)
    return Fraction(u), members


def _det_int(a: list[list[int]], n: int) -> int:
    """Bareiss fraction-free determinant over ints; divisions are exact."""
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            f = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class InclusionReport:
    """Is the continuous attaining-pattern set inside the discrete one?"""

    family: str
    n: int
    holds: bool
    difference: tuple  # discrete-only patterns
    missing: tuple  # continuous patterns absent from the discrete side
    disjoint: bool

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "holds": self.holds,
            "difference": [m.to_lists() for m in self.difference],
            "missing": [m.to_lists() for m in self.missing],
            "disjoint": self.disjoint,
        }


def check_inclusion(
    family: str, n: int, xset_dis: ValueSet, xset_cnt: ValueSet
) -> InclusionReport:
    """Compare attaining-pattern sets for nested discrete/continuous sets."""
    if xset_dis.kind != "discrete" or xset_cnt.kind != "continuous":
        raise ValueError("need a discrete set nested in a continuous one")
    if not all(xset_cnt.contains(v) for v in xset_dis.values):
        raise ValueError(f"{xset_dis} is not contained in {xset_cnt}")
    spec = TypeSpec(family, n)
    dis = set(attaining_patterns(spec, xset_dis).members)
    cnt = set(attaining_patterns(spec, xset_cnt).members)
    missing = tuple(sorted(cnt - dis, key=lambda m: m.rows))
    difference = tuple(sorted(dis - cnt, key=lambda m: m.rows))
    holds = not missing
    if family in ("A", "B") and not holds:
        raise RuntimeError(
            f"inclusion must hold for family {family}; missing {len(missing)} patterns"
        )
    return InclusionReport(family, n, holds, difference, missing, not (dis & cnt))


@dataclass(frozen=True)
class Claim:
    description: str
    expected: str
    computed: str
    ok: bool


@dataclass(frozen=True)
class CheckReport:
    name: str
    claims: tuple[Claim, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.claims)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "claims": [
                {
                    "description": c.description,
                    "expected": c.expected,
                    "computed": c.computed,
                    "pass": c.ok,
                }
                for c in self.claims
            ],
        }


@dataclass(frozen=True)
class ComplementReport:
    """The exact identity P_continuous(det=1) + P_discrete(det=0) = 1."""

    continuous_coeffs: tuple
    discrete_coeffs: tuple
    sum_coeffs: tuple
    ok: bool

    def as_dict(self) -> dict:
        return {
            "continuous": [str(c) for c in self.continuous_coeffs],
            "discrete": [str(c) for c in self.discrete_coeffs],
            "sum": [str(c) for c in self.sum_coeffs],
            "ok": self.ok,
        }


def complement_identity_check() -> ComplementReport:
    """Unit-diagonal 2x2 over [0, 1] vs {0, 1}, both sides from scratch.

    Continuous side: probability that det = 1, summed over pertinent support
    classes with weight r^i (1-r)^(m-i).  Discrete side: probability that
    det = 0, summed over attaining assignments with cell weights w*r or 1-r.
    Their polynomial sum must be exactly 1.
    """
    spec = TypeSpec("C", 2)
    x_cnt = ValueSet.continuous(0, 1)
    x_dis = ValueSet.discrete([0, 1])

    r = Polynomial.variable()
    one_minus_r = Polynomial((1, -1))

    cnt_poly = Polynomial.zero()
    attaining_cnt = attaining_matrices(spec, x_cnt)
    for pattern in attaining_cnt.members:
        i = attaining_cnt.nonzero_count(pattern)
        cnt_poly = cnt_poly + r**i * one_minus_r ** (spec.m - i)

    dis_poly = Polynomial.zero()
    positions = spec.variable_positions()
    for combo in itertools.product(x_dis.values, repeat=spec.m):
        rows = [[Fraction(v) for v in row] for row in _fixed_grid(spec)]
        term = Polynomial.one()
        for value, (i, j) in zip(combo, positions):
            rows[i - 1][j - 1] = value
            if value == 0:
                term = term * one_minus_r
            else:
                term = term * (x_dis.weight(value) * r)
        if determinant(RationalMatrix.from_rows(rows)) == 0:
            dis_poly = dis_poly + term

    total = cnt_poly + dis_poly
    return ComplementReport(
        cnt_poly.coefficients,
        dis_poly.coefficients,
        total.coefficients,
        total == Polynomial.one(),
    )


def counterexample_report() -> CheckReport:
    """Recompute the hard-wired discrete counterexamples and check each claim."""
    claims: list[Claim] = []

    def claim(description, expected, computed):
        claims.append(Claim(description, str(expected), str(computed), expected == computed))

    # --- value set {0, 1/2}: rational and binary least values diverge ---
    x_half = ValueSet.discrete([0, Fraction(1, 2)])
    c2 = TypeSpec("C", 2)
    claim(
        "least |det| of unit-diagonal 2x2 over {0,1/2}",
        Fraction(3, 4),
        least_determinant(c2, x_half),
    )
    witness = RationalMatrix.from_rows([[1, Fraction(1, 2)], [Fraction(1, 2), 1]])
    claim(
        "witness with both off-diagonals 1/2 attains it",
        True,
        witness in attaining_matrices(c2, x_half).members,
    )
    claim(
        "binary least value over {0,1/2}",
        Fraction(0),
        least_determinant_binary(c2, x_half),
    )
    claim(
        "all-ones pattern attains the binary least value",
        True,
        BinaryMatrix.ones(2) in attaining_patterns(c2, x_half).members,
    )

    # --- value set {0, 1/2, 1, 2}: two assignments share one pattern ---
    x_four = ValueSet.discrete([0, Fraction(1, 2), 1, 2])
    s3 = RationalMatrix.from_rows([[1, 0, Fraction(1, 2)], [0, 1, 0], [2, 1, 1]])
    t3 = support(s3).to_rational()
    claim("det of the scaled witness", Fraction(0), determinant(s3))
    claim("det of its pattern", Fraction(0), determinant(t3))
    claim("permanent of the scaled witness", Fraction(2), permanent_expansion(s3))
    claim("permanent of its pattern", 2, permanent_expansion(support(s3)))
    claim(
        "pattern of the scaled witness",
        BinaryMatrix.from_rows([[1, 0, 1], [0, 1, 0], [1, 1, 1]]).to_lists(),
        support(s3).to_lists(),
    )
    for family, count in (("A", 6), ("B", 4), ("C", 3)):
        spec = TypeSpec(family, 3)
        claim(
            f"family {family} least |det| over {{0,1/2,1,2}}",
            Fraction(0),
            least_determinant(spec, x_four),
        )
        claim(
            f"family {family} binary least |det|",
            Fraction(0),
            least_determinant_binary(spec, x_four),
        )
        attaining = attaining_matrices(spec, x_four)
        patterns = attaining_patterns(spec, x_four)
        rational_stratum = attaining.partition().get(count, ())
        pattern_stratum = patterns.partition().get(count, ())
        claim(
            f"family {family}: strictly more attainers than patterns at {count} nonzeros",
            True,
            len(rational_stratum) > len(pattern_stratum),
        )

    # --- value set {0, 1, 2}: rational det 0 but pattern det 1 ---
    x_three = ValueSet.discrete([0, 1, 2])
    m3 = RationalMatrix.from_rows([[1, 1, 0], [1, 1, 0], [0, 1, 1]])
    claim("repeated-row witness has det 0", Fraction(0), determinant(m3))
    for family in "ABC":
        spec = TypeSpec(family, 3)
        claim(
            f"family {family} least |det| over {{0,1,2}}",
            Fraction(0),
            least_determinant(spec, x_three),
        )
        claim(
            f"family {family} binary least |det| over {{0,1,2}}",
            Fraction(0),
            least_determinant_binary(spec, x_three),
        )
    s3b = RationalMatrix.from_rows([[1, 0, 1], [1, 1, 0], [2, 1, 1]])
    claim("det of the second scaled witness", Fraction(0), determinant(s3b))
    claim("det of its pattern", Fraction(1), determinant(support(s3b)))

    return CheckReport("discrete-counterexamples", tuple(claims))
