"""Exact square matrices and the permanent/determinant primitives.

Binary matrices are stored as row bitmasks (bit j-1 of row i holds entry
(i, j)); rational matrices hold exact ``Fraction`` entries.  All public
indices are 1-based.  Everything here is an immutable value, so every
operation is pure and safe under any amount of concurrency.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, PatternError

# Bitmask storage supports up to 30; the factorial-cost expansions below
# enforce their own, much smaller caps.
MAX_DIMENSION = 30
MAX_EXPANSION_DIMENSION = 8

FAMILIES = ("A", "B", "C")


@dataclass(frozen=True)
class BinaryMatrix:
    """Square 0/1 matrix; ``rows[i]`` is the bitmask of row i+1."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DIMENSION:
            raise DimensionError(f"dimension {self.n} outside 1..{MAX_DIMENSION}")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for r in self.rows:
            if r < 0 or r & ~full:
                raise ValueError(f"row mask {r:#x} has bits outside {self.n} columns")

    @classmethod
    def from_rows(cls, rows) -> "BinaryMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        masks = []
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
            mask = 0
            for j, v in enumerate(r):
                if v not in (0, 1):
                    raise ValueError(f"entry {v!r} is not 0 or 1")
                mask |= v << j
            masks.append(mask)
        return cls(n, tuple(masks))

    @classmethod
    def zero(cls, n: int) -> "BinaryMatrix":
        return cls(n, (0,) * n)

    @classmethod
    def identity(cls, n: int) -> "BinaryMatrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def ones(cls, n: int) -> "BinaryMatrix":
        return cls(n, ((1 << n) - 1,) * n)

    def entry(self, i: int, j: int) -> int:
        _check_index(self.n, i, j)
        return (self.rows[i - 1] >> (j - 1)) & 1

    def one_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    def to_rational(self) -> "RationalMatrix":
        return RationalMatrix.from_rows(self.to_lists())

    def transpose(self) -> "BinaryMatrix":
        cols = [0] * self.n
        for i, r in enumerate(self.rows):
            for j in range(self.n):
                cols[j] |= ((r >> j) & 1) << i
        return BinaryMatrix(self.n, tuple(cols))

    def __str__(self):
        return "\n".join(" ".join(str(v) for v in row) for row in self.to_lists())


@dataclass(frozen=True)
class RationalMatrix:
    """Square matrix of exact rationals."""

    n: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError(f"dimension {self.n} must be positive")
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ValueError("entries must form an n-by-n grid")

    @classmethod
    def from_rows(cls, rows) -> "RationalMatrix":
        grid = tuple(tuple(Fraction(v) for v in row) for row in rows)
        return cls(len(grid), grid)

    def entry(self, i: int, j: int) -> Fraction:
        _check_index(self.n, i, j)
        return self.entries[i - 1][j - 1]

    def __str__(self):
        return "\n".join(" ".join(str(v) for v in row) for row in self.entries)


@dataclass(frozen=True)
class TypeSpec:
    """One of the three matrix families at a fixed dimension.

    Family A: every element is variable.  Family B: unit diagonal except
    a single variable diagonal element at (1, 1); off-diagonal elements
    variable.  Family C: unit diagonal, off-diagonal elements variable.
    A matrix of the family is *pertinent* when its permanent equals the
    family target (0 for A and B, 1 for C).
    """

    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if not 1 <= self.n <= MAX_DIMENSION:
            raise DimensionError(f"dimension {self.n} outside 1..{MAX_DIMENSION}")

    @property
    def variable_mask(self) -> BinaryMatrix:
        n = self.n
        full = (1 << n) - 1
        if self.family == "A":
            rows = [full] * n
        else:
            rows = [full & ~(1 << i) for i in range(n)]
            if self.family == "B":
                rows[0] |= 1
        return BinaryMatrix(n, tuple(rows))

    @property
    def m(self) -> int:
        """Number of variable elements."""
        n = self.n
        if self.family == "A":
            return n * n
        if self.family == "B":
            return n * n - n + 1
        return n * n - n

    @property
    def j_min(self) -> int:
        """Fewest zero-valued variable elements a pertinent matrix can have."""
        if self.family == "C":
            return (self.n * self.n - self.n) // 2
        return self.n

    @property
    def i_max(self) -> int:
        """Most one-valued variable elements a pertinent matrix can have."""
        return self.m - self.j_min

    @property
    def target_permanent(self) -> int:
        return 1 if self.family == "C" else 0

    def variable_positions(self) -> tuple[tuple[int, int], ...]:
        """Variable cells in row-major order, 1-based."""
        mask = self.variable_mask
        return tuple(
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(1, self.n + 1)
            if mask.entry(i, j)
        )

    def matrix_from_bits(self, bits: int) -> BinaryMatrix:
        """Assignment counter -> matrix: bit k drives the k-th variable cell."""
        if not 0 <= bits < (1 << self.m):
            raise ValueError(f"assignment counter {bits} outside 0..2^{self.m}-1")
        rows = [fixed for fixed in self.fixed_rows()]
        for k, (i, j) in enumerate(self.variable_positions()):
            rows[i - 1] |= ((bits >> k) & 1) << (j - 1)
        return BinaryMatrix(self.n, tuple(rows))

    def bits_from_matrix(self, matrix: BinaryMatrix) -> int:
        """Inverse of :meth:`matrix_from_bits`; rejects broken fixed cells."""
        self.check_pattern(matrix)
        bits = 0
        for k, (i, j) in enumerate(self.variable_positions()):
            bits |= matrix.entry(i, j) << k
        return bits

    def fixed_rows(self) -> tuple[int, ...]:
        """Row masks of the fixed (always 1) elements."""
        mask = self.variable_mask
        full = (1 << self.n) - 1
        return tuple(full & ~mask.rows[i] for i in range(self.n))

    def check_pattern(self, matrix: BinaryMatrix) -> None:
        if matrix.n != self.n:
            raise DimensionError(f"matrix is {matrix.n}x{matrix.n}, family needs n={self.n}")
        for row, fixed in zip(matrix.rows, self.fixed_rows()):
            if row & fixed != fixed:
                raise PatternError(f"fixed element of family {self.family} is 0")


def _check_index(n: int, i: int, j: int) -> None:
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"index ({i}, {j}) outside 1..{n}")


def _check_expansion_dim(n: int) -> None:
    if not 1 <= n <= MAX_EXPANSION_DIMENSION:
        raise DimensionError(
            f"permutation expansion supports 1..{MAX_EXPANSION_DIMENSION}, got {n}"
        )


def permanent_expansion(matrix):
    """Permanent as the literal sum over all n! permutations.

    Accepts a BinaryMatrix (returns int) or RationalMatrix (returns
    Fraction).  Branches with a zero partial product are skipped, but
    every surviving permutation is visited individually.
    """
    n = matrix.n
    _check_expansion_dim(n)
    if isinstance(matrix, BinaryMatrix):
        # column j is matched to some unused row with a 1 in that column
        col_masks = [0] * n
        for i, r in enumerate(matrix.rows):
            for j in range(n):
                if (r >> j) & 1:
                    col_masks[j] |= 1 << i

        def count(j: int, used: int) -> int:
            if j == n:
                return 1
            total = 0
            avail = col_masks[j] & ~used
            while avail:
                low = avail & -avail
                total += count(j + 1, used | low)
                avail ^= low
            return total

        return count(0, 0)

    entries = matrix.entries
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        prod = Fraction(1)
        for j, i in enumerate(perm):
            v = entries[i][j]
            if v == 0:
                break
            prod *= v
        else:
            total += prod
    return total


def permanent_ryser(matrix: BinaryMatrix) -> int:
    """Permanent by inclusion-exclusion over column subsets, O(2^n * n)."""
    if not isinstance(matrix, BinaryMatrix):
        raise TypeError("permanent_ryser expects a BinaryMatrix")
    n = matrix.n
    if not 1 <= n <= MAX_DIMENSION:
        raise DimensionError(f"permanent_ryser supports 1..{MAX_DIMENSION}, got {n}")
    rows = matrix.rows
    total = 0
    for subset in range(1, 1 << n):
        prod = 1
        for r in rows:
            prod *= (r & subset).bit_count()
            if prod == 0:
                break
        if (n - subset.bit_count()) & 1:
            total -= prod
        else:
            total += prod
    return total


def determinant(matrix) -> Fraction:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if isinstance(matrix, BinaryMatrix):
        matrix = matrix.to_rational()
    n = matrix.n
    a = [[Fraction(v) for v in row] for row in matrix.entries]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = pivot
    return sign * a[n - 1][n - 1]


def determinant_expansion(matrix) -> Fraction:
    """Determinant as the signed permutation sum; cross-check for Bareiss."""
    if isinstance(matrix, BinaryMatrix):
        matrix = matrix.to_rational()
    n = matrix.n
    _check_expansion_dim(n)
    entries = matrix.entries
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        prod = Fraction(1)
        for j, i in enumerate(perm):
            v = entries[i][j]
            if v == 0:
                break
            prod *= v
        else:
            total += _sign(perm) * prod
    return total


def _sign(perm) -> int:
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        p = start
        while not seen[p]:
            seen[p] = True
            p = perm[p]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def delete_row_col(matrix, i: int, j: int):
    """Submatrix with row i and column j removed (1-based)."""
    n = matrix.n
    if n < 2:
        raise DimensionError("cannot delete from a 1x1 matrix")
    _check_index(n, i, j)
    if isinstance(matrix, BinaryMatrix):
        low = (1 << (j - 1)) - 1
        rows = [
            (r & low) | ((r >> j) << (j - 1))
            for k, r in enumerate(matrix.rows)
            if k != i - 1
        ]
        return BinaryMatrix(n - 1, tuple(rows))
    rows = [
        [v for jj, v in enumerate(row) if jj != j - 1]
        for ii, row in enumerate(matrix.entries)
        if ii != i - 1
    ]
    return RationalMatrix.from_rows(rows)


def support(matrix) -> BinaryMatrix:
    """0/1 pattern of the nonzero entries."""
    if isinstance(matrix, BinaryMatrix):
        return matrix
    masks = []
    for row in matrix.entries:
        mask = 0
        for j, v in enumerate(row):
            if v != 0:
                mask |= 1 << j
        masks.append(mask)
    return BinaryMatrix(matrix.n, tuple(masks))
