"""Labeled acyclic digraphs and the census by edge count.

A unit-diagonal binary matrix has permanent 1 exactly when the digraph with
adjacency matrix M - I is acyclic, so counting DAGs on n labeled vertices by
edges is a second, independent route to the family-C tables.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, PatternError
from .matrices import BinaryMatrix, TypeSpec
from .tables import ROUTE_DAG_CENSUS, CoefficientTable

CENSUS_MAX_N = 5
PAIR_CENSUS_MAX_N = 6


@dataclass(frozen=True)
class Digraph:
    """Loop-free digraph on vertices 1..n; edges are ordered pairs."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for k, l in self.edges:
            if k == l:
                raise ValueError(f"loop ({k}, {k}) not allowed")
            if not (1 <= k <= self.n and 1 <= l <= self.n):
                raise ValueError(f"edge ({k}, {l}) outside vertex range 1..{self.n}")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Digraph":
        return cls(n, frozenset((int(k), int(l)) for k, l in edges))

    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency_rows(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for k, l in self.edges:
            rows[k - 1] |= 1 << (l - 1)
        return tuple(rows)


def matrix_to_digraph(matrix: BinaryMatrix) -> Digraph:
    """Digraph with adjacency M - I; requires a unit diagonal."""
    n = matrix.n
    for i, row in enumerate(matrix.rows):
        if not (row >> i) & 1:
            raise PatternError(f"diagonal entry ({i + 1}, {i + 1}) must be 1")
    edges = {
        (i + 1, j + 1)
        for i, row in enumerate(matrix.rows)
        for j in range(n)
        if j != i and (row >> j) & 1
    }
    return Digraph(n, frozenset(edges))


def digraph_to_matrix(digraph: Digraph) -> BinaryMatrix:
    rows = tuple(r | (1 << i) for i, r in enumerate(digraph.adjacency_rows()))
    return BinaryMatrix(digraph.n, rows)


def is_acyclic(digraph: Digraph) -> bool:
    """Iterative source peeling; no recursion depth to worry about."""
    return _peel(digraph.adjacency_rows(), digraph.n)


def _peel(adjacency: tuple[int, ...], n: int) -> bool:
    alive = (1 << n) - 1
    while alive:
        incoming = 0
        probe = alive
        while probe:
            low = probe & -probe
            incoming |= adjacency[low.bit_length() - 1]
            probe ^= low
        sources = alive & ~incoming
        if not sources:
            return False
        alive &= ~sources
    return True


def count_dags_by_edges(n: int) -> CoefficientTable:
    """Census over all off-diagonal adjacency masks.

    A mask containing any opposite pair (k, l), (l, k) holds a 2-cycle and is
    rejected before the full peel; that filter alone removes the majority of
    the 2^(n^2-n) candidates.
    """
    if not 1 <= n <= CENSUS_MAX_N:
        raise DimensionError(f"mask census supports 1..{CENSUS_MAX_N}, got {n}")
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    m = len(cells)
    pair_masks = []
    for a in range(m):
        i, j = cells[a]
        b = cells.index((j, i))
        if a < b:
            pair_masks.append((1 << a) | (1 << b))

    counts = [0] * (m + 1)
    for mask in range(1 << m):
        if any(mask & pm == pm for pm in pair_masks):
            continue
        adjacency = [0] * n
        for a in range(m):
            if (mask >> a) & 1:
                i, j = cells[a]
                adjacency[i] |= 1 << j
        if _peel(tuple(adjacency), n):
            counts[mask.bit_count()] += 1

    return _census_table(n, counts)


def census_by_pair_states(n: int) -> CoefficientTable:
    """Independent census enumerating the 3^(pairs) conflict-free states.

    Each unordered vertex pair is absent, forward, or backward (both
    directions at once is a 2-cycle, so that state never appears).  This
    reaches n = 6 and serves as the oracle for the generating-function
    route beyond the mask census.
    """
    if not 1 <= n <= PAIR_CENSUS_MAX_N:
        raise DimensionError(f"pair census supports 1..{PAIR_CENSUS_MAX_N}, got {n}")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    p = len(pairs)
    m = n * n - n
    total_states = 3**p
    counts = np.zeros(m + 1, dtype=np.int64)
    batch = 1 << 19
    for lo in range(0, total_states, batch):
        hi = min(lo + batch, total_states)
        states = np.arange(lo, hi, dtype=np.int64)
        adjacency = [np.zeros(states.shape, dtype=np.uint8) for _ in range(n)]
        edge_count = np.zeros(states.shape, dtype=np.int64)
        digits = states
        for i, j in pairs:
            d = digits % 3
            digits = digits // 3
            adjacency[i] |= np.where(d == 1, np.uint8(1 << j), np.uint8(0))
            adjacency[j] |= np.where(d == 2, np.uint8(1 << i), np.uint8(0))
            edge_count += (d != 0).astype(np.int64)
        acyclic = _peel_vectorized(adjacency, n)
        counts += np.bincount(edge_count[acyclic], minlength=m + 1)
    return _census_table(n, [int(v) for v in counts])


def _peel_vectorized(adjacency: list[np.ndarray], n: int) -> np.ndarray:
    full = np.uint8((1 << n) - 1)
    alive = np.full(adjacency[0].shape, full, dtype=np.uint8)
    zero = np.uint8(0)
    for _ in range(n):
        incoming = np.zeros(adjacency[0].shape, dtype=np.uint8)
        for u in range(n):
            live = ((alive >> np.uint8(u)) & np.uint8(1)).astype(bool)
            incoming |= np.where(live, adjacency[u], zero)
        alive &= ~(alive & ~incoming)
    return alive == 0


def _census_table(n: int, counts: list[int]) -> CoefficientTable:
    spec = TypeSpec("C", n)
    i_max = spec.i_max
    if any(counts[i_max + 1 :]):
        raise RuntimeError(f"acyclic digraph with more than {i_max} edges at n={n}")
    return CoefficientTable(spec, tuple(counts[: i_max + 1]), ROUTE_DAG_CENSUS)
