"""Undirected simple graphs stored as packed adjacency bit-rows.

Row ``i`` is a Python int whose bit ``j`` is set iff ``i ~ j``. Neighbourhood
intersection is then a single ``&``, which is what the clique solvers lean on.

Every serialization linearizes the upper triangle in lexicographic pair
order (0,1), (0,2), ..., (0,n-1), (1,2), ...
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .errors import CapacityError, GraphValidationError

# n*n bits; 2**33 bits is 1 GiB of adjacency matrix
DEFAULT_MAX_BITS = 1 << 33


def check_capacity(order: int, max_bits: int = DEFAULT_MAX_BITS) -> None:
    if order * order > max_bits:
        raise CapacityError(
            f"a {order}-vertex bit-matrix needs {order * order} bits, budget is {max_bits}"
        )


def pair_count(order: int) -> int:
    return order * (order - 1) // 2


def pair_index(i: int, j: int, order: int) -> int:
    """Position of pair {i, j} in the lexicographic edge-slot order."""
    if i > j:
        i, j = j, i
    return i * order - i * (i + 1) // 2 + (j - i - 1)


class Graph:
    """Immutable simple graph on vertices ``0..order-1``."""

    __slots__ = ("_order", "_rows")

    def __init__(self, order: int, rows: Sequence[int], *, validate: bool = True):
        if order < 1:
            raise GraphValidationError(f"order must be >= 1, got {order}")
        rows = tuple(rows)
        if len(rows) != order:
            raise GraphValidationError(f"expected {order} rows, got {len(rows)}")
        self._order = order
        self._rows = rows
        if validate:
            self.validate()

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise IndexError(f"edge ({u}, {v}) out of range for order {order}")
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, rows, validate=False)

    @classmethod
    def from_edge_string(cls, order: int, bits: str) -> "Graph":
        """Build from a '0'/'1' string of length C(order, 2)."""
        if len(bits) != pair_count(order):
            raise GraphValidationError(
                f"edge string has length {len(bits)}, expected {pair_count(order)}"
            )
        rows = [0] * order
        p = 0
        for i in range(order):
            for j in range(i + 1, order):
                if bits[p] == "1":
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                elif bits[p] != "0":
                    raise GraphValidationError(f"bad edge character {bits[p]!r} at slot {p}")
                p += 1
        return cls(order, rows, validate=False)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "Graph":
        order = len(matrix)
        rows = []
        for i, line in enumerate(matrix):
            if len(line) != order:
                raise GraphValidationError(f"row {i} has length {len(line)}, expected {order}")
            row = 0
            for j, x in enumerate(line):
                if x not in (0, 1, True, False):
                    raise GraphValidationError(f"entry ({i}, {j}) is {x!r}, expected 0 or 1")
                if x:
                    row |= 1 << j
            rows.append(row)
        return cls(order, rows)

    @classmethod
    def empty(cls, order: int) -> "Graph":
        return cls(order, [0] * order, validate=False)

    @classmethod
    def complete(cls, order: int) -> "Graph":
        full = (1 << order) - 1
        return cls(order, [full ^ (1 << i) for i in range(order)], validate=False)

    @classmethod
    def cycle(cls, order: int) -> "Graph":
        if order < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(order, [(i, (i + 1) % order) for i in range(order)])

    @classmethod
    def paley(cls, q: int) -> "Graph":
        """Paley graph on a prime q = 1 mod 4."""
        if q < 5 or q % 4 != 1 or any(q % d == 0 for d in range(2, int(q**0.5) + 1)):
            raise ValueError("Paley graphs need a prime q with q % 4 == 1")
        squares = {(x * x) % q for x in range(1, q)}
        return cls.from_edges(
            q, [(a, b) for a, b in combinations(range(q), 2) if (b - a) % q in squares]
        )

    # -- accessors ------------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        row = self._rows[v]
        return [j for j in range(self._order) if row >> j & 1]

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self._order) for j in self.neighbors(i) if j > i]

    def edge_string(self) -> str:
        """Upper triangle as '0'/'1' characters in lexicographic pair order."""
        n = self._order
        parts = []
        for i, row in enumerate(self._rows[:-1]):
            # bits i+1..n-1 of the row, lowest index first
            chunk = format(row >> (i + 1), f"0{n - i - 1}b")
            parts.append(chunk[::-1])
        return "".join(parts)

    def to_matrix(self) -> list[list[int]]:
        n = self._order
        return [[row >> j & 1 for j in range(n)] for row in self._rows]

    def validate(self) -> None:
        """Raise GraphValidationError unless symmetric, loop-free and in range."""
        n = self._order
        limit = 1 << n
        for i, row in enumerate(self._rows):
            if row < 0 or row >= limit:
                raise GraphValidationError(f"row {i} has bits outside 0..{n - 1}")
            if row >> i & 1:
                raise GraphValidationError(f"self-loop at vertex {i}")
            r = row
            while r:
                low = r & -r
                j = low.bit_length() - 1
                if not self._rows[j] >> i & 1:
                    raise GraphValidationError(f"asymmetric pair ({i}, {j})")
                r ^= low

    # -- algebra --------------------------------------------------------

    def complement(self) -> "Graph":
        full = (1 << self._order) - 1
        return Graph(
            self._order,
            [full ^ row ^ (1 << i) for i, row in enumerate(self._rows)],
            validate=False,
        )

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled 0..len-1 in the given order."""
        verts = list(vertices)
        if not verts:
            raise ValueError("induced subgraph needs a nonempty vertex set")
        for v in verts:
            if not 0 <= v < self._order:
                raise IndexError(f"vertex {v} out of range for order {self._order}")
        if len(set(verts)) != len(verts):
            raise ValueError("vertex set has repeated entries")
        if verts == list(range(len(verts))):
            # prefix: just mask the rows
            mask = (1 << len(verts)) - 1
            return Graph(len(verts), [self._rows[v] & mask for v in verts], validate=False)
        rows = []
        for v in verts:
            row = self._rows[v]
            rows.append(sum(1 << a for a, u in enumerate(verts) if row >> u & 1))
        return Graph(len(verts), rows, validate=False)

    # -- dunder ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._rows == other._rows

    def __hash__(self):
        return hash((self._order, self._rows))

    def __repr__(self):
        return f"Graph(order={self._order}, edges={self.edge_count()})"


def complement(g: Graph) -> Graph:
    return g.complement()


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    return g.induced_subgraph(s)


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(g.has_edge(a, b) for a, b in combinations(vs, 2))


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return not any(g.has_edge(a, b) for a, b in combinations(vs, 2))
