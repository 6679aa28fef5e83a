"""Order-n triangular closed-path structures and the graphs derived from them.

A structure of order ``n`` has one apex and an ``(n-1) x n`` grid of points.
Inclined line ``c`` runs from the apex down column ``c``; horizontal line
``r`` is grid row ``r``. Rows are numbered from the apex downwards and
columns left to right, both starting at 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, NamedTuple, Optional, Sequence

from tricolor.errors import DomainError


class Point(NamedTuple):
    """A point of the structure. The apex is ``Point(0, 0)``."""

    row: int
    col: int

    @property
    def is_apex(self) -> bool:
        return self.row == 0

    @property
    def name(self) -> str:
        return "apex" if self.is_apex else f"r{self.row}c{self.col}"

    @classmethod
    def parse(cls, text: str) -> "Point":
        if text == "apex":
            return APEX
        if text.startswith("r") and "c" in text:
            row, _, col = text[1:].partition("c")
            if row.isdigit() and col.isdigit() and int(row) > 0 and int(col) > 0:
                return cls(int(row), int(col))
        raise DomainError(f"not a point id: {text!r}")


APEX = Point(0, 0)


class Line(NamedTuple):
    kind: str  # "inclined" or "horizontal"
    index: int


class AdjacencyMode(enum.Enum):
    PATH = "path"  # consecutive points along a line
    CLIQUE = "clique"  # every pair of collinear points


@dataclass(frozen=True)
class TriangularStructure:
    order: int
    points: tuple[Point, ...]
    inclined_lines: tuple[tuple[Point, ...], ...]
    horizontal_lines: tuple[tuple[Point, ...], ...]

    @property
    def lines(self) -> list[tuple[Line, tuple[Point, ...]]]:
        out = [(Line("inclined", i + 1), ln) for i, ln in enumerate(self.inclined_lines)]
        out += [(Line("horizontal", r + 1), ln) for r, ln in enumerate(self.horizontal_lines)]
        return out

    def index_of(self, p: Point) -> int:
        """Vertex index of ``p``: apex is 0, then rows top to bottom, left to right."""
        n = self.order
        if p == APEX:
            return 0
        if not (1 <= p.row <= n - 1 and 1 <= p.col <= n):
            raise DomainError(f"point {p.name} is not in the order-{n} structure")
        return 1 + (p.row - 1) * n + (p.col - 1)

    def row_indices(self, row: int) -> list[int]:
        return [self.index_of(p) for p in self.horizontal_lines[row - 1]]

    def check(self) -> None:
        """Raise DomainError if any structural invariant fails."""
        n = self.order
        if n < 2:
            raise DomainError(f"order must be >= 2, got {n}")
        if len(self.points) != n * (n - 1) + 1 or len(set(self.points)) != len(self.points):
            raise DomainError(f"expected {n * (n - 1) + 1} distinct points")
        if self.points != _points(n):
            raise DomainError("points are not in canonical order")
        if len(self.inclined_lines) != n or len(self.horizontal_lines) != n - 1:
            raise DomainError("wrong number of lines")
        for i, ln in enumerate(self.inclined_lines, 1):
            if ln != (APEX, *(Point(r, i) for r in range(1, n))):
                raise DomainError(f"inclined line {i} is malformed")
        for r, ln in enumerate(self.horizontal_lines, 1):
            if ln != tuple(Point(r, c) for c in range(1, n + 1)):
                raise DomainError(f"horizontal line {r} is malformed")


def _points(n: int) -> tuple[Point, ...]:
    return (APEX, *(Point(r, c) for r in range(1, n) for c in range(1, n + 1)))


def build_structure(n: int) -> TriangularStructure:
    """Build the order-``n`` structure: ``n(n-1)+1`` points, ``n`` inclined
    lines and ``n-1`` horizontal lines of ``n`` points each."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise DomainError(f"order must be an integer >= 2, got {n!r}")
    inclined = tuple((APEX, *(Point(r, c) for r in range(1, n))) for c in range(1, n + 1))
    horizontal = tuple(tuple(Point(r, c) for c in range(1, n + 1)) for r in range(1, n))
    return TriangularStructure(n, _points(n), inclined, horizontal)


def lines_through(s: TriangularStructure, p: Point) -> list[Line]:
    n = s.order
    if p == APEX:
        return [Line("inclined", c) for c in range(1, n + 1)]
    s.index_of(p)  # validates membership
    return [Line("inclined", p.col), Line("horizontal", p.row)]


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..vertex_count-1``.

    ``edges`` is kept as a sorted tuple of ``(u, v)`` pairs with ``u < v``.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    labels: Optional[tuple[Point, ...]] = field(default=None, compare=True)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise DomainError("vertex_count must be non-negative")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise DomainError(f"edge ({u}, {v}) out of range")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DomainError(f"duplicate edge {key}")
            seen.add(key)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise DomainError("labels must cover every vertex")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]], labels=None) -> "Graph":
        return cls(vertex_count, tuple((int(u), int(v)) for u, v in edges), labels)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)


def to_graph(s: TriangularStructure, mode: AdjacencyMode = AdjacencyMode.PATH) -> Graph:
    mode = AdjacencyMode(mode)
    edges = set()
    for _, line in s.lines:
        idx = [s.index_of(p) for p in line]
        if mode is AdjacencyMode.PATH:
            pairs = zip(idx, idx[1:])
        else:
            pairs = combinations(idx, 2)
        edges.update((min(u, v), max(u, v)) for u, v in pairs)
    return Graph(len(s.points), tuple(edges), s.points)
