"""Vertex colorings: verification, first-fit, exact search and the
row-periodic schemes for triangular structures."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from tricolor.errors import DomainError, ResourceError
from tricolor.structure import APEX, Graph, Point, TriangularStructure, build_structure

# Display names for color indices. Index 0 is the apex color in every scheme.
COLOR_NAMES = ("red", "black", "blue", "green", "grey")
COLOR_INDEX = {name: i for i, name in enumerate(COLOR_NAMES)}

MAX_EXACT_VERTICES = 40

# Letters used for the order-4 figure, by grid position.
PAPER_LABELS: dict[str, Point] = {
    "A": APEX,
    "B": Point(1, 1), "M": Point(1, 2), "L": Point(1, 3), "K": Point(1, 4),
    "C": Point(2, 1), "H": Point(2, 2), "I": Point(2, 3), "J": Point(2, 4),
    "D": Point(3, 1), "E": Point(3, 2), "F": Point(3, 3), "G": Point(3, 4),
}

_PAPER_COLORS = {
    "A": "red",
    "B": "black", "M": "blue", "L": "green", "K": "grey",
    "C": "blue", "H": "red", "I": "grey", "J": "blue",
    "D": "black", "E": "blue", "F": "green", "G": "grey",
}


def color_name(k: int) -> str:
    return COLOR_NAMES[k] if 0 <= k < len(COLOR_NAMES) else f"c{k}"


@dataclass(frozen=True)
class Coloring:
    """Color index per vertex, in vertex order. Indices are contiguous from 0."""

    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if any(c < 0 for c in self.colors):
            raise DomainError("color indices must be non-negative")
        used = set(self.colors)
        if used and used != set(range(max(used) + 1)):
            raise DomainError(f"color indices are not contiguous: {sorted(used)}")

    @classmethod
    def from_mapping(cls, assignment: Mapping[int, int], vertex_count: int) -> "Coloring":
        missing = [v for v in range(vertex_count) if v not in assignment]
        if missing:
            raise DomainError(f"coloring is partial; uncolored vertices {missing}")
        return cls(tuple(assignment[v] for v in range(vertex_count)))

    @property
    def palette_size(self) -> int:
        return max(self.colors, default=-1) + 1

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]


def _require_total(vertex_count: int, c: Coloring) -> None:
    if len(c) != vertex_count:
        raise DomainError(
            f"coloring covers {len(c)} vertices but the target has {vertex_count}"
        )


def is_proper(g: Graph, c: Coloring) -> bool:
    _require_total(g.vertex_count, c)
    return all(c[u] != c[v] for u, v in g.edges)


def greedy_coloring(g: Graph, order: Optional[Sequence[int]] = None) -> Coloring:
    """First-fit: each vertex in ``order`` takes the smallest color not used by
    an already-colored neighbor."""
    if order is None:
        order = range(g.vertex_count)
    order = list(order)
    if sorted(order) != list(range(g.vertex_count)):
        raise DomainError("order must be a permutation of the graph's vertices")
    colors = [-1] * g.vertex_count
    for v in order:
        taken = {colors[u] for u in g.adjacency[v]}
        k = 0
        while k in taken:
            k += 1
        colors[v] = k
    return Coloring(tuple(colors))


def _k_colorable(adj, k: int) -> Optional[list[int]]:
    # Vertices are colored in index order; a vertex may open at most one new
    # color beyond those already used, which removes color-permutation symmetry.
    nv = len(adj)
    colors = [-1] * nv
    earlier = [[u for u in adj[v] if u < v] for v in range(nv)]

    def place(v: int, used: int) -> bool:
        if v == nv:
            return True
        forbidden = {colors[u] for u in earlier[v]}
        for color in range(min(used + 1, k)):
            if color in forbidden:
                continue
            colors[v] = color
            if place(v + 1, max(used, color + 1)):
                return True
        colors[v] = -1
        return False

    return colors if place(0, 0) else None


def exact_chromatic(g: Graph, max_colors: Optional[int] = None) -> Optional[tuple[int, Coloring]]:
    """Chromatic number of ``g`` with a witness coloring.

    Returns None when more than ``max_colors`` colors are needed. The search is
    deterministic, so repeated calls return the same witness.
    """
    nv = g.vertex_count
    if nv > MAX_EXACT_VERTICES:
        raise ResourceError(
            f"exact search is limited to {MAX_EXACT_VERTICES} vertices, got {nv}"
        )
    if max_colors is None:
        max_colors = nv
    if nv == 0:
        return 0, Coloring(())
    for k in range(1 if not g.edges else 2, max_colors + 1):
        witness = _k_colorable(g.adjacency, k)
        if witness is not None:
            return k, Coloring(tuple(witness))
    return None


def periodic_coloring(s: TriangularStructure) -> Coloring:
    """Three-coloring with apex 0, odd rows ``1,2,1,2,...`` and even rows
    ``2,1,2,1,...``. Proper under path adjacency for every order."""
    colors = [0]
    for r in range(1, s.order):
        for c in range(1, s.order + 1):
            colors.append(1 if (r + c) % 2 == 0 else 2)
    return Coloring(tuple(colors))


def row_vectors(s: TriangularStructure, c: Coloring) -> list[tuple[int, ...]]:
    _require_total(len(s.points), c)
    return [tuple(c[i] for i in s.row_indices(r)) for r in range(1, s.order)]


def row_periodicity(s: TriangularStructure, c: Coloring) -> bool:
    """True iff all horizontal lines of the same parity carry the same
    ordered color vector."""
    rows = row_vectors(s, c)
    return all(rows[i] == rows[i % 2] for i in range(len(rows)))


def paper_fixture_coloring(n: int = 4) -> Coloring:
    """The hand-made five-color assignment of the order-4 figure."""
    if n != 4:
        raise DomainError("the explicit figure coloring exists only for order 4")
    s = build_structure(4)
    by_index = {s.index_of(p): COLOR_INDEX[_PAPER_COLORS[k]] for k, p in PAPER_LABELS.items()}
    return Coloring.from_mapping(by_index, len(s.points))


def coloring_from_names(names: Iterable[str]) -> Coloring:
    out = []
    for nm in names:
        if nm in COLOR_INDEX:
            out.append(COLOR_INDEX[nm])
        elif nm.startswith("c") and nm[1:].isdigit():
            out.append(int(nm[1:]))
        else:
            raise DomainError(f"unknown color name {nm!r}")
    return Coloring(tuple(out))
