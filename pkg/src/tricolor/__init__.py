"""Triangular closed-path structures, their vertex colorings, and binary
prefix codes with exact Kraft sums."""

from tricolor.coloring import (
    COLOR_NAMES,
    Coloring,
    exact_chromatic,
    greedy_coloring,
    is_proper,
    paper_fixture_coloring,
    periodic_coloring,
    row_periodicity,
)
from tricolor.errors import (
    DomainError,
    DuplicateWord,
    KraftViolation,
    ParseError,
    PrefixViolation,
    ResourceError,
)
from tricolor.prefixcode import (
    CodeTree,
    NodeColor,
    build_tree,
    depth_two_coloring,
    is_prefix_free,
    kraft_construct,
    kraft_sum,
    leaf_color_repetition,
)
from tricolor.structure import (
    APEX,
    AdjacencyMode,
    Graph,
    Point,
    TriangularStructure,
    build_structure,
    lines_through,
    to_graph,
)

__version__ = "0.1.0"
