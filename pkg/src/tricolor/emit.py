"""JSON and Graphviz DOT documents for structures, graphs, colorings and
code trees. Output is byte-stable: fixed key order, fixed node order and
fixed node positions."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Any, Mapping, Optional

from tricolor.coloring import PAPER_LABELS, Coloring, color_name
from tricolor.errors import DomainError, ParseError
from tricolor.prefixcode import CodeTree, NodeColor, depth_two_coloring
from tricolor.structure import (
    AdjacencyMode,
    Graph,
    Point,
    TriangularStructure,
    to_graph,
)


class Target(enum.Enum):
    STRUCTURE_DOT = "structure-dot"
    TREE_DOT = "tree-dot"
    JSON = "json"


@dataclass(frozen=True)
class RenderSpec:
    target: Target
    include_colors: bool = True
    color_names: Mapping[int, str] = field(default_factory=dict)

    def name(self, k: int) -> str:
        return self.color_names.get(k, color_name(k))


# -- JSON ---------------------------------------------------------------------


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


def structure_to_json(s: TriangularStructure) -> dict:
    return {
        "order": s.order,
        "points": [p.name for p in s.points],
        "inclined_lines": [[p.name for p in ln] for ln in s.inclined_lines],
        "horizontal_lines": [[p.name for p in ln] for ln in s.horizontal_lines],
    }


def graph_to_json(g: Graph, mode: Optional[AdjacencyMode] = None) -> dict:
    doc: dict[str, Any] = {}
    if mode is not None:
        doc["mode"] = AdjacencyMode(mode).value
    doc["vertex_count"] = g.vertex_count
    doc["edges"] = [list(e) for e in g.edges]
    if g.labels is not None:
        doc["labels"] = [p.name for p in g.labels]
    return doc


def coloring_to_json(c: Coloring, labels=None, spec: Optional[RenderSpec] = None) -> dict:
    namer = spec.name if spec else color_name
    keys = [p.name for p in labels] if labels is not None else [str(v) for v in range(len(c))]
    return {
        "palette": [namer(k) for k in range(c.palette_size)],
        "colors": dict(zip(keys, c.colors)),
    }


def document(
    s: TriangularStructure,
    mode: AdjacencyMode,
    coloring: Optional[Coloring] = None,
    strategy: Optional[str] = None,
    spec: Optional[RenderSpec] = None,
) -> dict:
    doc = structure_to_json(s)
    doc["graph"] = graph_to_json(to_graph(s, mode), mode)
    if coloring is not None and (spec is None or spec.include_colors):
        doc["coloring"] = coloring_to_json(coloring, s.points, spec)
        if strategy is not None:
            doc["coloring"] = {"strategy": strategy, **doc["coloring"]}
    return doc


def _expect(value, kind, path: str):
    if kind is int and isinstance(value, bool):
        raise ParseError("expected integer, got boolean", path)
    if not isinstance(value, kind):
        raise ParseError(f"expected {kind.__name__}, got {type(value).__name__}", path)
    return value


def _field(obj: dict, key: str, kind, path: str):
    if key not in obj:
        raise ParseError(f"missing key {key!r}", path)
    return _expect(obj[key], kind, f"{path}.{key}")


def _point(text, path: str) -> Point:
    _expect(text, str, path)
    try:
        return Point.parse(text)
    except DomainError as exc:
        raise ParseError(str(exc), path) from None


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"line {exc.lineno}") from None


def structure_from_json(doc: Any, path: str = "$") -> TriangularStructure:
    _expect(doc, dict, path)
    order = _field(doc, "order", int, path)
    points = tuple(
        _point(p, f"{path}.points[{i}]")
        for i, p in enumerate(_field(doc, "points", list, path))
    )
    lines = {}
    for key in ("inclined_lines", "horizontal_lines"):
        rows = []
        for i, ln in enumerate(_field(doc, key, list, path)):
            lp = f"{path}.{key}[{i}]"
            rows.append(tuple(_point(p, f"{lp}[{j}]") for j, p in enumerate(_expect(ln, list, lp))))
        lines[key] = tuple(rows)
    s = TriangularStructure(order, points, lines["inclined_lines"], lines["horizontal_lines"])
    try:
        s.check()
    except DomainError as exc:
        raise ParseError(str(exc), path) from None
    return s


def graph_from_json(doc: Any, path: str = "$") -> Graph:
    _expect(doc, dict, path)
    nv = _field(doc, "vertex_count", int, path)
    edges = []
    for i, e in enumerate(_field(doc, "edges", list, path)):
        ep = f"{path}.edges[{i}]"
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError("edge must be a pair of vertex indices", ep)
        edges.append(tuple(_expect(x, int, f"{ep}[{j}]") for j, x in enumerate(e)))
    labels = None
    if "labels" in doc:
        labels = tuple(
            _point(p, f"{path}.labels[{i}]")
            for i, p in enumerate(_field(doc, "labels", list, path))
        )
    try:
        return Graph(nv, tuple(edges), labels)
    except DomainError as exc:
        raise ParseError(str(exc), path) from None


def coloring_from_json(doc: Any, labels=None, path: str = "$") -> Coloring:
    _expect(doc, dict, path)
    palette = _field(doc, "palette", list, path)
    for i, nm in enumerate(palette):
        _expect(nm, str, f"{path}.palette[{i}]")
    colors = _field(doc, "colors", dict, path)
    keys = [p.name for p in labels] if labels is not None else [str(v) for v in range(len(colors))]
    unknown = sorted(set(colors) - set(keys))
    if unknown:
        raise ParseError(f"unknown vertex {unknown[0]!r}", f"{path}.colors")
    missing = [k for k in keys if k not in colors]
    if missing:
        raise ParseError(f"coloring is partial; {missing[0]!r} has no color", f"{path}.colors")
    values = tuple(_expect(colors[k], int, f"{path}.colors.{k}") for k in keys)
    try:
        c = Coloring(values)
    except DomainError as exc:
        raise ParseError(str(exc), f"{path}.colors") from None
    if len(palette) != c.palette_size:
        raise ParseError(
            f"palette lists {len(palette)} names for {c.palette_size} colors", f"{path}.palette"
        )
    return c


@dataclass(frozen=True)
class Document:
    structure: TriangularStructure
    mode: AdjacencyMode = AdjacencyMode.PATH
    graph: Optional[Graph] = None
    coloring: Optional[Coloring] = None
    strategy: Optional[str] = None


def document_from_json(doc: Any) -> Document:
    s = structure_from_json(doc)
    mode = AdjacencyMode.PATH
    graph = coloring = strategy = None
    if "graph" in doc:
        gdoc = _expect(doc["graph"], dict, "$.graph")
        if "mode" in gdoc:
            try:
                mode = AdjacencyMode(_expect(gdoc["mode"], str, "$.graph.mode"))
            except ValueError:
                raise ParseError(f"unknown adjacency mode {gdoc['mode']!r}", "$.graph.mode") from None
        graph = graph_from_json(gdoc, "$.graph")
    if "coloring" in doc:
        cdoc = _expect(doc["coloring"], dict, "$.coloring")
        if "strategy" in cdoc:
            strategy = _expect(cdoc["strategy"], str, "$.coloring.strategy")
        coloring = coloring_from_json(cdoc, s.points, "$.coloring")
    return Document(s, mode, graph, coloring, strategy)


# -- DOT ----------------------------------------------------------------------


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def point_position(s: TriangularStructure, p: Point) -> tuple[float, float]:
    """Apex at the origin, row ``r`` at ``y = -r``. Each inclined line is a
    straight ray from the apex, and the bottom row has unit spacing."""
    if p.is_apex:
        return 0.0, 0.0
    n = s.order
    return (p.col - (n + 1) / 2) * p.row / (n - 1), float(-p.row)


def structure_dot(
    s: TriangularStructure,
    mode: AdjacencyMode = AdjacencyMode.PATH,
    coloring: Optional[Coloring] = None,
    spec: Optional[RenderSpec] = None,
) -> str:
    spec = spec or RenderSpec(Target.STRUCTURE_DOT)
    letters = {p: k for k, p in PAPER_LABELS.items()} if s.order == 4 else {}
    g = to_graph(s, mode)
    out = [
        f"graph tri{s.order} {{",
        "  layout=neato;",
        "  node [shape=circle, style=filled, fillcolor=white, fontsize=10];",
    ]
    for v, p in enumerate(s.points):
        x, y = point_position(s, p)
        attrs = [f"label={_quote(letters.get(p, p.name))}", f'pos="{x:.4f},{y:.4f}!"']
        if coloring is not None and spec.include_colors:
            attrs.append(f"fillcolor={_quote(spec.name(coloring[v]))}")
        out.append(f"  {_quote(p.name)} [{', '.join(attrs)}];")
    for u, v in g.edges:
        out.append(f"  {_quote(s.points[u].name)} -- {_quote(s.points[v].name)};")
    out.append("}")
    return "\n".join(out) + "\n"


def tree_dot(t: CodeTree, spec: Optional[RenderSpec] = None) -> str:
    """Code tree with paper-style node names (``n0`` root, ``n0`` + bit path
    below it). Labeled leaves also show their codeword index ``C1``, ``C2``..."""
    spec = spec or RenderSpec(Target.TREE_DOT)
    colors = depth_two_coloring(t)
    index = {w: k for k, w in enumerate(t.words, 1)}
    out = [
        "digraph code_tree {",
        "  rankdir=LR;",
        "  node [shape=circle, style=filled, fillcolor=white, fontsize=10];",
    ]
    nodes = list(t.nodes())
    for node in nodes:
        label = node.paper_name
        attrs = []
        if node.word is not None:
            label += f"\\nC{index[node.word]}"
            attrs.append("shape=doublecircle")
        attrs.insert(0, f'label="{label}"')
        if spec.include_colors:
            fill = "red" if colors[node.path] is NodeColor.RED else "blue"
            attrs.append(f"fillcolor={fill}")
        out.append(f"  {node.paper_name} [{', '.join(attrs)}];")
    for node in nodes:
        for bit in ("0", "1"):
            child = node.children.get(bit)
            if child is not None:
                out.append(f'  {node.paper_name} -> {child.paper_name} [label="{bit}"];')
    out.append("}")
    return "\n".join(out) + "\n"

