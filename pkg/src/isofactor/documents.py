"""Text formats for graphs and assignments.

Two line-oriented formats are understood, both with '#' comments and
blank lines ignored:

* edgelist: a header ``p <vertices> <edges>`` followed by exactly that
  many ``<u> <v>`` lines.
* structured (version 1): a ``graphdoc v1`` banner, the same ``p``
  header, optional ``l <v> <label>`` lines, and ``e <u> <v> [<p/q>]``
  edge lines whose optional third token attaches an exact value.

Emitters write edges sorted and labels in vertex order, so parsing an
emitted document reproduces it field for field.  Rationals cross this
boundary only in the "p/q" form.  The DOT emitter renders undirected
graphs with optional exact edge-value labels and shape-coded sides of a
bipartition (ellipse for side_a, box for side_b).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .fractional import FractionalAssignment
from .graphs import Bipartition, Graph, build_graph, ordered_edge
from .rational import format_rational, parse_rational

STRUCTURED_BANNER = "graphdoc v1"
FORMATS = ("edgelist", "structured")


@dataclass(frozen=True)
class GraphDocument:
    """A graph plus optional vertex labels and optional edge values."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    labels: Mapping[int, str] | None = None
    values: Mapping[tuple[int, int], Fraction] | None = None

    def __post_init__(self):
        object.__setattr__(
            self, "edges", tuple(sorted(ordered_edge(u, v) for u, v in self.edges))
        )
        if self.labels is not None:
            object.__setattr__(self, "labels", dict(self.labels))
        if self.values is not None:
            normalized = {
                ordered_edge(u, v): Fraction(value)
                for (u, v), value in self.values.items()
            }
            object.__setattr__(self, "values", normalized)

    def to_graph(self) -> Graph:
        return build_graph(self.vertex_count, self.edges)


def _significant_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def _parse_header(number: int, line: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 3 or parts[0] != "p":
        raise ValueError(f"line {number}: expected header 'p <vertices> <edges>'")
    try:
        vertex_count, edge_count = int(parts[1]), int(parts[2])
    except ValueError:
        raise ValueError(f"line {number}: non-integer counts in header") from None
    if vertex_count < 0 or edge_count < 0:
        raise ValueError(f"line {number}: negative counts in header")
    return vertex_count, edge_count


def _parse_endpoints(number: int, tokens: list[str], vertex_count: int) -> tuple[int, int]:
    try:
        u, v = int(tokens[0]), int(tokens[1])
    except ValueError:
        raise ValueError(f"line {number}: non-integer endpoints") from None
    if u == v:
        raise ValueError(f"line {number}: loop edge ({u}, {v})")
    if not (0 <= u < vertex_count and 0 <= v < vertex_count):
        raise ValueError(f"line {number}: endpoint out of range in ({u}, {v})")
    return ordered_edge(u, v)


def parse_edgelist(text: str) -> GraphDocument:
    lines = list(_significant_lines(text))
    if not lines:
        raise ValueError("line 1: empty input, expected a 'p' header")
    number, line = lines[0]
    vertex_count, edge_count = _parse_header(number, line)
    edges = []
    for number, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 2:
            raise ValueError(f"line {number}: expected '<u> <v>'")
        edge = _parse_endpoints(number, tokens, vertex_count)
        if edge in edges:
            raise ValueError(f"line {number}: duplicate edge {edge}")
        edges.append(edge)
    if len(edges) != edge_count:
        raise ValueError(
            f"header announced {edge_count} edges but {len(edges)} were given"
        )
    return GraphDocument(vertex_count, tuple(edges))


def parse_structured(text: str) -> GraphDocument:
    lines = list(_significant_lines(text))
    if not lines or lines[0][1] != STRUCTURED_BANNER:
        raise ValueError(f"line 1: expected banner '{STRUCTURED_BANNER}'")
    if len(lines) < 2:
        raise ValueError("line 2: expected a 'p' header after the banner")
    vertex_count, edge_count = _parse_header(*lines[1])
    edges = []
    labels: dict[int, str] = {}
    values: dict[tuple[int, int], Fraction] = {}
    for number, line in lines[2:]:
        tokens = line.split()
        if tokens[0] == "l":
            if len(tokens) < 3:
                raise ValueError(f"line {number}: expected 'l <v> <label>'")
            try:
                v = int(tokens[1])
            except ValueError:
                raise ValueError(f"line {number}: non-integer vertex") from None
            if not 0 <= v < vertex_count:
                raise ValueError(f"line {number}: vertex {v} out of range")
            if v in labels:
                raise ValueError(f"line {number}: duplicate label for vertex {v}")
            labels[v] = line.split(maxsplit=2)[2]
        elif tokens[0] == "e":
            if len(tokens) not in (3, 4):
                raise ValueError(f"line {number}: expected 'e <u> <v> [<p/q>]'")
            edge = _parse_endpoints(number, tokens[1:3], vertex_count)
            if edge in edges:
                raise ValueError(f"line {number}: duplicate edge {edge}")
            edges.append(edge)
            if len(tokens) == 4:
                try:
                    value = parse_rational(tokens[3])
                except ValueError as exc:
                    raise ValueError(f"line {number}: {exc}") from None
                values[edge] = value
        else:
            raise ValueError(f"line {number}: unknown record {tokens[0]!r}")
    if len(edges) != edge_count:
        raise ValueError(
            f"header announced {edge_count} edges but {len(edges)} were given"
        )
    return GraphDocument(
        vertex_count,
        tuple(edges),
        labels or None,
        values or None,
    )


def parse_document(text: str, format: str = "edgelist") -> GraphDocument:
    if format == "edgelist":
        return parse_edgelist(text)
    if format == "structured":
        return parse_structured(text)
    raise ValueError(f"unknown format {format!r}, expected one of {FORMATS}")


def parse_graph(text: str, format: str = "edgelist") -> Graph:
    """Parse either text format down to its bare graph."""
    return parse_document(text, format).to_graph()


def emit_edgelist(document: GraphDocument) -> str:
    lines = [f"p {document.vertex_count} {len(document.edges)}"]
    lines += [f"{u} {v}" for u, v in document.edges]
    return "\n".join(lines) + "\n"


def emit_structured(document: GraphDocument) -> str:
    lines = [STRUCTURED_BANNER, f"p {document.vertex_count} {len(document.edges)}"]
    if document.labels:
        lines += [f"l {v} {document.labels[v]}" for v in sorted(document.labels)]
    for u, v in document.edges:
        if document.values and (u, v) in document.values:
            lines.append(f"e {u} {v} {format_rational(document.values[(u, v)])}")
        else:
            lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def emit_document(document: GraphDocument, format: str = "edgelist") -> str:
    if format == "edgelist":
        return emit_edgelist(document)
    if format == "structured":
        return emit_structured(document)
    raise ValueError(f"unknown format {format!r}, expected one of {FORMATS}")


def document_for_graph(graph: Graph) -> GraphDocument:
    return GraphDocument(graph.vertex_count, tuple(graph.sorted_edges()))


def emit_dot(
    graph: Graph,
    assignment: FractionalAssignment | None = None,
    partition: Bipartition | None = None,
) -> str:
    """Undirected DOT text with exact value labels and shape-coded sides."""
    lines = ["graph G {"]
    for v in graph.vertices():
        shape = None
        if partition is not None:
            if v in partition.side_a:
                shape = "ellipse"
            elif v in partition.side_b:
                shape = "box"
        suffix = f" [shape={shape}]" if shape else ""
        lines.append(f"  {v}{suffix};")
    for u, v in graph.sorted_edges():
        if assignment is not None:
            label = format_rational(assignment.value(u, v))
            lines.append(f'  {u} -- {v} [label="{label}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
