"""Edge-list and vertex-map files.

Graph files hold one edge ``u v`` per line; a line with a single token
declares an isolated vertex and a line whose first non-blank character is
``#`` is a comment. Labels are arbitrary non-whitespace tokens and are kept
as strings.
"""

from __future__ import annotations

import logging
from pathlib import Path

from knotgraph.exceptions import GraphFormatError, InvalidArgumentError
from knotgraph.metricgraph import MetricGraph

logger = logging.getLogger("knotgraph")


def _records(text: str) -> list[tuple[int, str, list[str]]]:
    records = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        records.append((lineno, line, stripped.split()))
    return records


def parse_graph_text(text: str) -> MetricGraph:
    """Parse the edge-list format.

    Raises
    ------
    GraphFormatError
        On a line with more than two tokens.

    Examples
    --------
    >>> g = parse_graph_text("# square\\na b\\nb c\\nc d\\nd a\\n")
    >>> g.distance("a", "c")
    2
    """
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    for lineno, line, tokens in _records(text):
        if len(tokens) == 1:
            vertices.append(tokens[0])
        elif len(tokens) == 2:
            vertices.extend(tokens)
            edges.append((tokens[0], tokens[1]))
        else:
            raise GraphFormatError(lineno, line)
    return MetricGraph.from_edges(edges, vertices=dict.fromkeys(vertices))


def read_graph(path: str | Path) -> MetricGraph:
    graph = parse_graph_text(Path(path).read_text(encoding="utf-8"))
    logger.debug("Read %r from %s.", graph, path)
    return graph


def _edge_line(u: object, v: object) -> str:
    first, second = str(u), str(v)
    if first.startswith("#"):
        first, second = second, first
    if first.startswith("#"):
        raise InvalidArgumentError("graph", f"edge {u!r} {v!r} would read as a comment")
    return f"{first} {second}"


def write_graph(graph: MetricGraph, path: str | Path) -> None:
    """Write ``graph`` as an edge list; isolated vertices get their own line.

    An edge is written with a label not starting with ``#`` first.

    Raises
    ------
    InvalidArgumentError
        For an edge whose labels both start with ``#`` or an isolated vertex
        labelled ``#...``, neither of which the format can express.
    """
    lines = [_edge_line(u, v) for u, v in graph.edges]
    for vertex in graph.vertices:
        if graph.neighbors(vertex):
            continue
        if str(vertex).startswith("#"):
            raise InvalidArgumentError("graph", f"isolated vertex {vertex!r}")
        lines.append(str(vertex))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def parse_vertex_map(text: str) -> dict[str, str]:
    mapping: dict[str, str] = {}
    for lineno, line, tokens in _records(text):
        if len(tokens) != 2 or tokens[0] in mapping:
            raise GraphFormatError(lineno, line)
        mapping[tokens[0]] = tokens[1]
    return mapping


def read_vertex_map(path: str | Path) -> dict[str, str]:
    """Read ``xlabel ylabel`` lines into a map (each source label once)."""
    return parse_vertex_map(Path(path).read_text(encoding="utf-8"))
