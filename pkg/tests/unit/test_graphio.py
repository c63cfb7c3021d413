"""Tests for edge-list and vertex-map files."""

from __future__ import annotations

import pytest

from knotgraph.exceptions import ErrorCode, GraphFormatError, InvalidArgumentError
from knotgraph.graphio import (
    parse_graph_text,
    parse_vertex_map,
    read_graph,
    read_vertex_map,
    write_graph,
)
from knotgraph.metricgraph import MetricGraph


@pytest.mark.unit
class TestGraphFiles:
    """Test parse_graph_text, read_graph and write_graph."""

    def test_read_square(self, square_file):
        """Should read string labels and unit edges."""
        graph = read_graph(square_file)
        assert graph.vertices == ("a", "b", "c", "d")
        assert graph.distance("a", "c") == 2

    def test_comments_and_blank_lines(self):
        """Should skip blank lines and lines starting with #."""
        graph = parse_graph_text("\n# header\nx y\n   # indented\n\n   \ny z\n")
        assert graph.edges == [("x", "y"), ("y", "z")]

    def test_hash_inside_label(self):
        """Should keep # as part of a label when it does not start the line."""
        graph = parse_graph_text("a#b c\nc #d\n")
        assert graph.vertices == ("a#b", "c", "#d")
        assert graph.edges == [("a#b", "c"), ("c", "#d")]
        assert graph.distance("a#b", "#d") == 2

    def test_trailing_comment_is_not_stripped(self):
        """Should count a trailing # comment as extra tokens."""
        with pytest.raises(GraphFormatError) as exc_info:
            parse_graph_text("x y # trailing\n")
        assert exc_info.value.data["line"] == 1

    def test_isolated_vertex(self):
        """Should declare single-token lines as vertices."""
        graph = parse_graph_text("a b\nlonely\n")
        assert "lonely" in graph
        assert not graph.is_connected()

    def test_labels_stay_strings(self):
        """Should not convert numeric labels."""
        graph = parse_graph_text("0 1\n")
        assert graph.vertices == ("0", "1")

    def test_malformed_line(self):
        """Should report the line number of a line with three tokens."""
        with pytest.raises(GraphFormatError) as exc_info:
            parse_graph_text("a b\n# fine\na b c\n")
        assert exc_info.value.code == ErrorCode.GRAPH_FORMAT
        assert exc_info.value.data == {"line": 3, "content": "a b c"}

    def test_write_then_read(self, tmp_path):
        """Should keep edges and isolated vertices."""
        graph = MetricGraph.from_edges([("a", "b"), ("b", "c")], vertices=["z"])
        path = tmp_path / "out.txt"
        write_graph(graph, path)
        assert path.read_text(encoding="utf-8") == "a b\nb c\nz\n"
        again = read_graph(path)
        assert sorted(again.vertices) == ["a", "b", "c", "z"]
        assert sorted(again.edges) == sorted(graph.edges)

    def test_write_then_read_hash_labels(self, tmp_path):
        """Should round-trip labels that contain #."""
        graph = MetricGraph.from_edges([("a#b", "c"), ("#d", "c")], vertices=["z#"])
        path = tmp_path / "out.txt"
        write_graph(graph, path)
        again = read_graph(path)
        assert sorted(again.vertices) == sorted(graph.vertices)
        assert {frozenset(e) for e in again.edges} == {
            frozenset(e) for e in graph.edges
        }
        assert again.distance("a#b", "#d") == 2

    @pytest.mark.parametrize(
        "graph",
        [
            MetricGraph.from_edges([("#a", "#b")]),
            MetricGraph.from_edges([("a", "b")], vertices=["#z"]),
        ],
        ids=["edge", "isolated"],
    )
    def test_write_rejects_comment_lines(self, tmp_path, graph):
        """Should refuse labels that would be read back as a comment."""
        with pytest.raises(InvalidArgumentError):
            write_graph(graph, tmp_path / "out.txt")


@pytest.mark.unit
class TestVertexMaps:
    """Test parse_vertex_map and read_vertex_map."""

    def test_read(self, graph_file):
        """Should map each source label to its image."""
        path = graph_file("# halving\n0 0\n1 0\n2 1\n", name="map.txt")
        assert read_vertex_map(path) == {"0": "0", "1": "0", "2": "1"}

    @pytest.mark.parametrize(
        "text,line",
        [("a x\nb\n", 2), ("a x\nb y z\n", 2), ("a x\nb y\na z\n", 3)],
        ids=["one-token", "three-tokens", "duplicate-source"],
    )
    def test_malformed(self, text, line):
        """Should reject bad lines and repeated sources."""
        with pytest.raises(GraphFormatError) as exc_info:
            parse_vertex_map(text)
        assert exc_info.value.data["line"] == line

    def test_hash_inside_label(self):
        """Should keep # inside source and target labels."""
        assert parse_vertex_map("# map\nx#1 y\nx2 y#\n") == {"x#1": "y", "x2": "y#"}
