"""
Tests for the graph file parser.
"""

import pytest

from polydec.errors import GraphError, GraphParseError
from polydec.models.graph import Graph, GraphFormat
from polydec.parsers.graph_parser import GraphParser, parse_graph, serialize_graph


BRIDGED_TRIANGLES_EDGES = """\
# two triangles joined by a bridge
1 2
2 3
1 3
2 4

4 5
4 6
5 6
"""

BRIDGED_TRIANGLES_DIMACS = """\
c two triangles joined by a bridge
p edge 6 7
e 1 2
e 2 3
e 1 3
e 2 4
e 4 5
e 4 6
e 5 6
"""


class TestEdgeList:
    """Tests for the edge-list format."""

    def test_parse(self, bridged_triangles):
        """Test a commented edge list with a blank line."""
        assert GraphParser.parse(BRIDGED_TRIANGLES_EDGES) == bridged_triangles

    def test_duplicate_edges_collapse(self):
        """Test that '1 2' and '2 1' name the same edge."""
        g = parse_graph("1 2\n2 1\n1 2\n")

        assert g.size == 1

    def test_header_adds_isolated_vertices(self):
        """Test that 'n 5' declares vertices 0..4."""
        g = parse_graph("n 5\n0 1\n")

        assert g.vertices == {0, 1, 2, 3, 4}
        assert g.edges == {(0, 1)}

    def test_duplicate_header(self):
        """Test that a second header raises."""
        with pytest.raises(GraphParseError):
            parse_graph("n 3\nn 4\n")

    def test_malformed_line_number(self):
        """Test that malformed lines report their line number."""
        with pytest.raises(GraphParseError) as exc_info:
            parse_graph("1 2\n# ok\n2 x\n")

        assert exc_info.value.line_number == 3

    def test_self_loop(self):
        """Test that self-loops are rejected."""
        with pytest.raises(GraphParseError) as exc_info:
            parse_graph("1 2\n3 3\n")

        assert exc_info.value.line_number == 2

    def test_empty_text(self):
        """Test that an empty file is the null graph."""
        assert parse_graph("") == Graph()

    def test_serialize(self, bridged_triangles):
        """Test canonical serialization and read-back."""
        text = serialize_graph(bridged_triangles)

        assert text.splitlines()[0] == "1 2"
        assert parse_graph(text) == bridged_triangles

    def test_serialize_isolated_vertices(self):
        """Test that isolated vertices produce a header."""
        g = Graph.from_edges([(0, 1)], vertices=range(4))
        text = serialize_graph(g)

        assert text.startswith("n 4\n")
        assert parse_graph(text) == g

    def test_serialize_unexpressible(self):
        """Test that an isolated vertex above a gap cannot be written."""
        with pytest.raises(GraphError):
            serialize_graph(Graph.from_edges([], vertices=[5]))


class TestDimacs:
    """Tests for the DIMACS format."""

    def test_parse(self, bridged_triangles):
        """Test a DIMACS file with a comment."""
        assert GraphParser.parse(BRIDGED_TRIANGLES_DIMACS, GraphFormat.DIMACS) == bridged_triangles

    def test_declared_isolated_vertices(self):
        """Test that every id 1..n is a vertex."""
        g = parse_graph("p edge 4 1\ne 1 2\n", "dimacs")

        assert g.vertices == {1, 2, 3, 4}

    def test_undeclared_vertex(self):
        """Test that ids above n raise."""
        with pytest.raises(GraphParseError, match="not declared"):
            parse_graph("p edge 3 1\ne 1 4\n", "dimacs")

    def test_edge_before_problem_line(self):
        """Test that edges must follow the problem line."""
        with pytest.raises(GraphParseError):
            parse_graph("e 1 2\np edge 2 1\n", "dimacs")

    def test_duplicate_problem_line(self):
        """Test that a second problem line raises."""
        with pytest.raises(GraphParseError):
            parse_graph("p edge 2 1\np edge 2 1\n", "dimacs")

    def test_edge_count_mismatch_is_tolerated(self):
        """Test that a wrong declared edge count only warns."""
        g = parse_graph("p edge 3 5\ne 1 2\n", "dimacs")

        assert g.size == 1

    def test_serialize(self, bridged_triangles):
        """Test DIMACS output and read-back."""
        text = serialize_graph(bridged_triangles, GraphFormat.DIMACS)

        assert text.startswith("p edge 6 7\n")
        assert parse_graph(text, "dimacs") == bridged_triangles

    def test_serialize_requires_one_based_ids(self):
        """Test that 0-based graphs cannot be written as DIMACS."""
        with pytest.raises(GraphError):
            serialize_graph(Graph.path(3), GraphFormat.DIMACS)


class TestRead:
    """Tests for reading graph files from disk."""

    def test_read_fixture(self, fixtures_dir, bridged_triangles):
        """Test reading the bundled edge list."""
        assert GraphParser.read(fixtures_dir / "bridged_triangles.edges") == bridged_triangles

    def test_read_dimacs_fixture(self, fixtures_dir, triangle):
        """Test reading the bundled DIMACS triangle."""
        assert GraphParser.read(fixtures_dir / "triangle.col", "dimacs") == triangle

    def test_read_rejects_non_utf8(self, tmp_path):
        """Test that undecodable bytes raise GraphParseError, not UnicodeDecodeError."""
        path = tmp_path / "binary.edges"
        path.write_bytes(b"1 2\n\xff\xfe 3\n")

        with pytest.raises(GraphParseError, match="not UTF-8"):
            GraphParser.read(path)
