"""
Tests for the order file parser.
"""

import pytest

from polydec.errors import GraphParseError
from polydec.models.decomposition import SignedVertex
from polydec.parsers.order_parser import (
    OrderFileKind,
    OrderParser,
    serialize_bags,
    serialize_composition_order,
)
from polydec.services import reference_graphs as ref


class TestKindDetection:
    """Tests for telling the three file kinds apart."""

    def test_ordering(self):
        """Test a file of bare ids."""
        parsed = OrderParser.parse("# ordering\n1\n3\n2\n")

        assert parsed.kind is OrderFileKind.ORDERING
        assert parsed.ordering == [1, 3, 2]

    def test_composition(self):
        """Test a file of signed vertices and edges."""
        parsed = OrderParser.parse("+1\n+2\n2-1\n-1\n-2\n")

        assert parsed.kind is OrderFileKind.COMPOSITION
        assert parsed.items == [
            SignedVertex.add(1), SignedVertex.add(2), (1, 2),
            SignedVertex.remove(1), SignedVertex.remove(2),
        ]

    def test_brace_edges(self):
        """Test that trace-style '{u,v}' edges are accepted."""
        parsed = OrderParser.parse("+1\n+2\n{1, 2}\n-1\n-2\n")

        assert parsed.items[2] == (1, 2)

    def test_bags(self):
        """Test a bag file, including an empty bag."""
        parsed = OrderParser.parse("bag 1 2\nbag 2 3\nbag\n")

        assert parsed.kind is OrderFileKind.BAGS
        assert parsed.bags == [{1, 2}, {2, 3}, frozenset()]


class TestErrors:
    """Tests for malformed order files."""

    def test_bad_item(self):
        """Test an unreadable composition item."""
        with pytest.raises(GraphParseError) as exc_info:
            OrderParser.parse("+1\n*2\n")

        assert exc_info.value.line_number == 2

    def test_self_loop_item(self):
        """Test that '3-3' is rejected."""
        with pytest.raises(GraphParseError):
            OrderParser.parse("+3\n3-3\n")

    def test_bag_file_with_stray_line(self):
        """Test that bag files may only hold bag lines."""
        with pytest.raises(GraphParseError):
            OrderParser.parse("bag 1 2\n+3\n")


class TestSerialization:
    """Tests for writing order files."""

    def test_composition_order(self):
        """Test that the serialized triangle order parses back to the same items."""
        order = ref.triangle_composition_order()
        text = serialize_composition_order(order)

        assert text.splitlines()[:3] == ["+1", "+3", "1-3"]
        assert OrderParser.parse(text).composition_order(order.host) == order

    def test_bags(self):
        """Test bag lines in sorted id order."""
        pd = ref.spider_path_decomposition()
        text = serialize_bags(pd)

        assert text.splitlines()[2] == "bag 1 2"
        assert OrderParser.parse(text).path_decomposition() == pd

    def test_read_fixture(self, fixtures_dir, bridged_triangles):
        """Test the bundled hand-placed composition order."""
        parsed = OrderParser.read(fixtures_dir / "bridged_triangles_delayed.order")

        assert parsed.composition_order(bridged_triangles) == ref.bridged_triangles_delayed_order()
