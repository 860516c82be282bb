"""
Tests for decomposition data models.
"""

import pytest

from polydec.errors import DecompositionError
from polydec.models.decomposition import (
    NicePathDecomposition,
    SignedVertex,
    ValidationReport,
    is_edge_item,
    item_label,
    item_token,
)
from polydec.services import reference_graphs as ref


class TestSignedVertex:
    """Tests for SignedVertex."""

    def test_rendering(self):
        """Test '+v' and '-v' renderings."""
        assert str(SignedVertex.add(3)) == "+3"
        assert str(SignedVertex.remove(3)) == "-3"

    def test_bad_sign(self):
        """Test that signs other than +1/-1 raise."""
        with pytest.raises(DecompositionError):
            SignedVertex(0, 3)

    def test_item_helpers(self):
        """Test labels and tokens of both item kinds."""
        assert item_label((1, 3)) == "{1,3}"
        assert item_token((1, 3)) == "1-3"
        assert item_label(SignedVertex.remove(2)) == "-2"
        assert is_edge_item((1, 3))
        assert not is_edge_item(SignedVertex.add(1))


class TestValidationReport:
    """Tests for ValidationReport."""

    def test_ok(self):
        """Test the valid report."""
        report = ValidationReport.ok()

        assert report.is_valid
        assert str(report) == "valid"
        assert report.to_dict() == {"valid": True}
        report.raise_if_invalid()

    def test_fail(self):
        """Test a failing report and its dict form."""
        report = ValidationReport.fail(3, ((5, 6), 14), "edge {5,6} out of span")

        assert not report.is_valid
        assert str(report) == "property 3 violated: edge {5,6} out of span"
        assert report.to_dict() == {
            "valid": False,
            "property": 3,
            "witness": [[5, 6], 14],
            "message": "edge {5,6} out of span",
        }

    def test_raise_carries_report(self):
        """Test that raise_if_invalid attaches the report."""
        report = ValidationReport.fail("compactness", (7,), "split")

        with pytest.raises(DecompositionError) as exc_info:
            report.raise_if_invalid("tree decomposition")

        assert exc_info.value.report is report
        assert "invalid tree decomposition" in str(exc_info.value)


class TestNicePathDecomposition:
    """Tests for the bag view of a nice path decomposition."""

    def test_bags(self):
        """Test the running active sets of (+1,+2,-1,-2)."""
        add, remove = SignedVertex.add, SignedVertex.remove
        npd = NicePathDecomposition((add(1), add(2), remove(1), remove(2)))

        assert list(npd.bags()) == [
            frozenset(), {1}, {1, 2}, {2}, frozenset(),
        ]
        assert str(npd) == "(+1,+2,-1,-2)"


class TestCompositionOrder:
    """Tests for CompositionOrder views."""

    def test_triangle_order(self):
        """Test labels, tokens and the nice path of the triangle order."""
        order = ref.triangle_composition_order()

        assert len(order) == 9
        assert order.edge_items() == [(1, 3), (1, 2), (2, 3)]
        assert order.labels()[:3] == ["+1", "+3", "{1,3}"]
        assert order.tokens()[2] == "1-3"
        assert str(order.nice_path()) == "(+1,+3,+2,-1,-3,-2)"
