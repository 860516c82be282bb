"""
Tests for the Graph model.
"""

import networkx as nx
import pytest

from polydec.errors import GraphError
from polydec.models.graph import Graph, canonical_edge, edge_label


class TestGraphConstruction:
    """Tests for building graphs."""

    def test_from_edges_collects_endpoints(self):
        """Test that endpoints become vertices and edges are canonical."""
        g = Graph.from_edges([(2, 1), (3, 2)])

        assert g.vertices == {1, 2, 3}
        assert g.edges == {(1, 2), (2, 3)}

    def test_duplicate_edges_collapse(self):
        """Test that repeated edges, in either direction, count once."""
        g = Graph.from_edges([(1, 2), (2, 1), (1, 2)])

        assert g.size == 1

    def test_self_loop_rejected(self):
        """Test that self-loops raise GraphError."""
        with pytest.raises(GraphError):
            Graph.from_edges([(1, 1)])

    def test_negative_vertex_rejected(self):
        """Test that vertex ids must be non-negative."""
        with pytest.raises(GraphError):
            Graph(frozenset({-1}))

    def test_edge_outside_vertex_set_rejected(self):
        """Test that edges must reference graph vertices."""
        with pytest.raises(GraphError):
            Graph(frozenset({1, 2}), frozenset({(1, 3)}))

    def test_null_graph(self):
        """Test the graph with no vertices."""
        g = Graph()

        assert g.order == 0
        assert g.size == 0
        assert g.is_connected()

    def test_complete_and_path(self):
        """Test the K_n and P_n constructors."""
        assert Graph.complete(4).size == 6
        assert Graph.path(5).sorted_edges() == [(0, 1), (1, 2), (2, 3), (3, 4)]
        assert Graph.empty(3, start=1).vertices == {1, 2, 3}

    def test_canonical_edge(self):
        """Test canonical (min, max) ordering."""
        assert canonical_edge(5, 2) == (2, 5)
        assert edge_label((2, 5)) == "{2,5}"


class TestNeighborhoods:
    """Tests for neighborhood and boundary queries."""

    def test_open_neighborhood(self, bridged_triangles):
        """Test N(v4) on the bridged triangles."""
        assert bridged_triangles.open_neighborhood(4) == {2, 5, 6}

    def test_closed_neighborhood(self, bridged_triangles):
        """Test N[v4] on the bridged triangles."""
        assert bridged_triangles.closed_neighborhood(4) == {2, 4, 5, 6}

    def test_isolated_vertex(self):
        """Test neighborhoods of an isolated vertex."""
        g = Graph.empty(1, start=7)

        assert g.open_neighborhood(7) == frozenset()
        assert g.closed_neighborhood(7) == {7}

    def test_complete_graph_neighborhood(self, triangle):
        """Test that each K3 vertex sees the other two."""
        for v in triangle.vertices:
            assert triangle.open_neighborhood(v) == triangle.vertices - {v}
            assert triangle.closed_neighborhood(v) == triangle.vertices

    def test_unknown_vertex(self, triangle):
        """Test that queries on unknown vertices raise."""
        with pytest.raises(GraphError):
            triangle.open_neighborhood(9)
        with pytest.raises(GraphError):
            triangle.closed_neighborhood(9)

    def test_edge_boundary(self, triangle, bridged_triangles):
        """Test edge boundaries."""
        assert triangle.edge_boundary({1}) == {(1, 2), (1, 3)}
        assert triangle.edge_boundary(set()) == frozenset()
        assert bridged_triangles.edge_boundary({4}) == {(2, 4), (4, 5), (4, 6)}

    def test_edge_boundary_unknown_vertex(self, triangle):
        """Test that boundaries of foreign vertices raise."""
        with pytest.raises(GraphError):
            triangle.edge_boundary({1, 42})

    def test_closed_neighborhood_of_set(self, bridged_triangles):
        """Test N[S] for a dominating pair."""
        assert bridged_triangles.closed_neighborhood_of_set({1, 4}) == bridged_triangles.vertices


class TestDerivedGraphs:
    """Tests for complement, subgraphs and conversions."""

    def test_complement_of_triangle_is_empty(self, triangle):
        """Test that the complement of K3 has no edges."""
        c = triangle.complement()

        assert c.vertices == triangle.vertices
        assert c.size == 0

    def test_complement_of_empty_is_complete(self):
        """Test that the complement of an edgeless graph is complete."""
        assert Graph.empty(5).complement() == Graph.complete(5)

    def test_complement_edge_count(self, bridged_triangles):
        """Test C(6,2) - 7 = 8 edges in the complement."""
        assert bridged_triangles.complement().size == 8

    @pytest.mark.parametrize("n", [0, 1, 4, 6])
    def test_complement_is_involution(self, n):
        """Test complement(complement(g)) == g."""
        g = Graph.from_networkx(nx.gnp_random_graph(n, 0.5, seed=n))

        assert g.complement().complement() == g

    def test_induced_subgraph(self, bridged_triangles):
        """Test induced subgraphs keep only inner edges."""
        sub = bridged_triangles.induced_subgraph({4, 5, 6})

        assert sub.edges == {(4, 5), (4, 6), (5, 6)}

    def test_networkx_round_trip(self, bridged_triangles):
        """Test conversion to and from networkx."""
        assert Graph.from_networkx(bridged_triangles.to_networkx()) == bridged_triangles

    def test_relabel(self, triangle):
        """Test injective relabelling."""
        relabelled = triangle.relabel({1: 10, 2: 20, 3: 30})

        assert relabelled.edges == {(10, 20), (10, 30), (20, 30)}

    def test_relabel_not_injective(self, triangle):
        """Test that collapsing relabels raise."""
        with pytest.raises(GraphError):
            triangle.relabel({1: 0, 2: 0, 3: 1})
