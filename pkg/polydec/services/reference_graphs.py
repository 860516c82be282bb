"""
Reference graphs and decompositions used throughout the tests and examples.

Vertex ids are 1-based. The branching and hub decompositions of the
triangle-square graph, and the twin-squares decomposition, keep vertex 7
(resp. 8) in two leaves joined through bags lacking it, so they fail
compactness; the path-shaped triangle-square decomposition is valid.
"""

from ..models.decomposition import (
    CompositionOrder,
    PathDecomposition,
    SignedVertex,
    TreeDecomposition,
)
from ..models.graph import Graph


def _tree(edges: list[tuple[int, int]], nodes: int) -> Graph:
    return Graph.from_edges(edges, vertices=range(1, nodes + 1))


# =============================================================================
# Graphs
# =============================================================================

def triangle_square_graph() -> Graph:
    """Triangle 1-2-3 hanging off a 4-cycle 4-5-7-6 through the edge 2-4."""
    return Graph.from_edges([(1, 2), (2, 3), (1, 3), (2, 4), (4, 5), (4, 6), (5, 7), (6, 7)])


def twin_squares_graph() -> Graph:
    """Two 4-cycles 1-2-4-3 and 5-6-8-7 joined by the edge 4-5."""
    return Graph.from_edges(
        [(1, 2), (1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (5, 7), (6, 8), (7, 8)]
    )


def three_tree_graph() -> Graph:
    """A 3-tree on 8 vertices (18 edges)."""
    return Graph.from_edges([
        (1, 2), (1, 3), (1, 4), (2, 3), (3, 4), (2, 4),
        (1, 5), (3, 5), (4, 5),
        (2, 6), (3, 6), (4, 6),
        (1, 7), (2, 7), (4, 7),
        (1, 8), (2, 8), (3, 8),
    ])


def spider_graph() -> Graph:
    """Tree of depth two: root 1, children 2, 3, 4, each with two leaves."""
    return Graph.from_edges(
        [(1, 2), (1, 4), (1, 3), (2, 6), (2, 5), (3, 8), (3, 7), (4, 9), (4, 10)]
    )


def bridged_triangles_graph() -> Graph:
    """Triangles 1-2-3 and 4-5-6 joined by the edge 2-4."""
    return Graph.from_edges([(1, 2), (2, 3), (1, 3), (2, 4), (4, 5), (4, 6), (5, 6)])


def triangle_graph() -> Graph:
    """The triangle K3 on 1, 2, 3."""
    return Graph.from_edges([(1, 2), (1, 3), (2, 3)])


# =============================================================================
# Decompositions
# =============================================================================

def triangle_square_branching_decomposition() -> TreeDecomposition:
    """Six bags: {1,2,3}-{2,4}, then {4,5}-{5,7} and {4,6}-{6,7} below {2,4}."""
    return TreeDecomposition(
        _tree([(1, 2), (2, 3), (2, 4), (3, 5), (4, 6)], 6),
        {1: {1, 2, 3}, 2: {2, 4}, 3: {4, 5}, 4: {4, 6}, 5: {5, 7}, 6: {6, 7}},
    )


def triangle_square_hub_decomposition() -> TreeDecomposition:
    """Five bags: {1,2,3}-{2,4}-{4,5,6} with leaves {5,7} and {6,7}."""
    return TreeDecomposition(
        _tree([(1, 2), (2, 3), (3, 4), (3, 5)], 5),
        {1: {1, 2, 3}, 2: {2, 4}, 3: {4, 5, 6}, 4: {5, 7}, 5: {6, 7}},
    )


def triangle_square_path_decomposition() -> TreeDecomposition:
    """Valid width-2 path-shaped decomposition {1,2,3}-{2,4}-{4,5,6}-{5,6,7}."""
    return TreeDecomposition(
        _tree([(1, 2), (2, 3), (3, 4)], 4),
        {1: {1, 2, 3}, 2: {2, 4}, 3: {4, 5, 6}, 4: {5, 6, 7}},
    )


def twin_squares_tree_decomposition() -> TreeDecomposition:
    """Seven bags of width 2; leaves {6,8} and {7,8} split vertex 8."""
    return TreeDecomposition(
        _tree([(1, 2), (2, 3), (3, 4), (3, 5), (4, 6), (5, 7)], 7),
        {
            1: {1, 2, 3}, 2: {2, 3, 4}, 3: {4, 5}, 4: {5, 6},
            5: {5, 7}, 6: {6, 8}, 7: {7, 8},
        },
    )


def spider_path_decomposition() -> PathDecomposition:
    """Width-2 path decomposition of the spider tree."""
    return PathDecomposition((
        frozenset({2, 5}), frozenset({2, 6}), frozenset({2, 1}), frozenset({1, 3}),
        frozenset({1, 3, 7}), frozenset({1, 3, 8}), frozenset({1, 4, 9}),
        frozenset({1, 4, 10}),
    ))


# =============================================================================
# Orders
# =============================================================================

BRIDGED_TRIANGLES_ORDERING = (1, 3, 2, 4, 5, 6)
TRIANGLE_ORDERING = (1, 3, 2)


def bridged_triangles_delayed_order() -> CompositionOrder:
    """Hand-placed order; {5,6} comes after -4."""
    add, remove = SignedVertex.add, SignedVertex.remove
    items = (
        add(1), add(3), (1, 3), add(2), (1, 2), (2, 3), remove(1), remove(3),
        add(4), (2, 4), remove(2), add(5), (4, 5), add(6), (4, 6), remove(4),
        (5, 6), remove(5), remove(6),
    )
    return CompositionOrder(items, bridged_triangles_graph())


def triangle_composition_order() -> CompositionOrder:
    """(+1,+3,{1,3},+2,{1,2},{2,3},-1,-3,-2)."""
    add, remove = SignedVertex.add, SignedVertex.remove
    items = (
        add(1), add(3), (1, 3), add(2), (1, 2), (2, 3), remove(1), remove(3), remove(2),
    )
    return CompositionOrder(items, triangle_graph())
