"""
Graph data model for polydec.

A Graph is an immutable simple undirected graph on externally supplied
non-negative integer vertex ids. Edges are stored canonically as (min, max).
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import TYPE_CHECKING, Iterable

from ..errors import GraphError

if TYPE_CHECKING:
    import networkx as nx


Vertex = int
Edge = tuple[int, int]


class GraphFormat(str, Enum):
    """Supported graph file formats."""
    EDGE_LIST = "edge-list"
    DIMACS = "dimacs"


def canonical_edge(u: Vertex, v: Vertex) -> Edge:
    """
    Return the canonical (min, max) form of an edge.

    Raises:
        GraphError: if the endpoints coincide (self-loop)
    """
    if u == v:
        raise GraphError(f"self-loop on vertex {u} is not allowed in a simple graph")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with integer vertex ids."""
    vertices: frozenset[Vertex] = frozenset()
    edges: frozenset[Edge] = frozenset()
    _adjacency: dict[Vertex, frozenset[Vertex]] = field(
        default=None, init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        vertices = frozenset(self.vertices)
        for v in vertices:
            if not isinstance(v, int) or v < 0:
                raise GraphError(f"vertex id {v!r} is not a non-negative integer")

        edges = set()
        for u, v in self.edges:
            edge = canonical_edge(u, v)
            if u not in vertices or v not in vertices:
                raise GraphError(f"edge {edge} references a vertex outside the graph")
            edges.add(edge)

        adjacency: dict[Vertex, set[Vertex]] = {v: set() for v in vertices}
        for u, v in edges:
            adjacency[u].add(v)
            adjacency[v].add(u)

        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", frozenset(edges))
        object.__setattr__(
            self, "_adjacency", {v: frozenset(n) for v, n in adjacency.items()}
        )

    # =========================================================================
    # Construction
    # =========================================================================

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[Vertex, Vertex]],
        vertices: Iterable[Vertex] = (),
    ) -> "Graph":
        """
        Build a graph from an edge iterable; endpoints are added as vertices.

        Duplicate edges collapse to one edge. Self-loops raise GraphError.
        """
        edge_list = [canonical_edge(u, v) for u, v in edges]
        all_vertices = set(vertices)
        for u, v in edge_list:
            all_vertices.add(u)
            all_vertices.add(v)
        return cls(frozenset(all_vertices), frozenset(edge_list))

    @classmethod
    def empty(cls, n: int, start: int = 0) -> "Graph":
        """Edgeless graph on vertices start..start+n-1."""
        return cls(frozenset(range(start, start + n)))

    @classmethod
    def complete(cls, n: int, start: int = 0) -> "Graph":
        """Complete graph K_n on vertices start..start+n-1."""
        ids = range(start, start + n)
        return cls(frozenset(ids), frozenset(combinations(ids, 2)))

    @classmethod
    def path(cls, n: int, start: int = 0) -> "Graph":
        """Path graph P_n whose ids follow the path."""
        ids = list(range(start, start + n))
        return cls(frozenset(ids), frozenset(zip(ids, ids[1:])))

    @classmethod
    def from_networkx(cls, graph: "nx.Graph") -> "Graph":
        """Convert a networkx graph with non-negative integer nodes."""
        return cls.from_edges(graph.edges(), vertices=graph.nodes())

    def to_networkx(self) -> "nx.Graph":
        """Convert to a networkx graph (same ids)."""
        import networkx as nx

        graph = nx.Graph()
        graph.add_nodes_from(sorted(self.vertices))
        graph.add_edges_from(self.sorted_edges())
        return graph

    # =========================================================================
    # Basic properties
    # =========================================================================

    @property
    def order(self) -> int:
        """Number of vertices."""
        return len(self.vertices)

    @property
    def size(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def sorted_vertices(self) -> list[Vertex]:
        """Vertices in ascending id order."""
        return sorted(self.vertices)

    def sorted_edges(self) -> list[Edge]:
        """Edges in canonical order (min endpoint, then max)."""
        return sorted(self.edges)

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        """Check whether {u, v} is an edge."""
        return u != v and (min(u, v), max(u, v)) in self.edges

    def degree(self, v: Vertex) -> int:
        """Degree of v."""
        return len(self.open_neighborhood(v))

    def is_connected(self) -> bool:
        """Check connectivity; the null graph counts as connected."""
        if self.order == 0:
            return True
        import networkx as nx

        return nx.is_connected(self.to_networkx())

    # =========================================================================
    # Neighborhood queries
    # =========================================================================

    def _require(self, v: Vertex) -> None:
        if v not in self.vertices:
            raise GraphError(f"vertex {v} is not in the graph")

    def open_neighborhood(self, v: Vertex) -> frozenset[Vertex]:
        """N(v): vertices adjacent to v, v excluded."""
        self._require(v)
        return self._adjacency[v]

    def closed_neighborhood(self, v: Vertex) -> frozenset[Vertex]:
        """N[v] = N(v) + v."""
        return self.open_neighborhood(v) | {v}

    def closed_neighborhood_of_set(self, subset: Iterable[Vertex]) -> frozenset[Vertex]:
        """N[S]: union of closed neighborhoods of the vertices of S."""
        result: set[Vertex] = set()
        for v in subset:
            result |= self.closed_neighborhood(v)
        return frozenset(result)

    def edge_boundary(self, subset: Iterable[Vertex]) -> frozenset[Edge]:
        """Edges with exactly one endpoint in the given vertex subset."""
        inside = frozenset(subset)
        for v in inside:
            self._require(v)
        return frozenset(
            (a, b) for a, b in self.edges if (a in inside) != (b in inside)
        )

    # =========================================================================
    # Derived graphs
    # =========================================================================

    def complement(self) -> "Graph":
        """Same vertex set; {u, v} is an edge iff it is not one here."""
        ordered = self.sorted_vertices()
        return Graph(
            self.vertices,
            frozenset(e for e in combinations(ordered, 2) if e not in self.edges),
        )

    def induced_subgraph(self, subset: Iterable[Vertex]) -> "Graph":
        """Subgraph induced by a vertex subset."""
        keep = frozenset(subset)
        for v in keep:
            self._require(v)
        return Graph(keep, frozenset(e for e in self.edges if e[0] in keep and e[1] in keep))

    def without_edges(self, removed: Iterable[Edge]) -> "Graph":
        """Spanning subgraph with the given edges removed."""
        drop = {canonical_edge(u, v) for u, v in removed}
        return Graph(self.vertices, self.edges - drop)

    def relabel(self, mapping: dict[Vertex, Vertex]) -> "Graph":
        """Rename vertices; the mapping must be injective on the vertex set."""
        if len({mapping[v] for v in self.vertices}) != self.order:
            raise GraphError("relabel mapping is not injective")
        return Graph.from_edges(
            ((mapping[u], mapping[v]) for u, v in self.edges),
            vertices=(mapping[v] for v in self.vertices),
        )

    def __str__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"


def edge_label(edge: Edge) -> str:
    """Render an edge as '{u,v}'."""
    u, v = edge
    return f"{{{u},{v}}}"
