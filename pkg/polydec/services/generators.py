"""
Seeded graph generators for polydec.

k-trees and partial k-trees are built on ids 0..m-1 in construction order,
so sorted(graph.vertices) is also the construction ordering. Atlas helpers
draw small graphs from the networkx graph atlas.
"""

import random
from math import comb, floor
from typing import Optional

import networkx as nx

from ..errors import GraphError
from ..models.graph import Edge, Graph


def k_tree_edge_count(k: int, m: int) -> int:
    """Edge count of a k-tree of order m: km - C(k+1, 2)."""
    return k * m - comb(k + 1, 2)


def generate_k_tree(k: int, m: int, seed: int = 0, window: Optional[int] = None) -> Graph:
    """
    Build a k-tree of order m.

    Starts from the clique on 0..k; each later vertex v picks, with a
    random.Random(seed), one existing (k+1)-clique and joins a k-subset of it,
    creating the new clique subset + {v}.

    Args:
        k: Clique parameter (>= 1)
        m: Number of vertices (>= k + 1)
        seed: Generator seed
        window: When set, only the `window` most recent cliques are eligible

    Raises:
        GraphError: if k < 1, m < k + 1 or window < 1
    """
    if k < 1:
        raise GraphError(f"k must be positive, got {k}")
    if m < k + 1:
        raise GraphError(f"a {k}-tree needs at least {k + 1} vertices, got m={m}")
    if window is not None and window < 1:
        raise GraphError(f"window must be positive, got {window}")

    rng = random.Random(seed)
    base = tuple(range(k + 1))
    edges: list[Edge] = [(u, v) for i, u in enumerate(base) for v in base[i + 1:]]
    cliques: list[tuple[int, ...]] = [base]

    for v in range(k + 1, m):
        pool = cliques[-window:] if window else cliques
        clique = rng.choice(pool)
        attach = sorted(rng.sample(clique, k))
        edges.extend((u, v) for u in attach)
        cliques.append(tuple(attach) + (v,))

    return Graph.from_edges(edges, vertices=range(m))


def random_partial_k_tree(
    k: int,
    m: int,
    delete_fraction: float,
    seed: int = 0,
    window: Optional[int] = None,
) -> Graph:
    """
    A k-tree with floor(delete_fraction * |E|) of its edges removed.

    The removed edges are a random.Random(seed) sample of the sorted edge list.

    Raises:
        GraphError: if delete_fraction is outside [0, 1], or as generate_k_tree
    """
    if not 0 <= delete_fraction <= 1:
        raise GraphError(f"delete_fraction must lie in [0, 1], got {delete_fraction}")
    tree = generate_k_tree(k, m, seed, window)
    edges = tree.sorted_edges()
    removed = random.Random(seed).sample(edges, floor(delete_fraction * len(edges)))
    return tree.without_edges(removed)


def atlas_connected_graphs(max_order: int = 5, min_order: int = 1) -> list[Graph]:
    """All non-isomorphic connected graphs with min_order..max_order vertices (max 7)."""
    if max_order > 7:
        raise GraphError("the graph atlas only covers graphs with up to 7 vertices")
    return [
        Graph.from_networkx(g)
        for g in nx.graph_atlas_g()
        if min_order <= g.number_of_nodes() <= max_order and nx.is_connected(g)
    ]


def sample_connected_atlas_graphs(
    count: int = 200,
    orders: tuple[int, ...] = (6, 7),
    seed: int = 0,
) -> list[Graph]:
    """A seeded sample of connected atlas graphs whose order is in `orders`."""
    pool = [
        g for g in nx.graph_atlas_g()
        if g.number_of_nodes() in orders and nx.is_connected(g)
    ]
    chosen = random.Random(seed).sample(range(len(pool)), min(count, len(pool)))
    return [Graph.from_networkx(pool[i]) for i in sorted(chosen)]


def random_connected_graph(n: int, edge_probability: float, seed: int = 0) -> Graph:
    """A connected G(n, p) graph: redraws with successive seeds until connected."""
    if n > 1 and edge_probability <= 0:
        raise GraphError("an edgeless graph on more than one vertex is never connected")
    attempt = seed
    while True:
        g = nx.gnp_random_graph(n, edge_probability, seed=attempt)
        if n <= 1 or nx.is_connected(g):
            return Graph.from_networkx(g)
        attempt += 1
