"""
Decomposition service for polydec.

Builds nice path decompositions and composition orders from vertex
orderings, validates tree decompositions, path decompositions and
composition orders, and measures widths. Validators return a
ValidationReport naming the first violated property; they never raise for an
invalid input.
"""

from typing import Iterable, Mapping, Optional, Sequence, Union

from ..errors import DecompositionError
from ..models.decomposition import (
    CompositionItem,
    CompositionOrder,
    NicePathDecomposition,
    PathDecomposition,
    SignedVertex,
    TreeDecomposition,
    ValidationReport,
    is_edge_item,
)
from ..models.graph import Edge, Graph, Vertex, edge_label
from ..utils.logging import get_logger

logger = get_logger(__name__)

BagCollection = Union[
    PathDecomposition,
    TreeDecomposition,
    Sequence[Iterable[Vertex]],
    Mapping[object, Iterable[Vertex]],
]


# =============================================================================
# Width
# =============================================================================

def width(bags: BagCollection) -> int:
    """
    Largest bag size minus one.

    Raises:
        DecompositionError: if there are no bags
    """
    if isinstance(bags, TreeDecomposition):
        collection = bags.bag_list()
    elif isinstance(bags, PathDecomposition):
        collection = list(bags.bags)
    elif isinstance(bags, Mapping):
        collection = list(bags.values())
    else:
        collection = list(bags)

    if not collection:
        raise DecompositionError("width of an empty decomposition is undefined")
    return max(len(frozenset(bag)) for bag in collection) - 1


def composition_width(order: CompositionOrder) -> int:
    """
    Peak active-set size over the sweep, minus one (0 for the empty order).

    Raises:
        DecompositionError: if the order is invalid for its host graph
    """
    validate_composition_order(order.host, order).raise_if_invalid("composition order")
    return _peak_active(order.nice_path()) - 1 if len(order) else 0


def nice_path_width(npd: NicePathDecomposition) -> int:
    """Width of the bag sequence induced by a nice path decomposition."""
    return max(_peak_active(npd) - 1, 0)


def _peak_active(npd: NicePathDecomposition) -> int:
    return max(len(bag) for bag in npd.bags())


# =============================================================================
# Tree and path decompositions
# =============================================================================

def validate_tree_decomposition(graph: Graph, td: TreeDecomposition) -> ValidationReport:
    """
    Check vertex preservation, edge preservation and compactness.

    Compactness is checked per vertex: the tree nodes whose bags contain it
    must induce a connected subtree.

    Raises:
        DecompositionError: if td.tree is not a tree
    """
    import networkx as nx

    if td.tree.order == 0 or not nx.is_tree(td.tree.to_networkx()):
        raise DecompositionError("tree decomposition's underlying graph is not a tree")
    unknown_nodes = set(td.bags) - td.tree.vertices
    if unknown_nodes:
        raise DecompositionError(f"bags given for nodes {sorted(unknown_nodes)} outside the tree")

    nodes = td.tree.sorted_vertices()
    bags = {node: td.bags.get(node, frozenset()) for node in nodes}

    covered: set[Vertex] = set().union(*bags.values())
    for v in graph.sorted_vertices():
        if v not in covered:
            return ValidationReport.fail("vertex", (v,), f"vertex {v} is in no bag")
    extra = sorted(covered - graph.vertices)
    if extra:
        return ValidationReport.fail("vertex", (extra[0],), f"bag vertex {extra[0]} is not in the graph")

    for edge in graph.sorted_edges():
        if not any(edge[0] in bag and edge[1] in bag for bag in bags.values()):
            return ValidationReport.fail(
                "edge", (edge,), f"edge {edge_label(edge)} is contained in no bag"
            )

    for v in graph.sorted_vertices():
        holding = [node for node in nodes if v in bags[node]]
        if not td.tree.induced_subgraph(holding).is_connected():
            return ValidationReport.fail(
                "compactness",
                (v, tuple(holding)),
                f"nodes {holding} holding vertex {v} do not form a connected subtree",
            )

    return ValidationReport.ok()


def validate_path_decomposition(graph: Graph, pd: PathDecomposition) -> ValidationReport:
    """
    Check vertex preservation, edge preservation and V_a ∩ V_c ⊆ V_b.

    Witness bag positions are 1-based.
    """
    covered: set[Vertex] = set().union(*pd.bags) if pd.bags else set()
    for v in graph.sorted_vertices():
        if v not in covered:
            return ValidationReport.fail("vertex", (v,), f"vertex {v} is in no bag")
    extra = sorted(covered - graph.vertices)
    if extra:
        return ValidationReport.fail("vertex", (extra[0],), f"bag vertex {extra[0]} is not in the graph")

    for edge in graph.sorted_edges():
        if not any(edge[0] in bag and edge[1] in bag for bag in pd.bags):
            return ValidationReport.fail(
                "edge", (edge,), f"edge {edge_label(edge)} is contained in no bag"
            )

    for v in graph.sorted_vertices():
        positions = [i for i, bag in enumerate(pd.bags, start=1) if v in bag]
        first, last = positions[0], positions[-1]
        if len(positions) != last - first + 1:
            gap = next(i for i in range(first, last + 1) if i not in positions)
            return ValidationReport.fail(
                "compactness",
                (v, first, gap, last),
                f"vertex {v} is in bags {first} and {last} but not in bag {gap}",
            )

    return ValidationReport.ok()


def ordering_from_path_decomposition(graph: Graph, pd: PathDecomposition) -> list[Vertex]:
    """
    Vertex ordering by first bag appearance (ties by id).

    The nice path decomposition built from this ordering is no wider than pd.

    Raises:
        DecompositionError: if pd is not a valid path decomposition of graph
    """
    validate_path_decomposition(graph, pd).raise_if_invalid("path decomposition")
    first_seen: dict[Vertex, int] = {}
    for position, bag in enumerate(pd.bags):
        for v in bag:
            first_seen.setdefault(v, position)
    return sorted(graph.vertices, key=lambda v: (first_seen[v], v))


# =============================================================================
# Nice path decompositions and composition orders
# =============================================================================

def _require_permutation(graph: Graph, ordering: Sequence[Vertex]) -> None:
    if len(ordering) != graph.order or set(ordering) != graph.vertices:
        raise DecompositionError(
            f"ordering of {len(ordering)} ids is not a permutation of the graph's "
            f"{graph.order} vertices"
        )


def nice_path_from_ordering(graph: Graph, ordering: Sequence[Vertex]) -> NicePathDecomposition:
    """
    Emit +v for each vertex in order, removing vertices as early as possible.

    After +v, every active vertex whose neighbours have all been added is
    removed, in the order the active vertices were added.

    Raises:
        DecompositionError: if ordering is not a permutation of the vertices
    """
    ordering = list(ordering)
    _require_permutation(graph, ordering)

    added: set[Vertex] = set()
    active: list[Vertex] = []
    steps: list[SignedVertex] = []
    for v in ordering:
        steps.append(SignedVertex.add(v))
        added.add(v)
        active.append(v)
        done = [u for u in active if graph.open_neighborhood(u) <= added]
        for u in done:
            steps.append(SignedVertex.remove(u))
            active.remove(u)

    return NicePathDecomposition(tuple(steps))


def validate_nice_path(graph: Graph, npd: NicePathDecomposition) -> ValidationReport:
    """Every vertex exactly once with +, exactly once with -, + before -."""
    return _check_signed_vertices(graph, list(npd.steps))


def _check_signed_vertices(graph: Graph, steps: list[SignedVertex]) -> ValidationReport:
    added: set[Vertex] = set()
    removed: set[Vertex] = set()
    for step in steps:
        v = step.vertex
        if v not in graph.vertices:
            return ValidationReport.fail(2, (str(step),), f"{step} names a vertex outside the graph")
        if step.is_addition:
            if v in added:
                return ValidationReport.fail(2, (str(step),), f"vertex {v} is added twice")
            added.add(v)
        else:
            if v not in added:
                return ValidationReport.fail(2, (str(step),), f"vertex {v} is removed before it is added")
            if v in removed:
                return ValidationReport.fail(2, (str(step),), f"vertex {v} is removed twice")
            removed.add(v)
    for v in graph.sorted_vertices():
        if v not in added:
            return ValidationReport.fail(2, (v,), f"vertex {v} is never added")
        if v not in removed:
            return ValidationReport.fail(2, (v,), f"vertex {v} is never removed")
    return ValidationReport.ok()


def compose_order(graph: Graph, npd: NicePathDecomposition) -> CompositionOrder:
    """
    Interleave the graph's edges into a nice path decomposition.

    Each edge goes immediately after the later of its endpoints' additions;
    edges placed at the same point follow canonical edge order.

    Raises:
        DecompositionError: if npd is invalid, or some edge's endpoints are
            never active together
    """
    validate_nice_path(graph, npd).raise_if_invalid("nice path decomposition")

    active: set[Vertex] = set()
    items: list[CompositionItem] = []
    placed = 0
    for step in npd.steps:
        items.append(step)
        v = step.vertex
        if not step.is_addition:
            active.discard(v)
            continue
        partners = sorted(graph.open_neighborhood(v) & active)
        for u in partners:
            items.append((u, v) if u < v else (v, u))
        placed += len(partners)
        active.add(v)

    if placed != graph.size:
        order = CompositionOrder(tuple(items), graph)
        report = validate_composition_order(graph, order)
        raise DecompositionError(
            "nice path decomposition separates the endpoints of an edge", report=report
        )

    return CompositionOrder(tuple(items), graph)


def validate_composition_order(graph: Graph, order: CompositionOrder) -> ValidationReport:
    """
    Check the four composition-order properties and report the first failure.

    1. every graph edge occurs exactly once (and nothing else is an edge item)
    2. the signed vertices form a nice path decomposition
    3. each edge lies after both endpoints' + and before both endpoints' -
    4. length is 2*order + size
    """
    seen: set[Edge] = set()
    for item in order.items:
        if not is_edge_item(item):
            continue
        if item not in graph.edges:
            return ValidationReport.fail(1, (item,), f"edge {edge_label(item)} is not in the graph")
        if item in seen:
            return ValidationReport.fail(1, (item,), f"edge {edge_label(item)} occurs more than once")
        seen.add(item)
    for edge in graph.sorted_edges():
        if edge not in seen:
            return ValidationReport.fail(1, (edge,), f"edge {edge_label(edge)} is missing")

    signed = [item for item in order.items if isinstance(item, SignedVertex)]
    report = _check_signed_vertices(graph, signed)
    if not report.is_valid:
        return report

    added_at: dict[Vertex, int] = {}
    removed_at: dict[Vertex, int] = {}
    for position, item in enumerate(order.items):
        if isinstance(item, SignedVertex):
            (added_at if item.is_addition else removed_at)[item.vertex] = position
    for position, item in enumerate(order.items):
        if not is_edge_item(item):
            continue
        u, v = item
        if not (added_at[u] < position and added_at[v] < position
                and removed_at[u] > position and removed_at[v] > position):
            return ValidationReport.fail(
                3,
                (item, position),
                f"edge {edge_label(item)} at position {position} is outside the span "
                f"where both endpoints are active",
            )

    expected = 2 * graph.order + graph.size
    if len(order) != expected:
        return ValidationReport.fail(
            4, (len(order), expected), f"length {len(order)} differs from {expected}"
        )

    return ValidationReport.ok()


# =============================================================================
# Orderings
# =============================================================================

def heuristic_ordering(graph: Graph) -> list[Vertex]:
    """
    Greedy one-step lookahead ordering.

    Repeatedly appends the vertex that leaves the fewest active vertices once
    the removals it triggers are done. Ties go to the vertex with fewer
    not-yet-added neighbours, then to the smaller id.
    """
    added: set[Vertex] = set()
    active: set[Vertex] = set()
    ordering: list[Vertex] = []
    remaining = set(graph.vertices)

    while remaining:
        best_key = None
        best = None
        for v in remaining:
            after = added | {v}
            left = sum(1 for u in active | {v} if not graph.open_neighborhood(u) <= after)
            key = (left, len(graph.open_neighborhood(v) - after), v)
            if best_key is None or key < best_key:
                best_key, best = key, v
        ordering.append(best)
        remaining.discard(best)
        added.add(best)
        active.add(best)
        active = {u for u in active if not graph.open_neighborhood(u) <= added}

    return ordering


def build_composition_order(
    graph: Graph,
    ordering: Optional[Sequence[Vertex]] = None,
) -> CompositionOrder:
    """Ordering (heuristic when omitted) -> nice path -> composition order."""
    if ordering is None:
        ordering = heuristic_ordering(graph)
    order = compose_order(graph, nice_path_from_ordering(graph, ordering))
    logger.info(
        "composition order built",
        length=len(order),
        width=nice_path_width(order.nice_path()),
    )
    return order
