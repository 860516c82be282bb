"""
Brute-force reference computations for polydec.

These are exponential by construction and refuse inputs above an
OracleBudget. Subset enumeration walks bitmasks in ascending order over the
vertices sorted by id; the chromatic polynomial uses deletion-contraction.
"""

from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Optional, Union

import networkx as nx

from ..config.run_config import OracleBudget
from ..errors import OracleBudgetExceeded
from ..models.graph import Graph
from ..models.polynomial import Monomial, Polynomial, PolynomialKind
from ..utils.logging import get_logger

logger = get_logger(__name__)

X = Polynomial.monomial(1, x=1)


def _check_order(graph: Graph, budget: Optional[OracleBudget], what: str) -> OracleBudget:
    budget = budget or OracleBudget()
    if graph.order > budget.max_vertices:
        logger.warning(
            "oracle budget exceeded", oracle=what, order=graph.order, limit=budget.max_vertices
        )
        raise OracleBudgetExceeded(
            f"{what} oracle refuses {graph.order} vertices (budget {budget.max_vertices})"
        )
    return budget


def _masks(graph: Graph) -> tuple[list[int], list[int], list[int]]:
    """Vertex ids (ascending), closed-neighbourhood masks and edge masks."""
    ids = graph.sorted_vertices()
    position = {v: i for i, v in enumerate(ids)}
    closed = [
        sum(1 << position[u] for u in graph.closed_neighborhood(v)) for v in ids
    ]
    edges = [(1 << position[u]) | (1 << position[v]) for u, v in graph.sorted_edges()]
    return ids, closed, edges


def _is_independent(mask: int, edge_masks: list[int]) -> bool:
    return not any(mask & e == e for e in edge_masks)


def _dominated(mask: int, closed: list[int]) -> int:
    covered = 0
    for i, neighbourhood in enumerate(closed):
        if mask >> i & 1:
            covered |= neighbourhood
    return covered


# =============================================================================
# Independence and domination
# =============================================================================

def independence_oracle(graph: Graph, budget: Optional[OracleBudget] = None) -> Polynomial:
    """Sum over independent sets S of x^|S|."""
    _check_order(graph, budget, "independence")
    ids, _, edge_masks = _masks(graph)
    counts = [0] * (len(ids) + 1)
    for mask in range(1 << len(ids)):
        if _is_independent(mask, edge_masks):
            counts[mask.bit_count()] += 1
    return Polynomial.from_coefficients(counts)


def domination_oracle(graph: Graph, budget: Optional[OracleBudget] = None) -> Polynomial:
    """Sum over dominating sets S (N[S] = V) of x^|S|."""
    _check_order(graph, budget, "domination")
    ids, closed, _ = _masks(graph)
    everything = (1 << len(ids)) - 1
    counts = [0] * (len(ids) + 1)
    for mask in range(1 << len(ids)):
        if _dominated(mask, closed) == everything:
            counts[mask.bit_count()] += 1
    return Polynomial.from_coefficients(counts)


# =============================================================================
# Chromatic
# =============================================================================

def _component_count(vertices: frozenset[int], edges: frozenset[tuple[int, int]]) -> int:
    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from(edges)
    return nx.number_connected_components(graph)


def _deletion_contraction(vertices: frozenset[int], edges: frozenset[tuple[int, int]]) -> Polynomial:
    n, m = len(vertices), len(edges)
    if m == 0:
        return Polynomial.monomial(1, x=n)
    if m == n * (n - 1) // 2:
        result = Polynomial.constant(1)
        for i in range(n):
            result = result * (X - i)
        return result
    components = _component_count(vertices, edges)
    if m == n - components:
        return Polynomial.monomial(1, x=components) * (X - 1) ** (n - components)

    u, v = min(edges)
    deleted = edges - {(u, v)}
    contracted = frozenset(
        (min(a, b), max(a, b))
        for a, b in ((u if a == v else a, u if b == v else b) for a, b in deleted)
        if a != b
    )
    return _deletion_contraction(vertices, deleted) - _deletion_contraction(
        vertices - {v}, contracted
    )


def chromatic_oracle(graph: Graph, budget: Optional[OracleBudget] = None) -> Polynomial:
    """P(G) = P(G - e) - P(G / e), bottoming out at edgeless, complete and forest graphs."""
    _check_order(graph, budget, "chromatic")
    return _deletion_contraction(graph.vertices, graph.edges)


def count_proper_colorings(graph: Graph, k: int, budget: Optional[OracleBudget] = None) -> int:
    """Count maps V -> {0..k-1} with distinct colours on every edge, by enumeration."""
    _check_order(graph, budget, "colouring")
    ids = graph.sorted_vertices()
    position = {v: i for i, v in enumerate(ids)}
    edges = [(position[u], position[v]) for u, v in graph.sorted_edges()]
    return sum(
        1
        for colouring in product(range(k), repeat=len(ids))
        if all(colouring[a] != colouring[b] for a, b in edges)
    )


# =============================================================================
# Bipartition
# =============================================================================

def bipartition_oracle(graph: Graph, budget: Optional[OracleBudget] = None) -> Polynomial:
    """
    Sum over V' ⊆ V and E' ⊆ ∂V' of x^|V'| y^|N(V')| z^|E'|.

    N(V') is taken in the graph (V, E'), so it counts the outside endpoints
    touched by E'.
    """
    budget = _check_order(graph, budget, "bipartition")
    ids = graph.sorted_vertices()
    terms: dict[Monomial, int] = {}

    for size in range(len(ids) + 1):
        for inside in combinations(ids, size):
            inside_set = frozenset(inside)
            boundary = sorted(graph.edge_boundary(inside_set))
            if len(boundary) > budget.max_boundary:
                logger.warning(
                    "oracle budget exceeded",
                    oracle="bipartition",
                    boundary=len(boundary),
                    limit=budget.max_boundary,
                )
                raise OracleBudgetExceeded(
                    f"bipartition oracle refuses an edge boundary of {len(boundary)} "
                    f"(budget {budget.max_boundary})"
                )
            outside_end = [b if a in inside_set else a for a, b in boundary]
            for mask in range(1 << len(boundary)):
                touched = {outside_end[i] for i in range(len(boundary)) if mask >> i & 1}
                monomial = Monomial(size, len(touched), mask.bit_count())
                terms[monomial] = terms.get(monomial, 0) + 1

    return Polynomial(terms)


# =============================================================================
# Graph invariants
# =============================================================================

def independence_number(graph: Graph, budget: Optional[OracleBudget] = None) -> int:
    """Size of a largest independent set."""
    _check_order(graph, budget, "independence")
    _, _, edge_masks = _masks(graph)
    return max(
        (mask.bit_count() for mask in range(1 << graph.order) if _is_independent(mask, edge_masks)),
        default=0,
    )


def domination_number(graph: Graph, budget: Optional[OracleBudget] = None) -> int:
    """Size of a smallest dominating set."""
    _check_order(graph, budget, "domination")
    _, closed, _ = _masks(graph)
    everything = (1 << graph.order) - 1
    return min(
        mask.bit_count() for mask in range(1 << graph.order)
        if _dominated(mask, closed) == everything
    )


def chromatic_number(graph: Graph, budget: Optional[OracleBudget] = None) -> int:
    """Least k >= 1 with P(G, k) > 0; 0 for the null graph."""
    if graph.order == 0:
        return 0
    polynomial = chromatic_oracle(graph, budget)
    k = 1
    while polynomial.evaluate(k) <= 0:
        k += 1
    return k


def non_dominating_complement_check(graph: Graph, budget: Optional[OracleBudget] = None) -> bool:
    """True iff V \\ Y dominates the complement graph for every Y not dominating graph."""
    _check_order(graph, budget, "complement-domination")
    _, closed, _ = _masks(graph)
    _, closed_complement, _ = _masks(graph.complement())
    everything = (1 << graph.order) - 1
    for mask in range(1 << graph.order):
        if _dominated(mask, closed) == everything:
            continue
        if _dominated(everything & ~mask, closed_complement) != everything:
            return False
    return True


# =============================================================================
# Verification
# =============================================================================

ORACLES: dict[PolynomialKind, Callable[[Graph, Optional[OracleBudget]], Polynomial]] = {
    PolynomialKind.INDEPENDENCE: independence_oracle,
    PolynomialKind.CHROMATIC: chromatic_oracle,
    PolynomialKind.DOMINATION: domination_oracle,
    PolynomialKind.BIPARTITION: bipartition_oracle,
}


@dataclass(frozen=True)
class OracleCheck:
    """Engine result compared with the oracle."""
    kind: PolynomialKind
    computed: Polynomial
    expected: Polynomial

    @property
    def matches(self) -> bool:
        return self.computed == self.expected


def oracle_polynomial(
    graph: Graph,
    kind: Union[PolynomialKind, str],
    budget: Optional[OracleBudget] = None,
) -> Polynomial:
    """Run the oracle for a polynomial kind."""
    return ORACLES[PolynomialKind(kind)](graph, budget)


def verify_polynomial(
    graph: Graph,
    kind: Union[PolynomialKind, str],
    computed: Polynomial,
    budget: Optional[OracleBudget] = None,
) -> OracleCheck:
    """
    Compare a computed polynomial with the oracle's.

    Raises:
        OracleBudgetExceeded: if the graph is beyond the budget
    """
    kind = PolynomialKind(kind)
    check = OracleCheck(kind, computed, oracle_polynomial(graph, kind, budget))
    if check.matches:
        logger.info("verification passed", polynomial=kind.value)
    else:
        logger.error(
            "verification mismatch",
            polynomial=kind.value,
            computed=computed,
            expected=check.expected,
        )
    return check
