"""
The four polynomial models swept by the engine.

Indices are canonical tuples:
- independence: sorted tuple of chosen active vertices
- chromatic: tuple of sorted blocks, ordered by their smallest vertex
- domination: (uncovered, covered, dominating) sorted tuples
- bipartition: (counted neighbours, outside, inside) sorted tuples
"""

from typing import Iterable, Optional, Sequence, Union

from ..models.decomposition import CompositionOrder
from ..models.graph import Edge, Graph, Vertex
from ..models.polynomial import Polynomial, PolynomialKind
from .decomposition import build_composition_order
from .engine import PolynomialModel, State, SweepResult, run

X = Polynomial.monomial(1, x=1)
Z = Polynomial.monomial(1, z=1)
YZ = Polynomial.monomial(1, y=1, z=1)

VertexTuple = tuple[Vertex, ...]
Triple = tuple[VertexTuple, VertexTuple, VertexTuple]


def _with(group: VertexTuple, v: Vertex) -> VertexTuple:
    return tuple(sorted(group + (v,)))


def _without(group: VertexTuple, v: Vertex) -> VertexTuple:
    return tuple(u for u in group if u != v)


def _render_set(group: Iterable[Vertex]) -> str:
    return "{" + ",".join(str(v) for v in group) + "}"


def _render_triple(index: Triple) -> str:
    return "[" + ",".join(_render_set(group) for group in index) + "]"


class IndependenceModel(PolynomialModel):
    """Index: the chosen active vertices; an edge inside the choice kills it."""

    kind = PolynomialKind.INDEPENDENCE

    def empty_index(self) -> VertexTuple:
        return ()

    def on_vertex_add(self, state: State, v: Vertex) -> list[State]:
        chosen, f = state
        return [State(chosen, f), State(_with(chosen, v), X * f)]

    def on_vertex_delete(self, state: State, v: Vertex) -> list[State]:
        chosen, f = state
        return [State(_without(chosen, v), f)]

    def on_edge(self, state: State, edge: Edge) -> list[State]:
        u, v = edge
        if u in state.index and v in state.index:
            return []
        return [state]

    def encode_index(self, index: VertexTuple) -> str:
        return _render_set(index)


class ChromaticModel(PolynomialModel):
    """Index: partition of the active vertices into colour classes."""

    kind = PolynomialKind.CHROMATIC

    def empty_index(self) -> tuple[VertexTuple, ...]:
        return ()

    def on_vertex_add(self, state: State, v: Vertex) -> list[State]:
        blocks, f = state
        fresh = tuple(sorted(blocks + ((v,),)))
        results = [State(fresh, (X - len(blocks)) * f)]
        for i, block in enumerate(blocks):
            joined = blocks[:i] + (_with(block, v),) + blocks[i + 1:]
            results.append(State(tuple(sorted(joined)), f))
        return results

    def on_vertex_delete(self, state: State, v: Vertex) -> list[State]:
        blocks, f = state
        kept = tuple(
            sorted(reduced for reduced in (_without(block, v) for block in blocks) if reduced)
        )
        return [State(kept, f)]

    def on_edge(self, state: State, edge: Edge) -> list[State]:
        u, v = edge
        if any(u in block and v in block for block in state.index):
            return []
        return [state]

    def encode_index(self, index: tuple[VertexTuple, ...]) -> str:
        if not index:
            return "{}"
        return "|".join(",".join(str(v) for v in block) for block in index)


class DominationModel(PolynomialModel):
    """Index: (uncovered D, covered E, dominating F) over the active vertices."""

    kind = PolynomialKind.DOMINATION

    def empty_index(self) -> Triple:
        return ((), (), ())

    def on_vertex_add(self, state: State, v: Vertex) -> list[State]:
        (d, e, f_set), f = state
        return [
            State((_with(d, v), e, f_set), f),
            State((d, e, _with(f_set, v)), X * f),
        ]

    def on_vertex_delete(self, state: State, v: Vertex) -> list[State]:
        (d, e, f_set), f = state
        if v in d:
            return []
        return [State((d, _without(e, v), _without(f_set, v)), f)]

    def on_edge(self, state: State, edge: Edge) -> list[State]:
        (d, e, f_set), f = state
        u, v = edge
        if v in f_set and u in d:
            return [State((_without(d, u), _with(e, u), f_set), f)]
        if u in f_set and v in d:
            return [State((_without(d, v), _with(e, v), f_set), f)]
        return [state]

    def encode_index(self, index: Triple) -> str:
        return _render_triple(index)


class BipartitionModel(PolynomialModel):
    """
    Index: (counted neighbours D, outside E, inside F) over the active vertices.

    An edge from F to E may be selected (yz), turning its outside endpoint
    into a counted neighbour. An edge from F to D may be selected (z) without
    changing the index; the engine's merge adds that branch back in.
    """

    kind = PolynomialKind.BIPARTITION

    def empty_index(self) -> Triple:
        return ((), (), ())

    def on_vertex_add(self, state: State, v: Vertex) -> list[State]:
        (d, e, f_set), f = state
        return [
            State((d, _with(e, v), f_set), f),
            State((d, e, _with(f_set, v)), X * f),
        ]

    def on_vertex_delete(self, state: State, v: Vertex) -> list[State]:
        (d, e, f_set), f = state
        return [State((_without(d, v), _without(e, v), _without(f_set, v)), f)]

    def on_edge(self, state: State, edge: Edge) -> list[State]:
        (d, e, f_set), f = state
        u, v = edge
        for inside, other in ((u, v), (v, u)):
            if inside not in f_set:
                continue
            if other in e:
                return [state, State((_with(d, other), _without(e, other), f_set), YZ * f)]
            if other in d:
                return [state, State(state.index, Z * f)]
        return [state]

    def encode_index(self, index: Triple) -> str:
        return _render_triple(index)


# =============================================================================
# Registry
# =============================================================================

def independence_model() -> IndependenceModel:
    return IndependenceModel()


def chromatic_model() -> ChromaticModel:
    return ChromaticModel()


def domination_model() -> DominationModel:
    return DominationModel()


def bipartition_model() -> BipartitionModel:
    return BipartitionModel()


MODEL_FACTORIES = {
    PolynomialKind.INDEPENDENCE: independence_model,
    PolynomialKind.CHROMATIC: chromatic_model,
    PolynomialKind.DOMINATION: domination_model,
    PolynomialKind.BIPARTITION: bipartition_model,
}


def get_model(kind: Union[PolynomialKind, str]) -> PolynomialModel:
    """Model by kind or name ('independence', 'chromatic', ...)."""
    return MODEL_FACTORIES[PolynomialKind(kind)]()


def compute_polynomial(
    graph: Graph,
    kind: Union[PolynomialKind, str],
    ordering: Optional[Sequence[Vertex]] = None,
    order: Optional[CompositionOrder] = None,
    trace: bool = False,
    order_seed: Optional[int] = None,
) -> SweepResult:
    """
    Compute one polynomial of a graph.

    Uses the given composition order, else one built from `ordering`, else
    one built from the greedy heuristic ordering.
    """
    if order is None:
        order = build_composition_order(graph, ordering)
    return run(get_model(kind), order, trace=trace, order_seed=order_seed)
