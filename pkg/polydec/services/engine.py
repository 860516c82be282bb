"""
Composition-order sweep engine for polydec.

A sweep keeps a set of states, each an (index, polynomial) pair. Every item of
the composition order maps each state to zero or more new states through the
model's vertex-add, vertex-delete or edge map. After each item, states with
the same index are merged by summing their values and zero-valued states are
dropped. The value of the single state left at the end is the polynomial.
"""

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Iterator, NamedTuple, Optional

from ..errors import EngineError
from ..models.decomposition import CompositionOrder, SignedVertex, item_label
from ..models.graph import Edge, Vertex
from ..models.polynomial import Polynomial, PolynomialKind
from ..utils.logging import get_logger
from .decomposition import validate_composition_order

logger = get_logger(__name__)

StateIndex = Hashable


class State(NamedTuple):
    """One DP state: a canonical index and its accumulated value."""
    index: StateIndex
    value: Polynomial


class StateSet:
    """States with pairwise-distinct indices and nonzero values."""

    __slots__ = ("_states",)

    def __init__(self, states: Optional[dict[StateIndex, Polynomial]] = None):
        self._states: dict[StateIndex, Polynomial] = dict(states or {})

    def __len__(self) -> int:
        return len(self._states)

    def __iter__(self) -> Iterator[State]:
        return (State(index, value) for index, value in self._states.items())

    def __contains__(self, index: StateIndex) -> bool:
        return index in self._states

    def __getitem__(self, index: StateIndex) -> Polynomial:
        return self._states[index]

    def sorted_states(self) -> list[State]:
        """States ordered by canonical index."""
        return [State(index, self._states[index]) for index in sorted(self._states)]


# =============================================================================
# Model interface
# =============================================================================

class PolynomialModel(ABC):
    """
    A polynomial family: initial state plus the three state maps.

    Maps are pure: they read the state and the item, never the graph.
    Indices must be canonical so that equal meaning implies equal value.
    """

    kind: PolynomialKind

    @property
    def name(self) -> str:
        return self.kind.value

    @abstractmethod
    def empty_index(self) -> StateIndex:
        """Index of the null graph's state (and of the final state)."""

    def initial_state(self) -> State:
        return State(self.empty_index(), Polynomial.constant(1))

    @abstractmethod
    def on_vertex_add(self, state: State, v: Vertex) -> Iterable[State]:
        """Map for +v."""

    @abstractmethod
    def on_vertex_delete(self, state: State, v: Vertex) -> Iterable[State]:
        """Map for -v; an empty result kills the state."""

    @abstractmethod
    def on_edge(self, state: State, edge: Edge) -> Iterable[State]:
        """Map for an edge item."""

    @abstractmethod
    def encode_index(self, index: StateIndex) -> str:
        """Human-readable canonical rendering of an index."""

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


# =============================================================================
# Sweep
# =============================================================================

@dataclass(frozen=True)
class TraceStep:
    """Merged state set after one item (or 'init' before the first)."""
    label: str
    states: tuple[State, ...]

    def to_dict(self, model: PolynomialModel) -> dict[str, Any]:
        return {
            "step": self.label,
            "states": [
                {"index": model.encode_index(s.index), "value": s.value.to_json_data()}
                for s in self.states
            ],
        }


Trace = list[TraceStep]


@dataclass
class SweepResult:
    """Outcome of one sweep."""
    polynomial: Polynomial
    model: PolynomialModel
    peak_states: int
    steps: int
    trace: Optional[Trace] = field(default=None)


def merge(states: Iterable[State]) -> StateSet:
    """Group states by index, sum values, drop zero sums."""
    merged: dict[StateIndex, Polynomial] = {}
    for index, value in states:
        if index in merged:
            merged[index] = merged[index] + value
        else:
            merged[index] = value
    return StateSet({index: value for index, value in merged.items() if not value.is_zero()})


def _apply(model: PolynomialModel, state: State, item: Any) -> Iterable[State]:
    if isinstance(item, SignedVertex):
        if item.is_addition:
            return model.on_vertex_add(state, item.vertex)
        return model.on_vertex_delete(state, item.vertex)
    return model.on_edge(state, item)


def run(
    model: PolynomialModel,
    order: CompositionOrder,
    trace: bool = False,
    order_seed: Optional[int] = None,
) -> SweepResult:
    """
    Sweep a composition order with a polynomial model.

    Args:
        model: The polynomial family's maps
        order: Composition order; validated against its host graph first
        trace: Record the merged state set after every item
        order_seed: When given, shuffle per-item state iteration with this seed

    Returns:
        SweepResult with the final polynomial and peak state count

    Raises:
        DecompositionError: if the composition order is invalid
        EngineError: if the sweep does not end in the single empty-index state
    """
    validate_composition_order(order.host, order).raise_if_invalid("composition order")
    rng = random.Random(order_seed) if order_seed is not None else None

    current = merge([model.initial_state()])
    peak = len(current)
    steps: Optional[Trace] = [TraceStep("init", tuple(current.sorted_states()))] if trace else None

    for item in order.items:
        states = list(current)
        if rng is not None:
            rng.shuffle(states)
        current = merge(new for state in states for new in _apply(model, state, item))
        peak = max(peak, len(current))
        if steps is not None:
            steps.append(TraceStep(item_label(item), tuple(current.sorted_states())))
        logger.debug("sweep step", item=item_label(item), states=len(current))

    empty = model.empty_index()
    if len(current) != 1 or empty not in current:
        raise EngineError(
            f"{model.name} sweep ended with {len(current)} states instead of the single empty index"
        )

    polynomial = current[empty]
    logger.info(
        "sweep finished",
        model=model.name,
        steps=len(order),
        peak_states=peak,
        terms=len(polynomial),
    )
    return SweepResult(
        polynomial=polynomial, model=model, peak_states=peak, steps=len(order), trace=steps
    )


def peak_state_count(trace: Trace) -> int:
    """Largest state-set size over a trace."""
    return max((len(step.states) for step in trace), default=0)
