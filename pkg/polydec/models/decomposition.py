"""
Decomposition data models for polydec.

Tree decompositions, path decompositions, nice path decompositions in
signed-vertex form, composition orders, and the ValidationReport returned by
every validator.
"""

from dataclasses import dataclass, field
from typing import Any, Iterator, Optional, Union

from ..errors import DecompositionError
from .graph import Edge, Graph, Vertex, edge_label


# =============================================================================
# Signed vertices and composition items
# =============================================================================

@dataclass(frozen=True, order=True)
class SignedVertex:
    """A vertex addition (+1) or removal (-1) step."""
    sign: int
    vertex: Vertex

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DecompositionError(f"sign must be +1 or -1, got {self.sign!r}")

    @classmethod
    def add(cls, v: Vertex) -> "SignedVertex":
        return cls(1, v)

    @classmethod
    def remove(cls, v: Vertex) -> "SignedVertex":
        return cls(-1, v)

    @property
    def is_addition(self) -> bool:
        return self.sign == 1

    def __str__(self) -> str:
        return f"{'+' if self.sign == 1 else '-'}{self.vertex}"


CompositionItem = Union[SignedVertex, Edge]


def is_edge_item(item: CompositionItem) -> bool:
    """True for edge items, False for signed vertices."""
    return not isinstance(item, SignedVertex)


def item_label(item: CompositionItem) -> str:
    """Trace label of an item: '+3', '-3' or '{1,3}'."""
    if isinstance(item, SignedVertex):
        return str(item)
    return edge_label(item)


def item_token(item: CompositionItem) -> str:
    """Composition-order file token of an item: '+3', '-3' or '1-3'."""
    if isinstance(item, SignedVertex):
        return str(item)
    u, v = item
    return f"{u}-{v}"


# =============================================================================
# Validation reports
# =============================================================================

@dataclass(frozen=True)
class Violation:
    """First violated property of a decomposition, with its witness."""
    property: Union[int, str]
    witness: tuple[Any, ...]
    message: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "property": self.property,
            "witness": [list(w) if isinstance(w, (tuple, frozenset, set)) else w
                        for w in self.witness],
            "message": self.message,
        }


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a validator: valid, or the first violation found."""
    violation: Optional[Violation] = None

    @classmethod
    def ok(cls) -> "ValidationReport":
        return cls()

    @classmethod
    def fail(cls, prop: Union[int, str], witness: tuple[Any, ...], message: str) -> "ValidationReport":
        return cls(Violation(prop, witness, message))

    @property
    def is_valid(self) -> bool:
        return self.violation is None

    def __bool__(self) -> bool:
        return self.is_valid

    def raise_if_invalid(self, what: str = "decomposition") -> None:
        """Raise DecompositionError carrying this report unless valid."""
        if self.violation is not None:
            raise DecompositionError(f"invalid {what}: {self.violation.message}", report=self)

    def to_dict(self) -> dict[str, Any]:
        if self.violation is None:
            return {"valid": True}
        return {"valid": False, **self.violation.to_dict()}

    def __str__(self) -> str:
        if self.violation is None:
            return "valid"
        return f"property {self.violation.property} violated: {self.violation.message}"


# =============================================================================
# Decompositions
# =============================================================================

@dataclass(frozen=True)
class TreeDecomposition:
    """A tree T = (U, H) whose nodes carry bags of host vertices."""
    tree: Graph
    bags: dict[int, frozenset[Vertex]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "bags", {node: frozenset(bag) for node, bag in self.bags.items()}
        )

    def bag_list(self) -> list[frozenset[Vertex]]:
        return [self.bags.get(node, frozenset()) for node in self.tree.sorted_vertices()]


@dataclass(frozen=True)
class PathDecomposition:
    """A sequence of bags V_1..V_k."""
    bags: tuple[frozenset[Vertex], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in self.bags))

    def __len__(self) -> int:
        return len(self.bags)

    def __iter__(self) -> Iterator[frozenset[Vertex]]:
        return iter(self.bags)


@dataclass(frozen=True)
class NicePathDecomposition:
    """Signed-vertex sequence; each vertex is added once and later removed once."""
    steps: tuple[SignedVertex, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[SignedVertex]:
        return iter(self.steps)

    def bags(self) -> PathDecomposition:
        """Running active sets, starting and ending with the empty bag."""
        active: set[Vertex] = set()
        bags = [frozenset()]
        for step in self.steps:
            if step.is_addition:
                active.add(step.vertex)
            else:
                active.discard(step.vertex)
            bags.append(frozenset(active))
        return PathDecomposition(tuple(bags))

    def __str__(self) -> str:
        return "(" + ",".join(str(s) for s in self.steps) + ")"


@dataclass(frozen=True)
class CompositionOrder:
    """Signed vertices interleaved with the edges of a host graph."""
    items: tuple[CompositionItem, ...]
    host: Graph

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[CompositionItem]:
        return iter(self.items)

    def edge_items(self) -> list[Edge]:
        return [item for item in self.items if is_edge_item(item)]

    def nice_path(self) -> NicePathDecomposition:
        """The subsequence of signed vertices."""
        return NicePathDecomposition(
            tuple(item for item in self.items if isinstance(item, SignedVertex))
        )

    def labels(self) -> list[str]:
        return [item_label(item) for item in self.items]

    def tokens(self) -> list[str]:
        return [item_token(item) for item in self.items]

    def __str__(self) -> str:
        return "(" + ",".join(self.labels()) + ")"
