"""
Order file parser for polydec.

An order file holds one of three things, told apart by content:
- a vertex ordering: one bare id per line
- a composition order: one item per line, "+<id>", "-<id>" or "<id>-<id>"
- a bag list: one "bag <id> <id> ..." line per path-decomposition bag

Files are parsed without reference to a graph; validation against the graph
happens in the decomposition service.
"""

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Union

from ..errors import GraphParseError
from ..models.decomposition import (
    CompositionItem,
    CompositionOrder,
    PathDecomposition,
    SignedVertex,
    item_token,
)
from ..models.graph import Graph, Vertex
from .graph_parser import read_input_text
from .patterns import (
    COMMENT_PREFIX,
    PATTERN_BAG_LINE,
    PATTERN_ORDER_ADD,
    PATTERN_ORDER_EDGE,
    PATTERN_ORDER_EDGE_BRACES,
    PATTERN_ORDER_REMOVE,
    PATTERN_ORDER_VERTEX,
)


class OrderFileKind(str, Enum):
    """What an order file contains."""
    ORDERING = "ordering"
    COMPOSITION = "composition"
    BAGS = "bags"


@dataclass
class OrderFile:
    """Parsed order file; only the field matching `kind` is filled."""
    kind: OrderFileKind
    ordering: list[Vertex] = field(default_factory=list)
    items: list[CompositionItem] = field(default_factory=list)
    bags: list[frozenset[Vertex]] = field(default_factory=list)

    def composition_order(self, host: Graph) -> CompositionOrder:
        """Attach the parsed items to a host graph (not yet validated)."""
        return CompositionOrder(tuple(self.items), host)

    def path_decomposition(self) -> PathDecomposition:
        return PathDecomposition(tuple(self.bags))


class OrderParser:
    """Parser for ordering, composition-order and bag files."""

    @classmethod
    def parse(cls, text: str) -> OrderFile:
        """
        Parse an order file, detecting its kind from the tokens it contains.

        Raises:
            GraphParseError: on a malformed line or a file mixing kinds
        """
        lines = [
            (number, raw.strip())
            for number, raw in enumerate(text.splitlines(), start=1)
            if raw.strip() and not raw.strip().startswith(COMMENT_PREFIX)
        ]

        kind = cls._detect_kind(lines)
        result = OrderFile(kind=kind)

        for line_number, line in lines:
            if kind is OrderFileKind.BAGS:
                result.bags.append(cls._parse_bag(line, line_number))
            elif kind is OrderFileKind.COMPOSITION:
                result.items.append(cls._parse_item(line, line_number))
            else:
                match = PATTERN_ORDER_VERTEX.match(line)
                if not match:
                    raise GraphParseError(f"expected a vertex id, got {line!r}", line_number)
                result.ordering.append(int(match.group(1)))

        return result

    @classmethod
    def read(cls, path: Union[str, Path]) -> OrderFile:
        """Read and parse an order file."""
        return cls.parse(read_input_text(path))

    @classmethod
    def _detect_kind(cls, lines: list[tuple[int, str]]) -> OrderFileKind:
        if any(line.startswith("bag") for _, line in lines):
            return OrderFileKind.BAGS
        if any(not PATTERN_ORDER_VERTEX.match(line) for _, line in lines):
            return OrderFileKind.COMPOSITION
        return OrderFileKind.ORDERING

    @staticmethod
    def _parse_bag(line: str, line_number: int) -> frozenset[Vertex]:
        match = PATTERN_BAG_LINE.match(line)
        if not match:
            raise GraphParseError(f"expected 'bag <id> ...', got {line!r}", line_number)
        return frozenset(int(token) for token in match.group(1).split())

    @staticmethod
    def _parse_item(line: str, line_number: int) -> CompositionItem:
        if match := PATTERN_ORDER_ADD.match(line):
            return SignedVertex.add(int(match.group(1)))
        if match := PATTERN_ORDER_REMOVE.match(line):
            return SignedVertex.remove(int(match.group(1)))
        match = PATTERN_ORDER_EDGE.match(line) or PATTERN_ORDER_EDGE_BRACES.match(line)
        if not match:
            raise GraphParseError(
                f"expected '+<id>', '-<id>' or '<id>-<id>', got {line!r}", line_number
            )
        u, v = int(match.group(1)), int(match.group(2))
        if u == v:
            raise GraphParseError(f"self-loop on vertex {u}", line_number)
        return (u, v) if u < v else (v, u)


def serialize_composition_order(order: CompositionOrder) -> str:
    """Render a composition order in the order-file format."""
    return "".join(f"{item_token(item)}\n" for item in order.items)


def serialize_bags(bags: PathDecomposition) -> str:
    """Render a path decomposition as 'bag ...' lines."""
    return "".join(
        ("bag " + " ".join(str(v) for v in sorted(bag))).rstrip() + "\n" for bag in bags
    )
