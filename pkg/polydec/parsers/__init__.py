"""Parsers for graph, order and polynomial text formats."""

from .graph_parser import GraphParser, parse_graph, serialize_graph
from .order_parser import (
    OrderFile,
    OrderFileKind,
    OrderParser,
    serialize_bags,
    serialize_composition_order,
)
from .polynomial_parser import PolynomialParser

__all__ = [
    "GraphParser",
    "parse_graph",
    "serialize_graph",
    "OrderFile",
    "OrderFileKind",
    "OrderParser",
    "serialize_bags",
    "serialize_composition_order",
    "PolynomialParser",
]
