"""Data models for polydec."""

from .graph import Edge, Graph, GraphFormat, Vertex, canonical_edge, edge_label
from .polynomial import Monomial, Polynomial, PolynomialKind
from .decomposition import (
    CompositionItem,
    CompositionOrder,
    NicePathDecomposition,
    PathDecomposition,
    SignedVertex,
    TreeDecomposition,
    ValidationReport,
    Violation,
)

__all__ = [
    "Edge",
    "Graph",
    "GraphFormat",
    "Vertex",
    "canonical_edge",
    "edge_label",
    "Monomial",
    "Polynomial",
    "PolynomialKind",
    "CompositionItem",
    "CompositionOrder",
    "NicePathDecomposition",
    "PathDecomposition",
    "SignedVertex",
    "TreeDecomposition",
    "ValidationReport",
    "Violation",
]
