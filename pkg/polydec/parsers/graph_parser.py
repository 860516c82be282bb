"""
Graph file parser and serializer for polydec.

Two formats are supported:
- edge-list: one "u v" pair per line, "#" comments, optional "n <count>"
  header declaring vertices 0..count-1
- DIMACS: "c" comments, one "p edge <n> <m>" line, "e <u> <v>" edge lines
  with 1-based ids

Duplicate edges collapse to one edge. Self-loops and malformed lines raise
GraphParseError carrying the offending line number.
"""

from pathlib import Path
from typing import Union

from ..errors import GraphError, GraphParseError
from ..models.graph import Edge, Graph, GraphFormat
from ..utils.logging import get_logger
from .patterns import (
    COMMENT_PREFIX,
    PATTERN_DIMACS_EDGE,
    PATTERN_DIMACS_PROBLEM,
    PATTERN_EDGE_LIST_EDGE,
    PATTERN_EDGE_LIST_HEADER,
)

logger = get_logger(__name__)


def read_input_text(path: Union[str, Path]) -> str:
    """
    Read a UTF-8 input file.

    Raises:
        OSError: the file cannot be opened
        GraphParseError: the bytes are not UTF-8
    """
    try:
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise GraphParseError(f"{path}: not UTF-8 text (byte {e.start})") from e


class GraphParser:
    """Reads and writes graphs in edge-list and DIMACS form."""

    @classmethod
    def parse(cls, text: str, fmt: Union[GraphFormat, str] = GraphFormat.EDGE_LIST) -> Graph:
        """
        Parse graph text in the given format.

        Args:
            text: File contents
            fmt: GraphFormat or its string value

        Returns:
            Graph with exactly the listed vertices and edges

        Raises:
            GraphParseError: on a malformed line, a self-loop, or (DIMACS) an
                edge that references an undeclared vertex
        """
        fmt = GraphFormat(fmt)
        if fmt is GraphFormat.DIMACS:
            graph = cls._parse_dimacs(text)
        else:
            graph = cls._parse_edge_list(text)
        logger.info("graph parsed", format=fmt.value, order=graph.order, size=graph.size)
        return graph

    @classmethod
    def read(cls, path: Union[str, Path], fmt: Union[GraphFormat, str] = GraphFormat.EDGE_LIST) -> Graph:
        """Read and parse a graph file."""
        return cls.parse(read_input_text(path), fmt)

    # =========================================================================
    # Edge-list
    # =========================================================================

    @classmethod
    def _parse_edge_list(cls, text: str) -> Graph:
        vertices: set[int] = set()
        edges: list[Edge] = []
        header_seen = False

        for line_number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith(COMMENT_PREFIX):
                continue

            header = PATTERN_EDGE_LIST_HEADER.match(line)
            if header:
                if header_seen:
                    raise GraphParseError("duplicate 'n <count>' header", line_number)
                header_seen = True
                vertices.update(range(int(header.group(1))))
                continue

            match = PATTERN_EDGE_LIST_EDGE.match(line)
            if not match:
                raise GraphParseError(f"expected 'u v', got {line!r}", line_number)
            edges.append(cls._edge(int(match.group(1)), int(match.group(2)), line_number))

        return Graph.from_edges(edges, vertices=vertices)

    # =========================================================================
    # DIMACS
    # =========================================================================

    @classmethod
    def _parse_dimacs(cls, text: str) -> Graph:
        declared_order = None
        declared_size = 0
        edges: list[Edge] = []
        edge_lines = 0

        for line_number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line == "c" or line.startswith("c "):
                continue

            problem = PATTERN_DIMACS_PROBLEM.match(line)
            if problem:
                if declared_order is not None:
                    raise GraphParseError("duplicate problem line", line_number)
                declared_order = int(problem.group(1))
                declared_size = int(problem.group(2))
                continue

            match = PATTERN_DIMACS_EDGE.match(line)
            if not match:
                raise GraphParseError(f"expected 'e <u> <v>', got {line!r}", line_number)
            if declared_order is None:
                raise GraphParseError("edge line before the 'p edge' problem line", line_number)

            u, v = int(match.group(1)), int(match.group(2))
            for endpoint in (u, v):
                if not 1 <= endpoint <= declared_order:
                    raise GraphParseError(
                        f"vertex {endpoint} is not declared (ids run 1..{declared_order})",
                        line_number,
                    )
            edges.append(cls._edge(u, v, line_number))
            edge_lines += 1

        if declared_order is None:
            return Graph()

        if edge_lines != declared_size:
            logger.warning(
                "dimacs edge count differs from problem line",
                declared=declared_size,
                found=edge_lines,
            )
        return Graph.from_edges(edges, vertices=range(1, declared_order + 1))

    @staticmethod
    def _edge(u: int, v: int, line_number: int) -> Edge:
        if u == v:
            raise GraphParseError(f"self-loop on vertex {u}", line_number)
        return (u, v) if u < v else (v, u)

    # =========================================================================
    # Serialization
    # =========================================================================

    @classmethod
    def serialize(cls, graph: Graph, fmt: Union[GraphFormat, str] = GraphFormat.EDGE_LIST) -> str:
        """
        Render a graph so that parse(serialize(g, f), f) == g.

        Raises:
            GraphError: if the vertex set cannot be expressed in the format
        """
        fmt = GraphFormat(fmt)
        if fmt is GraphFormat.DIMACS:
            return cls._serialize_dimacs(graph)
        return cls._serialize_edge_list(graph)

    @classmethod
    def _serialize_edge_list(cls, graph: Graph) -> str:
        lines = []
        isolated = [v for v in graph.sorted_vertices() if graph.degree(v) == 0]
        if isolated:
            count = isolated[-1] + 1
            missing = [v for v in range(count) if v not in graph.vertices]
            if missing:
                raise GraphError(
                    f"isolated vertex {isolated[-1]} needs an 'n {count}' header, "
                    f"but vertices {missing[:5]} are absent"
                )
            lines.append(f"n {count}")
        lines.extend(f"{u} {v}" for u, v in graph.sorted_edges())
        return "".join(f"{line}\n" for line in lines)

    @classmethod
    def _serialize_dimacs(cls, graph: Graph) -> str:
        if graph.vertices != frozenset(range(1, graph.order + 1)):
            raise GraphError("DIMACS output requires vertex ids 1..n")
        lines = [f"p edge {graph.order} {graph.size}"]
        lines.extend(f"e {u} {v}" for u, v in graph.sorted_edges())
        return "".join(f"{line}\n" for line in lines)


def parse_graph(text: str, fmt: Union[GraphFormat, str] = GraphFormat.EDGE_LIST) -> Graph:
    """Module-level shortcut for GraphParser.parse()."""
    return GraphParser.parse(text, fmt)


def serialize_graph(graph: Graph, fmt: Union[GraphFormat, str] = GraphFormat.EDGE_LIST) -> str:
    """Module-level shortcut for GraphParser.serialize()."""
    return GraphParser.serialize(graph, fmt)
