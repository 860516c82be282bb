"""
Command-line entry point for polydec.

Subcommands:
- compute: parse a graph, obtain a composition order, sweep a polynomial model
- decompose: print the heuristic composition order and its width
- validate: check a composition order, ordering or bag file against a graph

Results go to stdout; diagnostics and logs go to stderr. Exit codes:
0 ok, 1 unexpected error, 2 parse failure, 3 invalid order or decomposition,
4 verification mismatch, 5 oracle budget exceeded.
"""

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .config import OracleBudget, OutputFormat, RunConfig, get_settings
from .config.settings import LOG_LEVELS
from .errors import (
    DecompositionError,
    GraphError,
    GraphParseError,
    OracleBudgetExceeded,
    PolydecError,
)
from .models.decomposition import CompositionOrder, ValidationReport
from .models.graph import Graph, GraphFormat
from .models.polynomial import PolynomialKind
from .parsers.graph_parser import GraphParser
from .parsers.order_parser import OrderFileKind, OrderParser, serialize_composition_order
from .services.decomposition import (
    build_composition_order,
    composition_width,
    ordering_from_path_decomposition,
    validate_composition_order,
    validate_path_decomposition,
)
from .services.engine import run
from .services.oracle import verify_polynomial
from .services.polynomial_models import get_model
from .utils.logging import bind_run_context, get_logger, setup_logging
from .utils.rendering import dumps, render_compute, render_report

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_MISMATCH = 4
EXIT_BUDGET = 5


def _error(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


# =============================================================================
# Pipeline helpers
# =============================================================================

def _load_order(graph: Graph, order_path: Optional[Path]) -> CompositionOrder:
    """
    Composition order from a file, or from the heuristic when no file is given.

    Raises:
        GraphParseError: malformed order file
        DecompositionError: order does not fit the graph (carries a report)
    """
    if order_path is None:
        return build_composition_order(graph)

    order_file = OrderParser.read(order_path)
    if order_file.kind is OrderFileKind.COMPOSITION:
        order = order_file.composition_order(graph)
        validate_composition_order(graph, order).raise_if_invalid("composition order")
        return order
    if order_file.kind is OrderFileKind.BAGS:
        ordering = ordering_from_path_decomposition(graph, order_file.path_decomposition())
        return build_composition_order(graph, ordering)
    return build_composition_order(graph, order_file.ordering)


def _report_invalid(error: DecompositionError) -> None:
    _error(str(error))
    if error.report is not None:
        print(dumps(error.report.to_dict()), file=sys.stderr)


# =============================================================================
# Commands
# =============================================================================

def cmd_compute(config: RunConfig) -> int:
    """Parse, decompose, sweep, optionally verify, and print the polynomial."""
    try:
        graph = GraphParser.read(config.graph_path, config.format)
        order = _load_order(graph, config.order_path)
    except (OSError, GraphParseError, GraphError) as e:
        _error(str(e))
        return EXIT_PARSE
    except DecompositionError as e:
        _report_invalid(e)
        return EXIT_INVALID

    result = run(get_model(config.polynomial), order, trace=config.trace, order_seed=config.seed)
    achieved = composition_width(order)

    verified = None
    if config.verify:
        try:
            check = verify_polynomial(graph, config.polynomial, result.polynomial, config.budget)
        except OracleBudgetExceeded as e:
            _error(str(e))
            return EXIT_BUDGET
        verified = check.matches
        if not check.matches:
            print(f"computed: {check.computed.to_text()}", file=sys.stderr)
            print(f"oracle:   {check.expected.to_text()}", file=sys.stderr)

    print(render_compute(result, graph, achieved, config.output, verified))
    return EXIT_OK if verified is not False else EXIT_MISMATCH


def cmd_decompose(graph_path: Path, fmt: GraphFormat, output: OutputFormat) -> int:
    """Print the heuristic composition order followed by '# width N'."""
    try:
        graph = GraphParser.read(graph_path, fmt)
    except (OSError, GraphParseError, GraphError) as e:
        _error(str(e))
        return EXIT_PARSE

    order = build_composition_order(graph)
    achieved = composition_width(order)
    if output is OutputFormat.JSON:
        print(dumps({"items": order.tokens(), "length": len(order), "width": achieved}))
    else:
        print(serialize_composition_order(order) + f"# width {achieved}")
    return EXIT_OK


def cmd_validate(
    graph_path: Path,
    order_path: Path,
    fmt: GraphFormat = GraphFormat.EDGE_LIST,
    output: OutputFormat = OutputFormat.TEXT,
) -> int:
    """Print 'valid' or the first violation of a composition order, ordering or bag file."""
    try:
        graph = GraphParser.read(graph_path, fmt)
        order_file = OrderParser.read(order_path)
    except (OSError, GraphParseError, GraphError) as e:
        _error(str(e))
        return EXIT_PARSE

    if order_file.kind is OrderFileKind.COMPOSITION:
        report = validate_composition_order(graph, order_file.composition_order(graph))
    elif order_file.kind is OrderFileKind.BAGS:
        report = validate_path_decomposition(graph, order_file.path_decomposition())
    else:
        try:
            build_composition_order(graph, order_file.ordering)
            report = ValidationReport.ok()
        except DecompositionError as e:
            report = e.report or ValidationReport.fail("ordering", tuple(order_file.ordering), str(e))

    print(render_report(report, output))
    logger.info("validation finished", kind=order_file.kind.value, valid=report.is_valid)
    return EXIT_OK if report.is_valid else EXIT_INVALID


# =============================================================================
# Argument parsing
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polydec",
        description="Graph polynomials by composition-order dynamic programming.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level", default=None, type=str.upper, choices=LOG_LEVELS,
        help="Override POLYDEC_LOG_LEVEL",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_graph_options(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--graph", required=True, type=Path, help="Graph file")
        sub.add_argument(
            "--format",
            default=GraphFormat.EDGE_LIST.value,
            choices=[f.value for f in GraphFormat],
            help="Graph file format (default: edge-list)",
        )
        sub.add_argument(
            "--output",
            default=OutputFormat.TEXT.value,
            choices=[o.value for o in OutputFormat],
            help="Output rendering (default: text)",
        )

    compute = subparsers.add_parser("compute", help="Compute a graph polynomial")
    add_graph_options(compute)
    compute.add_argument(
        "--poly",
        default=PolynomialKind.INDEPENDENCE.value,
        choices=[k.value for k in PolynomialKind],
        help="Polynomial to compute (default: independence)",
    )
    compute.add_argument("--order", type=Path, default=None,
                         help="Ordering, composition-order or bag file")
    compute.add_argument("--trace", action="store_true", help="Print the per-step state table")
    compute.add_argument("--verify", action="store_true",
                         help="Cross-check against the brute-force oracle")
    compute.add_argument("--seed", type=int, default=None,
                         help="State-iteration seed (default: POLYDEC_SEED or 0)")
    compute.add_argument("--max-verify-vertices", type=int, default=None,
                         help="Oracle vertex budget (default: POLYDEC_MAX_VERIFY_VERTICES or 12)")

    decompose = subparsers.add_parser("decompose", help="Print a heuristic composition order")
    add_graph_options(decompose)

    validate = subparsers.add_parser("validate", help="Validate an order or bag file")
    add_graph_options(validate)
    validate.add_argument("--order", type=Path, required=True,
                          help="Ordering, composition-order or bag file")

    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    settings = get_settings()
    budget = OracleBudget(
        max_vertices=(args.max_verify_vertices if args.max_verify_vertices is not None
                      else settings.max_verify_vertices),
        max_boundary=settings.max_verify_boundary,
    )
    return RunConfig(
        graph_path=args.graph,
        format=GraphFormat(args.format),
        polynomial=PolynomialKind(args.poly),
        order_path=args.order,
        trace=args.trace,
        verify=args.verify,
        output=OutputFormat(args.output),
        seed=args.seed if args.seed is not None else settings.seed,
        budget=budget,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, configure logging, dispatch, and return the exit status."""
    args = build_parser().parse_args(argv)
    settings = get_settings()
    setup_logging(args.log_level or settings.log_level, json_output=settings.log_json)
    bind_run_context(command=args.command)

    try:
        if args.command == "compute":
            return cmd_compute(_run_config(args))
        if args.command == "decompose":
            return cmd_decompose(args.graph, GraphFormat(args.format), OutputFormat(args.output))
        return cmd_validate(
            args.graph, args.order, GraphFormat(args.format), OutputFormat(args.output)
        )
    except PolydecError as e:
        _error(str(e))
        return EXIT_UNEXPECTED
    except Exception:
        logger.exception("unexpected error")
        return EXIT_UNEXPECTED


if __name__ == "__main__":
    sys.exit(main())
