"""
Result rendering for polydec's command line.

Text, LaTeX and JSON (orjson) renderings of computed polynomials, sweep
traces and validation reports.
"""

from typing import Any, Optional

import orjson

from ..config.run_config import OutputFormat
from ..models.decomposition import ValidationReport
from ..models.graph import Graph
from ..models.polynomial import Polynomial
from ..services.engine import PolynomialModel, SweepResult, Trace


def dumps(document: Any) -> str:
    """Serialize to indented JSON text."""
    return orjson.dumps(document, option=orjson.OPT_INDENT_2).decode("utf-8")


def render_polynomial(polynomial: Polynomial, output: OutputFormat) -> str:
    """Render a bare polynomial."""
    if output is OutputFormat.LATEX:
        return polynomial.to_latex()
    if output is OutputFormat.JSON:
        return dumps(polynomial.to_json_data())
    return polynomial.to_text()


def trace_to_json_data(trace: Trace, model: PolynomialModel) -> list[dict[str, Any]]:
    return [step.to_dict(model) for step in trace]


def render_trace_text(trace: Trace, model: PolynomialModel, latex: bool = False) -> str:
    """
    One line per step: the label, then each state as '(index, value)'.

    Example:
        +2 | ({}, 1) ({1}, x) ({2}, x)
    """
    width = max((len(step.label) for step in trace), default=0)
    lines = []
    for step in trace:
        states = " ".join(
            f"({model.encode_index(s.index)}, "
            f"{s.value.to_latex() if latex else s.value.to_text()})"
            for s in step.states
        )
        lines.append(f"{step.label.ljust(width)} | {states}")
    return "\n".join(lines)


def compute_document(
    result: SweepResult,
    graph: Graph,
    width: int,
    verified: Optional[bool] = None,
) -> dict[str, Any]:
    """JSON document for a compute run."""
    document: dict[str, Any] = {
        "polynomial": result.model.name,
        "graph": {"order": graph.order, "size": graph.size},
        "width": width,
        "peak_states": result.peak_states,
        "value": result.polynomial.to_json_data(),
        "text": result.polynomial.to_text(),
    }
    if result.trace is not None:
        document["trace"] = trace_to_json_data(result.trace, result.model)
    if verified is not None:
        document["verified"] = verified
    return document


def render_compute(
    result: SweepResult,
    graph: Graph,
    width: int,
    output: OutputFormat,
    verified: Optional[bool] = None,
) -> str:
    """Render a compute run: trace table first (when recorded), polynomial last."""
    if output is OutputFormat.JSON:
        return dumps(compute_document(result, graph, width, verified))

    latex = output is OutputFormat.LATEX
    parts = []
    if result.trace is not None:
        parts.append(render_trace_text(result.trace, result.model, latex=latex))
    parts.append(render_polynomial(result.polynomial, output))
    return "\n".join(parts)


def render_report(report: ValidationReport, output: OutputFormat) -> str:
    """'valid', the violation text, or the report as JSON."""
    if output is OutputFormat.JSON:
        return dumps(report.to_dict())
    return str(report)
