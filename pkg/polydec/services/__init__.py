"""Services for polydec: decomposition, sweep engine, models, oracles, generators."""

from .decomposition import (
    build_composition_order,
    compose_order,
    composition_width,
    heuristic_ordering,
    nice_path_from_ordering,
    validate_composition_order,
    validate_path_decomposition,
    validate_tree_decomposition,
    width,
)
from .engine import PolynomialModel, State, StateSet, SweepResult, merge, peak_state_count, run
from .polynomial_models import compute_polynomial, get_model
from .oracle import oracle_polynomial, verify_polynomial
from .generators import generate_k_tree, random_partial_k_tree

__all__ = [
    "build_composition_order",
    "compose_order",
    "composition_width",
    "heuristic_ordering",
    "nice_path_from_ordering",
    "validate_composition_order",
    "validate_path_decomposition",
    "validate_tree_decomposition",
    "width",
    "PolynomialModel",
    "State",
    "StateSet",
    "SweepResult",
    "merge",
    "peak_state_count",
    "run",
    "compute_polynomial",
    "get_model",
    "oracle_polynomial",
    "verify_polynomial",
    "generate_k_tree",
    "random_partial_k_tree",
]
