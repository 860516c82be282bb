"""
Per-invocation configuration models for polydec.

RunConfig captures one CLI run; OracleBudget bounds the brute-force oracles.
Both are pydantic models so bad values fail at construction.
"""

from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field

from ..models.graph import GraphFormat
from ..models.polynomial import PolynomialKind
from .settings import get_settings


class OutputFormat(str, Enum):
    """Result rendering modes."""
    TEXT = "text"
    JSON = "json"
    LATEX = "latex"


class OracleBudget(BaseModel):
    """Limits the exponential oracles refuse to exceed."""
    max_vertices: int = Field(default=12, ge=0, description="Largest graph order enumerated")
    max_boundary: int = Field(
        default=20, ge=0, description="Largest edge boundary enumerated by the bipartition oracle"
    )

    @classmethod
    def from_settings(cls) -> "OracleBudget":
        settings = get_settings()
        return cls(
            max_vertices=settings.max_verify_vertices,
            max_boundary=settings.max_verify_boundary,
        )


class RunConfig(BaseModel):
    """Everything one `compute` invocation needs."""
    graph_path: Path = Field(description="Graph file to read")
    format: GraphFormat = Field(default=GraphFormat.EDGE_LIST, description="Graph file format")
    polynomial: PolynomialKind = Field(
        default=PolynomialKind.INDEPENDENCE, description="Polynomial family to compute"
    )
    order_path: Optional[Path] = Field(
        default=None, description="Ordering, composition-order or bag file"
    )
    trace: bool = Field(default=False, description="Emit the per-step state table")
    verify: bool = Field(default=False, description="Cross-check against the brute-force oracle")
    output: OutputFormat = Field(default=OutputFormat.TEXT, description="Rendering mode")
    seed: int = Field(default_factory=lambda: get_settings().seed, description="Iteration seed")
    budget: OracleBudget = Field(default_factory=OracleBudget.from_settings)
