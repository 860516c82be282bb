"""Configuration management for polydec."""

from .settings import Settings, get_settings, reload_settings
from .run_config import OracleBudget, OutputFormat, RunConfig

__all__ = [
    "Settings",
    "get_settings",
    "reload_settings",
    "OracleBudget",
    "OutputFormat",
    "RunConfig",
]
