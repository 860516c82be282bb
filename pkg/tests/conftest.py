"""
Shared fixtures for the polydec tests.
"""

from pathlib import Path

import pytest

from polydec.config import OracleBudget, get_settings, reload_settings
from polydec.models.graph import Graph
from polydec.services import reference_graphs as ref
from polydec.utils.logging import setup_logging

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True, scope="session")
def quiet_logging():
    """Route structlog output to stderr at WARNING for the whole session."""
    setup_logging("WARNING")


@pytest.fixture
def fresh_settings(monkeypatch):
    """Clear POLYDEC_* variables and the settings cache around a test."""
    for name in ("POLYDEC_SEED", "POLYDEC_LOG_LEVEL", "POLYDEC_LOG_JSON",
                 "POLYDEC_MAX_VERIFY_VERTICES", "POLYDEC_MAX_VERIFY_BOUNDARY"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(FIXTURES)
    reload_settings()
    yield
    get_settings.cache_clear()


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def bridged_triangles() -> Graph:
    return ref.bridged_triangles_graph()


@pytest.fixture
def triangle() -> Graph:
    return ref.triangle_graph()


@pytest.fixture
def spider() -> Graph:
    return ref.spider_graph()


@pytest.fixture
def budget() -> OracleBudget:
    return OracleBudget(max_vertices=12, max_boundary=20)
