"""
Tests for the structlog configuration.
"""

import orjson
import pytest
import structlog

from polydec.models.polynomial import Polynomial
from polydec.utils.logging import (
    bind_run_context,
    get_logger,
    render_polynomials,
    setup_logging,
)


@pytest.fixture
def json_logging(capsys):
    """Switch to JSON logs at INFO on the captured stderr, then restore the session default."""
    setup_logging("INFO", json_output=True)
    yield
    structlog.contextvars.clear_contextvars()
    setup_logging("WARNING")


def last_event(capsys) -> dict:
    lines = capsys.readouterr().err.strip().splitlines()
    return orjson.loads(lines[-1])


class TestRenderPolynomials:
    """Tests for the polynomial-rendering processor."""

    def test_polynomials_become_text(self):
        """Test that Polynomial values are rendered and others left alone."""
        event = {"event": "done", "value": Polynomial.from_coefficients([1, 6, 8]), "steps": 19}

        result = render_polynomials(None, "info", event)

        assert result == {"event": "done", "value": "1 + 6*x + 8*x^2", "steps": 19}


class TestJsonLogging:
    """Tests for JSON log lines on stderr."""

    def test_event_fields(self, json_logging, capsys):
        """Test level, logger name, and rendered polynomial in one line."""
        get_logger("polydec.test").info("sweep finished", value=Polynomial.constant(3))
        event = last_event(capsys)

        assert event["event"] == "sweep finished"
        assert event["level"] == "info"
        assert event["logger"] == "polydec.test"
        assert event["value"] == "3"
        assert "timestamp" in event

    def test_run_context(self, json_logging, capsys):
        """Test that bound context appears on later events and rebinding replaces it."""
        bind_run_context(command="compute")
        get_logger("polydec.test").info("first")
        assert last_event(capsys)["command"] == "compute"

        bind_run_context(command="validate")
        get_logger("polydec.test").info("second")
        assert last_event(capsys)["command"] == "validate"

    def test_level_filter(self, json_logging, capsys):
        """Test that DEBUG events are dropped at INFO."""
        get_logger("polydec.test").debug("sweep step")

        assert capsys.readouterr().err == ""

    def test_stdout_untouched(self, json_logging, capsys):
        """Test that log output never reaches stdout."""
        get_logger("polydec.test").warning("oracle budget exceeded")

        assert capsys.readouterr().out == ""
