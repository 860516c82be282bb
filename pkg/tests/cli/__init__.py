"""Command-line tests for polydec."""
