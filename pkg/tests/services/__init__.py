"""Service tests for polydec."""
