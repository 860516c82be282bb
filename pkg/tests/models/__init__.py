"""Model tests for polydec."""
