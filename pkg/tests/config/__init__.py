"""Configuration tests for polydec."""
