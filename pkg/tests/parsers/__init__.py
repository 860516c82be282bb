"""Parser tests for polydec."""
