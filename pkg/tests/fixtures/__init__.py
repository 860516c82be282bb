"""Static fixtures and golden data for the polydec tests."""
