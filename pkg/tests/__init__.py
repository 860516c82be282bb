"""Tests for polydec."""
