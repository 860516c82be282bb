"""
Compiled regex patterns for polydec's text formats.

Graph files (edge-list and DIMACS), order files (orderings, composition
orders, bag lists) and the polynomial text rendering.
"""

import re
from typing import Pattern


# =============================================================================
# EDGE-LIST PATTERNS
# =============================================================================

# One edge per line: "u v"
# Example: 4 6
PATTERN_EDGE_LIST_EDGE: Pattern[str] = re.compile(r"^(\d+)\s+(\d+)$")

# Optional header declaring vertices 0..count-1
# Example: n 10
PATTERN_EDGE_LIST_HEADER: Pattern[str] = re.compile(r"^n\s+(\d+)$")


# =============================================================================
# DIMACS PATTERNS
# =============================================================================

# Problem line: "p edge <n> <m>" ("p col" is accepted as a synonym)
PATTERN_DIMACS_PROBLEM: Pattern[str] = re.compile(r"^p\s+(?:edge|col)\s+(\d+)\s+(\d+)$")

# Edge line with 1-based ids: "e <u> <v>"
PATTERN_DIMACS_EDGE: Pattern[str] = re.compile(r"^e\s+(\d+)\s+(\d+)$")


# =============================================================================
# ORDER FILE PATTERNS
# =============================================================================

# Signed vertices: "+3" adds vertex 3, "-3" removes it
PATTERN_ORDER_ADD: Pattern[str] = re.compile(r"^\+(\d+)$")
PATTERN_ORDER_REMOVE: Pattern[str] = re.compile(r"^-(\d+)$")

# Edge items: "1-3", or the trace label "{1,3}"
PATTERN_ORDER_EDGE: Pattern[str] = re.compile(r"^(\d+)-(\d+)$")
PATTERN_ORDER_EDGE_BRACES: Pattern[str] = re.compile(r"^\{\s*(\d+)\s*,\s*(\d+)\s*\}$")

# Bare vertex id (ordering files)
PATTERN_ORDER_VERTEX: Pattern[str] = re.compile(r"^(\d+)$")

# Bag line: "bag 1 3 7" ("bag" alone is the empty bag)
PATTERN_BAG_LINE: Pattern[str] = re.compile(r"^bag((?:\s+\d+)*)$")


# =============================================================================
# POLYNOMIAL PATTERNS
# =============================================================================

# Signed term inside a whitespace-free rendering, e.g. "+6*x", "-x^2*y"
PATTERN_POLY_TERM: Pattern[str] = re.compile(r"([+-]?)([^+-]+)")

# One factor of a term: an integer or a variable with optional power
PATTERN_POLY_FACTOR: Pattern[str] = re.compile(r"^(?:(\d+)|([xyz])(?:\^(\d+))?)$")


# Comment prefix shared by edge-list and order files
COMMENT_PREFIX = "#"
