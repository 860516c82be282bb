"""
polydec - graph polynomials over composition orders.

Computes the independence, chromatic, domination and bipartition polynomials
of simple undirected graphs by sweeping a composition order derived from a
nice path decomposition, with brute-force oracles for verification.
"""

__version__ = "1.0.0"
