"""Exact-arithmetic models of square dissections and their polynomial invariants."""

__version__ = "0.1.0"
