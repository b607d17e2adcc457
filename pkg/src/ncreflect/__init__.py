"""Exact invariant theory for graded algebras under Hopf actions."""

__version__ = "0.1.0"
