"""Exact mapping-torus invariants: twisted monodromy Jordan data,
Laurent-module torsion, and Massey product lengths, cross-verified."""

__version__ = "0.1.0"
