"""Exact tools for rational nilpotent Lie algebras and their Anosov automorphisms."""

__version__ = "0.1.0"
