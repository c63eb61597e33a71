"""Matroids, broken circuit complexes and flawlessness of their h-vectors."""

__version__ = "0.1.0"
