"""Hurwitz orbits of reflection factorizations in Coxeter groups."""
__version__ = "1.0.0"
