"""Minkowski Angles - angle functions, orthogonality, angle measures and bisectors in normed planes."""

__version__ = "1.0.0"
