"""Exact tropical curves on toric surfaces, the dimension-bound certificate,
and curves on weighted projective planes in positive characteristic."""

__version__ = "0.1.0"
