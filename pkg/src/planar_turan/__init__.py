"""Triangular-block charges, lemma checks and small planar Turan numbers."""

from .plane_graph import PlaneGraph, build, format_rot, parse_rot, read_rot

__all__ = ["PlaneGraph", "build", "format_rot", "parse_rot", "read_rot"]
__version__ = "0.1.0"
