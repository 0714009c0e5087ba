"""Exact enumeration and growth-rate bounds for rooted planar Eulerian orientations."""

__version__ = "0.1.0"
