"""Poset Metrics - distances and metrics on finite partially ordered sets"""

__version__ = "1.0.0"

from .core import Poset, PosetError, build_poset, structural_report
from .metrics import DistanceKind, distance, distance_matrix, triangle_violations

__all__ = [
    "Poset",
    "PosetError",
    "build_poset",
    "structural_report",
    "DistanceKind",
    "distance",
    "distance_matrix",
    "triangle_violations",
]
