"""Metrics Module - distance functions, metric checks and kinship degrees"""

from .chains import (
    ChainCompatibility,
    chain_compatibility,
    is_chain_compatible,
    longest_chain,
    maximal_chains,
    shortest_chain,
)
from .distances import (
    UNDEFINED,
    DistanceKind,
    chebyshev_distance,
    distance,
    distance_matrix,
    down_up_distance,
    up_down_distance,
    zigzag_distance,
)
from .kinship import KinshipMethod, KinshipResult, kinship, kinship_degree
from .metric_checks import (
    DistanceComparison,
    DistancePair,
    TriangleViolation,
    compare_distances,
    is_metric,
    triangle_violations,
)

__all__ = [
    "ChainCompatibility",
    "chain_compatibility",
    "is_chain_compatible",
    "longest_chain",
    "maximal_chains",
    "shortest_chain",
    "UNDEFINED",
    "DistanceKind",
    "chebyshev_distance",
    "distance",
    "distance_matrix",
    "down_up_distance",
    "up_down_distance",
    "zigzag_distance",
    "KinshipMethod",
    "KinshipResult",
    "kinship",
    "kinship_degree",
    "DistanceComparison",
    "DistancePair",
    "TriangleViolation",
    "compare_distances",
    "is_metric",
    "triangle_violations",
]
