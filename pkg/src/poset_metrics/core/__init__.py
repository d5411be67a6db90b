"""Core Module - construction, validation and structure of finite posets"""

from .errors import PosetError
from .poset import Element, Poset, build_poset
from .predicates import (
    PREDICATES,
    StructuralReport,
    find_semimodular_violation,
    has_lower_filtering,
    has_upper_filtering,
    is_connected,
    is_join_semilattice,
    is_jordan_dedekind,
    is_lattice,
    is_semimodular_cover,
    is_semimodular_height,
    is_tree_order,
    structural_report,
)

__all__ = [
    "PosetError",
    "Element",
    "Poset",
    "build_poset",
    "PREDICATES",
    "StructuralReport",
    "find_semimodular_violation",
    "has_lower_filtering",
    "has_upper_filtering",
    "is_connected",
    "is_join_semilattice",
    "is_jordan_dedekind",
    "is_lattice",
    "is_semimodular_cover",
    "is_semimodular_height",
    "is_tree_order",
    "structural_report",
]
