"""
Structural predicates on finite posets
Each predicate is decided by an exhaustive scan of the closure, cover,
height and join tables of the poset
"""
import logging
from typing import Callable, Optional

import networkx as nx
import numpy as np
from pydantic import BaseModel

from .errors import NotAJoinSemilatticeError
from .poset import Poset

logger = logging.getLogger(__name__)


def _counts(matrix: np.ndarray) -> np.ndarray:
    return matrix.astype(np.int64)


def is_connected(poset: Poset) -> bool:
    """The Hasse diagram is connected"""
    return bool(nx.is_connected(poset.hasse_diagram))


def has_upper_filtering(poset: Poset) -> bool:
    """Any two elements have a common upper bound"""
    leq = _counts(poset.leq_matrix)
    return bool(((leq @ leq.T) > 0).all())


def has_lower_filtering(poset: Poset) -> bool:
    """Any two elements have a common lower bound"""
    leq = _counts(poset.leq_matrix)
    return bool(((leq.T @ leq) > 0).all())


def is_join_semilattice(poset: Poset) -> bool:
    """Every pair has a least common upper bound"""
    return bool((poset.join_matrix >= 0).all())


def is_lattice(poset: Poset) -> bool:
    return is_join_semilattice(poset) and is_join_semilattice(poset.dual())


def is_tree_order(poset: Poset) -> bool:
    """
    Incomparable pairs always have a join and never a common lower bound

    Finiteness of intervals is automatic for finite posets.
    """
    leq = poset.leq_matrix
    incomparable = ~(leq | leq.T)
    if not incomparable.any():
        return True
    counts = _counts(leq)
    common_lower = (counts.T @ counts) > 0
    has_join = poset.join_matrix >= 0
    return bool(has_join[incomparable].all() and not common_lower[incomparable].any())


def _require_join_semilattice(poset: Poset) -> None:
    if not is_join_semilattice(poset):
        raise NotAJoinSemilatticeError("semimodularity is defined on join semilattices only")


def find_semimodular_violation(poset: Poset) -> Optional[tuple[str, str, str]]:
    """
    First (z, x, y) where z is covered by x and y but x v y fails to cover both

    Returns None when the join semilattice is semimodular.
    """
    _require_join_semilattice(poset)
    cover = poset.cover_matrix
    joins = poset.join_matrix
    for z in range(len(poset)):
        uppers = np.flatnonzero(cover[z])
        for a, x in enumerate(uppers):
            for y in uppers[a + 1:]:
                j = joins[x, y]
                if not (cover[x, j] and cover[y, j]):
                    names = poset.names
                    return names[z], names[x], names[y]
    return None


def is_semimodular_cover(poset: Poset) -> bool:
    """Whenever z is covered by both x and y, x v y covers both x and y"""
    return find_semimodular_violation(poset) is None


def is_semimodular_height(poset: Poset, same_side: bool = False) -> bool:
    """
    Height form of semimodularity: h(x, x v y) <= h(z, y) for every common lower bound z

    Args:
        poset: A join semilattice
        same_side: Compare against h(z, x) instead of h(z, y). Both readings
            quantify over every ordered pair.
    """
    _require_join_semilattice(poset)
    leq = poset.leq_matrix
    heights = poset.height_matrix
    joins = poset.join_matrix
    n = len(poset)
    for x in range(n):
        for y in range(n):
            lower = np.flatnonzero(leq[:, x] & leq[:, y])
            if lower.size == 0:
                continue
            if heights[x, joins[x, y]] > heights[lower, x if same_side else y].min():
                return False
    return True


def is_jordan_dedekind(poset: Poset) -> bool:
    """In every interval all maximal chains have the same number of elements"""
    return bool(np.array_equal(poset.height_matrix, poset.max_height_matrix))


def _semimodular_flag(poset: Poset) -> bool:
    return is_join_semilattice(poset) and is_semimodular_cover(poset)


# StructuralReport field name -> predicate
PREDICATES: dict[str, Callable[[Poset], bool]] = {
    "connected": is_connected,
    "upper_filtering": has_upper_filtering,
    "lower_filtering": has_lower_filtering,
    "join_semilattice": is_join_semilattice,
    "lattice": is_lattice,
    "tree_order": is_tree_order,
    "semimodular": _semimodular_flag,
    "jordan_dedekind": is_jordan_dedekind,
}


class StructuralReport(BaseModel):
    """Predicate vector for one poset"""
    connected: bool
    upper_filtering: bool
    lower_filtering: bool
    join_semilattice: bool
    lattice: bool
    tree_order: bool
    semimodular: bool
    jordan_dedekind: bool
    element_count: int
    cover_edge_count: int


def structural_report(poset: Poset) -> StructuralReport:
    """Evaluate every structural predicate on the poset"""
    flags = {field: predicate(poset) for field, predicate in PREDICATES.items()}
    logger.debug(f"Structural report for {poset!r}: {flags}")
    return StructuralReport(
        **flags,
        element_count=len(poset),
        cover_edge_count=poset.cover_edge_count,
    )
