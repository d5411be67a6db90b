"""
Metric-axiom scans and pointwise comparison of the distance functions
"""
import logging
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..core.errors import DistanceUndefinedError
from ..core.poset import Poset
from .distances import UNDEFINED, DistanceKind, distance_matrix

logger = logging.getLogger(__name__)


class TriangleViolation(BaseModel):
    """An ordered triple with d(x, z) > d(x, y) + d(y, z)"""
    model_config = ConfigDict(frozen=True)

    x: str
    y: str
    z: str
    lhs: int
    rhs: int


def _require_total(poset: Poset, kind: DistanceKind, table: np.ndarray) -> None:
    undefined = np.argwhere(table == UNDEFINED)
    if undefined.size:
        i, j = undefined[0]
        raise DistanceUndefinedError(kind.value, poset.names[i], poset.names[j])


def triangle_violations(poset: Poset, kind: DistanceKind) -> list[TriangleViolation]:
    """
    All ordered triples violating the triangle inequality

    Args:
        poset: The poset
        kind: Distance to scan; it must be defined on every pair

    Returns:
        Violations in index-lexicographic (x, y, z) order; empty iff the
        distance is a metric on the poset
    """
    kind = DistanceKind(kind)
    table = distance_matrix(poset, kind)
    _require_total(poset, kind, table)

    names = poset.names
    violations = []
    for x in range(len(poset)):
        # over (y, z): d(x, y) + d(y, z) against d(x, z)
        rhs = table[x][:, None] + table
        lhs = np.broadcast_to(table[x][None, :], rhs.shape)
        for y, z in np.argwhere(lhs > rhs):
            violations.append(TriangleViolation(
                x=names[x],
                y=names[y],
                z=names[z],
                lhs=int(lhs[y, z]),
                rhs=int(rhs[y, z]),
            ))

    if violations:
        logger.debug(f"{len(violations)} {kind.value} triangle violations on {poset!r}")
    return violations


def is_metric(poset: Poset, kind: DistanceKind) -> bool:
    return not triangle_violations(poset, kind)


class DistancePair(BaseModel):
    """One row of the distance comparison table"""
    x: str
    y: str
    zigzag: int
    up_down: int
    chebyshev: Optional[int] = None


class DistanceComparison(BaseModel):
    """Pointwise comparison of zigzag, up-down and Chebyshev distances"""
    pairs: list[DistancePair]
    zigzag_le_up_down: bool
    zigzag_eq_up_down: bool
    chebyshev_le_up_down: bool
    chebyshev_le_zigzag: bool
    chebyshev_undefined_pairs: int


def compare_distances(poset: Poset) -> DistanceComparison:
    """
    Tabulate zigzag, up-down and Chebyshev on every unordered pair

    The poset must have the upper filtering property. Pairs without a join get
    chebyshev=None and are left out of the Chebyshev comparisons.
    """
    zigzag = distance_matrix(poset, DistanceKind.ZIGZAG)
    up_down = distance_matrix(poset, DistanceKind.UP_DOWN)
    _require_total(poset, DistanceKind.UP_DOWN, up_down)
    chebyshev = distance_matrix(poset, DistanceKind.CHEBYSHEV)

    n = len(poset)
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)
    defined = upper & (chebyshev != UNDEFINED)

    pairs = [
        DistancePair(
            x=poset.names[i],
            y=poset.names[j],
            zigzag=int(zigzag[i, j]),
            up_down=int(up_down[i, j]),
            chebyshev=int(chebyshev[i, j]) if chebyshev[i, j] != UNDEFINED else None,
        )
        for i, j in np.argwhere(upper)
    ]
    return DistanceComparison(
        pairs=pairs,
        zigzag_le_up_down=bool((zigzag <= up_down).all()),
        zigzag_eq_up_down=bool((zigzag == up_down).all()),
        chebyshev_le_up_down=bool((chebyshev <= up_down)[defined].all()),
        chebyshev_le_zigzag=bool((chebyshev <= zigzag)[defined].all()),
        chebyshev_undefined_pairs=int((upper & ~defined).sum()),
    )
