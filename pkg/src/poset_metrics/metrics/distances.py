"""
Distance functions on finite posets
Zigzag (Hasse diagram graph distance), up-down and down-up (cheapest detour
through a common upper or lower bound) and Chebyshev (larger height to the join)
"""
import logging
from enum import Enum
from typing import Callable

import networkx as nx
import numpy as np

from ..core.errors import (
    DisconnectedError,
    InvalidParameterError,
    NoLowerBoundError,
    NoUpperBoundError,
)
from ..core.poset import Poset

logger = logging.getLogger(__name__)

UNDEFINED = -1


class DistanceKind(str, Enum):
    """Selector among the four distance functions"""
    ZIGZAG = "zigzag"
    UP_DOWN = "up_down"
    DOWN_UP = "down_up"
    CHEBYSHEV = "chebyshev"

    @classmethod
    def parse(cls, text: str) -> "DistanceKind":
        """Accept the CLI spellings (updown, down-up, cheb, ...)"""
        key = text.strip().lower().replace("-", "_")
        aliases = {
            "updown": cls.UP_DOWN,
            "downup": cls.DOWN_UP,
            "cheb": cls.CHEBYSHEV,
            "zz": cls.ZIGZAG,
        }
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError:
            choices = ", ".join(kind.value for kind in cls)
            raise InvalidParameterError(
                f"unknown distance kind {text!r} (expected one of {choices})"
            ) from None


# Pointwise distances

def zigzag_distance(poset: Poset, x: str, y: str) -> int:
    """Length of the shortest path between x and y in the Hasse diagram"""
    i, j = poset.index(x), poset.index(y)
    try:
        return int(nx.shortest_path_length(poset.hasse_diagram, i, j))
    except nx.NetworkXNoPath:
        raise DisconnectedError(x, y) from None


def up_down_distance(poset: Poset, x: str, y: str) -> int:
    """Smallest h(x, u) + h(y, u) over common upper bounds u"""
    i, j = poset.index(x), poset.index(y)
    heights = poset.height_matrix
    valid = (heights[i] >= 0) & (heights[j] >= 0)
    if not valid.any():
        raise NoUpperBoundError(x, y)
    return int((heights[i] + heights[j])[valid].min())


def down_up_distance(poset: Poset, x: str, y: str) -> int:
    """Smallest h(u, x) + h(u, y) over common lower bounds u"""
    i, j = poset.index(x), poset.index(y)
    heights = poset.height_matrix
    valid = (heights[:, i] >= 0) & (heights[:, j] >= 0)
    if not valid.any():
        raise NoLowerBoundError(x, y)
    return int((heights[:, i] + heights[:, j])[valid].min())


def chebyshev_distance(poset: Poset, x: str, y: str) -> int:
    """max(h(x, x v y), h(y, x v y)); join errors propagate"""
    top = poset.join(x, y)
    return max(poset.height(x, top), poset.height(y, top))


_DISTANCES: dict[DistanceKind, Callable[[Poset, str, str], int]] = {
    DistanceKind.ZIGZAG: zigzag_distance,
    DistanceKind.UP_DOWN: up_down_distance,
    DistanceKind.DOWN_UP: down_up_distance,
    DistanceKind.CHEBYSHEV: chebyshev_distance,
}


def distance(poset: Poset, kind: DistanceKind, x: str, y: str) -> int:
    """Evaluate the distance of the given kind"""
    return _DISTANCES[DistanceKind(kind)](poset, x, y)


# All-pairs tables, UNDEFINED where the pointwise function would raise

def _zigzag_matrix(poset: Poset) -> np.ndarray:
    n = len(poset)
    table = np.full((n, n), UNDEFINED, dtype=np.int64)
    for source, lengths in nx.all_pairs_shortest_path_length(poset.hasse_diagram):
        for target, length in lengths.items():
            table[source, target] = length
    return table


def _up_down_from_heights(heights: np.ndarray) -> np.ndarray:
    n = heights.shape[0]
    reach = heights >= 0
    never = np.iinfo(np.int64).max
    table = np.full((n, n), UNDEFINED, dtype=np.int64)
    for x in range(n):
        # row over (y, u): h(x, u) + h(y, u) where both are defined
        sums = heights[x][None, :] + heights
        valid = reach[x][None, :] & reach
        best = np.where(valid, sums, never).min(axis=1)
        table[x] = np.where(best == never, UNDEFINED, best)
    return table


def _up_down_matrix(poset: Poset) -> np.ndarray:
    return _up_down_from_heights(poset.height_matrix)


def _down_up_matrix(poset: Poset) -> np.ndarray:
    # heights of the dual are the transposed heights
    return _up_down_from_heights(poset.height_matrix.T)


def _chebyshev_matrix(poset: Poset) -> np.ndarray:
    n = len(poset)
    joins = poset.join_matrix
    heights = poset.height_matrix
    table = np.full((n, n), UNDEFINED, dtype=np.int64)
    xs, ys = np.nonzero(joins >= 0)
    tops = joins[xs, ys]
    table[xs, ys] = np.maximum(heights[xs, tops], heights[ys, tops])
    return table


_MATRICES: dict[DistanceKind, Callable[[Poset], np.ndarray]] = {
    DistanceKind.ZIGZAG: _zigzag_matrix,
    DistanceKind.UP_DOWN: _up_down_matrix,
    DistanceKind.DOWN_UP: _down_up_matrix,
    DistanceKind.CHEBYSHEV: _chebyshev_matrix,
}


def distance_matrix(poset: Poset, kind: DistanceKind) -> np.ndarray:
    """
    All-pairs distance table

    Args:
        poset: The poset
        kind: Which distance to tabulate

    Returns:
        n x n int64 array indexed by element index, UNDEFINED where the
        distance does not exist (no path, no bound or no join)
    """
    kind = DistanceKind(kind)
    table = _MATRICES[kind](poset)
    logger.debug(f"Tabulated {kind.value} distances on {len(poset)} elements")
    return table
