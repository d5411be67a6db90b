"""
Maximal chains and chain-compatibility of distance functions
"""
import logging
from typing import Optional

import networkx as nx
import numpy as np
from pydantic import BaseModel

from ..core.errors import DistanceUndefinedError
from ..core.poset import Poset
from .distances import UNDEFINED, DistanceKind, distance_matrix

logger = logging.getLogger(__name__)


def maximal_chains(poset: Poset) -> list[list[str]]:
    """
    Every maximal chain of the poset, listed bottom to top

    A maximal chain of a finite poset runs along covers from a minimal to a
    maximal element, so the chains are the cover paths between those. Order is
    depth first from minimal elements, successors in element order.
    """
    cover = poset.cover_matrix
    names = poset.names
    minimal = [i for i in range(len(poset)) if not cover[:, i].any()]

    chains: list[list[str]] = []
    stack: list[list[int]] = [[i] for i in reversed(minimal)]
    while stack:
        path = stack.pop()
        uppers = np.flatnonzero(cover[path[-1]])
        if uppers.size == 0:
            chains.append([names[k] for k in path])
            continue
        for upper in reversed(uppers.tolist()):
            stack.append(path + [upper])
    return chains


def shortest_chain(poset: Poset, x: str, y: str) -> list[str]:
    """A maximal chain of [x, y] with the fewest elements (x <= y required)"""
    i, j = poset.index(x), poset.index(y)
    path = nx.shortest_path(poset.cover_digraph, i, j)
    return [poset.names[k] for k in path]


def longest_chain(poset: Poset, x: str, y: str) -> list[str]:
    """A maximal chain of [x, y] with the most elements (x <= y required)"""
    i, j = poset.index(x), poset.index(y)
    longest = poset.max_height_matrix
    path = [i]
    while path[-1] != j:
        here = path[-1]
        for upper in np.flatnonzero(poset.cover_matrix[here]):
            if longest[upper, j] == longest[here, j] - 1:
                path.append(int(upper))
                break
    return [poset.names[k] for k in path]


class ChainCompatibility(BaseModel):
    """Verdict of a chain-compatibility scan, with the first violation if any"""
    kind: DistanceKind
    compatible: bool
    chain: Optional[list[str]] = None
    i: Optional[int] = None
    j: Optional[int] = None
    distance: Optional[int] = None


def chain_compatibility(poset: Poset, kind: DistanceKind) -> ChainCompatibility:
    """
    Check that the distance restricts to |i - j| on every maximal chain

    Args:
        poset: The poset
        kind: Distance to test

    Returns:
        ChainCompatibility with the first chain and positions i < j where
        d(c_i, c_j) differs from j - i
    """
    kind = DistanceKind(kind)
    table = distance_matrix(poset, kind)
    for chain in maximal_chains(poset):
        idx = [poset.index(name) for name in chain]
        sub = table[np.ix_(idx, idx)]
        positions = np.arange(len(idx))
        expected = np.abs(positions[:, None] - positions[None, :])
        for a, b in np.argwhere(sub != expected):
            if a >= b:
                continue
            if sub[a, b] == UNDEFINED:
                raise DistanceUndefinedError(kind.value, chain[a], chain[b])
            logger.debug(f"{kind.value} breaks chain {chain} at ({a}, {b})")
            return ChainCompatibility(
                kind=kind,
                compatible=False,
                chain=chain,
                i=int(a),
                j=int(b),
                distance=int(sub[a, b]),
            )
    return ChainCompatibility(kind=kind, compatible=True)


def is_chain_compatible(poset: Poset, kind: DistanceKind) -> bool:
    return chain_compatibility(poset, kind).compatible
