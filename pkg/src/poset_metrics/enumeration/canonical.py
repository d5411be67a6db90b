"""
Canonical codes for finite posets
The code is the closure matrix, read column by column above the diagonal,
under the lexicographically smallest element ordering compatible with a
refined vertex-invariant colouring. Two posets get the same code exactly when
they are isomorphic.
"""
import logging
from typing import Optional, Sequence

import numpy as np

from ..core.poset import Poset

logger = logging.getLogger(__name__)

CanonicalCode = bytes

_SIZE_BYTES = 2


def _initial_colors(poset: Poset) -> list[tuple[int, ...]]:
    """Isomorphism-invariant element keys; the level comes first so sorting keeps the order"""
    leq = poset.leq_matrix
    cover = poset.cover_matrix
    longest = poset.max_height_matrix
    level = longest.max(axis=0)
    rise = longest.max(axis=1)
    below = leq.sum(axis=0)
    above = leq.sum(axis=1)
    in_degree = cover.sum(axis=0)
    out_degree = cover.sum(axis=1)
    return [
        (int(level[i]), int(below[i]), int(above[i]),
         int(in_degree[i]), int(out_degree[i]), int(rise[i]))
        for i in range(len(poset))
    ]


def refined_colors(poset: Poset) -> list[int]:
    """
    Colour refinement over the cover digraph

    Each round splits classes by the multisets of lower and upper cover
    colours until the number of classes stops growing. Colour ranks respect
    the initial key order, so sorting by colour yields a linear extension.
    """
    cover = poset.cover_matrix
    lower = [np.flatnonzero(cover[:, i]).tolist() for i in range(len(poset))]
    upper = [np.flatnonzero(cover[i]).tolist() for i in range(len(poset))]

    colors: list = _initial_colors(poset)
    classes = len(set(colors))
    while True:
        signatures = [
            (
                colors[i],
                tuple(sorted(colors[k] for k in lower[i])),
                tuple(sorted(colors[k] for k in upper[i])),
            )
            for i in range(len(poset))
        ]
        ranks = {signature: r for r, signature in enumerate(sorted(set(signatures)))}
        colors = [ranks[signature] for signature in signatures]
        if len(ranks) == classes:
            return colors
        classes = len(ranks)


def _twin_classes(poset: Poset) -> list[int]:
    """Elements with identical strict down- and up-sets are swapped by an automorphism"""
    leq = poset.leq_matrix
    strict = leq & ~np.eye(len(poset), dtype=bool)
    keys: dict[tuple[bytes, bytes], int] = {}
    return [
        keys.setdefault((strict[:, i].tobytes(), strict[i].tobytes()), len(keys))
        for i in range(len(poset))
    ]


def canonical_form(poset: Poset) -> tuple[CanonicalCode, list[int]]:
    """
    Canonical code and one element ordering that realises it

    Returns:
        (code, ordering) where ordering[p] is the index of the element placed
        at canonical position p
    """
    n = len(poset)
    leq = poset.leq_matrix
    colors = refined_colors(poset)
    twins = _twin_classes(poset)
    slot_colors = sorted(colors)

    frontier: list[list[int]] = [[]]
    bits: list[bool] = []
    for position in range(n):
        color = slot_colors[position]
        best: Optional[tuple[bool, ...]] = None
        survivors: list[list[int]] = []
        for ordering in frontier:
            placed = set(ordering)
            tried: set[int] = set()
            for v in range(n):
                if v in placed or colors[v] != color or twins[v] in tried:
                    continue
                tried.add(twins[v])
                column = tuple(bool(leq[u, v]) for u in ordering)
                if best is None or column < best:
                    best = column
                    survivors = [ordering + [v]]
                elif column == best:
                    survivors.append(ordering + [v])
        frontier = survivors
        bits.extend(best or ())

    packed = np.packbits(np.array(bits, dtype=np.uint8)).tobytes()
    return n.to_bytes(_SIZE_BYTES, "big") + packed, frontier[0]


def canonical_code(poset: Poset) -> CanonicalCode:
    """Permutation-invariant code identifying the isomorphism class"""
    return canonical_form(poset)[0]


def poset_from_code(code: CanonicalCode, names: Optional[Sequence[str]] = None) -> Poset:
    """
    Rebuild the representative poset of a canonical code

    Args:
        code: A code produced by canonical_code
        names: Element names by canonical position (default e0, e1, ...)
    """
    n = int.from_bytes(code[:_SIZE_BYTES], "big")
    count = n * (n - 1) // 2
    bits = np.unpackbits(np.frombuffer(code[_SIZE_BYTES:], dtype=np.uint8))[:count]
    rows = [i for j in range(n) for i in range(j)]
    cols = [j for j in range(n) for _ in range(j)]
    leq = np.eye(n, dtype=bool)
    leq[rows, cols] = bits.astype(bool)
    if names is None:
        names = [f"e{i}" for i in range(n)]
    return Poset.from_matrix(names, leq)
