"""Families Module - deterministic generators for named posets and witnesses"""

from .generators import (
    FAMILIES,
    FamilySpec,
    antichain,
    boolean,
    chain,
    chebyshev_witness,
    generate,
    grid,
    pentagon,
    prop4_witness,
    random_poset,
)

__all__ = [
    "FAMILIES",
    "FamilySpec",
    "antichain",
    "boolean",
    "chain",
    "chebyshev_witness",
    "generate",
    "grid",
    "pentagon",
    "prop4_witness",
    "random_poset",
]
