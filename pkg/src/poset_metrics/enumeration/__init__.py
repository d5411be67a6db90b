"""Enumeration Module - canonical codes and isomorphism-free generation of small posets"""

from .cache import LevelCache
from .canonical import CanonicalCode, canonical_code, canonical_form, poset_from_code
from .enumerator import (
    ENUMERATION_CAP,
    PosetFilter,
    check_size,
    count_posets,
    enumerate_posets,
    enumerate_up_to,
    isomorphism_classes,
    level_cache,
)

__all__ = [
    "LevelCache",
    "CanonicalCode",
    "canonical_code",
    "canonical_form",
    "poset_from_code",
    "ENUMERATION_CAP",
    "PosetFilter",
    "check_size",
    "count_posets",
    "enumerate_posets",
    "enumerate_up_to",
    "isomorphism_classes",
    "level_cache",
]
