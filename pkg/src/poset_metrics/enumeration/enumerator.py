"""
Isomorphism-free enumeration of finite posets
Every class on n elements arises from a class on n - 1 elements by adding a
new maximal element above an order ideal. Children are deduplicated by
canonical code and each level is emitted in ascending code order.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

import numpy as np

from ..core.errors import InvalidParameterError, SizeCapExceededError
from ..core.poset import Poset
from ..core.predicates import PREDICATES
from .cache import LevelCache
from .canonical import CanonicalCode, canonical_code, poset_from_code

logger = logging.getLogger(__name__)

ENUMERATION_CAP = 8

level_cache = LevelCache()


@dataclass(frozen=True)
class PosetFilter:
    """
    Conjunction of required predicate values

    Args:
        required: (predicate name, wanted value) pairs; names are
            StructuralReport fields
    """
    required: tuple[tuple[str, bool], ...] = ()

    @classmethod
    def parse(cls, text: Optional[str]) -> "PosetFilter":
        """Parse "join_semilattice,!semimodular"; a leading '!' negates"""
        if not text or not text.strip():
            return cls()
        required = []
        for token in text.split(","):
            token = token.strip()
            wanted = not token.startswith("!")
            name = token.lstrip("!").strip().replace("-", "_")
            if name not in PREDICATES:
                raise InvalidParameterError(
                    f"unknown filter predicate {name!r}; expected one of {', '.join(PREDICATES)}"
                )
            required.append((name, wanted))
        return cls(tuple(required))

    def accepts(self, poset: Poset) -> bool:
        return all(PREDICATES[name](poset) == wanted for name, wanted in self.required)

    def __str__(self) -> str:
        return ",".join(name if wanted else f"!{name}" for name, wanted in self.required)


def _order_ideals(poset: Poset) -> list[int]:
    """Down-closed subsets as bitmasks over element indices"""
    n = len(poset)
    weights = 1 << np.arange(n, dtype=np.int64)
    below = (poset.leq_matrix.T.astype(np.int64) * weights).sum(axis=1)
    return [
        mask
        for mask in range(1 << n)
        if all((below[i] & ~mask) == 0 for i in range(n) if mask >> i & 1)
    ]


def _children(code: CanonicalCode) -> set[CanonicalCode]:
    """Codes of every one-element extension by a new maximal element"""
    parent = poset_from_code(code)
    n = len(parent)
    names = [f"e{i}" for i in range(n + 1)]
    children = set()
    for ideal in _order_ideals(parent):
        leq = np.zeros((n + 1, n + 1), dtype=bool)
        leq[:n, :n] = parent.leq_matrix
        leq[n, n] = True
        leq[:n, n] = [bool(ideal >> i & 1) for i in range(n)]
        children.add(canonical_code(Poset.from_matrix(names, leq)))
    return children


def _extend_batch(codes: list[CanonicalCode]) -> set[CanonicalCode]:
    grown: set[CanonicalCode] = set()
    for code in codes:
        grown |= _children(code)
    return grown


def _chunks(items: list[CanonicalCode], parts: int) -> list[list[CanonicalCode]]:
    return [items[k::parts] for k in range(parts) if items[k::parts]]


def check_size(n: int, cap: int = ENUMERATION_CAP) -> None:
    if n < 1:
        raise InvalidParameterError("enumeration needs n >= 1")
    if n > min(cap, ENUMERATION_CAP):
        raise SizeCapExceededError(n, min(cap, ENUMERATION_CAP))


def isomorphism_classes(n: int, jobs: int = 1) -> tuple[CanonicalCode, ...]:
    """
    Canonical codes of all posets on n elements, ascending

    Args:
        n: Number of elements, 1 <= n <= ENUMERATION_CAP
        jobs: Worker processes for the extension step (1 runs inline)

    Returns:
        Sorted tuple of codes; identical for any jobs value
    """
    check_size(n)
    cached = level_cache.get(n)
    if cached is not None:
        return cached

    if n == 1:
        codes = {canonical_code(Poset.from_matrix(["e0"], np.ones((1, 1), dtype=bool)))}
    else:
        parents = list(isomorphism_classes(n - 1, jobs))
        if jobs > 1 and len(parents) > 1:
            codes = set()
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for grown in pool.map(_extend_batch, _chunks(parents, jobs * 4)):
                    codes |= grown
        else:
            codes = _extend_batch(parents)

    level = tuple(sorted(codes))
    level_cache.store(n, level)
    logger.info(f"Enumerated {len(level)} posets on {n} elements")
    return level


def enumerate_posets(
    n: int,
    poset_filter: Optional[PosetFilter] = None,
    jobs: int = 1,
) -> Iterator[Poset]:
    """
    Stream one representative per isomorphism class, in canonical-code order

    Representatives are named e0, e1, ... by canonical position.
    """
    for code in isomorphism_classes(n, jobs):
        poset = poset_from_code(code)
        if poset_filter is None or poset_filter.accepts(poset):
            yield poset


def enumerate_up_to(
    n_max: int,
    poset_filter: Optional[PosetFilter] = None,
    jobs: int = 1,
    cap: int = ENUMERATION_CAP,
) -> Iterable[tuple[int, CanonicalCode, Poset]]:
    """(n, code, poset) for every class with 1 <= n <= n_max passing the filter"""
    check_size(n_max, cap)
    for n in range(1, n_max + 1):
        for code in isomorphism_classes(n, jobs):
            poset = poset_from_code(code)
            if poset_filter is None or poset_filter.accepts(poset):
                yield n, code, poset


def count_posets(n: int, poset_filter: Optional[PosetFilter] = None, jobs: int = 1) -> int:
    if poset_filter is None or not poset_filter.required:
        return len(isomorphism_classes(n, jobs))
    return sum(1 for _ in enumerate_posets(n, poset_filter, jobs))
