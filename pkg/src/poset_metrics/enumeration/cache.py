"""
Per-size memo of enumerated isomorphism classes
Successive harness runs in one process reuse the levels already built
"""
import logging
from typing import Any, Optional

logger = logging.getLogger(__name__)


class LevelCache:
    """Sorted canonical codes of every enumerated size, with hit/miss counters"""

    def __init__(self) -> None:
        self.levels: dict[int, tuple[bytes, ...]] = {}
        self.hits = 0
        self.misses = 0

    def get(self, n: int) -> Optional[tuple[bytes, ...]]:
        level = self.levels.get(n)
        if level is None:
            self.misses += 1
            return None
        self.hits += 1
        return level

    def store(self, n: int, codes: tuple[bytes, ...]) -> None:
        self.levels[n] = codes
        logger.debug(f"Cached {len(codes)} classes of size {n}")

    def get_stats(self) -> dict[str, Any]:
        """Get cache statistics"""
        return {
            "levels": {n: len(codes) for n, codes in sorted(self.levels.items())},
            "hits": self.hits,
            "misses": self.misses,
        }

    def clear(self) -> None:
        self.levels.clear()
        self.hits = 0
        self.misses = 0
        logger.info("Level cache cleared")
