"""
Cache manager for Jack polynomials.
Stores constructed polynomials keyed by (λ, n, κ) so that scans do not rebuild them.
"""

import threading
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from loguru import logger

CacheKey = Tuple[Tuple[int, ...], int, Fraction]


class JackCache:
    """Thread-safe in-memory cache; values are immutable so sharing them is safe."""

    def __init__(self, max_entries: int = 4096):
        self.cache: Dict[CacheKey, Any] = {}
        self.max_entries = max_entries
        self.hits = 0
        self.misses = 0
        self._lock = threading.Lock()

    def get(self, key: CacheKey) -> Optional[Any]:
        """Get a cached polynomial if present."""
        with self._lock:
            value = self.cache.get(key)
            if value is None:
                self.misses += 1
                return None
            self.hits += 1
        logger.debug(f"Jack cache hit for {key}")
        return value

    def set(self, key: CacheKey, value: Any) -> Any:
        """Cache a polynomial; the first writer wins so every reader sees one object."""
        with self._lock:
            existing = self.cache.get(key)
            if existing is not None:
                return existing
            if len(self.cache) >= self.max_entries:
                # Drop the oldest insertion
                self.cache.pop(next(iter(self.cache)))
            self.cache[key] = value
        logger.debug(f"Cached Jack polynomial for {key}")
        return value

    def clear(self) -> None:
        """Clear all cached polynomials."""
        with self._lock:
            self.cache.clear()
            self.hits = 0
            self.misses = 0
        logger.debug("Cleared Jack cache")

    def stats(self) -> Dict[str, int]:
        with self._lock:
            return {"entries": len(self.cache), "hits": self.hits, "misses": self.misses}


# Global cache instance
jack_cache = JackCache()
