"""Memo cache for Jack polynomials."""

from sahi_kernels.src.cache.manager import JackCache, jack_cache

__all__ = ["JackCache", "jack_cache"]
