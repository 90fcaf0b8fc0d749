"""Signatures (weakly decreasing integer vectors) and their combinatorics.

Signatures are stored dense as plain tuples of ints of length n. A partition is a
signature whose last part is non-negative.
"""

from collections import Counter
from itertools import accumulate, combinations_with_replacement
from math import factorial
from typing import Iterable, List, Tuple

from loguru import logger

from sahi_kernels.src.errors import InvalidComparisonError, ParseError, ShapeError

Signature = Tuple[int, ...]


def make_signature(parts: Iterable[int]) -> Signature:
    """Validate and freeze a weakly decreasing integer vector."""

    sig = tuple(int(p) for p in parts)
    if any(sig[j] < sig[j + 1] for j in range(len(sig) - 1)):
        raise ShapeError(f"Signature parts must be weakly decreasing: {sig}")
    return sig


def is_partition(sig: Signature) -> bool:
    return len(sig) == 0 or sig[-1] >= 0


def weight(sig: Signature) -> int:
    """|λ|, the sum of the parts."""

    return sum(sig)


def shift(sig: Signature, m: int) -> Signature:
    """λ + m·1ⁿ."""

    return tuple(p + m for p in sig)


def dominance_leq(mu: Signature, lam: Signature) -> bool:
    """True iff μ ≤ λ in dominance order (partial sums of μ never exceed those of λ)."""

    if len(mu) != len(lam):
        raise InvalidComparisonError(
            f"Cannot compare signatures of different length: {mu} vs {lam}"
        )
    if sum(mu) != sum(lam):
        raise InvalidComparisonError(
            f"Dominance needs equal weight: |{mu}|={sum(mu)} vs |{lam}|={sum(lam)}"
        )
    return all(a <= b for a, b in zip(accumulate(mu), accumulate(lam)))


def signatures_in_box(n: int, lo: int, hi: int) -> List[Signature]:
    """All weakly decreasing length-n vectors with parts in [lo, hi], lexicographic.

    The count is C(hi-lo+n, n); an empty range yields an empty list.
    """

    if n < 1:
        raise ShapeError(f"Number of variables must be positive, got {n}")
    if lo > hi:
        return []
    sigs = sorted(
        tuple(reversed(combo))
        for combo in combinations_with_replacement(range(lo, hi + 1), n)
    )
    logger.debug(f"Enumerated {len(sigs)} signatures for n={n} in [{lo},{hi}]")
    return sigs


def partitions_of(total: int, n: int) -> List[Signature]:
    """Partitions of `total` with at most n parts, padded to length n, descending lex."""

    if total < 0:
        return []

    result: List[Signature] = []

    def _extend(prefix: List[int], remaining: int, cap: int, slots: int) -> None:
        if slots == 0:
            if remaining == 0:
                result.append(tuple(prefix))
            return
        # remaining parts are at most `cap`, so `slots * cap` bounds what is left
        for part in range(min(cap, remaining), -1, -1):
            if part * slots < remaining:
                break
            _extend(prefix + [part], remaining - part, part, slots - 1)

    _extend([], total, total, n)
    return result


def orbit_size(sig: Signature) -> int:
    """Number of distinct permutations of the parts."""

    size = factorial(len(sig))
    for multiplicity in Counter(sig).values():
        size //= factorial(multiplicity)
    return size


def parse_signature(text: str) -> Signature:
    """Parse the comma-separated syntax, e.g. "3,1,-2"."""

    try:
        parts = [int(token) for token in text.replace(" ", "").split(",") if token != ""]
    except ValueError as e:
        raise ParseError(f"Invalid signature '{text}': {e}")
    if not parts:
        raise ParseError(f"Empty signature '{text}'")
    try:
        return make_signature(parts)
    except ShapeError as e:
        raise ParseError(str(e))


def format_signature(sig: Signature) -> str:
    return ",".join(str(p) for p in sig)
