"""Closed-form definiteness conditions for the three kernel families.

[x] is the floor for every real x. Each family is definite exactly on a lattice of
islands in the (s, t) plane; the predicates below describe the same sets either as
a floor equality in (σ, τ) or as explicit windows in (s, t).
"""

import math
from fractions import Fraction
from typing import Tuple, Union

from sahi_kernels.src.errors import InapplicableError
from sahi_kernels.src.kernel import Space

Real = Union[int, Fraction, float]

HYPOTHESIS_EPSILON = 1e-9


def _is_integer(x: Real) -> bool:
    if isinstance(x, float):
        return abs(x - round(x)) < HYPOTHESIS_EPSILON
    return Fraction(x).denominator == 1


def st_to_sigma_tau(space: Space, n: int, s: Real, t: Real) -> Tuple[Real, Real]:
    """Shift (s, t) to (σ, τ); s = t = 0 is the L² point of each family."""

    if space == Space.UN:
        base = Fraction(-n, 2)
    elif space == Space.UO:
        base = Fraction(-(n + 1), 4)
    else:
        base = Fraction(1, 2) - n
    return base + s, base + t


def check_hypotheses(space: Space, n: int, sigma: Real, tau: Real) -> None:
    """Raise InapplicableError when the definiteness theorem for `space` does not apply."""

    if space != Space.UN and n < 2:
        raise InapplicableError(f"The {space.value} criterion needs n > 1, got n={n}")
    if space == Space.UO:
        if _is_integer(2 * sigma) or _is_integer(2 * tau):
            raise InapplicableError(f"UO criterion needs 2σ, 2τ ∉ ℤ (σ={sigma}, τ={tau})")
    elif _is_integer(sigma) or _is_integer(tau):
        raise InapplicableError(
            f"{space.value} criterion needs σ, τ ∉ ℤ (σ={sigma}, τ={tau})"
        )


def definite_predicate(space: Space, n: int, sigma: Real, tau: Real) -> bool:
    """Whether the form for (σ, τ) is definite, by the floor criterion of its family."""

    check_hypotheses(space, n, sigma, tau)
    if space == Space.UN:
        return math.floor(-tau) == math.floor(sigma + n)
    if space == Space.UO:
        return math.floor(-2 * tau - n - 1) == math.floor(2 * sigma)
    return math.floor(-tau) == math.floor(sigma + 2 * n - 1)


def window_predicate(space: Space, n: int, s: Real, t: Real) -> bool:
    """Definiteness read off the (s, t) windows; the islands sit on the anti-diagonal."""

    check_hypotheses(space, n, *st_to_sigma_tau(space, n, s, t))
    if space == Space.UO:
        if n % 2 == 0:
            # |s − j/2| < 1/4 and |t + j/2| < 1/4
            j = math.floor(2 * s + Fraction(1, 2))
            half = Fraction(j, 2)
            return abs(s - half) < Fraction(1, 4) and abs(t + half) < Fraction(1, 4)
        # j/2 < s < j/2 + 1/2 and −j/2 − 1/2 < t < −j/2
        j = math.floor(2 * s)
        half = Fraction(j, 2)
        return half < s < half + Fraction(1, 2) and -half - Fraction(1, 2) < t < -half
    if space == Space.UN and n % 2 == 0:
        # j − 1 < s < j and −j < t < −j + 1
        j = math.floor(s) + 1
        return j - 1 < s < j and -j < t < -j + 1
    # odd UN and every USp: |s − j| < 1/2 and |t + j| < 1/2
    j = math.floor(s + Fraction(1, 2))
    return abs(s - j) < Fraction(1, 2) and abs(t + j) < Fraction(1, 2)
