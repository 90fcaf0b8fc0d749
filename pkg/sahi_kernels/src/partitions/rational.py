"""Exact rational scalars and the Pochhammer symbol."""

from fractions import Fraction
from typing import Union

from sahi_kernels.src.errors import ParseError

RationalScalar = Fraction
Real = Union[int, Fraction, float]


def pochhammer(a: Union[int, Fraction], k: int) -> Fraction:
    """Rising factorial (a)_k = a(a+1)...(a+k-1), exact; (a)_0 = 1."""

    if k < 0:
        raise ValueError(f"Pochhammer length must be non-negative, got {k}")
    a = Fraction(a)
    result = Fraction(1)
    for i in range(k):
        result *= a + i
        if result == 0:
            break
    return result


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into a reduced Fraction."""

    token = text.strip()
    try:
        if "/" in token:
            num, den = token.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(token))
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"Invalid rational '{text}': {e}")


def parse_real(text: str) -> Real:
    """Rationals stay exact ("p/q", "p"); decimals become floats."""

    token = text.strip()
    try:
        return parse_rational(token)
    except ParseError:
        pass
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"Invalid number '{text}'")


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
