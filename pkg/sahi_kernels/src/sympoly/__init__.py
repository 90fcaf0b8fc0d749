"""Sparse exact-rational (symmetric) Laurent polynomials."""

from sahi_kernels.src.sympoly.laurent import (
    LaurentPoly,
    LaurentSymPoly,
    constant_term,
    constant_term_of_product,
    discriminant_power,
    monomial_sym,
    multiply,
    parse_sympoly,
    render,
    substitute_inverse,
)

__all__ = [
    "LaurentPoly",
    "LaurentSymPoly",
    "constant_term",
    "constant_term_of_product",
    "discriminant_power",
    "monomial_sym",
    "multiply",
    "parse_sympoly",
    "render",
    "substitute_inverse",
]
