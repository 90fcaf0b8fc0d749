"""Exact integration oracles for integer data.

At integer κ, σ, τ the torus integrand is a Laurent polynomial, so the torus integral
is (2π)ⁿ times its constant term. The cube integral reduces to ∫_0^1 x^a dx = 1/(a+1).
"""

from fractions import Fraction
from math import factorial
from typing import Union

from loguru import logger

from sahi_kernels.src.errors import UnsupportedError
from sahi_kernels.src.jack import jack_laurent, jack_P
from sahi_kernels.src.partitions import Signature, is_partition, make_signature
from sahi_kernels.src.sympoly import (
    LaurentPoly,
    constant_term_of_product,
    discriminant_power,
)

Scalar = Union[int, Fraction]


def _non_negative_integer(value: Scalar, name: str) -> int:
    value = Fraction(value)
    if value.denominator != 1 or value < 0:
        raise UnsupportedError(f"Exact integration needs a non-negative integer {name}, got {value}")
    return int(value)


def _positive_integer(value: Scalar, name: str) -> int:
    result = _non_negative_integer(value, name)
    if result == 0:
        raise UnsupportedError(f"Exact integration needs a positive integer {name}, got {value}")
    return result


def _binomial_power(n: int, k: int, power: int, sign: int) -> LaurentPoly:
    """(1 − x_k^{sign})^power in n variables."""

    unit = [0] * n
    unit[k] = sign
    return LaurentPoly(n, {(0,) * n: 1, tuple(unit): -1}) ** power


def torus_integral_exact(lam: Signature, kappa: Scalar, sigma: Scalar, tau: Scalar) -> Fraction:
    """CT(∏(1 − x_k)^σ (1 − x_k⁻¹)^τ · P_λ · ∏|x_k − x_l|^{2κ}); the integral is (2π)ⁿ times this."""

    lam = make_signature(lam)
    n = len(lam)
    k = _positive_integer(kappa, "kappa")
    s = _non_negative_integer(sigma, "sigma")
    t = _non_negative_integer(tau, "tau")

    boundary = LaurentPoly.one(n)
    for i in range(n):
        boundary = boundary * _binomial_power(n, i, s, 1) * _binomial_power(n, i, t, -1)
    jack = jack_laurent(lam, n, k).expansion.to_laurent()
    value = constant_term_of_product(boundary, jack, discriminant_power(n, k))
    logger.debug(f"Exact torus integral λ={lam} κ={k} σ={s} τ={t}: {value}·(2π)^{n}")
    return value


def cube_integral_exact(lam: Signature, kappa: Scalar, r: Scalar, s: Scalar) -> Fraction:
    """(1/n!)∫_{[0,1]ⁿ} P_λ ∏ x_k^{r−1}(1 − x_k)^{s−1} ∏_{k<l}(x_k − x_l)^{2κ} dx, exactly."""

    lam = make_signature(lam)
    if not is_partition(lam):
        raise UnsupportedError(f"Cube integration needs a partition, got {lam}")
    n = len(lam)
    k = _positive_integer(kappa, "kappa")
    r_int = _positive_integer(r, "r")
    s_int = _positive_integer(s, "s")

    integrand = jack_P(lam, n, k).expansion.to_laurent()
    for i in range(n):
        unit = [0] * n
        unit[i] = r_int - 1
        integrand = integrand * LaurentPoly.monomial(tuple(unit))
        integrand = integrand * _binomial_power(n, i, s_int - 1, 1)
    for i in range(n):
        for j in range(i + 1, n):
            diff = [0] * n
            diff[i] = 1
            other = [0] * n
            other[j] = 1
            pair = LaurentPoly(n, {tuple(diff): 1, tuple(other): -1})
            integrand = integrand * (pair ** (2 * k))

    total = Fraction(0)
    for exponent, coeff in integrand.terms.items():
        term = coeff
        for a in exponent:
            term /= a + 1
        total += term
    return total / factorial(n)
