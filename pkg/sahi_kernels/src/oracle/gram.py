"""Gram matrices ⟨P_λ, P_μ⟩_κ = ∫_{Tⁿ} P_λ conj(P_μ) ∏|x_k − x_l|^{2κ} dφ."""

import math
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np
from loguru import logger

from sahi_kernels.src.errors import ShapeError, UnsupportedError
from sahi_kernels.src.gammaval import SignedValue
from sahi_kernels.src.jack import as_kappa, jack_laurent
from sahi_kernels.src.oracle.quadrature import (
    TWO_PI,
    QuadratureSpec,
    corrected_midpoint,
    mean_and_stderr,
    shifted_lattices,
)
from sahi_kernels.src.partitions import Signature, make_signature, weight
from sahi_kernels.src.sympoly import (
    constant_term_of_product,
    discriminant_power,
)

Matrix = List[List[SignedValue]]


def exact_pairing(lam: Signature, mu: Signature, n: int, kappa: Fraction) -> SignedValue:
    """(2π)ⁿ · CT(P_λ(x) P_μ(x⁻¹) ∏[(x_k − x_l)(x_k⁻¹ − x_l⁻¹)]^κ), integer κ."""

    left = jack_laurent(lam, n, kappa).expansion.to_laurent()
    right = jack_laurent(mu, n, kappa).expansion.to_laurent().inverse_variables()
    ct = constant_term_of_product(left, right, discriminant_power(n, kappa))
    return SignedValue.from_rational(ct * 2 ** n, Fraction(n))


def _relative_profile(lam: Signature, kappa: Fraction) -> Dict[int, complex]:
    """Coefficients of ψ ↦ P_λ(e^{iψ}, 1) as a trigonometric polynomial."""

    profile: Dict[int, complex] = {}
    for exponent, coeff in jack_laurent(lam, 2, kappa).expansion.to_laurent().terms.items():
        profile[exponent[0]] = profile.get(exponent[0], 0) + float(coeff)
    return profile


def _lattice_pairing(lam: Signature, mu: Signature, kappa: Fraction, quad: QuadratureSpec) -> float:
    """∫∫ P_λ conj(P_μ) |Δ|^{2κ} over (ψ₁, ψ₂) with the third angle pinned at 0."""

    left = jack_laurent(lam, 3, kappa).expansion.to_laurent()
    right = jack_laurent(mu, 3, kappa).expansion.to_laurent()
    estimates = []
    for u in shifted_lattices(2, quad):
        x = np.concatenate([np.exp(1j * TWO_PI * u), np.ones((len(u), 1))], axis=1)
        density = np.ones(len(u))
        for k in range(3):
            for l in range(k + 1, 3):
                density = density * np.abs(x[:, k] - x[:, l]) ** (2 * float(kappa))
        values = left.evaluate(x) * np.conj(right.evaluate(x)) * density
        estimates.append(np.mean(values) * TWO_PI ** 2)
    value, stderr = mean_and_stderr(estimates)
    logger.debug(f"Lattice pairing of {lam} and {mu} at kappa={kappa}: {value.real:.12g} ± {stderr:.2e}")
    return value.real


def numeric_pairing(
    lam: Signature, mu: Signature, n: int, kappa: Fraction, points: int
) -> SignedValue:
    """Quadrature value of the pairing for n ≤ 3 (real for real-coefficient Jack polynomials).

    Every angle is rotated by a common θ, whose integral is 2π·[|λ| = |μ|]. For n = 2 with
    φ₁ = θ + ψ, φ₂ = θ the ψ-integral is Σ_c a_c ∫ (2 sin(ψ/2))^{2κ} e^{icψ} dψ, each by the
    corrected midpoint rule. For n = 3 the remaining two angles go through the shifted
    lattice rule.
    """

    if n == 1:
        value = 2 * math.pi if lam == mu else 0.0
        return SignedValue.from_float(value)
    if n > 3:
        raise UnsupportedError(f"Numeric Gram matrices support n ≤ 3, got n={n}")
    if weight(lam) != weight(mu):
        return SignedValue.zero()
    if n == 3:
        return SignedValue.from_float(2 * math.pi * _lattice_pairing(lam, mu, kappa, QuadratureSpec(points, 3)))
    alpha = 2.0 * float(kappa)
    f, g = _relative_profile(lam, kappa), _relative_profile(mu, kappa)
    total = 0j
    for a, fa in f.items():
        for b, gb in g.items():
            total += fa * np.conj(gb) * corrected_midpoint(alpha, 0.0, float(a - b), points)
    return SignedValue.from_float(2 * math.pi * total.real)


def gram_matrix(
    lambdas: Sequence[Signature],
    n: int,
    kappa,
    method: str = "exact",
    points: int = 1024,
) -> Matrix:
    """G_ij = ⟨P_{λ_i}, P_{λ_j}⟩_κ; exact needs integer κ."""

    kappa = as_kappa(kappa)
    sigs = [make_signature(lam) for lam in lambdas]
    for sig in sigs:
        if len(sig) != n:
            raise ShapeError(f"Signature {sig} has {len(sig)} parts, expected {n}")
    if method == "exact":
        if kappa.denominator != 1:
            raise UnsupportedError(f"Exact Gram matrices need integer kappa, got {kappa}")
        pairing = lambda a, b: exact_pairing(a, b, n, kappa)
    elif method == "numeric":
        pairing = lambda a, b: numeric_pairing(a, b, n, kappa, points)
    else:
        raise UnsupportedError(f"Unknown Gram method '{method}'")

    cache: Dict[Tuple[Signature, Signature], SignedValue] = {}
    matrix: Matrix = []
    for i, a in enumerate(sigs):
        row = []
        for j, b in enumerate(sigs):
            key = (a, b) if i <= j else (b, a)
            if key not in cache:
                cache[key] = pairing(*key)
            row.append(cache[key])
        matrix.append(row)
    logger.debug(f"Gram matrix ({method}) for {len(sigs)} signatures, n={n}, kappa={kappa}")
    return matrix


def gram_to_array(matrix: Matrix) -> np.ndarray:
    return np.array([[entry.to_float() for entry in row] for row in matrix])
