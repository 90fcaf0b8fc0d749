"""Numerical torus integration of the 𝓛_λ integrand.

Nodes are midpoints φ = 2π(m + ½)/N and never touch the singular point φ = 0 of
|2 sin(φ/2)|^{σ+τ}. For n = 1 the rule carries the generalised Euler–Maclaurin
endpoint correction for an algebraic singularity, which lifts the order from
h^{α+1} to h^{α+4}. n = 2 uses the plain tensor rule and n = 3 a randomly shifted
rank-1 lattice.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
from loguru import logger
from numpy.polynomial import polynomial as P
from scipy.special import zetac

from sahi_kernels.src.errors import QuadratureDomainError, ShapeError, UnsupportedError
from sahi_kernels.src.jack import as_kappa, jack_laurent
from sahi_kernels.src.partitions import Signature, make_signature

Real = Union[int, Fraction, float]

TWO_PI = 2.0 * math.pi
# Korobov-type generating vector for the n = 3 lattice rule
LATTICE_VECTOR = (1, 433461, 315689)


@dataclass(frozen=True)
class QuadratureSpec:
    """Midpoint rule with points_per_dim nodes per axis (n ≤ 2) or a shifted lattice (n = 3)."""

    points_per_dim: int
    n: int
    rule: str = "midpoint"
    lattice_points: int = 2 ** 14
    shifts: int = 16
    seed: int = 20240101

    def __post_init__(self) -> None:
        if self.points_per_dim < 2:
            raise UnsupportedError(f"Need at least 2 nodes per dimension, got {self.points_per_dim}")
        if not 1 <= self.n <= 3:
            raise UnsupportedError(f"Numerical integration supports 1 ≤ n ≤ 3, got n={self.n}")
        if self.rule != "midpoint":
            raise UnsupportedError(f"Unknown quadrature rule '{self.rule}'")
        if self.shifts < 2:
            raise UnsupportedError(f"The lattice rule needs at least 2 shifts, got {self.shifts}")

    def nodes(self) -> np.ndarray:
        m = np.arange(self.points_per_dim)
        return TWO_PI * (m + 0.5) / self.points_per_dim


@dataclass
class QuadratureResult:
    value: complex
    error_estimate: float
    points: int
    warnings: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "value": [self.value.real, self.value.imag],
            "error_estimate": self.error_estimate,
            "points": self.points,
            "warnings": list(self.warnings),
        }


def integrand_value(
    phi: np.ndarray, lam: Signature, kappa: Real, sigma: Real, tau: Real
) -> np.ndarray:
    """∏ (2 sin(φ_k/2))^{σ+τ} e^{i(σ−τ)(φ_k−π)/2} · P_λ(e^{iφ}) · ∏_{k<l} |e^{iφ_k} − e^{iφ_l}|^{2κ}.

    phi has shape (..., n); the result has shape (...).
    """

    phi = np.asarray(phi, dtype=float)
    lam = make_signature(lam)
    n = len(lam)
    if phi.shape[-1] != n:
        raise ShapeError(f"Angles have {phi.shape[-1]} components, expected {n}")
    if np.any(phi <= 0.0) or np.any(phi >= TWO_PI):
        raise QuadratureDomainError("Quadrature node outside (0, 2π)")
    kappa = as_kappa(kappa)
    alpha, beta = float(sigma + tau), float(sigma - tau)

    boundary = np.prod(
        (2.0 * np.sin(phi / 2.0)) ** alpha * np.exp(0.5j * beta * (phi - math.pi)), axis=-1
    )
    x = np.exp(1j * phi)
    jack = jack_laurent(lam, n, kappa).expansion.to_laurent().evaluate(x)
    weight = np.ones(phi.shape[:-1])
    for k in range(n):
        for l in range(k + 1, n):
            weight = weight * np.abs(x[..., k] - x[..., l]) ** (2 * float(kappa))
    return boundary * jack * weight


def boundary_series(
    phi: np.ndarray, sigma: Real, tau: Real, radius: float, terms: Optional[int] = None
) -> np.ndarray:
    """Truncated Σ_j (−σ)_j/j!·(rz)^j · Σ_j (−τ)_j/j!·(r z̄)^j at z = e^{iφ}.

    This is (1 − rz)^σ (1 − r z̄)^τ inside the disc; as r → 1 it tends to the boundary
    factor (2 sin(φ/2))^{σ+τ} e^{i(σ−τ)(φ−π)/2} used by integrand_value.
    """

    if not 0.0 <= radius < 1.0:
        raise UnsupportedError(f"The series needs 0 ≤ r < 1, got r={radius}")
    if terms is None:
        terms = 1 if radius == 0.0 else int(math.ceil(40.0 / -math.log(radius)))
    j = np.arange(terms - 1, dtype=float)

    def coefficients(a: float) -> np.ndarray:
        return np.cumprod(np.concatenate([[1.0], (j - a) / (j + 1.0)]))

    z = radius * np.exp(1j * np.asarray(phi, dtype=float))
    return P.polyval(z, coefficients(float(sigma))) * P.polyval(np.conj(z), coefficients(float(tau)))


def hurwitz_half(s: float) -> float:
    """ζ(s, ½) = (2^s − 1) ζ(s), valid for every real s ≠ 1."""

    return (2.0 ** s - 1.0) * (1.0 + float(zetac(s)))


def endpoint_correction(alpha: float, beta: float, frequency: float, points: int) -> complex:
    """Leading midpoint error for ∫_0^{2π} (2 sin(φ/2))^α e^{iβ(φ−π)/2} e^{i·frequency·φ} dφ.

    Near φ = 0 the integrand is φ^α g₊(φ), near 2π it is u^α g₋(u) with u = 2π − φ;
    the error is Σ_k ζ(−α−k, ½)(g₊⁽ᵏ⁾(0) + g₋⁽ᵏ⁾(0))/k! · h^{α+k+1}.
    """

    h = TWO_PI / points
    c = beta / 2.0 + frequency
    left = np.exp(-0.5j * beta * math.pi)
    right = np.exp(0.5j * beta * math.pi)
    curvature = -c * c - alpha / 12.0
    jets = (
        left + right,
        1j * c * left - 1j * c * right,
        curvature * (left + right),
    )
    return sum(
        hurwitz_half(-alpha - k) * jets[k] / math.factorial(k) * h ** (alpha + k + 1)
        for k in range(3)
    )


def corrected_midpoint(alpha: float, beta: float, frequency: float, points: int) -> complex:
    """∫_0^{2π} (2 sin(φ/2))^α e^{iβ(φ−π)/2} e^{i·frequency·φ} dφ by the corrected midpoint rule."""

    phi = TWO_PI * (np.arange(points) + 0.5) / points
    samples = (2.0 * np.sin(phi / 2.0)) ** alpha * np.exp(
        0.5j * beta * (phi - math.pi) + 1j * frequency * phi
    )
    return complex(np.sum(samples) * TWO_PI / points - endpoint_correction(alpha, beta, frequency, points))


def _tensor_midpoint(lam: Signature, kappa: Real, sigma: Real, tau: Real, points: int) -> complex:
    n = len(lam)
    axis = TWO_PI * (np.arange(points) + 0.5) / points
    grid = np.stack(np.meshgrid(*([axis] * n), indexing="ij"), axis=-1)
    values = integrand_value(grid, lam, kappa, sigma, tau)
    # numpy's pairwise summation keeps the reduction order fixed
    return complex(np.sum(values) * (TWO_PI / points) ** n)


def _one_dim(lam: Signature, sigma: Real, tau: Real, points: int) -> complex:
    alpha, beta = float(sigma + tau), float(sigma - tau)
    phi = TWO_PI * (np.arange(points) + 0.5) / points
    values = integrand_value(phi[:, None], lam, 1, sigma, tau)
    raw = np.sum(values) * TWO_PI / points
    return complex(raw - endpoint_correction(alpha, beta, float(lam[0]), points))


def shifted_lattices(dim: int, quad: QuadratureSpec) -> Iterator[np.ndarray]:
    """Node sets u ∈ (0, 1)^dim of the rank-1 lattice, one per random shift."""

    rng = np.random.default_rng(quad.seed)
    m = np.arange(quad.lattice_points)[:, None]
    generator = np.array(LATTICE_VECTOR[:dim])[None, :] % quad.lattice_points
    base = (m * generator % quad.lattice_points) / quad.lattice_points
    for _ in range(quad.shifts):
        u = (base + rng.random(dim)) % 1.0
        # A node exactly on φ = 0 has probability zero; keep it strictly inside.
        yield np.clip(u, 1e-15, 1.0 - 1e-15)


def mean_and_stderr(estimates: Sequence[complex]) -> Tuple[complex, float]:
    estimates = np.asarray(estimates)
    mean = complex(np.mean(estimates))
    spread = np.sum(np.abs(estimates - mean) ** 2) / (len(estimates) - 1)
    return mean, float(math.sqrt(spread / len(estimates)))


def torus_integral_montecarlo(
    lam: Signature,
    kappa: Real,
    sigma: Real,
    tau: Real,
    quad: QuadratureSpec,
) -> Tuple[complex, float]:
    """Randomly shifted rank-1 lattice rule: (mean, standard error over the shifts)."""

    lam = make_signature(lam)
    n = len(lam)
    estimates = [
        np.mean(integrand_value(TWO_PI * u, lam, kappa, sigma, tau)) * TWO_PI ** n
        for u in shifted_lattices(n, quad)
    ]
    return mean_and_stderr(estimates)


def torus_integral_numeric(
    lam: Signature,
    kappa: Real,
    sigma: Real,
    tau: Real,
    quad: QuadratureSpec,
    tolerance: float = 1e-6,
) -> QuadratureResult:
    """Approximate 𝓛_λ(κ; σ, τ) with a Richardson (N vs N/2) or statistical error estimate."""

    lam = make_signature(lam)
    n = len(lam)
    if n != quad.n:
        raise ShapeError(f"Signature {lam} has {n} parts but the rule is {quad.n}-dimensional")
    alpha = float(sigma + tau)
    if alpha <= -1.0:
        raise UnsupportedError(f"The torus integral diverges for σ+τ ≤ −1 (σ+τ={alpha})")

    N = quad.points_per_dim
    if n == 1:
        value = _one_dim(lam, sigma, tau, N)
        coarse = _one_dim(lam, sigma, tau, N // 2)
        order = alpha + 4.0
        estimate = abs(value - coarse) / (2.0 ** order - 1.0)
        points = N
    elif n == 2:
        value = _tensor_midpoint(lam, kappa, sigma, tau, N)
        coarse = _tensor_midpoint(lam, kappa, sigma, tau, N // 2)
        order = min(alpha + 1.0, 2.0)
        estimate = abs(value - coarse) / (2.0 ** order - 1.0)
        points = N * N
    else:
        value, estimate = torus_integral_montecarlo(lam, kappa, sigma, tau, quad)
        points = quad.lattice_points * quad.shifts

    result = QuadratureResult(value, estimate, points)
    if estimate > tolerance * max(abs(value), 1.0):
        message = (
            f"Quadrature for λ={lam}, κ={kappa}, σ={sigma}, τ={tau} has error estimate "
            f"{estimate:.3e} above tolerance {tolerance:.1e}"
        )
        logger.warning(message)
        result.warnings.append(message)
    return result
