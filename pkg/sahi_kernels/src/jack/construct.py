"""Construction of Jack polynomials by a triangular eigen-solve.

The operator

    H = Σ_i (x_i ∂_i)² + κ Σ_{i<j} (x_i + x_j)/(x_i − x_j) · (x_i ∂_i − x_j ∂_j)

preserves degree, is upper triangular on the monomial basis in dominance order and
has P_λ as eigenvectors with eigenvalue E(λ) = Σ λ_i² + κ Σ (n + 1 − 2i) λ_i.
Writing H m_ν = Σ_μ c_{μν} m_μ, the coefficients of P_λ = Σ u_μ m_μ solve

    (E(λ) − E(μ)) u_μ = Σ_{μ < ν ≤ λ} c_{μν} u_ν,   u_λ = 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Union

from loguru import logger

from sahi_kernels.src.cache import jack_cache
from sahi_kernels.src.errors import PivotError, ShapeError, UnsupportedError
from sahi_kernels.src.partitions import (
    Signature,
    dominance_leq,
    is_partition,
    make_signature,
    orbit_size,
    partitions_of,
    weight,
)
from sahi_kernels.src.sympoly import LaurentSymPoly, monomial_sym

KappaLike = Union[int, Fraction, str, float]


@dataclass(frozen=True)
class JackPolynomial:
    """P_λ(x; κ) in n variables, stored in the monomial basis."""

    lam: Signature
    n: int
    kappa: Fraction
    expansion: LaurentSymPoly

    def coefficient(self, mu: Signature) -> Fraction:
        return self.expansion.coefficient(mu)


def as_kappa(kappa: KappaLike) -> Fraction:
    """Coerce to a positive rational κ."""

    if isinstance(kappa, float):
        kappa = Fraction(str(kappa))
    value = Fraction(kappa)
    if value <= 0:
        raise UnsupportedError(f"Jack polynomials need kappa > 0, got {kappa}")
    return value


def eigenvalue(lam: Signature, kappa: Fraction) -> Fraction:
    """E(λ) = Σ λ_i² + κ Σ (n + 1 − 2i) λ_i."""

    n = len(lam)
    return sum((Fraction(p * p) for p in lam), Fraction(0)) + kappa * sum(
        (n + 1 - 2 * i) * p for i, p in enumerate(lam, start=1)
    )


def _apply_operator(mu: Signature, kappa: Fraction) -> Dict[Signature, Fraction]:
    """H m_μ on orbit representatives."""

    n = len(mu)
    out: Dict[Signature, Fraction] = {}

    def add(exp: List[int], coeff: Fraction) -> None:
        if all(exp[k] >= exp[k + 1] for k in range(n - 1)):
            key = tuple(exp)
            out[key] = out.get(key, 0) + coeff

    out[mu] = Fraction(sum(p * p for p in mu))
    for exp in monomial_sym(mu, n).to_laurent().terms:
        for i in range(n):
            for j in range(i + 1, n):
                # The monomial and its (i, j) swap contribute jointly; count the pair once.
                if exp[i] <= exp[j]:
                    continue
                d = exp[i] - exp[j]
                scale = kappa * d
                add(list(exp), scale)
                swapped = list(exp)
                swapped[i], swapped[j] = exp[j], exp[i]
                add(swapped, scale)
                for k in range(1, d):
                    inner = list(exp)
                    inner[i] -= k
                    inner[j] += k
                    add(inner, 2 * scale)
    return {key: value for key, value in out.items() if value != 0}


def eigen_operator_matrix(
    lam: Signature, n: int, kappa: KappaLike
) -> Dict[Signature, Dict[Signature, Fraction]]:
    """Columns H m_ν for every partition ν ≤ λ (dominance), keyed by ν."""

    kappa = as_kappa(kappa)
    lam = make_signature(lam)
    if len(lam) != n:
        raise ShapeError(f"Signature {lam} has {len(lam)} parts, expected {n}")
    if not is_partition(lam):
        raise ShapeError(f"Operator matrix needs a partition, got {lam}")
    basis = [mu for mu in partitions_of(weight(lam), n) if dominance_leq(mu, lam)]
    return {nu: _apply_operator(nu, kappa) for nu in basis}


def _solve(lam: Signature, n: int, kappa: Fraction) -> LaurentSymPoly:
    columns = eigen_operator_matrix(lam, n, kappa)
    target = eigenvalue(lam, kappa)
    coefficients: Dict[Signature, Fraction] = {lam: Fraction(1)}
    # Descending lex order extends dominance, so every ν > μ is solved before μ.
    for mu in sorted(columns, reverse=True):
        if mu == lam:
            continue
        rhs = sum(
            (columns[nu].get(mu, 0) * u for nu, u in coefficients.items() if nu != mu),
            Fraction(0),
        )
        pivot = target - eigenvalue(mu, kappa)
        if pivot == 0:
            raise PivotError(
                f"Eigenvalue collision between {lam} and {mu} at kappa={kappa}", (lam, mu)
            )
        coefficients[mu] = rhs / pivot
    logger.debug(f"Solved Jack P{lam} (n={n}, kappa={kappa}) with {len(columns)} pivots")
    return LaurentSymPoly(n, coefficients)


def jack_P(lam: Signature, n: int, kappa: KappaLike) -> JackPolynomial:
    """Monic Jack polynomial P_λ(x; κ) for a partition λ of length n."""

    kappa = as_kappa(kappa)
    lam = make_signature(lam)
    if len(lam) != n:
        raise ShapeError(f"Signature {lam} has {len(lam)} parts, expected {n}")
    if not is_partition(lam):
        raise ShapeError(f"jack_P needs a partition; use jack_laurent for {lam}")

    key = (lam, n, kappa)
    cached = jack_cache.get(key)
    if cached is not None:
        return cached
    poly = JackPolynomial(lam, n, kappa, _solve(lam, n, kappa))
    return jack_cache.set(key, poly)


def jack_laurent(lam: Signature, n: int, kappa: KappaLike) -> JackPolynomial:
    """Laurent Jack polynomial (x₁⋯x_n)^{λ_n} · P_{λ − λ_n·1ⁿ}."""

    lam = make_signature(lam)
    if len(lam) != n:
        raise ShapeError(f"Signature {lam} has {len(lam)} parts, expected {n}")
    m = lam[-1] if lam else 0
    if m == 0:
        return jack_P(lam, n, kappa)
    base = jack_P(tuple(p - m for p in lam), n, kappa)
    return JackPolynomial(lam, n, base.kappa, base.expansion.shifted(m))


def eval_at_ones(p: JackPolynomial) -> Fraction:
    """P_λ(1, …, 1; κ)."""

    return sum(
        (coeff * orbit_size(mu) for mu, coeff in p.expansion.terms.items()), Fraction(0)
    )
