"""Gamma-product closed forms.

All products are assembled in (sign, log) space through gammaval; exact results
appear automatically when every argument is an integer or half-integer.
"""

from fractions import Fraction
from math import factorial
from typing import List, NamedTuple, Tuple, Union

from loguru import logger

from sahi_kernels.src.errors import ShapeError, UnsupportedError
from sahi_kernels.src.gammaval import (
    SignedValue,
    gamma_ratio,
    gamma_signed,
    product,
    recip_gamma,
    recip_gamma_leading,
    sin_pi,
)
from sahi_kernels.src.jack import as_kappa, eval_at_ones, jack_laurent
from sahi_kernels.src.kernel.spec import KernelSpec
from sahi_kernels.src.partitions import Signature, is_partition, make_signature

Real = Union[int, Fraction, float]


class LeadingTerm(NamedTuple):
    """coefficient · ε^order, the leading behaviour along a parameter direction."""

    coefficient: SignedValue
    order: int


def _parity(k: int) -> SignedValue:
    return SignedValue.from_rational(-1 if k % 2 else 1)


def _two_pi_power(n: int) -> SignedValue:
    return SignedValue.from_rational(2 ** n, Fraction(n))


def v_lambda(lam: Signature, kappa: Real) -> SignedValue:
    """v_λ(κ) = ∏_{k<l} Γ(λ_k − λ_l + κ(l − k + 1)) / Γ(λ_k − λ_l + κ(l − k))."""

    kappa = as_kappa(kappa)
    lam = make_signature(lam)
    factors: List[SignedValue] = []
    for k in range(len(lam)):
        for l in range(k + 1, len(lam)):
            gap = lam[k] - lam[l]
            factors.append(gamma_ratio(gap + kappa * (l - k + 1), gap + kappa * (l - k)))
    return product(factors)


def kadell_value(lam: Signature, kappa: Real, r: Real, s: Real) -> SignedValue:
    """Kadell integral (1/n!)∫_{[0,1]ⁿ} P_λ ∏ x^{r−1}(1−x)^{s−1} ∏|x_k − x_l|^{2κ}.

    Equals v_λ(κ) ∏_j Γ(λ_j + r + κ(n−j)) Γ(s + κ(n−j)) / Γ(λ_j + r + s + κ(2n−j−1)).
    """

    kappa = as_kappa(kappa)
    lam = make_signature(lam)
    if not is_partition(lam):
        raise ShapeError(f"Kadell integral needs a partition, got {lam}")
    n = len(lam)
    factors = [v_lambda(lam, kappa)]
    for j, part in enumerate(lam, start=1):
        factors.append(gamma_signed(part + r + kappa * (n - j)))
        factors.append(gamma_signed(s + kappa * (n - j)))
        factors.append(gamma_signed(part + r + s + kappa * (2 * n - j - 1)).reciprocal())
    return product(factors)


def _reduced_factors(lam: Signature, kappa: Fraction, sigma: Real, tau: Real) -> List[SignedValue]:
    n = len(lam)
    factors = [v_lambda(lam, kappa)]
    for j, part in enumerate(lam, start=1):
        factors.append(_parity(part))
        factors.append(recip_gamma(-part + tau + 1 + kappa * (j - 1)))
        factors.append(recip_gamma(part + sigma + 1 + kappa * (n - j)))
    return factors


def _prefactor(n: int, kappa: Fraction, sigma: Real, tau: Real) -> SignedValue:
    """(2π)ⁿ n! ∏_j Γ(σ + τ + 1 + κ(n−j)), the λ-independent part of 𝓛_λ."""

    factors = [_two_pi_power(n), SignedValue.from_rational(factorial(n))]
    factors.extend(gamma_signed(sigma + tau + 1 + kappa * (n - j)) for j in range(1, n + 1))
    return product(factors)


def L_lambda(lam: Signature, kappa: Real, sigma: Real, tau: Real) -> SignedValue:
    """𝓛_λ(κ; σ, τ) = ∫_{Tⁿ} ∏ (1−x_k)^σ (1−x̄_k)^τ P_λ(x) ∏|x_k − x_l|^{2κ} dφ.

    Closed form (2π)ⁿ n! v_λ ∏_j (−1)^{λ_j} Γ(σ+τ+1+κ(n−j)) /
    [Γ(−λ_j+τ+1+κ(j−1)) Γ(λ_j+σ+1+κ(n−j))]. Negative parts are allowed.
    """

    kappa = as_kappa(kappa)
    lam = make_signature(lam)
    prefactor = _prefactor(len(lam), kappa, sigma, tau)
    return product([prefactor] + _reduced_factors(lam, kappa, sigma, tau))


def L_lambda_alt(lam: Signature, kappa: Real, sigma: Real, tau: Real) -> SignedValue:
    """𝓛_λ through the sine-reflection form, for integer κ and τ ∉ ℤ.

    2ⁿ n! (−sin πτ)ⁿ (−1)^{κn(n−1)/2} v_λ ∏_j Γ(λ_j − τ − κ(j−1)) Γ(σ+τ+1+κ(n−j)) /
    Γ(λ_j + σ + 1 + κ(n−j)).
    """

    kappa = as_kappa(kappa)
    if kappa.denominator != 1:
        raise UnsupportedError(f"The reflection form needs integer kappa, got {kappa}")
    if _is_integer(tau):
        raise UnsupportedError(f"The reflection form needs a non-integer tau, got {tau}")
    lam = make_signature(lam)
    n = len(lam)
    k = int(kappa)
    factors = [
        SignedValue.from_rational(2 ** n * factorial(n)),
        (-sin_pi(tau)).power(n),
        _parity(k * n * (n - 1) // 2),
        v_lambda(lam, kappa),
    ]
    for j, part in enumerate(lam, start=1):
        factors.append(gamma_signed(part - tau - k * (j - 1)))
        factors.append(gamma_signed(sigma + tau + 1 + k * (n - j)))
        factors.append(recip_gamma(part + sigma + 1 + k * (n - j)))
    return product(factors)


def _is_integer(x: Real) -> bool:
    if isinstance(x, float):
        return abs(x - round(x)) < 1e-9
    return Fraction(x).denominator == 1


def c_lambda(lam: Signature, spec: KernelSpec) -> SignedValue:
    """Kernel eigenvalue c_λ(σ, τ) = 𝓛_λ / P_λ(1ⁿ)."""

    lam = _checked(lam, spec)
    ones = eval_at_ones(jack_laurent(lam, spec.n, spec.kappa))
    return L_lambda(lam, spec.kappa, spec.sigma, spec.tau) / SignedValue.from_rational(ones)


def c_lambda_reduced(lam: Signature, spec: KernelSpec) -> SignedValue:
    """c_λ with the λ-independent prefactor dropped; finite for every real σ, τ."""

    lam = _checked(lam, spec)
    ones = eval_at_ones(jack_laurent(lam, spec.n, spec.kappa))
    reduced = product(_reduced_factors(lam, spec.kappa, spec.sigma, spec.tau))
    return reduced / SignedValue.from_rational(ones)


def c_lambda_leading(
    lam: Signature, spec: KernelSpec, direction: Tuple[Real, Real] = (1, -1)
) -> LeadingTerm:
    """Leading term of c_lambda_reduced at (σ + dσ·ε, τ + dτ·ε) as ε → 0.

    Where a reciprocal gamma sits on a pole it contributes (−1)^m m! · d · ε.
    """

    lam = _checked(lam, spec)
    d_sigma, d_tau = direction
    if d_sigma == 0 or d_tau == 0:
        raise UnsupportedError(f"Direction components must be non-zero, got {direction}")
    kappa, n = spec.kappa, spec.n
    factors = [v_lambda(lam, kappa)]
    order = 0
    for j, part in enumerate(lam, start=1):
        factors.append(_parity(part))
        for argument, slope in (
            (-part + spec.tau + 1 + kappa * (j - 1), d_tau),
            (part + spec.sigma + 1 + kappa * (n - j), d_sigma),
        ):
            coeff, k = recip_gamma_leading(argument)
            factors.append(coeff)
            if k:
                factors.append(SignedValue.from_real(slope).power(k))
                order += k
    ones = eval_at_ones(jack_laurent(lam, n, kappa))
    return LeadingTerm(product(factors) / SignedValue.from_rational(ones), order)


def selberg_value(spec: KernelSpec) -> SignedValue:
    """𝓛₀(κ; σ, τ), the Cauchy-type Selberg integral."""

    value = L_lambda((0,) * spec.n, spec.kappa, spec.sigma, spec.tau)
    logger.debug(f"Selberg value for {spec.to_dict()}: {value.to_dict()}")
    return value


def _checked(lam: Signature, spec: KernelSpec) -> Signature:
    lam = make_signature(lam)
    if len(lam) != spec.n:
        raise ShapeError(f"Signature {lam} has {len(lam)} parts, expected n={spec.n}")
    return lam
