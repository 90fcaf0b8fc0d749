"""Diagonalisation of ⟨F, G⟩_{σ,τ} in the Jack basis.

⟨F, G⟩ = Σ_λ c_λ(σ, τ) f_λ conj(g_λ) ‖P_λ‖²_κ for F = Σ f_λ P_λ, G = Σ g_λ P_λ.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple, Union

import numpy as np
import pandas as pd
from loguru import logger

from sahi_kernels.src.errors import ShapeError, UnsupportedError
from sahi_kernels.src.gammaval import SignedValue
from sahi_kernels.src.jack import as_kappa, jack_laurent
from sahi_kernels.src.kernel import (
    KernelSpec,
    Space,
    c_lambda,
    c_lambda_leading,
    c_lambda_reduced,
)
from sahi_kernels.src.oracle import QuadratureSpec, exact_pairing, numeric_pairing
from sahi_kernels.src.partitions import Signature, format_signature, signatures_in_box
from sahi_kernels.src.positivity import st_to_sigma_tau
from sahi_kernels.src.sympoly import LaurentSymPoly

Coefficient = Union[Fraction, complex, float]

L2_TOLERANCE = 1e-9


@dataclass
class JackExpansion:
    """F = Σ f_λ P_λ(x; κ) with finite support."""

    n: int
    kappa: Fraction
    coefficients: Dict[Signature, Coefficient] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.kappa = as_kappa(self.kappa)
        for sig in self.coefficients:
            if len(sig) != self.n:
                raise ShapeError(f"Signature {sig} has {len(sig)} parts, expected {self.n}")
        self.coefficients = {s: c for s, c in self.coefficients.items() if c != 0}

    def to_sympoly(self) -> LaurentSymPoly:
        """Σ f_λ P_λ back in the monomial basis (rational coefficients only)."""

        total = LaurentSymPoly(self.n)
        for sig, coeff in self.coefficients.items():
            if not isinstance(coeff, (int, Fraction)):
                raise UnsupportedError("Only rational expansions convert back exactly")
            total = total + jack_laurent(sig, self.n, self.kappa).expansion * coeff
        return total

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "kappa": str(self.kappa),
            "coefficients": {format_signature(s): str(c) for s, c in sorted(self.coefficients.items(), reverse=True)},
        }


def expand_in_jack(f: LaurentSymPoly, kappa) -> JackExpansion:
    """Change of basis m → P by peeling off the lexicographically leading orbit."""

    kappa = as_kappa(kappa)
    remainder = f
    coefficients: Dict[Signature, Fraction] = {}
    while remainder.terms:
        leading = max(remainder.terms)
        coeff = remainder.terms[leading]
        coefficients[leading] = coeff
        remainder = remainder - jack_laurent(leading, f.n, kappa).expansion * coeff
    return JackExpansion(f.n, kappa, coefficients)


def _norm(sig: Signature, n: int, kappa: Fraction, points: int) -> SignedValue:
    if kappa.denominator == 1:
        return exact_pairing(sig, sig, n, kappa)
    return numeric_pairing(sig, sig, n, kappa, points)


def _check_pair(F: JackExpansion, G: JackExpansion, spec: KernelSpec) -> None:
    if F.n != spec.n or G.n != spec.n:
        raise ShapeError(f"Expansions in {F.n} and {G.n} variables for a rank-{spec.n} kernel")
    if F.kappa != spec.kappa or G.kappa != spec.kappa:
        raise ShapeError(f"Expansions use kappa {F.kappa}/{G.kappa}, kernel uses {spec.kappa}")


def _diagonal_sum(
    F: JackExpansion,
    G: JackExpansion,
    spec: KernelSpec,
    eigen: Callable[[Signature, KernelSpec], SignedValue],
    points: int,
) -> complex:
    _check_pair(F, G, spec)
    total = 0j
    # Sorted support keeps the floating-point reduction order fixed.
    for sig in sorted(set(F.coefficients) & set(G.coefficients)):
        weight = eigen(sig, spec) * _norm(sig, spec.n, spec.kappa, points)
        total += weight.to_float() * complex(F.coefficients[sig]) * np.conj(complex(G.coefficients[sig]))
    return complex(total)


def form_value(F: JackExpansion, G: JackExpansion, spec: KernelSpec, points: int = 1024) -> complex:
    """⟨F, G⟩_{σ,τ}; needs σ + τ > −1 (use form_value_reduced otherwise)."""

    if spec.sigma + spec.tau <= -1:
        raise UnsupportedError(
            f"The form diverges for σ+τ ≤ −1 (σ={spec.sigma}, τ={spec.tau}); use form_value_reduced"
        )
    return _diagonal_sum(F, G, spec, c_lambda, points)


def form_value_reduced(
    F: JackExpansion, G: JackExpansion, spec: KernelSpec, points: int = 1024
) -> complex:
    """The form with the λ-independent prefactor (2π)ⁿ n! ∏Γ(σ+τ+1+κ(n−j)) dropped."""

    return _diagonal_sum(F, G, spec, c_lambda_reduced, points)


@dataclass
class L2Report:
    """Ratios c_λ / c_0 at the s = t = 0 point of a family."""

    space: Space
    n: int
    box: int
    mode: str
    passed: bool
    table: pd.DataFrame

    def to_dict(self) -> Dict[str, object]:
        return {
            "space": self.space.value,
            "n": self.n,
            "box": self.box,
            "mode": self.mode,
            "passed": self.passed,
            "count": int(len(self.table)),
            "max_log_deviation": float(self.table["log_ratio"].abs().max()) if len(self.table) else 0.0,
            "failures": [s for s, ok in zip(self.table["signature"], self.table["ok"]) if not ok],
        }


def l2_degeneration_report(
    space: Space, n: int, box: int, direction: Tuple[int, int] = (1, -1)
) -> L2Report:
    """Tabulate r_λ = c_reduced(λ)/c_reduced(0) at s = t = 0 over signatures_in_box(n, −box, box).

    When the reduced eigenvalue vanishes identically there (integer σ, τ) the leading terms
    along `direction` are compared instead, orders included.
    """

    sigma, tau = st_to_sigma_tau(space, n, 0, 0)
    spec = KernelSpec(space, n, sigma, tau)
    zero = (0,) * n
    signatures = signatures_in_box(n, -box, box)

    base = c_lambda_reduced(zero, spec)
    mode = "reduced"
    base_order = 0
    if base.is_zero:
        mode = "leading"
        base, base_order = c_lambda_leading(zero, spec, direction)

    rows: List[Dict[str, object]] = []
    for sig in signatures:
        order = 0
        if mode == "reduced":
            value = c_lambda_reduced(sig, spec)
        else:
            value, order = c_lambda_leading(sig, spec, direction)
        same_sign = value.sign == base.sign and value.sign != 0
        log_ratio = value.log_magnitude - base.log_magnitude if same_sign else math.inf
        ok = same_sign and order == base_order and abs(log_ratio) < L2_TOLERANCE
        rows.append(
            {
                "signature": format_signature(sig),
                "sign": value.sign,
                "order": order,
                "log_ratio": log_ratio,
                "ok": ok,
            }
        )
    table = pd.DataFrame(rows, columns=["signature", "sign", "order", "log_ratio", "ok"])
    passed = bool(table["ok"].all())
    logger.info(f"L² check {space.value} n={n} box={box} ({mode}): {'pass' if passed else 'fail'}")
    return L2Report(space, n, box, mode, passed, table)


def _evaluate_one_variable(F: JackExpansion, angles: np.ndarray) -> np.ndarray:
    values = np.zeros(angles.shape, dtype=complex)
    for sig, coeff in F.coefficients.items():
        values += complex(coeff) * np.exp(1j * sig[0] * angles)
    return values


def direct_form_quadrature(
    F: JackExpansion, G: JackExpansion, spec: KernelSpec, quad: Optional[QuadratureSpec] = None
) -> complex:
    """n = 1: ∬ ℓ(ψ − φ) F(e^{iψ}) conj(G(e^{iφ})) dψ dφ with ℓ(θ) = (1 − e^{iθ})^σ (1 − e^{−iθ})^τ.

    φ sits on midpoints and ψ on the integer grid, so every difference ψ − φ is a
    midpoint of the θ-rule; the double sum is a circular correlation evaluated by FFT.
    """

    _check_pair(F, G, spec)
    if spec.n != 1:
        raise UnsupportedError(f"The direct double integral is implemented for n = 1, got n={spec.n}")
    quad = quad or QuadratureSpec(points_per_dim=2 ** 14, n=1)
    N = quad.points_per_dim
    h = 2.0 * math.pi / N
    alpha, beta = float(spec.sigma + spec.tau), float(spec.sigma - spec.tau)

    phi = (np.arange(N) + 0.5) * h
    psi = np.arange(N) * h
    # ψ_k − φ_m = (k − m − ½)h ≡ θ_{(k − m − 1) mod N}
    theta = (np.arange(N) + 0.5) * h
    kernel = (2.0 * np.sin(theta / 2.0)) ** alpha * np.exp(0.5j * beta * (theta - math.pi))
    f_values = _evaluate_one_variable(F, psi)
    g_values = np.conj(_evaluate_one_variable(G, phi))
    # inner[m] = Σ_k kernel[(k − m − 1) mod N] f[k], a circular convolution of the
    # reversed kernel with f shifted by one node
    reversed_kernel = np.roll(kernel[::-1], 1)
    inner = np.fft.ifft(np.fft.fft(reversed_kernel) * np.fft.fft(np.roll(f_values, -1)))
    total = np.sum(g_values * inner) * h * h
    return complex(total)
