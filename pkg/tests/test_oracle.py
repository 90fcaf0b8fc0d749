"""Test the exact and numerical oracles."""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sahi_kernels.src.errors import QuadratureDomainError, ShapeError, UnsupportedError
from sahi_kernels.src.kernel import L_lambda
from sahi_kernels.src.oracle import (
    QuadratureSpec,
    boundary_series,
    complete_homogeneous,
    corrected_midpoint,
    cube_integral_exact,
    endpoint_correction,
    exact_pairing,
    gram_matrix,
    gram_to_array,
    hurwitz_half,
    integrand_value,
    numeric_pairing,
    schur_polynomial,
    torus_integral_exact,
    torus_integral_montecarlo,
    torus_integral_numeric,
)
from sahi_kernels.src.partitions import signatures_in_box
from sahi_kernels.src.sympoly import LaurentSymPoly


class TestExactOracles:
    """Test constant-term and cube integration."""

    def test_torus_examples(self):
        """Constant terms of small integrands."""
        assert torus_integral_exact((0, 0), 1, 0, 0) == 2
        assert torus_integral_exact((1,), 1, 0, 0) == 0
        assert torus_integral_exact((0, 0), 2, 0, 0) == 6
        assert torus_integral_exact((1,), 1, 1, 1) == -1

    def test_selberg_normalisation(self):
        """κ = 2, n = 2 constant term equals the closed form over (2π)²."""
        closed = L_lambda((0, 0), 2, 0, 0)
        assert closed.rational_part(2) / 4 == torus_integral_exact((0, 0), 2, 0, 0)

    def test_integer_data_required(self):
        """Fractional exponents are for the numerical oracle."""
        with pytest.raises(UnsupportedError):
            torus_integral_exact((0,), 1, Fraction(1, 2), 0)
        with pytest.raises(UnsupportedError):
            torus_integral_exact((0, 0), Fraction(1, 2), 0, 0)
        with pytest.raises(UnsupportedError):
            cube_integral_exact((0,), 1, 0, 1)

    def test_cube_examples(self):
        """Beta integrals and the Vandermonde square."""
        assert cube_integral_exact((0,), 1, 1, 1) == 1
        assert cube_integral_exact((1,), 1, 1, 1) == Fraction(1, 2)
        assert cube_integral_exact((0, 0), 1, 1, 1) == Fraction(1, 12)


class TestSchur:
    """Test the Jacobi–Trudi oracle."""

    def test_complete_homogeneous(self):
        """h_k sums every monomial of degree k."""
        assert complete_homogeneous(2, 2) == LaurentSymPoly(2, {(2, 0): 1, (1, 1): 1})
        assert complete_homogeneous(-1, 2) == LaurentSymPoly(2)

    def test_schur_examples(self):
        """s_(2,0) and s_(1,1) in two variables."""
        assert schur_polynomial((2, 0), 2) == LaurentSymPoly(2, {(2, 0): 1, (1, 1): 1})
        assert schur_polynomial((1, 1), 2) == LaurentSymPoly(2, {(1, 1): 1})
        assert schur_polynomial((0, 0), 2) == LaurentSymPoly.one(2)
        assert schur_polynomial((1, -1), 2) == LaurentSymPoly(2, {(1, -1): 1, (0, 0): 1})

    def test_schur_dimension(self):
        """s_(2,1,0)(1,1,1) = 8."""
        poly = schur_polynomial((2, 1, 0), 3)
        assert sum(poly.to_laurent().terms.values()) == 8


class TestIntegrand:
    """Test pointwise integrand values."""

    def test_examples(self):
        """Trivial integrand, boundary factor and diagonal zero."""
        np.testing.assert_allclose(integrand_value(np.array([[1.0]]), (0,), 1, 0, 0), [1.0])
        np.testing.assert_allclose(integrand_value(np.array([[math.pi]]), (0,), 1, 0.5, 0.5), [2.0])
        value = integrand_value(np.array([[1.0, 1.0]]), (0, 0), Fraction(1, 2), 0.3, 0.3)
        assert abs(value[0]) == 0

    def test_node_domain(self):
        """φ = 0 is not a node."""
        with pytest.raises(QuadratureDomainError):
            integrand_value(np.array([[0.0]]), (0,), 1, 0.5, 0.5)
        with pytest.raises(ShapeError):
            integrand_value(np.array([[1.0]]), (0, 0), 1, 0, 0)

    @pytest.mark.parametrize("sigma,tau", [(0.3, 0.45), (-0.4, 1.2), (1.5, -0.2), (2, 1)])
    def test_boundary_series_limit(self, sigma, tau):
        """The power series at r → 1 approaches the boundary factor of the integrand."""
        phi = np.linspace(0.5, 2 * math.pi - 0.5, 9)
        boundary = integrand_value(phi[:, None], (0,), 1, sigma, tau)
        errors = [np.abs(boundary_series(phi, sigma, tau, 1 - eps) / boundary - 1).max() for eps in (1e-2, 1e-3)]
        assert errors[1] < errors[0]
        assert errors[1] < 1e-2

    def test_boundary_series_inside_disc(self):
        """Inside the disc the series is the principal-branch power."""
        phi = np.linspace(0.1, 6.0, 7)
        z = 0.9 * np.exp(1j * phi)
        expected = (1 - z) ** 0.7 * (1 - np.conj(z)) ** -0.35
        np.testing.assert_allclose(boundary_series(phi, 0.7, -0.35, 0.9), expected, rtol=1e-12)
        with pytest.raises(UnsupportedError):
            boundary_series(phi, 0.7, -0.35, 1.0)


class TestEndpointCorrection:
    """Test the corrected midpoint rule."""

    def test_hurwitz_half(self):
        """ζ(s, ½) at negative integers."""
        assert hurwitz_half(-1) == pytest.approx(1 / 24)
        assert hurwitz_half(0) == pytest.approx(0, abs=1e-15)
        assert hurwitz_half(-2) == pytest.approx(0, abs=1e-12)

    def test_smooth_case_needs_no_correction(self):
        """α = 0 and β = 0: the midpoint rule is exact."""
        assert abs(endpoint_correction(0.0, 0.0, 0.0, 64)) < 1e-12

    def test_singular_moment(self):
        """∫(2 sin(φ/2))^α dφ = 2π Γ(α+1)/Γ(α/2+1)²."""
        alpha = 0.6
        exact = 2 * math.pi * math.gamma(alpha + 1) / math.gamma(alpha / 2 + 1) ** 2
        coarse = corrected_midpoint(alpha, 0.0, 0.0, 256)
        raw_phi = 2 * math.pi * (np.arange(256) + 0.5) / 256
        raw = np.sum((2 * np.sin(raw_phi / 2)) ** alpha) * 2 * math.pi / 256
        assert abs(coarse - exact) < abs(raw - exact)
        assert abs(coarse - exact) / exact < 1e-6


class TestNumericIntegral:
    """Test torus quadrature against closed forms."""

    def test_constant_integrand(self):
        """n = 1, λ = 0, σ = τ = 0 gives 2π."""
        result = torus_integral_numeric((0,), 1, 0, 0, QuadratureSpec(16, 1))
        assert result.value == pytest.approx(2 * math.pi, rel=1e-14)
        assert result.warnings == []

    def test_one_variable_polynomial(self):
        """n = 1, λ = (1), σ = τ = 1 gives −2π."""
        result = torus_integral_numeric((1,), 1, 1, 1, QuadratureSpec(2 ** 14, 1))
        assert abs(result.value - (-2 * math.pi)) < 1e-8 * 2 * math.pi

    def test_one_variable_singular(self):
        """Fractional exponents converge fast with the correction."""
        closed = L_lambda((2,), 1, 0.3, 0.45).to_float()
        result = torus_integral_numeric((2,), 1, 0.3, 0.45, QuadratureSpec(2 ** 12, 1))
        assert abs(result.value - closed) < 1e-8 * abs(closed)
        assert abs(result.value.imag) < 1e-8 * abs(closed)

    def test_two_variables(self):
        """n = 2, κ = 1, λ = (1, 0), σ = τ = 1/2 within 10⁻⁴."""
        closed = L_lambda((1, 0), 1, 0.5, 0.5).to_float()
        result = torus_integral_numeric((1, 0), 1, 0.5, 0.5, QuadratureSpec(2 ** 10, 2), tolerance=1e-3)
        assert abs(result.value - closed) < 1e-4 * abs(closed)

    def test_three_variables_lattice(self):
        """n = 3 uses the shifted lattice rule with a standard error."""
        quad = QuadratureSpec(8, 3)
        closed = L_lambda((0, 0, 0), 1, 0, 0).to_float()
        value, stderr = torus_integral_montecarlo((0, 0, 0), 1, 0, 0, quad)
        assert abs(value - closed) < 1e-2 * closed
        assert stderr >= 0

    @settings(max_examples=20, deadline=None)
    @given(
        sigma=st.floats(0.1, 0.9),
        tau=st.floats(0.1, 0.9),
        part=st.integers(-5, 5),
    )
    def test_one_variable_random(self, sigma, tau, part):
        """Random σ, τ and λ ∈ [−5, 5] at N = 2¹⁴ within 10⁻⁸."""
        closed = L_lambda((part,), 1, sigma, tau).to_float()
        result = torus_integral_numeric((part,), 1, sigma, tau, QuadratureSpec(2 ** 14, 1))
        assert abs(result.value - closed) < 1e-8 * abs(closed)

    @settings(max_examples=10, deadline=None)
    @given(
        kappa=st.sampled_from([Fraction(1, 2), Fraction(1), Fraction(2)]),
        sigma=st.floats(0.55, 0.95),
        tau=st.floats(0.55, 0.95),
        lam=st.sampled_from(signatures_in_box(2, -2, 2)),
    )
    def test_two_variables_random(self, kappa, sigma, tau, lam):
        """σ + τ ≥ 1 with N = 2¹⁰ per axis within 10⁻⁴."""
        closed = L_lambda(lam, kappa, sigma, tau).to_float()
        result = torus_integral_numeric(lam, kappa, sigma, tau, QuadratureSpec(2 ** 10, 2), tolerance=1e-3)
        assert abs(result.value - closed) < 1e-4 * abs(closed)

    @pytest.mark.parametrize("lam", [(0, 0, 0), (1, 0, 0), (1, 0, -1)])
    def test_three_variables_within_three_sigma(self, lam):
        """The lattice mean sits within three standard errors of the closed form."""
        closed = L_lambda(lam, 1, 0.75, 0.75).to_float()
        value, stderr = torus_integral_montecarlo(lam, 1, 0.75, 0.75, QuadratureSpec(8, 3))
        assert abs(value - closed) <= 3 * stderr + 1e-9 * abs(closed)

    def test_divergent_and_invalid(self):
        """σ + τ ≤ −1 and unsupported ranks."""
        with pytest.raises(UnsupportedError):
            torus_integral_numeric((0,), 1, -0.5, -0.5, QuadratureSpec(16, 1))
        with pytest.raises(UnsupportedError):
            QuadratureSpec(16, 4)
        with pytest.raises(ShapeError):
            torus_integral_numeric((0, 0), 1, 0, 0, QuadratureSpec(16, 1))

    def test_warning_attached(self):
        """A loose estimate is reported, not hidden."""
        result = torus_integral_numeric((1, 0), 1, 0.1, 0.1, QuadratureSpec(16, 2), tolerance=1e-12)
        assert result.warnings
        assert result.to_dict()["warnings"] == result.warnings


class TestGram:
    """Test Gram matrices of Jack polynomials."""

    def test_exact_schur_orthogonality(self):
        """κ = 1: diagonal with exact zeros off the diagonal."""
        lambdas = [(1, 0), (2, 0), (1, 1)]
        matrix = gram_matrix(lambdas, 2, 1)
        for i, row in enumerate(matrix):
            for j, entry in enumerate(row):
                if i == j:
                    assert entry.rational_part(2) == 8
                else:
                    assert entry.is_zero

    def test_single_entry_positive(self):
        """One signature gives a positive 1×1 matrix."""
        matrix = gram_matrix([(2, 1, 0)], 3, 2)
        assert len(matrix) == 1 and matrix[0][0].sign == 1

    def test_numeric_half_kappa(self):
        """κ = 1/2: off-diagonal entries vanish numerically."""
        lambdas = [(1, 0), (2, 0), (1, 1)]
        array = gram_to_array(gram_matrix(lambdas, 2, Fraction(1, 2), method="numeric", points=2 ** 10))
        diagonal = np.diag(array)
        assert (diagonal > 0).all()
        off = array - np.diag(diagonal)
        assert np.abs(off).max() < 1e-8 * diagonal.min()

    def test_numeric_matches_exact(self):
        """At integer κ both pairings agree."""
        for lam in [(1, 0), (2, 0), (1, 1), (1, -1)]:
            exact = exact_pairing(lam, lam, 2, Fraction(1))
            numeric = numeric_pairing(lam, lam, 2, Fraction(1), 256)
            assert numeric.to_float() == pytest.approx(exact.to_float(), rel=1e-10)

    @pytest.mark.parametrize("kappa", [1, 2])
    def test_exact_pairing_hermitian(self, kappa):
        """⟨P_λ, P_μ⟩ = ⟨P_μ, P_λ⟩ when each side is computed on its own."""
        lambdas = signatures_in_box(2, -1, 2)
        for a in lambdas:
            for b in lambdas:
                assert exact_pairing(a, b, 2, Fraction(kappa)) == exact_pairing(b, a, 2, Fraction(kappa))

    def test_numeric_pairing_hermitian(self):
        """The numeric pairing is symmetric up to rounding at κ = 1/2."""
        lambdas = [(2, 0), (1, 1), (2, -1), (1, 0)]
        for a in lambdas:
            for b in lambdas:
                left = numeric_pairing(a, b, 2, Fraction(1, 2), 512).to_float()
                right = numeric_pairing(b, a, 2, Fraction(1, 2), 512).to_float()
                assert left == pytest.approx(right, rel=1e-12, abs=1e-12)

    def test_numeric_three_variables_matches_exact(self):
        """n = 3 goes through the lattice rule and matches the constant term at κ = 1."""
        for lam, mu in [((1, 0, 0), (1, 0, 0)), ((1, 1, 0), (1, 1, 0)), ((2, 1, 0), (2, 1, 0)), ((2, 0, 0), (1, 1, 0))]:
            exact = exact_pairing(lam, mu, 3, Fraction(1)).to_float()
            numeric = numeric_pairing(lam, mu, 3, Fraction(1), 1024).to_float()
            assert numeric == pytest.approx(exact, rel=1e-9, abs=1e-9)

    def test_numeric_three_variables_half_kappa(self):
        """κ = 1/2, n = 3: positive diagonal, off-diagonal small against it."""
        lambdas = [(2, 0, 0), (1, 1, 0)]
        array = gram_to_array(gram_matrix(lambdas, 3, Fraction(1, 2), method="numeric"))
        diagonal = np.diag(array)
        assert (diagonal > 0).all()
        assert abs(array[0, 1]) < 1e-2 * diagonal.min()
        assert array[0, 1] == array[1, 0]

    def test_numeric_rank_limit(self):
        """Numeric pairings stop at three variables."""
        with pytest.raises(UnsupportedError):
            numeric_pairing((1, 0, 0, 0), (1, 0, 0, 0), 4, Fraction(1), 64)

    def test_method_checks(self):
        """Exact needs integer κ; unknown methods fail."""
        with pytest.raises(UnsupportedError):
            gram_matrix([(1, 0)], 2, Fraction(1, 2), method="exact")
        with pytest.raises(UnsupportedError):
            gram_matrix([(1, 0)], 2, 1, method="svd")
