"""Independent exact and numerical oracles for the closed forms."""

from sahi_kernels.src.oracle.exact import cube_integral_exact, torus_integral_exact
from sahi_kernels.src.oracle.gram import (
    exact_pairing,
    gram_matrix,
    gram_to_array,
    numeric_pairing,
)
from sahi_kernels.src.oracle.quadrature import (
    QuadratureResult,
    QuadratureSpec,
    boundary_series,
    corrected_midpoint,
    endpoint_correction,
    hurwitz_half,
    integrand_value,
    torus_integral_montecarlo,
    torus_integral_numeric,
)
from sahi_kernels.src.oracle.schur import complete_homogeneous, schur_polynomial

__all__ = [
    "QuadratureResult",
    "QuadratureSpec",
    "boundary_series",
    "complete_homogeneous",
    "corrected_midpoint",
    "cube_integral_exact",
    "endpoint_correction",
    "exact_pairing",
    "gram_matrix",
    "gram_to_array",
    "hurwitz_half",
    "integrand_value",
    "numeric_pairing",
    "schur_polynomial",
    "torus_integral_exact",
    "torus_integral_montecarlo",
    "torus_integral_numeric",
]
