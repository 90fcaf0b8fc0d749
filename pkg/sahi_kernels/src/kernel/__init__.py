"""Closed forms for the Kadell integral, the torus integral 𝓛_λ and kernel eigenvalues."""

from sahi_kernels.src.kernel.closed_form import (
    LeadingTerm,
    L_lambda,
    L_lambda_alt,
    c_lambda,
    c_lambda_leading,
    c_lambda_reduced,
    kadell_value,
    selberg_value,
    v_lambda,
)
from sahi_kernels.src.kernel.spec import KAPPA_BY_SPACE, KernelSpec, Space

__all__ = [
    "KAPPA_BY_SPACE",
    "KernelSpec",
    "LeadingTerm",
    "L_lambda",
    "L_lambda_alt",
    "Space",
    "c_lambda",
    "c_lambda_leading",
    "c_lambda_reduced",
    "kadell_value",
    "selberg_value",
    "v_lambda",
]
