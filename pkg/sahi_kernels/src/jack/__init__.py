"""Jack polynomials P_λ(x; κ) for rational κ > 0, including the Laurent extension."""

from sahi_kernels.src.jack.construct import (
    JackPolynomial,
    as_kappa,
    eigen_operator_matrix,
    eigenvalue,
    eval_at_ones,
    jack_laurent,
    jack_P,
)

__all__ = [
    "JackPolynomial",
    "as_kappa",
    "eigen_operator_matrix",
    "eigenvalue",
    "eval_at_ones",
    "jack_laurent",
    "jack_P",
]
