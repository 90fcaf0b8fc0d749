"""sahi_kernels: Jack polynomials, determinant-kernel eigenvalues and positivity checks."""

__version__ = "0.1.0"
