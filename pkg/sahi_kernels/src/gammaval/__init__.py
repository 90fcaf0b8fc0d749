"""Sign-exact gamma arithmetic in (sign, log) space with exact rational paths."""

from sahi_kernels.src.gammaval.signed import (
    SignedValue,
    gamma_ratio,
    gamma_signed,
    is_pole,
    product,
    recip_gamma,
    recip_gamma_leading,
    set_pole_epsilon,
    sin_pi,
)

__all__ = [
    "SignedValue",
    "gamma_ratio",
    "gamma_signed",
    "is_pole",
    "product",
    "recip_gamma",
    "recip_gamma_leading",
    "set_pole_epsilon",
    "sin_pi",
]
