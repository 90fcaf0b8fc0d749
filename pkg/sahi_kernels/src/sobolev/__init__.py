"""The invariant Hermitian form on finite Jack expansions."""

from sahi_kernels.src.sobolev.form import (
    JackExpansion,
    L2Report,
    direct_form_quadrature,
    expand_in_jack,
    form_value,
    form_value_reduced,
    l2_degeneration_report,
)

__all__ = [
    "JackExpansion",
    "L2Report",
    "direct_form_quadrature",
    "expand_in_jack",
    "form_value",
    "form_value_reduced",
    "l2_degeneration_report",
]
