"""Positivity predicates, (s, t) windows and sign-constancy scans."""

from sahi_kernels.src.positivity.predicates import (
    check_hypotheses,
    definite_predicate,
    st_to_sigma_tau,
    window_predicate,
)
from sahi_kernels.src.positivity.scan import (
    ScanReport,
    Verdict,
    minimal_witness_radius,
    region_grid,
    report_from_census,
    scan_sign_constancy,
    sign_census,
    witness_order,
)

__all__ = [
    "ScanReport",
    "Verdict",
    "check_hypotheses",
    "definite_predicate",
    "minimal_witness_radius",
    "region_grid",
    "report_from_census",
    "scan_sign_constancy",
    "sign_census",
    "st_to_sigma_tau",
    "window_predicate",
    "witness_order",
]
