"""Integer combinatorics: signatures, dominance, enumeration, Pochhammer symbols."""

from sahi_kernels.src.partitions.signatures import (
    Signature,
    dominance_leq,
    format_signature,
    is_partition,
    make_signature,
    orbit_size,
    parse_signature,
    partitions_of,
    shift,
    signatures_in_box,
    weight,
)
from sahi_kernels.src.partitions.rational import (
    RationalScalar,
    format_rational,
    parse_rational,
    parse_real,
    pochhammer,
)

__all__ = [
    "Signature",
    "RationalScalar",
    "dominance_leq",
    "format_rational",
    "format_signature",
    "is_partition",
    "make_signature",
    "orbit_size",
    "parse_rational",
    "parse_real",
    "parse_signature",
    "partitions_of",
    "pochhammer",
    "shift",
    "signatures_in_box",
    "weight",
]
