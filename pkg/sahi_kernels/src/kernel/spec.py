"""Kernel parameters: symmetric space, torus rank and (σ, τ)."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Union

from sahi_kernels.src.errors import ParseError, UnsupportedError

Real = Union[int, Fraction, float]


class Space(str, Enum):
    UN = "UN"  # U(n)×U(n)/U(n)
    UO = "UO"  # U(n)/O(n)
    USp = "USp"  # U(2n)/Sp(n)

    @classmethod
    def parse(cls, text: str) -> "Space":
        for space in cls:
            if space.value.lower() == text.strip().lower():
                return space
        raise ParseError(f"Unknown space '{text}'; expected one of {[s.value for s in cls]}")


KAPPA_BY_SPACE: Dict[Space, Fraction] = {
    Space.UN: Fraction(1),
    Space.UO: Fraction(1, 2),
    Space.USp: Fraction(2),
}


@dataclass(frozen=True)
class KernelSpec:
    """The kernel det(1 − zu*)^{σ|τ} on one of the three spaces."""

    space: Space
    n: int
    sigma: Real
    tau: Real

    def __post_init__(self) -> None:
        if self.n < 1:
            raise UnsupportedError(f"Torus rank must be positive, got n={self.n}")

    @property
    def kappa(self) -> Fraction:
        return KAPPA_BY_SPACE[self.space]

    def to_dict(self) -> Dict[str, object]:
        return {
            "space": self.space.value,
            "n": self.n,
            "kappa": str(self.kappa),
            "sigma": str(self.sigma),
            "tau": str(self.tau),
        }
