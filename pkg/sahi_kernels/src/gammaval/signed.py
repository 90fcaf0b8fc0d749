"""SignedValue and gamma functions evaluated without overflow.

A SignedValue stores sign and log|value|. When the value is known exactly it also
carries `exact`, a rational multiplier of pi**pi_power (pi_power a half-integer), which
covers gamma at integers and half-integers as well as every closed form built from
them at integer data.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, Optional, Tuple, Union

import numpy as np
from scipy.special import gammaln

from sahi_kernels.src.errors import ParseError, PoleError
from sahi_kernels.src.partitions import format_rational, parse_rational, pochhammer

Real = Union[int, Fraction, float]

POLE_EPSILON = 1e-9
LOG_PI = math.log(math.pi)
HALF = Fraction(1, 2)


def set_pole_epsilon(value: float) -> None:
    """Distance below which an argument counts as a non-positive integer."""

    global POLE_EPSILON
    if value <= 0:
        raise ValueError(f"Pole epsilon must be positive, got {value}")
    POLE_EPSILON = value


def _log_abs_rational(q: Fraction) -> float:
    return math.log(abs(q.numerator)) - math.log(q.denominator)


def _as_exact(x: Real) -> Optional[Fraction]:
    """Exact value of x when it is rational input or a float half-integer."""

    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, (float, np.floating)) and math.isfinite(x) and float(2 * x).is_integer():
        return Fraction(float(x))
    return None


@dataclass(frozen=True)
class SignedValue:
    """sign · exp(log_magnitude); equals exact · π^pi_power when exact is set."""

    sign: int
    log_magnitude: float
    exact: Optional[Fraction] = None
    pi_power: Fraction = field(default=Fraction(0))

    @classmethod
    def zero(cls) -> "SignedValue":
        return cls(0, -math.inf, Fraction(0))

    @classmethod
    def one(cls) -> "SignedValue":
        return cls(1, 0.0, Fraction(1))

    @classmethod
    def from_rational(cls, q: Union[int, Fraction], pi_power: Fraction = Fraction(0)) -> "SignedValue":
        q = Fraction(q)
        if q == 0:
            return cls.zero()
        pi_power = Fraction(pi_power)
        sign = 1 if q > 0 else -1
        return cls(sign, _log_abs_rational(q) + float(pi_power) * LOG_PI, q, pi_power)

    @classmethod
    def from_real(cls, x: Real) -> "SignedValue":
        exact = _as_exact(x)
        if exact is not None:
            return cls.from_rational(exact)
        if x == 0:
            return cls.zero()
        return cls(1 if x > 0 else -1, math.log(abs(x)))

    @classmethod
    def from_float(cls, x: float) -> "SignedValue":
        if x == 0:
            return cls.zero()
        return cls(1 if x > 0 else -1, math.log(abs(x)))

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def __mul__(self, other: "SignedValue") -> "SignedValue":
        return product([self, other])

    def __neg__(self) -> "SignedValue":
        exact = -self.exact if self.exact is not None else None
        return SignedValue(-self.sign, self.log_magnitude, exact, self.pi_power)

    def reciprocal(self) -> "SignedValue":
        if self.sign == 0:
            raise PoleError("Reciprocal of an exact zero")
        if self.exact is not None:
            return SignedValue(self.sign, -self.log_magnitude, 1 / self.exact, -self.pi_power)
        return SignedValue(self.sign, -self.log_magnitude)

    def __truediv__(self, other: "SignedValue") -> "SignedValue":
        return self * other.reciprocal()

    def power(self, k: int) -> "SignedValue":
        if k < 0:
            return self.reciprocal().power(-k)
        return product([self] * k)

    def to_float(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_magnitude)

    def rational_part(self, pi_power: Union[int, Fraction]) -> Optional[Fraction]:
        """The exact rational r with value = r · π^pi_power, if that is how the value is known."""

        if self.sign == 0:
            return Fraction(0)
        if self.exact is None or self.pi_power != Fraction(pi_power):
            return None
        return self.exact

    def agrees_with(self, other: "SignedValue", log_tol: float = 1e-10) -> bool:
        """Identical sign and log-magnitudes within log_tol."""

        if self.sign != other.sign:
            return False
        if self.sign == 0:
            return True
        return abs(self.log_magnitude - other.log_magnitude) <= log_tol

    def exact_text(self) -> Optional[str]:
        if self.exact is None:
            return None
        if self.sign == 0 or self.pi_power == 0:
            return format_rational(self.exact)
        pi = "pi" if self.pi_power == 1 else f"pi^{format_rational(self.pi_power)}"
        if self.exact == 1:
            return pi
        return f"{format_rational(self.exact)}*{pi}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "sign": self.sign,
            "log_abs": None if self.sign == 0 else self.log_magnitude,
            "exact": self.exact_text(),
        }

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> "SignedValue":
        text = payload.get("exact")
        if text is not None:
            rational, _, pi = text.partition("pi")
            rational = rational.rstrip("*") or "1"
            pi_power = Fraction(0)
            if text.endswith("pi"):
                pi_power = Fraction(1)
            elif "pi^" in text:
                pi_power = parse_rational(pi.lstrip("^"))
            if rational == "-":
                rational = "-1"
            return cls.from_rational(parse_rational(rational), pi_power)
        sign = int(payload["sign"])
        if sign == 0:
            return cls.zero()
        if sign not in (-1, 1):
            raise ParseError(f"Invalid sign {sign}")
        return cls(sign, float(payload["log_abs"]))


def product(values: Iterable[SignedValue]) -> SignedValue:
    """Multiply in (sign, log) space; exact survives only when every factor is exact."""

    sign = 1
    log_magnitude = 0.0
    exact: Optional[Fraction] = Fraction(1)
    pi_power = Fraction(0)
    for value in values:
        if value.sign == 0:
            return SignedValue.zero()
        sign *= value.sign
        log_magnitude += value.log_magnitude
        if exact is not None and value.exact is not None:
            exact *= value.exact
            pi_power += value.pi_power
        else:
            exact = None
    if exact is None:
        return SignedValue(sign, log_magnitude)
    # Recompute from the exact data so log and exact never drift apart.
    return SignedValue.from_rational(exact, pi_power)


def is_pole(x: Real, epsilon: Optional[float] = None) -> bool:
    """x is (within epsilon of) one of 0, −1, −2, …"""

    if epsilon is None:
        epsilon = POLE_EPSILON
    exact = _as_exact(x)
    if exact is not None:
        return exact <= 0 and exact.denominator == 1
    nearest = round(x)
    return nearest <= 0 and abs(x - nearest) < epsilon


def _exact_gamma(x: Fraction) -> Optional[SignedValue]:
    if x.denominator == 1 and x > 0:
        return SignedValue.from_rational(math.factorial(int(x) - 1))
    if x.denominator == 2:
        # Γ(½+m) = (½)_m √π, and Γ(½−m) = √π / (½−m)_m
        m = int(x - HALF)
        if m >= 0:
            return SignedValue.from_rational(pochhammer(HALF, m), HALF)
        return SignedValue.from_rational(1 / pochhammer(x, -m), HALF)
    return None


def gamma_signed(x: Real, epsilon: Optional[float] = None) -> SignedValue:
    """Γ(x) as a SignedValue; raises PoleError at non-positive integers."""

    if is_pole(x, epsilon):
        raise PoleError(f"Gamma has a pole at x={x}")
    exact = _as_exact(x)
    if exact is not None:
        value = _exact_gamma(exact)
        if value is not None:
            return value
    xf = float(x)
    sign = 1
    if xf < 0 and math.floor(xf) % 2 != 0:
        sign = -1
    return SignedValue(sign, float(gammaln(xf)))


def recip_gamma(x: Real, epsilon: Optional[float] = None) -> SignedValue:
    """1/Γ(x); an exact zero at the poles of Γ."""

    if is_pole(x, epsilon):
        return SignedValue.zero()
    return gamma_signed(x, epsilon).reciprocal()


def recip_gamma_leading(x: Real, epsilon: Optional[float] = None) -> Tuple[SignedValue, int]:
    """Leading term of 1/Γ(x+δ) as δ → 0: (coefficient, order of δ)."""

    if is_pole(x, epsilon):
        m = -int(round(float(x)))
        return SignedValue.from_rational((-1) ** m * math.factorial(m)), 1
    return recip_gamma(x, epsilon), 0


def _integer_offset(a: Real, b: Real) -> Optional[int]:
    ea, eb = _as_exact(a), _as_exact(b)
    if ea is not None and eb is not None:
        diff = ea - eb
        return int(diff) if diff.denominator == 1 else None
    diff = float(a) - float(b)
    nearest = round(diff)
    if abs(diff - nearest) < 1e-12:
        return int(nearest)
    return None


# Beyond this offset the float Pochhammer loop costs more than it saves.
_MAX_FLOAT_POCHHAMMER = 64


def gamma_ratio(a: Real, b: Real, epsilon: Optional[float] = None) -> SignedValue:
    """Γ(a)/Γ(b).

    Integer offsets go through the Pochhammer symbol (exact for rational a, b). When
    both arguments sit on poles with an integer offset the ratio is the limit along a
    common shift, (−1)^(m−p)·p!/m! for a=−m, b=−p.
    """

    a_pole, b_pole = is_pole(a, epsilon), is_pole(b, epsilon)
    offset = _integer_offset(a, b)
    if a_pole and b_pole:
        m, p = -int(round(float(a))), -int(round(float(b)))
        return SignedValue.from_rational(Fraction((-1) ** (m - p) * math.factorial(p), math.factorial(m)))
    if a_pole:
        raise PoleError(f"Gamma ratio has a numerator pole at a={a} (b={b})")
    if b_pole:
        return SignedValue.zero()
    if offset is not None:
        ea, eb = _as_exact(a), _as_exact(b)
        if ea is not None and eb is not None:
            if offset >= 0:
                return SignedValue.from_rational(pochhammer(eb, offset))
            return SignedValue.from_rational(1 / pochhammer(ea, -offset))
        if abs(offset) <= _MAX_FLOAT_POCHHAMMER:
            if offset >= 0:
                return product(SignedValue.from_float(float(b) + i) for i in range(offset))
            return product(SignedValue.from_float(float(a) + i) for i in range(-offset)).reciprocal()
    return gamma_signed(a, epsilon) / gamma_signed(b, epsilon)


def sin_pi(x: Real) -> SignedValue:
    """sin(πx), exact at integers and half-integers."""

    exact = _as_exact(x)
    if exact is not None and exact.denominator in (1, 2):
        if exact.denominator == 1:
            return SignedValue.zero()
        k = int(exact - HALF)
        return SignedValue.from_rational(-1 if k % 2 else 1)
    xf = float(x)
    reduced = xf - 2.0 * math.floor(xf / 2.0)
    return SignedValue.from_float(math.sin(math.pi * reduced))
