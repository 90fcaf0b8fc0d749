"""Laurent polynomials with Fraction coefficients.

`LaurentPoly` is the dense-exponent form (any integer vector as key). `LaurentSymPoly`
is the orbit-compressed symmetric form: keys are weakly decreasing signatures and the
value is the coefficient of the monomial symmetric function m_λ. Products of symmetric
polynomials go through the dense form and are re-collected on orbit representatives.
"""

import re
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple, Union

import numpy as np
from sympy.utilities.iterables import multiset_permutations

from sahi_kernels.src.errors import ParseError, ShapeError, UnsupportedError
from sahi_kernels.src.partitions import Signature, format_rational, make_signature

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


class LaurentPoly:
    """Sparse Laurent polynomial in n variables; zero coefficients are never stored."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Union[Mapping[Exponent, Scalar], None] = None):
        self.n = n
        self.terms: Dict[Exponent, Fraction] = {}
        for exp, coeff in (terms or {}).items():
            if len(exp) != n:
                raise ShapeError(f"Exponent {exp} does not have {n} entries")
            coeff = Fraction(coeff)
            if coeff != 0:
                self.terms[tuple(exp)] = coeff

    @classmethod
    def one(cls, n: int) -> "LaurentPoly":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, exp: Exponent, coeff: Scalar = 1) -> "LaurentPoly":
        return cls(len(exp), {tuple(exp): coeff})

    def _check(self, other: "LaurentPoly") -> None:
        if self.n != other.n:
            raise ShapeError(f"Variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            out[exp] = out.get(exp, 0) + coeff
        return LaurentPoly(self.n, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            scale = Fraction(other)
            return LaurentPoly(self.n, {e: c * scale for e, c in self.terms.items()})
        self._check(other)
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise UnsupportedError("Negative powers of Laurent polynomials are not supported")
        result = LaurentPoly.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self) -> str:
        return f"LaurentPoly(n={self.n}, terms={self.terms})"

    def inverse_variables(self) -> "LaurentPoly":
        """p(x⁻¹)."""

        return LaurentPoly(self.n, {tuple(-a for a in e): c for e, c in self.terms.items()})

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        """Evaluate at complex points of shape (..., n)."""

        points = np.asarray(points, dtype=complex)
        result = np.zeros(points.shape[:-1], dtype=complex)
        for exp, coeff in self.terms.items():
            result += float(coeff) * np.prod(points ** np.array(exp), axis=-1)
        return result


class LaurentSymPoly:
    """Symmetric Laurent polynomial Σ c_λ m_λ, keyed by orbit representatives."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Union[Mapping[Signature, Scalar], None] = None):
        self.n = n
        self.terms: Dict[Signature, Fraction] = {}
        for key, coeff in (terms or {}).items():
            if len(key) != n:
                raise ShapeError(f"Orbit representative {key} does not have {n} parts")
            sig = make_signature(key)
            coeff = Fraction(coeff)
            if coeff != 0:
                self.terms[sig] = coeff

    @classmethod
    def one(cls, n: int) -> "LaurentSymPoly":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def from_laurent(cls, poly: LaurentPoly) -> "LaurentSymPoly":
        """Collect a symmetric dense polynomial on its orbit representatives."""

        return cls(
            poly.n,
            {
                e: c
                for e, c in poly.terms.items()
                if all(e[j] >= e[j + 1] for j in range(poly.n - 1))
            },
        )

    def to_laurent(self) -> LaurentPoly:
        out: Dict[Exponent, Fraction] = {}
        for sig, coeff in self.terms.items():
            for exp in multiset_permutations(list(sig)):
                out[tuple(exp)] = coeff
        return LaurentPoly(self.n, out)

    def _check(self, other: "LaurentSymPoly") -> None:
        if self.n != other.n:
            raise ShapeError(f"Variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "LaurentSymPoly") -> "LaurentSymPoly":
        self._check(other)
        out = dict(self.terms)
        for sig, coeff in other.terms.items():
            out[sig] = out.get(sig, 0) + coeff
        return LaurentSymPoly(self.n, out)

    def __neg__(self) -> "LaurentSymPoly":
        return LaurentSymPoly(self.n, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other: "LaurentSymPoly") -> "LaurentSymPoly":
        return self + (-other)

    def __mul__(self, other: Union["LaurentSymPoly", Scalar]) -> "LaurentSymPoly":
        if isinstance(other, LaurentSymPoly):
            return multiply(self, other)
        scale = Fraction(other)
        return LaurentSymPoly(self.n, {s: c * scale for s, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentSymPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self) -> str:
        return f"LaurentSymPoly(n={self.n}, {render(self)})"

    def coefficient(self, sig: Signature) -> Fraction:
        return self.terms.get(tuple(sig), Fraction(0))

    def shifted(self, m: int) -> "LaurentSymPoly":
        """(x₁⋯x_n)^m · f."""

        return LaurentSymPoly(self.n, {tuple(p + m for p in s): c for s, c in self.terms.items()})

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        return self.to_laurent().evaluate(points)


def monomial_sym(lam: Signature, n: int) -> LaurentSymPoly:
    """The monomial symmetric function m_λ in n variables."""

    if len(lam) != n:
        raise ShapeError(f"Signature {lam} has {len(lam)} parts, expected {n}")
    return LaurentSymPoly(n, {make_signature(lam): 1})


def multiply(f: LaurentSymPoly, g: LaurentSymPoly) -> LaurentSymPoly:
    """Exact product; only orbit-representative coefficients of the dense product are kept."""

    if f.n != g.n:
        raise ShapeError(f"Variable count mismatch: {f.n} vs {g.n}")
    n = f.n
    dense_g = g.to_laurent().terms
    out: Dict[Signature, Fraction] = {}
    for exp_f, coeff_f in f.to_laurent().terms.items():
        for exp_g, coeff_g in dense_g.items():
            key = tuple(a + b for a, b in zip(exp_f, exp_g))
            if all(key[j] >= key[j + 1] for j in range(n - 1)):
                out[key] = out.get(key, 0) + coeff_f * coeff_g
    return LaurentSymPoly(n, out)


def constant_term(f: Union[LaurentPoly, LaurentSymPoly]) -> Fraction:
    """Coefficient of the zero exponent (exact torus average)."""

    return f.terms.get((0,) * f.n, Fraction(0))


def constant_term_of_product(*factors: LaurentPoly) -> Fraction:
    """CT(f₁⋯f_k) without materialising the last product."""

    if not factors:
        return Fraction(1)
    head = factors[0]
    for factor in factors[1:-1]:
        head = head * factor
    if len(factors) == 1:
        return constant_term(head)
    last = factors[-1].terms
    total = Fraction(0)
    for exp, coeff in head.terms.items():
        partner = last.get(tuple(-a for a in exp))
        if partner is not None:
            total += coeff * partner
    return total


def discriminant_power(n: int, kappa: Union[int, Fraction]) -> LaurentPoly:
    """∏_{k<l} [(x_k − x_l)(x_k⁻¹ − x_l⁻¹)]^κ for a positive integer κ."""

    kappa_frac = Fraction(kappa)
    if kappa_frac.denominator != 1 or kappa_frac <= 0:
        raise UnsupportedError(
            f"Exact discriminant needs a positive integer kappa, got {kappa}"
        )
    result = LaurentPoly.one(n)
    for k in range(n):
        for l in range(k + 1, n):
            ratio = [0] * n
            ratio[k], ratio[l] = 1, -1
            inverse = [-a for a in ratio]
            pair = LaurentPoly(n, {(0,) * n: 2, tuple(ratio): -1, tuple(inverse): -1})
            result = result * (pair ** int(kappa_frac))
    return result


def substitute_inverse(f: LaurentSymPoly) -> LaurentSymPoly:
    """f(x₁⁻¹, …, x_n⁻¹): negate and re-sort every orbit representative."""

    return LaurentSymPoly(f.n, {tuple(-p for p in reversed(s)): c for s, c in f.terms.items()})


def render(f: LaurentSymPoly) -> str:
    """Canonical text: terms by descending orbit representative, "c*m[λ]" joined by " + "."""

    if not f.terms:
        return "0"
    pieces: List[str] = []
    for position, sig in enumerate(sorted(f.terms, reverse=True)):
        coeff = f.terms[sig]
        body = "m[" + ",".join(str(p) for p in sig) + "]"
        if position == 0 and coeff == 1:
            pieces.append(body)
        else:
            pieces.append(f"{format_rational(coeff)}*{body}")
    return " + ".join(pieces)


_TERM = re.compile(
    r"^(?P<coeff>[+-]?\d+(?:/\d+)?)?\s*\*?\s*(?:m\[(?P<sig>[-\d,\s]*)\])?$"
)


def _split_terms(text: str) -> Iterable[str]:
    depth = 0
    current = ""
    for i, ch in enumerate(text):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch in "+-" and depth == 0 and current.strip() and current.strip()[-1] not in "*/":
            yield current.strip()
            current = "" if ch == "+" else "-"
            continue
        current += ch
    if current.strip():
        yield current.strip()


def parse_sympoly(text: str, n: int) -> LaurentSymPoly:
    """Parse the canonical rendering (and plain constants); short m[...] are zero-padded."""

    out: Dict[Signature, Fraction] = {}
    for raw in _split_terms(text.replace(" ", "")):
        token = raw
        sign = 1
        if token.startswith("-") and "m[" in token and token[1:2] == "m":
            sign, token = -1, token[1:]
        match = _TERM.match(token)
        if not match or (match.group("coeff") is None and match.group("sig") is None):
            raise ParseError(f"Invalid polynomial term '{raw}' in '{text}'")
        coeff = Fraction(match.group("coeff") or 1) * sign
        parts = [int(p) for p in (match.group("sig") or "").split(",") if p.strip()]
        if len(parts) > n:
            raise ParseError(f"Term '{raw}' has more than {n} parts")
        parts = parts + [0] * (n - len(parts))
        try:
            key = make_signature(sorted(parts, reverse=True))
        except ShapeError as e:
            raise ParseError(str(e))
        out[key] = out.get(key, 0) + coeff
    return LaurentSymPoly(n, out)
