"""Schur polynomials from the Jacobi–Trudi determinant, independent of the Jack solver."""

from fractions import Fraction
from itertools import permutations
from typing import Dict

from sympy.combinatorics import Permutation

from sahi_kernels.src.errors import ShapeError
from sahi_kernels.src.partitions import Signature, make_signature, partitions_of
from sahi_kernels.src.sympoly import LaurentSymPoly, multiply


def complete_homogeneous(k: int, n: int) -> LaurentSymPoly:
    """h_k = Σ_{|μ|=k} m_μ; zero for k < 0."""

    if k < 0:
        return LaurentSymPoly(n)
    return LaurentSymPoly(n, {mu: 1 for mu in partitions_of(k, n)})


def schur_polynomial(lam: Signature, n: int) -> LaurentSymPoly:
    """s_λ = det(h_{λ_i − i + j}); signatures with negative parts are shifted back."""

    lam = make_signature(lam)
    if len(lam) != n:
        raise ShapeError(f"Signature {lam} has {len(lam)} parts, expected {n}")
    m = min(lam[-1], 0)
    parts = [p - m for p in lam]
    length = sum(1 for p in parts if p > 0)
    if length == 0:
        return LaurentSymPoly.one(n).shifted(m)

    cache: Dict[int, LaurentSymPoly] = {}

    def h(k: int) -> LaurentSymPoly:
        if k not in cache:
            cache[k] = complete_homogeneous(k, n)
        return cache[k]

    total = LaurentSymPoly(n)
    for perm in permutations(range(length)):
        term = LaurentSymPoly.one(n)
        for i in range(length):
            factor = h(parts[i] - i + perm[i])
            if not factor.terms:
                term = LaurentSymPoly(n)
                break
            term = multiply(term, factor)
        if term.terms:
            total = total + term * Fraction(Permutation(list(perm)).signature())
    return total.shifted(m)
