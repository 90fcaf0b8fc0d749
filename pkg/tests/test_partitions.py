"""Test signature combinatorics and rational helpers."""

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from sahi_kernels.src.errors import InvalidComparisonError, ParseError, ShapeError
from sahi_kernels.src.partitions import (
    dominance_leq,
    format_rational,
    format_signature,
    is_partition,
    make_signature,
    orbit_size,
    parse_rational,
    parse_real,
    parse_signature,
    partitions_of,
    pochhammer,
    shift,
    signatures_in_box,
    weight,
)


class TestSignatures:
    """Test signature construction and ordering."""

    def test_make_signature_rejects_increasing(self):
        """Parts must be weakly decreasing."""
        assert make_signature([3, 1, -2]) == (3, 1, -2)
        with pytest.raises(ShapeError):
            make_signature([0, 1])

    def test_dominance_examples(self):
        """Dominance order on equal-weight signatures."""
        assert dominance_leq((1, 1), (2, 0))
        assert dominance_leq((2, 0), (2, 0))
        assert not dominance_leq((3, 0, 0), (1, 1, 1))

    def test_dominance_rejects_mismatch(self):
        """Different lengths or weights cannot be compared."""
        with pytest.raises(InvalidComparisonError):
            dominance_leq((1, 0), (1, 0, 0))
        with pytest.raises(InvalidComparisonError):
            dominance_leq((1, 0), (2, 0))

    def test_signatures_in_box(self):
        """Box enumeration is lexicographic and complete."""
        assert signatures_in_box(1, -1, 1) == [(-1,), (0,), (1,)]
        assert signatures_in_box(2, 0, 1) == [(0, 0), (1, 0), (1, 1)]
        assert len(signatures_in_box(2, 0, 2)) == 6
        assert signatures_in_box(2, 1, 0) == []

    @given(n=st.integers(1, 3), lo=st.integers(-3, 2), width=st.integers(0, 4))
    def test_box_count(self, n, lo, width):
        """The box [lo, hi]ⁿ has C(hi − lo + n, n) signatures."""
        sigs = signatures_in_box(n, lo, lo + width)
        assert len(sigs) == comb(width + n, n)
        assert len(set(sigs)) == len(sigs)

    def test_partitions_of(self):
        """Padded partitions, descending lexicographic."""
        assert partitions_of(2, 2) == [(2, 0), (1, 1)]
        assert partitions_of(3, 3) == [(3, 0, 0), (2, 1, 0), (1, 1, 1)]
        assert partitions_of(4, 1) == [(4,)]
        assert partitions_of(-1, 2) == []

    def test_small_helpers(self):
        """Weight, shift, partition test and orbit sizes."""
        assert weight((3, 1, -2)) == 2
        assert shift((0, -1), 1) == (1, 0)
        assert is_partition((2, 0)) and not is_partition((1, -1))
        assert orbit_size((1, 0)) == 2
        assert orbit_size((1, 1, 0)) == 3
        assert orbit_size((2, 1, 0)) == 6

    def test_parse_signature(self):
        """Comma syntax round trip and errors."""
        assert parse_signature("3,1,-2") == (3, 1, -2)
        assert format_signature((2, -1)) == "2,-1"
        for bad in ["", "1,a", "0,1"]:
            with pytest.raises(ParseError):
                parse_signature(bad)


@st.composite
def same_weight_triples(draw):
    n = draw(st.integers(1, 4))
    total = draw(st.integers(0, 7))
    choices = st.sampled_from(partitions_of(total, n))
    return draw(choices), draw(choices), draw(choices)


class TestDominanceOrder:
    """Test that dominance is a partial order compatible with shifts and lex order."""

    @settings(max_examples=300)
    @given(triple=same_weight_triples())
    def test_partial_order_laws(self, triple):
        """Reflexive, antisymmetric and transitive."""
        a, b, c = triple
        assert dominance_leq(a, a)
        if dominance_leq(a, b) and dominance_leq(b, a):
            assert a == b
        if dominance_leq(a, b) and dominance_leq(b, c):
            assert dominance_leq(a, c)

    @settings(max_examples=300)
    @given(triple=same_weight_triples(), k=st.integers(-4, 4))
    def test_shift_and_mirror(self, triple, k):
        """Adding k·1ⁿ and λ ↦ (−λ_n, …, −λ_1) both preserve the order."""
        a, b, _ = triple
        expected = dominance_leq(a, b)
        assert dominance_leq(shift(a, k), shift(b, k)) == expected
        mirror = lambda sig: tuple(-p for p in reversed(sig))
        assert dominance_leq(mirror(a), mirror(b)) == expected

    @settings(max_examples=300)
    @given(triple=same_weight_triples())
    def test_lex_extends_dominance(self, triple):
        """μ ≤ λ in dominance implies μ ≤ λ lexicographically."""
        a, b, _ = triple
        if dominance_leq(a, b):
            assert a <= b


class TestRationals:
    """Test Pochhammer symbols and number parsing."""

    def test_pochhammer_examples(self):
        """Rising factorials, exact."""
        assert pochhammer(3, 2) == 12
        assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
        assert pochhammer(-2, 4) == 0
        assert pochhammer(Fraction(7, 3), 0) == 1

    def test_parse_rational_and_real(self):
        """Rationals stay exact, decimals become floats."""
        assert parse_rational("1/2") == Fraction(1, 2)
        assert parse_rational(" -3 ") == -3
        assert parse_real("1/4") == Fraction(1, 4)
        assert parse_real("0.3") == pytest.approx(0.3)
        assert isinstance(parse_real("0.3"), float)
        with pytest.raises(ParseError):
            parse_rational("1/0")
        with pytest.raises(ParseError):
            parse_real("x")

    def test_format_rational(self):
        """Integers render without a denominator."""
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(Fraction(-4, 3)) == "-4/3"
