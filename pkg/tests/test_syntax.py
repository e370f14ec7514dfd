"""Element grammar: parsing, canonical printing, round-trips, error locations."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistedreal.errors import ParseError
from twistedreal.ncalg import DiscElement, format_element, normal_form
from twistedreal.scalar import GaussRational, QLaurent, q_pow
from twistedreal.syntax import parse_element, parse_gauss, parse_scalar, parse_word

coeffs = st.builds(
    GaussRational,
    st.fractions(min_value=-9, max_value=9, max_denominator=8),
    st.fractions(min_value=-9, max_value=9, max_denominator=8),
)
laurents = st.dictionaries(st.integers(-5, 5), coeffs, max_size=3).map(QLaurent)
elements = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), laurents, max_size=4
).map(DiscElement)


class TestParsing:
    def test_spec_syntax(self):
        e = parse_element("(1-q^2)*z^2*zs^1")
        assert e == DiscElement.monomial(2, 1).scale(QLaurent.one() - q_pow(2))

    def test_nonnormal_input_is_normalized(self):
        assert parse_element("zs*z") == normal_form(["zs", "z"])

    def test_sums_and_powers(self):
        e = parse_element("(z+zs)^2")
        direct = (DiscElement.z() + DiscElement.zs()) * (
            DiscElement.z() + DiscElement.zs()
        )
        assert e == direct

    def test_implicit_multiplication(self):
        assert parse_gauss("3/4 i") == GaussRational(0, Fraction(3, 4))
        assert parse_element("2q*z") == DiscElement.z().scale(q_pow(1) * QLaurent.gauss(2))

    def test_scalar_rejects_generators(self):
        with pytest.raises(ParseError):
            parse_scalar("z + 1")

    def test_gauss_rejects_q(self):
        with pytest.raises(ParseError):
            parse_gauss("q + 1")

    def test_word(self):
        assert parse_word("z*z*zs") == ("z", "z", "zs")
        assert parse_word("z^3") == ("z", "z", "z")
        with pytest.raises(ParseError):
            parse_word("z + zs")
        with pytest.raises(ParseError):
            parse_word("2*z")

    @pytest.mark.parametrize(
        "bad",
        ["", "   ", "z^-1", "1 +", "(1-q", "w", "1/0", "q^", "*z", "zs^-2"],
    )
    def test_errors_carry_position(self, bad):
        with pytest.raises(ParseError) as err:
            parse_element(bad)
        assert err.value.code == "PARSE_ERROR"
        assert err.value.position is not None

    def test_negative_power_of_scalar(self):
        got = parse_scalar("(2*q^3)^-1")
        assert got * parse_scalar("2*q^3") == QLaurent.one()


class TestRoundTrip:
    @given(e=elements)
    @settings(max_examples=200, deadline=None)
    def test_print_parse_identity(self, e):
        assert parse_element(format_element(e)) == e

    @given(p=laurents)
    @settings(max_examples=200, deadline=None)
    def test_scalar_print_parse_identity(self, p):
        assert parse_scalar(str(p)) == p

    @given(c=coeffs)
    def test_gauss_print_parse_identity(self, c):
        assert parse_gauss(str(c)) == c

    def test_zero(self):
        assert parse_element("0") == DiscElement.zero()
        assert format_element(DiscElement.zero()) == "0"
