"""Ring laws and canonical-form invariants of the exact scalars."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twistedreal.scalar import (
    GaussRational,
    QLaurent,
    conj,
    field_arith,
    format_qlaurent,
    q_pow,
)

rationals = st.fractions(
    min_value=-20, max_value=20, max_denominator=12
)
gauss = st.builds(GaussRational, rationals, rationals)
laurents = st.dictionaries(
    st.integers(min_value=-8, max_value=8), gauss, max_size=5
).map(QLaurent)


class TestGaussRational:
    def test_canonical_construction(self):
        g = GaussRational(Fraction(2, 4), Fraction(-6, 3))
        assert g.re == Fraction(1, 2) and g.im == -2
        assert g.is_canonical()

    def test_field_ops(self):
        a = GaussRational(1, 2)
        b = GaussRational(Fraction(1, 3), -1)
        assert (a + b) - b == a
        assert a * b == b * a
        assert (a / b) * b == a
        assert a * a.inverse() == GaussRational(1)

    def test_inverse_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            GaussRational(0).inverse()

    @given(a=gauss, b=gauss, c=gauss)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a

    @given(a=gauss)
    def test_conjugation_involution(self, a):
        assert a.conjugate().conjugate() == a
        assert a.conjugate().is_canonical()


class TestQLaurent:
    def test_monomial_cancellation(self):
        assert q_pow(1) * q_pow(-1) == QLaurent.one()

    def test_polynomial_identity(self):
        one = QLaurent.one()
        p = one - q_pow(2)
        r = one + q_pow(2)
        assert field_arith("mul", p, r) == one - q_pow(4)

    def test_additive_identity(self):
        p = q_pow(3) - q_pow(-1)
        assert field_arith("add", p, QLaurent.zero()) == p

    def test_sub(self):
        p = q_pow(2)
        assert field_arith("sub", p, p) == QLaurent.zero()

    def test_conj_examples(self):
        iq = QLaurent({1: GaussRational(0, 1)})
        assert conj(iq) == QLaurent({1: GaussRational(0, -1)})
        p = QLaurent.one() - q_pow(2)
        assert conj(p) == p

    def test_q_pow(self):
        assert q_pow(0) == QLaurent.one()
        assert q_pow(2) * q_pow(-2) == QLaurent.one()
        assert q_pow(5).terms == {5: GaussRational(1)}

    def test_pow_negative_monomial_only(self):
        assert q_pow(2) ** -1 == q_pow(-2)
        with pytest.raises(ZeroDivisionError):
            (QLaurent.one() + q_pow(1)) ** -1

    @given(a=laurents, b=laurents, c=laurents)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        for value in ((a + b) + c, a * b, a - c):
            assert value.is_canonical()

    @given(a=laurents, b=laurents)
    def test_conj_ring_homomorphism(self, a, b):
        assert conj(a + b) == conj(a) + conj(b)
        assert conj(a * b) == conj(a) * conj(b)
        assert conj(conj(a)) == a

    @given(a=laurents)
    def test_serialization_roundtrip(self, a):
        data = a.serialize()
        assert data == sorted(data)
        assert QLaurent.deserialize(data) == a

    @given(a=laurents)
    def test_format_parse_roundtrip(self, a):
        from twistedreal.syntax import parse_scalar

        assert parse_scalar(format_qlaurent(a)) == a
