"""Quantum-cone operators, closed-form oracles, axiom checks, suite runs."""

import pytest

from twistedreal.errors import BadHVector, NotInCone
from twistedreal.graded_triple import (
    AXIOM_IDS,
    ConeTriple,
    GradedTripleSpec,
    HVector,
    basis_enumerate,
    check_axiom,
    verify_cone,
)
from twistedreal.ncalg import DiscElement, DiscMonomial
from twistedreal.scalar import QLaurent, q_pow
from twistedreal.syntax import parse_element

Z = DiscElement.z()
ZS = DiscElement.zs()
ZERO = DiscElement.zero()


def hplus(e, n=2):
    return HVector(e, ZERO, n)


def hminus(e, n=2):
    return HVector(ZERO, e, n)


class TestHVector:
    def test_degree_invariants(self):
        HVector(Z, ZS, 2)
        HVector(Z, ZS, 3)
        with pytest.raises(BadHVector):
            HVector(Z * ZS, ZERO, 2)  # degree 0 is not +1 mod 2
        with pytest.raises(BadHVector):
            HVector(Z, Z, 3)  # degree 1 is not -1 mod 3

    def test_external_sum_slots_independent(self):
        h = HVector(Z, Z, 2)  # for N=2 both classes coincide, slots stay apart
        assert h.plus == Z and h.minus == Z
        assert h + (-h) == HVector.zero(2)


class TestOperators:
    def setup_method(self):
        self.t = ConeTriple(2)
        self.t3 = ConeTriple(3)
        self.x = self.t.gens.x_img
        self.y = self.t.gens.y_img

    def test_dirac(self):
        assert self.t.D_apply(hplus(Z)) == hminus(ZS.scale(q_pow(1)))
        assert self.t.D_apply(hminus(ZS)) == hplus(Z.scale(-q_pow(1)))
        assert self.t.D_apply(HVector.zero(2)) == HVector.zero(2)

    def test_reality(self):
        assert self.t.J_apply(hplus(Z)) == hminus(ZS)
        assert self.t.J_apply(hminus(ZS)) == hplus(-Z)
        # J^2 = -1
        assert self.t.J_apply(self.t.J_apply(hplus(Z))) == -hplus(Z)

    def test_j_inverse(self):
        for h in (hplus(Z), hminus(ZS), HVector(Z, ZS.scale(q_pow(2)), 2)):
            assert self.t.J_inverse(self.t.J_apply(h)) == h
            assert self.t.J_apply(self.t.J_inverse(h)) == h

    def test_gamma(self):
        assert self.t.gamma_apply(hplus(Z)) == hplus(Z)
        assert self.t.gamma_apply(hminus(ZS)) == -hminus(ZS)
        h = HVector(Z, ZS, 2)
        assert self.t.gamma_apply(self.t.gamma_apply(h)) == h

    def test_nu_H(self):
        assert self.t.nu_H(hplus(Z)) == hplus(Z.scale(q_pow(1)))
        assert self.t.nu_H(hminus(ZS)) == hminus(ZS.scale(q_pow(-1)))
        h = HVector(Z, ZS, 2)
        assert self.t.nu_H(self.t.nu_H(h, 1), -1) == h

    def test_action(self):
        assert self.t.pi_act(DiscElement.one(), hplus(Z)) == hplus(Z)
        # x has degree 0 so nu^2(x) = x; x z = q^2 z - q^2 z^2 zs
        assert self.t.pi_act(self.x, hplus(Z)) == hplus(parse_element("q^2*z - q^2*z^2*zs"))
        # nu^2(y) = q^4 z^2 for N = 2
        assert self.t.pi_act(self.y, hminus(ZS)) == hminus(
            parse_element("q^4*z^2*zs")
        )

    def test_action_rejects_non_cone(self):
        with pytest.raises(NotInCone):
            self.t.pi_act(Z, hplus(Z))

    def test_commutator_closed_form_matches_direct(self):
        for a in (self.x, self.y, self.x * self.y, DiscElement.one()):
            for h in (hplus(Z), hminus(ZS), hplus(ZS.scale(q_pow(2)))):
                assert self.t.comm_D(a, h) == self.t.commutator_closed_form(a, h)

    def test_commutator_closed_form_unit(self):
        assert self.t.commutator_closed_form(DiscElement.one(), hplus(Z)).is_zero()

    def test_jbj_closed_form_matches_direct(self):
        for b in (self.x, self.y, self.y.star() * self.y):
            for h in (hplus(Z), hminus(ZS)):
                assert self.t.jbj(b, h) == self.t.jbj_closed_form(b, h)

    def test_jbj_examples(self):
        assert self.t.jbj_closed_form(DiscElement.one(), hplus(Z)) == hplus(Z)
        # b = x, h = (z, 0): right multiplication by x
        assert self.t.jbj_closed_form(self.x, hplus(Z)) == hplus(Z * self.x)
        # b = y, h = (0, zs), N = 2: nu^{-2}(y*) = q^4 zs^2
        assert self.t.jbj_closed_form(self.y, hminus(ZS)) == hminus(
            parse_element("q^4*zs^3")
        )


class TestBasisEnumerate:
    def test_cutoff_zero_is_empty_for_n2(self):
        assert basis_enumerate(2, 0) == []

    def test_n2_cutoff2(self):
        got = basis_enumerate(2, 2)
        assert [(s, (m.a, m.b)) for s, m in got] == [
            ("+", (0, 1)),
            ("+", (1, 0)),
            ("-", (0, 1)),
            ("-", (1, 0)),
        ]

    def test_n3_cutoff2(self):
        got = basis_enumerate(3, 2)
        assert [(s, (m.a, m.b)) for s, m in got] == [
            ("+", (1, 0)),
            ("+", (0, 2)),
            ("-", (0, 1)),
            ("-", (2, 0)),
        ]

    def test_precondition(self):
        with pytest.raises(ValueError):
            basis_enumerate(1, 2)
        with pytest.raises(ValueError):
            basis_enumerate(2, -1)


class TestCheckAxiom:
    def setup_method(self):
        self.t = ConeTriple(2)
        self.x = self.t.gens.x_img

    def test_o0_example(self):
        rep = check_axiom(self.t, "O0", self.x, self.x, hplus(Z))
        assert rep.verdict

    def test_tc_example(self):
        assert check_axiom(self.t, "TC", h=hplus(Z)).verdict

    def test_reg_example(self):
        assert check_axiom(self.t, "REG", h=hminus(ZS)).verdict

    def test_all_axioms_on_sample(self):
        y = self.t.gens.y_img
        for ax in AXIOM_IDS:
            rep = check_axiom(self.t, ax, self.x, y, HVector(Z, ZS, 2))
            assert rep.verdict, ax

    def test_unknown_axiom(self):
        with pytest.raises(ValueError):
            check_axiom(self.t, "NOPE", h=hplus(Z))

    def test_witness_replayable(self):
        # force a failure by abusing GAMMA_J with flipped expected sign
        t = ConeTriple(2, GradedTripleSpec(N=2, signs=(-1, 1, 1)))
        rep = check_axiom(t, "GAMMA_J", h=hplus(Z))
        assert not rep.verdict
        w = rep.witness
        assert w is not None
        # replay: parse the witness inputs and recompute both sides
        h = HVector(
            parse_element(w.inputs["h_plus"]), parse_element(w.inputs["h_minus"]), 2
        )
        lhs = t.gamma_apply(t.J_apply(h))
        rhs = t.J_apply(t.gamma_apply(h)).scale(QLaurent.gauss(1))
        assert str(lhs) == w.lhs and str(rhs) == w.rhs
        assert lhs != rhs


class TestVerifyCone:
    def test_vacuous_pass(self):
        res = verify_cone(2, 0, 2)
        assert res.overall
        assert all(r.instances == 0 for r in res.reports if r.axiom not in ())
        assert res.signs.epsilon is None

    @pytest.mark.parametrize("n", [2, 3])
    def test_small_run_passes(self, n):
        res = verify_cone(n, 3, 3)
        assert res.overall
        assert (res.signs.epsilon, res.signs.epsilon_prime, res.signs.epsilon_double_prime) == (-1, 1, -1)
        assert res.signs.ko_dimension == 2

    def test_workers_agree_with_serial(self):
        serial = verify_cone(2, 3, 3, workers=1)
        parallel = verify_cone(2, 3, 3, workers=3)
        ser = [(r.axiom, r.verdict, r.instances) for r in serial.reports]
        par = [(r.axiom, r.verdict, r.instances) for r in parallel.reports]
        assert ser == par
        assert serial.signs == parallel.signs

    def test_scaled_dirac_hooks(self):
        # rescaling D by a real constant keeps every reality condition
        spec = GradedTripleSpec(
            N=2,
            dirac_plus_coeff=-(q_pow(-1) * QLaurent.gauss(2)),
            dirac_minus_coeff=q_pow(1) * QLaurent.gauss(2),
        )
        t = ConeTriple(2, spec)
        x = t.gens.x_img
        for ax in ("O0", "TO1", "TO1R", "TC", "REG", "GAMMA_D", "GAMMA_J", "RIGHT"):
            assert check_axiom(t, ax, x, x, HVector(Z, ZS, 2)).verdict, ax

    def test_alternate_residue_class_instance(self):
        # the even-degree instance for N = 2: both slots hold degrees 0 mod 2;
        # the same checkers run untouched on the alternate graded data
        spec = GradedTripleSpec(N=2, plus_residue=0)
        t = ConeTriple(2, spec)
        x = t.gens.x_img
        y = t.gens.y_img  # z^2, degree 2 = 0 mod 2
        h = HVector(x, DiscElement.one(), 2, plus_residue=0)
        for ax in AXIOM_IDS:
            assert check_axiom(t, ax, x, y, h).verdict, ax
        items = basis_enumerate(2, 2, plus_residue=0)
        assert [(s, (m.a, m.b)) for s, m in items] == [
            ("+", (0, 0)), ("+", (1, 1)), ("+", (0, 2)), ("+", (2, 0)),
            ("-", (0, 0)), ("-", (1, 1)), ("-", (0, 2)), ("-", (2, 0)),
        ]
