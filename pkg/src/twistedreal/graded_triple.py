"""The quantum-cone triple: H = H+ (+) H-, the cone action, D, J, gamma, nu.

H+ and H- collect the disc degrees congruent to +1 and -1 mod N; the cone
algebra (degrees divisible by N) acts by left multiplication twisted by the
square of the degree-counting automorphism.  Every operator maps a basis
monomial to a finite combination, so each twisted-reality axiom is decided
exactly per spanning instance; the cutoffs bound which instances are
enumerated and never introduce approximation.

The construction is parametrized by ``GradedTripleSpec`` (residue classes,
derivation pair, Dirac coefficients), so other Z-graded instances can reuse
the checkers; the quantum cone is the bundled instance.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import BadHVector, NotInCone
from .ncalg import ConeGens, DiscElement, DiscMonomial, d_minus, d_plus
from .report import AxiomReport, SignSummary, Witness
from .scalar import QLaurent, q_pow

AXIOM_IDS = (
    "O0",
    "TO1",
    "TO1R",
    "TC",
    "REG",
    "GAMMA_SQ",
    "GAMMA_COMM",
    "GAMMA_D",
    "GAMMA_NU2",
    "GAMMA_J",
    "RIGHT",
    "IMAGE",
)

ORACLE_IDS = ("ORACLE_COMM", "ORACLE_JBJ", "TO1_EQUIV")


class HVector:
    """Element of H = H+ (+) H-: a pair of degree-constrained disc elements.

    The sum is external: the two slots stay independent even when the degree
    classes coincide (N = 2).  The plus slot holds degrees congruent to
    ``plus_residue`` mod N (default +1, the cone case), the minus slot its
    negatives.
    """

    __slots__ = ("plus", "minus", "N", "plus_residue")

    def __init__(self, plus: DiscElement, minus: DiscElement, N: int, plus_residue: int = 1):
        if N < 2:
            raise BadHVector("modulus N must be >= 2")
        r = plus_residue % N
        for d in plus.degrees():
            if (d - r) % N != 0:
                raise BadHVector(
                    f"plus slot has degree {d}, want {r} mod {N}", field="plus"
                )
        for d in minus.degrees():
            if (d + r) % N != 0:
                raise BadHVector(
                    f"minus slot has degree {d}, want {-r} mod {N}", field="minus"
                )
        self.plus = plus
        self.minus = minus
        self.N = N
        self.plus_residue = r

    @classmethod
    def zero(cls, N: int, plus_residue: int = 1) -> "HVector":
        return cls(DiscElement.zero(), DiscElement.zero(), N, plus_residue)

    def is_zero(self) -> bool:
        return self.plus.is_zero() and self.minus.is_zero()

    def _like(self, plus, minus) -> "HVector":
        return HVector(plus, minus, self.N, self.plus_residue)

    def __add__(self, other):
        if not isinstance(other, HVector) or other.N != self.N:
            return NotImplemented
        return self._like(self.plus + other.plus, self.minus + other.minus)

    def __sub__(self, other):
        if not isinstance(other, HVector) or other.N != self.N:
            return NotImplemented
        return self._like(self.plus - other.plus, self.minus - other.minus)

    def __neg__(self):
        return self._like(-self.plus, -self.minus)

    def scale(self, c: QLaurent) -> "HVector":
        return self._like(self.plus.scale(c), self.minus.scale(c))

    def __eq__(self, other):
        if not isinstance(other, HVector):
            return NotImplemented
        return self.N == other.N and self.plus == other.plus and self.minus == other.minus

    def __str__(self):
        return f"({self.plus}; {self.minus})"

    def __repr__(self):
        return f"HVector({self.plus!r}, {self.minus!r}, N={self.N})"


def _default_d_plus(p):
    return d_plus(p)


def _default_d_minus(p):
    return d_minus(p)


def _default_nu(p, k):
    return p.nu(k)


@dataclass(frozen=True)
class GradedTripleSpec:
    """Z-graded construction data: residues, derivations, Dirac coefficients.

    The minus residue class is forced to the negatives of the plus class mod
    N, which is what makes the star map exchange the two slots.
    """

    N: int
    plus_residue: int = 1
    del_plus: Callable = _default_d_plus
    del_minus: Callable = _default_d_minus
    nu: Callable = _default_nu
    dirac_plus_coeff: QLaurent = field(default_factory=lambda: -q_pow(-1))
    dirac_minus_coeff: QLaurent = field(default_factory=lambda: q_pow(1))
    signs: tuple = (-1, 1, -1)

    @property
    def minus_residue(self) -> int:
        return (-self.plus_residue) % self.N


class ConeTriple:
    """Quantum-cone spectral data with its twisted reality operators."""

    def __init__(self, N: int, spec: Optional[GradedTripleSpec] = None):
        self.gens = ConeGens(N)
        self.N = N
        self.spec = spec if spec is not None else GradedTripleSpec(N=N)
        if self.spec.N != N:
            raise ValueError("spec modulus disagrees with N")
        self.signs = self.spec.signs

    def __repr__(self):
        return f"ConeTriple(N={self.N})"

    def _require_cone(self, a: DiscElement, name: str):
        if not a.is_in_cone(self.N):
            raise NotInCone(
                f"{name} is not in the cone subalgebra (degrees must be 0 mod {self.N})",
                field=name,
            )

    def _mk(self, plus: DiscElement, minus: DiscElement) -> HVector:
        return HVector(plus, minus, self.N, self.spec.plus_residue)

    def pi_act(self, a: DiscElement, h: HVector) -> HVector:
        """Left action: componentwise multiplication by nu^2(a)."""
        self._require_cone(a, "a")
        a2 = self.spec.nu(a, 2)
        return self._mk(a2 * h.plus, a2 * h.minus)

    def D_apply(self, h: HVector) -> HVector:
        """Dirac operator: (h+, h-) -> (-q^{-1} del_plus(h-), q del_minus(h+))."""
        sp = self.spec
        return self._mk(
            sp.del_plus(h.minus).scale(sp.dirac_plus_coeff),
            sp.del_minus(h.plus).scale(sp.dirac_minus_coeff),
        )

    def J_apply(self, h: HVector) -> HVector:
        """Reality operator: (h+, h-) -> (-h-*, h+*); squares to -id."""
        return self._mk(-h.minus.star(), h.plus.star())

    def J_inverse(self, h: HVector) -> HVector:
        return -self.J_apply(h)

    def gamma_apply(self, h: HVector) -> HVector:
        """Grading operator: sign flip on the minus slot."""
        return self._mk(h.plus, -h.minus)

    def nu_H(self, h: HVector, k: int = 1) -> HVector:
        """Componentwise power of the degree-counting automorphism."""
        return self._mk(self.spec.nu(h.plus, k), self.spec.nu(h.minus, k))

    def jbj(self, b: DiscElement, h: HVector) -> HVector:
        """Direct J pi(b) J^{-1} (h)."""
        return self.J_apply(self.pi_act(b, self.J_inverse(h)))

    def comm_D(self, a: DiscElement, h: HVector) -> HVector:
        """Direct commutator [D, pi(a)] applied to h."""
        return self.D_apply(self.pi_act(a, h)) - self.pi_act(a, self.D_apply(h))

    def right_action(self, h: HVector, b: DiscElement, twist: int) -> HVector:
        """Right module structure  h . b = J nu-bar^twist(pi(b*)) J^{-1} (h)."""
        bt = self.spec.nu(b.star(), twist)
        return self.J_apply(self.pi_act(bt, self.J_inverse(h)))

    def commutator_closed_form(self, a: DiscElement, h: HVector) -> HVector:
        """Closed form of [D, pi(a)] h for single-component h.

        For h in the plus slot the value is  +q^5 nu^2(del_minus(a) h+) in the
        minus slot; for the minus slot  -q^{-5} nu^2(del_plus(a) h-) in the
        plus slot.  Used as an independent oracle against ``comm_D``.
        """
        self._require_cone(a, "a")
        if not (h.plus.is_zero() or h.minus.is_zero()):
            raise ValueError("closed form wants a single-component vector")
        sp = self.spec
        if h.minus.is_zero():
            val = sp.nu(sp.del_minus(a) * h.plus, 2).scale(q_pow(5))
            return self._mk(DiscElement.zero(), val)
        val = sp.nu(sp.del_plus(a) * h.minus, 2).scale(-q_pow(-5))
        return self._mk(val, DiscElement.zero())

    def jbj_closed_form(self, b: DiscElement, h: HVector) -> HVector:
        """Closed form of J pi(b) J^{-1} h: right multiplication by nu^{-2}(b*)."""
        self._require_cone(b, "b")
        bt = self.spec.nu(b.star(), -2)
        return self._mk(h.plus * bt, h.minus * bt)

    def basis(self, cutoff: int):
        """Spanning monomials of H up to total degree cutoff, slot by slot."""
        return basis_enumerate(self.N, cutoff, self.spec.plus_residue)

    def cone_monomials(self, cutoff: int):
        """Spanning monomials of the cone subalgebra up to total degree cutoff."""
        out = []
        for t in range(cutoff + 1):
            for a in range(t + 1):
                b = t - a
                if (a - b) % self.N == 0:
                    out.append(DiscMonomial(a, b))
        return out


def basis_enumerate(N: int, cutoff: int, plus_residue: int = 1):
    """All (slot, monomial) pairs with a+b <= cutoff in the slot's residue class.

    Deterministic order: total degree, then z-exponent; plus slot first.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    out = []
    for slot, residue in (("+", plus_residue % N), ("-", (-plus_residue) % N)):
        for t in range(cutoff + 1):
            for a in range(t + 1):
                b = t - a
                if (a - b) % N == residue:
                    out.append((slot, DiscMonomial(a, b)))
    return out


def _single(triple: ConeTriple, slot: str, m: DiscMonomial) -> HVector:
    e = DiscElement.monomial(m.a, m.b)
    if slot == "+":
        return triple._mk(e, DiscElement.zero())
    return triple._mk(DiscElement.zero(), e)


def _mk_witness(inputs: dict, lhs: HVector, rhs: HVector) -> Witness:
    return Witness(
        inputs={k: str(v) for k, v in inputs.items()},
        lhs=str(lhs),
        rhs=str(rhs),
        lhs_data=[lhs.plus.serialize(), lhs.minus.serialize()],
        rhs_data=[rhs.plus.serialize(), rhs.minus.serialize()],
    )


def check_axiom(
    triple: ConeTriple,
    axiom_id: str,
    a: Optional[DiscElement] = None,
    b: Optional[DiscElement] = None,
    h: Optional[HVector] = None,
) -> AxiomReport:
    """Exact check of one twisted-reality axiom on one instance.

    Which of a, b, h are consulted depends on the axiom; unused arguments may
    be omitted.  Signs are the construction's fixed (-1, +1, -1) triple.
    """
    t = triple
    eps, eps_prime, eps_dp = t.signs
    inputs = {}
    if a is not None:
        t._require_cone(a, "a")
        inputs["a"] = a
    if b is not None:
        t._require_cone(b, "b")
        inputs["b"] = b
    if h is not None:
        inputs["h_plus"] = h.plus
        inputs["h_minus"] = h.minus

    if axiom_id == "O0":
        lhs = t.pi_act(a, t.jbj(b, h))
        rhs = t.jbj(b, t.pi_act(a, h))
    elif axiom_id == "TO1":
        lhs = t.comm_D(a, t.jbj(t.spec.nu(b, 2), h))
        rhs = t.jbj(b, t.comm_D(a, h))
    elif axiom_id == "TO1R":
        lhs = t.comm_D(a, t.jbj(t.spec.nu(b, 1), h))
        rhs = t.jbj(t.spec.nu(b, -1), t.comm_D(a, h))
    elif axiom_id == "TC":
        lhs = t.D_apply(t.J_apply(t.nu_H(h)))
        rhs = t.nu_H(t.J_apply(t.D_apply(h))).scale(QLaurent.gauss(eps_prime))
    elif axiom_id == "REG":
        lhs = t.nu_H(t.J_apply(t.nu_H(h)))
        rhs = t.J_apply(h)
    elif axiom_id == "GAMMA_SQ":
        lhs = t.gamma_apply(t.gamma_apply(h))
        rhs = h
    elif axiom_id == "GAMMA_COMM":
        lhs = t.gamma_apply(t.pi_act(a, h))
        rhs = t.pi_act(a, t.gamma_apply(h))
    elif axiom_id == "GAMMA_D":
        lhs = t.gamma_apply(t.D_apply(h))
        rhs = -t.D_apply(t.gamma_apply(h))
    elif axiom_id == "GAMMA_NU2":
        lhs = t.nu_H(t.gamma_apply(h), 2)
        rhs = t.gamma_apply(t.nu_H(h, 2))
    elif axiom_id == "GAMMA_J":
        lhs = t.gamma_apply(t.J_apply(h))
        rhs = t.J_apply(t.gamma_apply(h)).scale(QLaurent.gauss(eps_dp))
    elif axiom_id == "RIGHT":
        comm = t.comm_D(a, t.right_action(h, b, 2))
        lhs = comm
        rhs = t.right_action(t.comm_D(a, h), b, 0)
    elif axiom_id == "IMAGE":
        # nu implements the algebra automorphism in the representation:
        # pi(nu(a)) h = nu(pi(a) nu^{-1}(h))
        lhs = t.pi_act(t.spec.nu(a, 1), h)
        rhs = t.nu_H(t.pi_act(a, t.nu_H(h, -1)), 1)
    else:
        raise ValueError(f"unknown axiom {axiom_id!r}")

    ok = lhs == rhs
    return AxiomReport(
        axiom=axiom_id,
        verdict=ok,
        instances=1,
        inputs=", ".join(f"{k}={v}" for k, v in inputs.items()),
        witness=None if ok else _mk_witness(inputs, lhs, rhs),
    )


def _extract_sign(pairs):
    """Sign s with lhs == s*rhs across all pairs; None if inconsistent."""
    for s in (1, -1):
        if all(lhs == (rhs if s == 1 else -rhs) for lhs, rhs in pairs):
            return s
    return None


@dataclass
class ConeVerification:
    """Outcome of a cone suite run: per-axiom reports plus extracted signs."""

    reports: list
    signs: SignSummary

    @property
    def overall(self) -> bool:
        return all(r.verdict for r in self.reports)


def _check_axiom_block(args):
    """Worker: run every axiom and oracle cross-check over a slice of h's.

    ``h_items`` carries (global_index, slot, monomial) tuples; all witness
    sort keys use the global index so that the merged outcome is independent
    of how instances were sliced across workers.
    """
    N, algebra_cutoff, h_items = args
    triple = ConeTriple(N)
    algebra = [DiscElement.monomial(m.a, m.b) for m in triple.cone_monomials(algebra_cutoff)]
    hs = [(gih, _single(triple, slot, m)) for gih, slot, m in h_items]

    counts = {ax: 0 for ax in AXIOM_IDS + ORACLE_IDS}
    failures = {}

    def note(ax, key, witness):
        counts[ax] += 1
        if witness is not None and (ax not in failures or key < failures[ax][0]):
            failures[ax] = (key, witness)

    triple_axioms = ("O0", "TO1", "TO1R", "RIGHT")
    to1_verdicts = {}
    to1r_verdicts = {}
    for ia, a in enumerate(algebra):
        for ib, b in enumerate(algebra):
            for gih, h in hs:
                key = (ia, ib, gih)
                for ax in triple_axioms:
                    rep = check_axiom(triple, ax, a, b, h)
                    note(ax, key, None if rep.verdict else rep.witness)
                    if ax == "TO1":
                        to1_verdicts[key] = rep.verdict
                    elif ax == "TO1R":
                        to1r_verdicts[key] = rep.verdict
                w = None
                if to1_verdicts[key] != to1r_verdicts[key]:
                    w = Witness(
                        inputs={"a": str(a), "b": str(b), "h_plus": str(h.plus), "h_minus": str(h.minus)},
                        lhs=f"TO1 verdict {to1_verdicts[key]}",
                        rhs=f"TO1R verdict {to1r_verdicts[key]}",
                    )
                note("TO1_EQUIV", key, w)

    for ia, a in enumerate(algebra):
        for gih, h in hs:
            key = (ia, gih)
            for ax in ("GAMMA_COMM", "IMAGE"):
                rep = check_axiom(triple, ax, a, None, h)
                note(ax, key, None if rep.verdict else rep.witness)

            # oracle agreement: direct values against the closed forms
            direct = triple.comm_D(a, h)
            oracle = triple.commutator_closed_form(a, h)
            w = None
            if direct != oracle:
                w = _mk_witness({"a": a, "h_plus": h.plus, "h_minus": h.minus}, direct, oracle)
            note("ORACLE_COMM", key, w)

            direct = triple.jbj(a, h)
            oracle = triple.jbj_closed_form(a, h)
            w = None
            if direct != oracle:
                w = _mk_witness({"b": a, "h_plus": h.plus, "h_minus": h.minus}, direct, oracle)
            note("ORACLE_JBJ", key, w)

    for gih, h in hs:
        for ax in ("TC", "REG", "GAMMA_SQ", "GAMMA_D", "GAMMA_NU2", "GAMMA_J"):
            rep = check_axiom(triple, ax, None, None, h)
            note(ax, (gih,), None if rep.verdict else rep.witness)

    # sign candidates from this block
    j2 = [(triple.J_apply(triple.J_apply(h)), h) for _, h in hs]
    tc = [
        (triple.D_apply(triple.J_apply(triple.nu_H(h))), triple.nu_H(triple.J_apply(triple.D_apply(h))))
        for _, h in hs
    ]
    gj = [(triple.gamma_apply(triple.J_apply(h)), triple.J_apply(triple.gamma_apply(h))) for _, h in hs]
    return counts, failures, j2, tc, gj


def verify_cone(
    N: int, cutoff: int, algebra_cutoff: int, workers: int = 1
) -> ConeVerification:
    """Run every axiom over the enumerated spanning instances, exactly.

    Also cross-checks the two order-one formulations against each other and
    the direct commutator / conjugation against their closed forms, and
    extracts the (epsilon, epsilon', epsilon'') signs from the run.
    """
    triple = ConeTriple(N)
    h_items = [(gih, slot, m) for gih, (slot, m) in enumerate(triple.basis(cutoff))]

    if workers > 1 and len(h_items) > 1:
        nblocks = min(workers * 4, len(h_items))
        blocks = [h_items[i::nblocks] for i in range(nblocks)]
        args = [(N, algebra_cutoff, blk) for blk in blocks]
        with multiprocessing.Pool(workers) as pool:
            results = pool.map(_check_axiom_block, args)
    else:
        results = [_check_axiom_block((N, algebra_cutoff, h_items))]

    counts = {ax: 0 for ax in AXIOM_IDS + ORACLE_IDS}
    failures = {}
    j2_pairs, tc_pairs, gj_pairs = [], [], []
    for blk_counts, blk_failures, j2, tc, gj in results:
        for ax, c in blk_counts.items():
            counts[ax] += c
        for ax, (key, w) in blk_failures.items():
            if ax not in failures or key < failures[ax][0]:
                failures[ax] = (key, w)
        j2_pairs.extend(j2)
        tc_pairs.extend(tc)
        gj_pairs.extend(gj)

    descr = {
        "abh": f"a,b cone monomials (N={N}, total degree <= {algebra_cutoff}); "
        f"h basis monomials (cutoff {cutoff})",
        "ah": f"a cone monomials (total degree <= {algebra_cutoff}); h basis (cutoff {cutoff})",
        "h": f"h basis monomials (cutoff {cutoff})",
    }
    input_kind = {
        "O0": "abh", "TO1": "abh", "TO1R": "abh", "RIGHT": "abh", "TO1_EQUIV": "abh",
        "GAMMA_COMM": "ah", "IMAGE": "ah", "ORACLE_COMM": "ah", "ORACLE_JBJ": "ah",
        "TC": "h", "REG": "h", "GAMMA_SQ": "h", "GAMMA_D": "h",
        "GAMMA_NU2": "h", "GAMMA_J": "h",
    }
    reports = []
    for ax in AXIOM_IDS + ORACLE_IDS:
        w = failures.get(ax)
        reports.append(
            AxiomReport(
                axiom=ax,
                verdict=w is None,
                instances=counts[ax],
                inputs=descr[input_kind[ax]],
                witness=w[1] if w is not None else None,
            )
        )

    eps = _extract_sign([(l, h) for l, h in j2_pairs if not h.is_zero()]) if j2_pairs else None
    nonzero_tc = [(l, r) for l, r in tc_pairs if not (l.is_zero() and r.is_zero())]
    eps_prime = _extract_sign(nonzero_tc) if nonzero_tc else None
    nonzero_gj = [(l, r) for l, r in gj_pairs if not (l.is_zero() and r.is_zero())]
    eps_dp = _extract_sign(nonzero_gj) if nonzero_gj else None

    ko = None
    if eps is not None and eps_prime is not None and eps_dp is not None:
        from .conformal import ko_dimension
        from .errors import NotInTable

        try:
            ko = ko_dimension(eps, eps_prime, eps_dp)
        except NotInTable:
            ko = None
    signs = SignSummary(eps, eps_prime, eps_dp, ko)
    return ConeVerification(reports=reports, signs=signs)
