"""Finite-dimensional real spectral triples over exact Gaussian rationals.

Covers conformal twisting D -> k'Dk' with nu = k^{-1}k' for a positive
invertible k in the represented algebra, iterated twisting with nu replaced
by k' nu k^{-1}, twisted fluctuations D + alpha + eps' nu J alpha J^{-1} nu,
and the KO-dimension sign table.

Anti-linear operators are stored as (matrix, conjugation) pairs acting as
h -> K conj(h), so that every axiom reduces to an identity of matrices over
the exact field:  J M J^{-1} = K conj(M) K^{-1}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .errors import (
    BadFactor,
    BadJSquare,
    GammaFails,
    NonHermitianD,
    NotInTable,
    NotSelfadjoint,
    OrderOneViolated,
    ParseError,
    TwistIncompatible,
)
from .report import AxiomReport, SignSummary, Witness
from .scalar import GAUSS_ONE, GAUSS_ZERO, GaussRational, format_gauss
from .syntax import parse_gauss


class QMatrix:
    """Square matrix of Gaussian rationals with exact arithmetic throughout."""

    __slots__ = ("rows", "n")

    def __init__(self, rows):
        rows = tuple(
            tuple(c if isinstance(c, GaussRational) else GaussRational(c) for c in row)
            for row in rows
        )
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.rows = rows
        self.n = n

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(
            [[GAUSS_ONE if i == j else GAUSS_ZERO for j in range(n)] for i in range(n)]
        )

    @classmethod
    def zero(cls, n: int) -> "QMatrix":
        return cls([[GAUSS_ZERO] * n for _ in range(n)])

    def _check_dim(self, other):
        if self.n != other.n:
            raise ValueError("dimension mismatch")

    def __add__(self, other):
        self._check_dim(other)
        return QMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other):
        self._check_dim(other)
        return QMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __neg__(self):
        return QMatrix([[-a for a in row] for row in self.rows])

    def __mul__(self, other):
        if isinstance(other, QMatrix):
            self._check_dim(other)
            cols = list(zip(*other.rows))
            return QMatrix(
                [
                    [sum((a * b for a, b in zip(row, col)), GAUSS_ZERO) for col in cols]
                    for row in self.rows
                ]
            )
        if isinstance(other, (int, GaussRational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, GaussRational)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "QMatrix":
        if not isinstance(c, GaussRational):
            c = GaussRational(c)
        return QMatrix([[a * c for a in row] for row in self.rows])

    def conj(self) -> "QMatrix":
        return QMatrix([[a.conjugate() for a in row] for row in self.rows])

    def transpose(self) -> "QMatrix":
        return QMatrix(list(zip(*self.rows)))

    def adjoint(self) -> "QMatrix":
        return self.conj().transpose()

    def is_hermitian(self) -> bool:
        return self == self.adjoint()

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.rows for a in row)

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def commutator(self, other: "QMatrix") -> "QMatrix":
        return self * other - other * self

    def inverse(self) -> "QMatrix":
        """Gauss-Jordan over the exact field; raises on singular input."""
        n = self.n
        aug = [
            [self.rows[i][j] for j in range(n)]
            + [GAUSS_ONE if i == j else GAUSS_ZERO for j in range(n)]
            for i in range(n)
        ]
        for col in range(n):
            pivot = next(
                (r for r in range(col, n) if not aug[r][col].is_zero()), None
            )
            if pivot is None:
                raise ZeroDivisionError("singular matrix")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = aug[col][col].inverse()
            aug[col] = [a * inv for a in aug[col]]
            for r in range(n):
                if r != col and not aug[r][col].is_zero():
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return QMatrix([row[n:] for row in aug])

    def det(self) -> GaussRational:
        """Determinant by fraction-exact elimination."""
        n = self.n
        m = [list(row) for row in self.rows]
        det = GAUSS_ONE
        for col in range(n):
            pivot = next((r for r in range(col, n) if not m[r][col].is_zero()), None)
            if pivot is None:
                return GAUSS_ZERO
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
                det = -det
            det = det * m[col][col]
            inv = m[col][col].inverse()
            for r in range(col + 1, n):
                if not m[r][col].is_zero():
                    f = m[r][col] * inv
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        return det

    def leading_minor(self, k: int) -> GaussRational:
        return QMatrix([row[:k] for row in self.rows[:k]]).det()

    def is_positive_definite(self) -> bool:
        """Sylvester's criterion; requires hermitian input."""
        if not self.is_hermitian():
            return False
        for k in range(1, self.n + 1):
            d = self.leading_minor(k)
            if d.im != 0 or d.re <= 0:
                return False
        return True

    def entries_str(self):
        return [[format_gauss(a) for a in row] for row in self.rows]

    def __str__(self):
        return "[" + "; ".join(", ".join(r) for r in self.entries_str()) + "]"

    def __repr__(self):
        return f"QMatrix({self.entries_str()!r})"


def kron(A: QMatrix, B: QMatrix) -> QMatrix:
    """Kronecker product with row-major vec convention: vec(AXB^T)=(A(x)B)vec(X)."""
    n, m = A.n, B.n
    rows = []
    for i in range(n):
        for k in range(m):
            rows.append(
                [A.rows[i][j] * B.rows[k][l] for j in range(n) for l in range(m)]
            )
    return QMatrix(rows)


def in_span(M: QMatrix, basis) -> Optional[list]:
    """Coefficients expressing M in the linear span of basis matrices, or None."""
    n2 = M.n * M.n
    cols = len(basis)
    rows = []
    rhs = []
    for i in range(M.n):
        for j in range(M.n):
            rows.append([bm.rows[i][j] for bm in basis])
            rhs.append(M.rows[i][j])
    # Gaussian elimination on the (n^2) x cols system
    aug = [row + [r] for row, r in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, n2) if not aug[i][c].is_zero()), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = aug[r][c].inverse()
        aug[r] = [a * inv for a in aug[r]]
        for i in range(n2):
            if i != r and not aug[i][c].is_zero():
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, n2):
        if not aug[i][cols].is_zero():
            return None
    coeffs = [GAUSS_ZERO] * cols
    for row_idx, c in enumerate(pivots):
        coeffs[c] = aug[row_idx][cols]
    return coeffs


class AntiLinearOp:
    """Anti-linear operator h -> K conj(h) with invertible K."""

    __slots__ = ("K", "_K_inv")

    def __init__(self, K: QMatrix):
        self.K = K
        self._K_inv = K.inverse()  # rejects singular K at construction

    def conjugate_op(self, M: QMatrix) -> QMatrix:
        """The linear matrix of J M J^{-1}."""
        return self.K * M.conj() * self._K_inv

    def square_scalar(self) -> GaussRational:
        """c with J^2 = c id; raises BadJSquare if J^2 is not scalar +-1."""
        sq = self.K * self.K.conj()
        n = self.K.n
        for c in (GAUSS_ONE, -GAUSS_ONE):
            if sq == QMatrix.identity(n).scale(c):
                return c
        raise BadJSquare("J^2 is not +-identity", field="J_matrix")

    def apply_vec(self, v):
        """Apply to a column vector (list of GaussRational)."""
        return [
            sum((a * x.conjugate() for a, x in zip(row, v)), GAUSS_ZERO)
            for row in self.K.rows
        ]


@dataclass
class FiniteTriple:
    """Finite real spectral triple: spanning set of pi(A), D, J, optional gamma.

    ``gens`` must linearly span the represented algebra; every axiom checked
    downstream is linear (or sesquilinear) in the algebra arguments, so
    checking on the spanning set decides it on the whole algebra.
    """

    n: int
    gens: tuple
    D: QMatrix
    J: AntiLinearOp
    gamma: Optional[QMatrix] = None
    epsilon: int = 1
    epsilon_prime: int = 1
    epsilon_double_prime: Optional[int] = None

    def validate(self):
        if not self.D.is_hermitian():
            raise NonHermitianD("D is not hermitian", field="D")
        eps = self.J.square_scalar()
        if eps != GaussRational(self.epsilon):
            raise BadJSquare(
                f"J^2 = {format_gauss(eps)} but epsilon = {self.epsilon:+d}",
                field="epsilon",
            )
        if self.gamma is not None:
            g = self.gamma
            if g * g != QMatrix.identity(self.n):
                raise GammaFails("gamma^2 != id", field="gamma")
            if any(not g.commutator(a).is_zero() for a in self.gens):
                raise GammaFails("gamma does not commute with the algebra", field="gamma")
            if g * self.D != -(self.D * g):
                raise GammaFails("gamma does not anticommute with D", field="gamma")
        order_one_witness = self.order_one_witness()
        if order_one_witness is not None:
            i, j = order_one_witness
            raise OrderOneViolated(
                "order-one condition fails on generator pair "
                f"(index {i}, index {j})",
                field="generators",
            )

    def order_one_witness(self):
        """First generator pair violating [[D, pi(a)], J pi(b) J^{-1}] = 0."""
        for i, a in enumerate(self.gens):
            da = self.D.commutator(a)
            for j, b in enumerate(self.gens):
                jb = self.J.conjugate_op(b)
                if not da.commutator(jb).is_zero():
                    return (i, j)
        return None


@dataclass
class ConformalFactor:
    """Positive invertible element of the represented algebra."""

    k: QMatrix

    @classmethod
    def validated(cls, k: QMatrix, triple: FiniteTriple) -> "ConformalFactor":
        if in_span(k, triple.gens) is None:
            raise BadFactor("k is not in the span of the represented algebra", field="k")
        if not k.is_hermitian():
            raise BadFactor("k is not hermitian", field="k")
        if not k.is_positive_definite():
            raise BadFactor("k is not positive definite", field="k")
        return cls(k)


@dataclass
class TwistedTriple:
    """A triple with twist data: new Dirac operator, nu, and the matrix
    implementing the induced algebra automorphism a -> m^{-1} a m."""

    base: FiniteTriple
    D_new: QMatrix
    nu: QMatrix
    nu_hat: QMatrix

    @property
    def n(self):
        return self.base.n

    @property
    def gens(self):
        return self.base.gens

    @property
    def J(self):
        return self.base.J

    @property
    def gamma(self):
        return self.base.gamma

    @property
    def epsilon_prime(self):
        return self.base.epsilon_prime

    @classmethod
    def trivial(cls, base: FiniteTriple) -> "TwistedTriple":
        ident = QMatrix.identity(base.n)
        return cls(base=base, D_new=base.D, nu=ident, nu_hat=ident)


def jmj(M: QMatrix, J: AntiLinearOp) -> QMatrix:
    """Conjugation of a linear map by the anti-linear J as a plain matrix."""
    return J.conjugate_op(M)


def k_prime(k: QMatrix, J: AntiLinearOp) -> QMatrix:
    """The mirrored factor J k J^{-1}."""
    return J.conjugate_op(k)


def build_twisted(T: FiniteTriple, k: QMatrix) -> TwistedTriple:
    """Conformal twist: D -> k'Dk', nu = k^{-1}k', nu-hat implemented by k.

    Requires the base triple to satisfy the untwisted order-one condition and
    k to be a valid conformal factor.
    """
    if T.order_one_witness() is not None:
        raise OrderOneViolated("base triple fails the order-one condition")
    factor = ConformalFactor.validated(k, T)
    kp = k_prime(factor.k, T.J)
    d_new = kp * T.D * kp
    nu = factor.k.inverse() * kp
    return TwistedTriple(base=T, D_new=d_new, nu=nu, nu_hat=factor.k)


def _matrix_witness(inputs, lhs: QMatrix, rhs: QMatrix) -> Witness:
    return Witness(
        inputs={key: str(val) for key, val in inputs.items()},
        lhs=str(lhs),
        rhs=str(rhs),
    )


@dataclass
class ConformalVerification:
    reports: list
    signs: SignSummary

    @property
    def overall(self) -> bool:
        return all(r.verdict for r in self.reports)


def verify_twisted(T: TwistedTriple) -> ConformalVerification:
    """Exact checks of the twisted reality conditions on a finite triple."""
    J = T.J
    nu = T.nu
    nu_inv = nu.inverse()
    D = T.D_new
    gens = T.gens
    n = T.n
    ident = QMatrix.identity(n)
    reports = []
    gen_descr = f"pairs from the {len(gens)} spanning generators"

    def add(axiom, pass_fail_pairs, inputs_descr):
        witness = None
        count = 0
        for key_inputs, lhs, rhs in pass_fail_pairs:
            count += 1
            if witness is None and lhs != rhs:
                witness = _matrix_witness(key_inputs, lhs, rhs)
        reports.append(
            AxiomReport(
                axiom=axiom,
                verdict=witness is None,
                instances=count,
                inputs=inputs_descr,
                witness=witness,
            )
        )

    add(
        "O0",
        [
            ({"a_index": i, "b_index": j}, a.commutator(J.conjugate_op(b)), QMatrix.zero(n))
            for i, a in enumerate(gens)
            for j, b in enumerate(gens)
        ],
        gen_descr,
    )

    nu2 = nu * nu
    nu2_inv = nu_inv * nu_inv
    to1_pairs = []
    to1r_pairs = []
    m = T.nu_hat
    m_inv = m.inverse()
    for i, a in enumerate(gens):
        da = D.commutator(a)
        for j, b in enumerate(gens):
            jb2 = J.conjugate_op(nu2 * b * nu2_inv)
            jb = J.conjugate_op(b)
            to1_pairs.append(({"a_index": i, "b_index": j}, da * jb2, jb * da))
            jhat = J.conjugate_op(m_inv * b * m)
            jhat_inv = J.conjugate_op(m * b * m_inv)
            to1r_pairs.append(({"a_index": i, "b_index": j}, da * jhat, jhat_inv * da))
    add("TO1", to1_pairs, gen_descr)
    add("TO1R", to1r_pairs, gen_descr)

    eps_prime = GaussRational(T.epsilon_prime)
    add(
        "TC",
        [({}, D * J.K * nu.conj(), (nu * J.K * D.conj()).scale(eps_prime))],
        "operator identity",
    )
    add("REG", [({}, nu * J.K * nu.conj(), J.K)], "operator identity")

    if T.gamma is not None:
        g = T.gamma
        add("GAMMA_SQ", [({}, g * g, ident)], "operator identity")
        add(
            "GAMMA_COMM",
            [({"a_index": i}, g.commutator(a), QMatrix.zero(n)) for i, a in enumerate(gens)],
            "spanning generators",
        )
        add("GAMMA_D", [({}, g * D, -(D * g))], "operator identity")
        add("GAMMA_NU2", [({}, nu2 * g, g * nu2)], "operator identity")
        eps_dp = GaussRational(T.base.epsilon_double_prime or 1)
        add(
            "GAMMA_J",
            [({}, g * J.K, (J.K * g.conj()).scale(eps_dp))],
            "operator identity",
        )

    image_pairs = []
    for i, a in enumerate(gens):
        conj = nu * a * nu_inv
        coeffs = in_span(conj, gens)
        if coeffs is None:
            image_pairs.append(({"a_index": i}, conj, QMatrix.zero(n)))
        else:
            resynth = QMatrix.zero(n)
            for c, bm in zip(coeffs, gens):
                resynth = resynth + bm.scale(c)
            image_pairs.append(({"a_index": i}, conj, resynth))
        # nu-hat consistency: conjugation by nu equals conjugation by the
        # recorded algebra element
        image_pairs.append(({"a_index": i, "check": "nu_hat"}, conj, m_inv * a * m))
    add("IMAGE", image_pairs, "spanning generators")

    # sign extraction
    eps = None
    sq = J.K * J.K.conj()
    for cand in (1, -1):
        if sq == ident.scale(GaussRational(cand)):
            eps = cand
    epsp = None
    lhs = D * J.K * nu.conj()
    rhs = nu * J.K * D.conj()
    if not lhs.is_zero() or not rhs.is_zero():
        for cand in (1, -1):
            if lhs == rhs.scale(GaussRational(cand)):
                epsp = cand
    epsdp = None
    if T.gamma is not None:
        glhs = T.gamma * J.K
        grhs = J.K * T.gamma.conj()
        for cand in (1, -1):
            if glhs == grhs.scale(GaussRational(cand)):
                epsdp = cand
    ko = None
    if eps is not None and epsp is not None:
        try:
            ko = ko_dimension(eps, epsp, epsdp)
        except NotInTable:
            ko = None
    return ConformalVerification(
        reports=reports, signs=SignSummary(eps, epsp, epsdp, ko)
    )


@dataclass
class OneForm:
    """Element sum_i pi(a_i) [D, pi(b_i)] with its provenance retained."""

    pairs: list  # list of (QMatrix, QMatrix)
    value: QMatrix

    @classmethod
    def build(cls, T, pairs) -> "OneForm":
        D = T.D_new if isinstance(T, TwistedTriple) else T.D
        n = T.n
        value = QMatrix.zero(n)
        resolved = []
        for a, b in pairs:
            if isinstance(a, int):
                a = T.gens[a]
            if isinstance(b, int):
                b = T.gens[b]
            resolved.append((a, b))
            value = value + a * D.commutator(b)
        return cls(pairs=resolved, value=value)

    def recompute(self, T) -> QMatrix:
        D = T.D_new if isinstance(T, TwistedTriple) else T.D
        n = T.n
        value = QMatrix.zero(n)
        for a, b in self.pairs:
            value = value + a * D.commutator(b)
        return value


def one_form(T, pairs) -> OneForm:
    return OneForm.build(T, pairs)


def alpha_prime(T: TwistedTriple, alpha: OneForm) -> QMatrix:
    """The mirrored one-form nu J alpha J^{-1} nu."""
    return T.nu * T.J.conjugate_op(alpha.value) * T.nu


def check_alpha_prime_central(T: TwistedTriple, alpha: OneForm, a) -> AxiomReport:
    """Exact check that the mirrored one-form commutes with pi(a)."""
    if isinstance(a, int):
        a = T.gens[a]
    ap = alpha_prime(T, alpha)
    comm = ap.commutator(a)
    ok = comm.is_zero()
    return AxiomReport(
        axiom="ALPHA_PRIME_CENTRAL",
        verdict=ok,
        instances=1,
        inputs="one-form against an algebra element",
        witness=None
        if ok
        else _matrix_witness({"a": a, "alpha": alpha.value}, comm, QMatrix.zero(T.n)),
    )


def fluctuate(T: TwistedTriple, alpha: OneForm) -> TwistedTriple:
    """Replace D by D + alpha + eps' nu J alpha J^{-1} nu; J, nu, gamma stay.

    The perturbation alpha + eps' alpha' must be hermitian, exactly.
    """
    ap = alpha_prime(T, alpha)
    perturbation = alpha.value + ap.scale(GaussRational(T.epsilon_prime))
    if not perturbation.is_hermitian():
        raise NotSelfadjoint(
            "alpha + eps' nu J alpha J^{-1} nu is not selfadjoint", field="alpha"
        )
    return TwistedTriple(
        base=T.base, D_new=T.D_new + perturbation, nu=T.nu, nu_hat=T.nu_hat
    )


def commutator_one_form(T: TwistedTriple, alpha: OneForm, a) -> OneForm:
    """[alpha, pi(a)] exhibited constructively as a one-form.

    Termwise:  pi(c)[D, pi(d)] pi(a) - pi(a) pi(c)[D, pi(d)]
             = pi(c)[D, pi(da)] - pi(cd)[D, pi(a)] - pi(ac)[D, pi(d)].
    No span-membership search is involved.
    """
    if isinstance(a, int):
        a = T.gens[a]
    pairs = []
    for c, d in alpha.pairs:
        pairs.append((c, d * a))
        pairs.append((-(c * d), a))
        pairs.append((-(a * c), d))
    return OneForm.build(T, pairs)


def fluctuation_closure_check(T: TwistedTriple, alpha: OneForm, a) -> AxiomReport:
    """Check [D_alpha, pi(a)] = [D, pi(a)] + [alpha, pi(a)] and exhibit the
    last commutator as an explicit one-form."""
    if isinstance(a, int):
        a = T.gens[a]
    fluct = fluctuate(T, alpha)
    lhs = fluct.D_new.commutator(a)
    rhs = T.D_new.commutator(a) + alpha.value.commutator(a)
    wit = None
    if lhs != rhs:
        wit = _matrix_witness({"a": a}, lhs, rhs)
    else:
        constructed = commutator_one_form(T, alpha, a)
        if constructed.value != alpha.value.commutator(a):
            wit = _matrix_witness(
                {"a": a}, constructed.value, alpha.value.commutator(a)
            )
    return AxiomReport(
        axiom="FLUCTUATION_CLOSURE",
        verdict=wit is None,
        instances=2,
        inputs="fluctuated commutator and constructive one-form decomposition",
        witness=wit,
    )


def compose_fluctuations(T: TwistedTriple, alpha: OneForm, beta_pairs) -> OneForm:
    """Single one-form over T whose fluctuation equals fluctuating by alpha
    and then by beta (beta given by pairs over the alpha-fluctuated triple).

    Each beta term pi(x)[D_alpha, pi(y)] expands over the original D as
    pi(x)[D, pi(y)] + pi(x)[alpha, pi(y)], the latter decomposed termwise.
    """
    first = fluctuate(T, alpha)
    pairs = list(alpha.pairs)
    for x, y in beta_pairs:
        if isinstance(x, int):
            x = T.gens[x]
        if isinstance(y, int):
            y = T.gens[y]
        pairs.append((x, y))
        for c, d in alpha.pairs:
            pairs.append((x * c, d * y))
            pairs.append((-(x * c * d), y))
            pairs.append((-(x * y * c), d))
    composite = OneForm.build(T, pairs)
    beta = OneForm.build(first, beta_pairs)
    if composite.value != alpha.value + beta.value:
        raise AssertionError("composite one-form does not match alpha + beta")
    return composite


def retwist(T: TwistedTriple, k: QMatrix) -> TwistedTriple:
    """Iterate the conformal twist: D -> k'Dk', nu -> k' nu k^{-1}.

    Precondition (exact): conjugation by nu fixes k k'; otherwise the twist
    data would not satisfy the reality conditions and TWIST_INCOMPATIBLE is
    raised (a precondition violation, not a verdict).
    """
    factor = ConformalFactor.validated(k, T.base)
    kp = k_prime(factor.k, T.J)
    kkp = factor.k * kp
    if T.nu * kkp * T.nu.inverse() != kkp:
        raise TwistIncompatible(
            "conjugation by nu does not fix k k'", field="k"
        )
    return TwistedTriple(
        base=T.base,
        D_new=kp * T.D_new * kp,
        nu=kp * T.nu * factor.k.inverse(),
        nu_hat=factor.k * T.nu_hat,
    )


# KO-dimension mod 8 from the reality signs; even rows carry all three signs,
# odd rows only (epsilon, epsilon').
_KO_EVEN = {
    (1, 1, 1): 0,
    (-1, 1, -1): 2,
    (-1, 1, 1): 4,
    (1, 1, -1): 6,
}
_KO_ODD = {
    (1, -1): 1,
    (-1, 1): 3,
    (-1, -1): 5,
    (1, 1): 7,
}


def ko_dimension(epsilon: int, epsilon_prime: int, epsilon_double_prime=None) -> int:
    """Table lookup of the KO-dimension mod 8."""
    for name, v in (("epsilon", epsilon), ("epsilon_prime", epsilon_prime)):
        if v not in (1, -1):
            raise NotInTable(f"{name} must be +1 or -1", field=name)
    if epsilon_double_prime is None:
        got = _KO_ODD.get((epsilon, epsilon_prime))
    else:
        if epsilon_double_prime not in (1, -1):
            raise NotInTable("epsilon_double_prime must be +1 or -1",
                             field="epsilon_double_prime")
        got = _KO_EVEN.get((epsilon, epsilon_prime, epsilon_double_prime))
    if got is None:
        raise NotInTable("sign combination is not a row of the KO table")
    return got


def _parse_matrix(obj, n, field):
    if (
        not isinstance(obj, list)
        or len(obj) != n
        or any(not isinstance(row, list) or len(row) != n for row in obj)
    ):
        raise ParseError(f"expected an {n}x{n} matrix of strings", field=field)
    try:
        return QMatrix([[parse_gauss(cell) for cell in row] for row in obj])
    except ParseError as exc:
        raise ParseError(f"bad matrix entry: {exc}", field=field) from exc


def parse_fixture(path) -> FiniteTriple:
    """Load and validate a finite-triple fixture file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read fixture: {exc}", field="fixture") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"invalid JSON: {exc.msg}", position=exc.pos, field="fixture"
        ) from exc
    if not isinstance(obj, dict):
        raise ParseError("fixture must be a JSON object", field="fixture")
    for key in ("n", "generators", "D", "J_matrix", "epsilon", "epsilon_prime"):
        if key not in obj:
            raise ParseError(f"missing field {key!r}", field=key)
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise ParseError("n must be a positive integer", field="n")
    if not isinstance(obj["generators"], list) or not obj["generators"]:
        raise ParseError("generators must be a nonempty list", field="generators")
    gens = tuple(
        _parse_matrix(g, n, f"generators[{i}]") for i, g in enumerate(obj["generators"])
    )
    D = _parse_matrix(obj["D"], n, "D")
    K = _parse_matrix(obj["J_matrix"], n, "J_matrix")
    try:
        J = AntiLinearOp(K)
    except ZeroDivisionError:
        raise ParseError("J_matrix is singular", field="J_matrix") from None
    for key in ("epsilon", "epsilon_prime"):
        if obj[key] not in (1, -1):
            raise ParseError(f"{key} must be 1 or -1", field=key)
    gamma = None
    eps_dp = None
    if "gamma" in obj:
        gamma = _parse_matrix(obj["gamma"], n, "gamma")
        eps_dp = obj.get("epsilon_double_prime")
        if eps_dp not in (1, -1):
            raise ParseError(
                "epsilon_double_prime must be 1 or -1 when gamma is present",
                field="epsilon_double_prime",
            )
    triple = FiniteTriple(
        n=n,
        gens=gens,
        D=D,
        J=J,
        gamma=gamma,
        epsilon=obj["epsilon"],
        epsilon_prime=obj["epsilon_prime"],
        epsilon_double_prime=eps_dp,
    )
    triple.validate()
    return triple


def parse_conformal_factor(path, triple: FiniteTriple) -> QMatrix:
    """Load a conformal factor file ({"matrix": [[...]]}) and validate it."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read factor file: {exc}", field="k") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"invalid JSON: {exc.msg}", position=exc.pos, field="k"
        ) from exc
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise ParseError('factor file must be {"matrix": [[...]]}', field="k")
    k = _parse_matrix(obj["matrix"], triple.n, "matrix")
    ConformalFactor.validated(k, triple)
    return k


def parse_one_form(path, T) -> OneForm:
    """Load a one-form file: {"pairs": [{"coeff": str, "a": idx, "b": idx}]}."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read one-form file: {exc}", field="one_form") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"invalid JSON: {exc.msg}", position=exc.pos, field="one_form"
        ) from exc
    if not isinstance(obj, dict) or not isinstance(obj.get("pairs"), list):
        raise ParseError('one-form file must be {"pairs": [...]}', field="one_form")
    pairs = []
    for idx, entry in enumerate(obj["pairs"]):
        if not isinstance(entry, dict) or "a" not in entry or "b" not in entry:
            raise ParseError(
                f"pair {idx} must have generator indices 'a' and 'b'",
                field=f"pairs[{idx}]",
            )
        ai, bi = entry["a"], entry["b"]
        ngens = len(T.gens)
        if not (isinstance(ai, int) and 0 <= ai < ngens):
            raise ParseError(f"pair {idx}: bad generator index", field=f"pairs[{idx}].a")
        if not (isinstance(bi, int) and 0 <= bi < ngens):
            raise ParseError(f"pair {idx}: bad generator index", field=f"pairs[{idx}].b")
        coeff = parse_gauss(entry.get("coeff", "1"))
        pairs.append((T.gens[ai].scale(coeff), T.gens[bi]))
    return OneForm.build(T, pairs)
