"""The quantum disc *-algebra as a confluent rewriting system.

Elements are kept in the normal-ordered basis z^a zs^b (zs denotes z*), the
unique normal form under the oriented rule  zs z -> q^2 z zs + (1 - q^2).
The module provides the Z-grading by degree a - b, the degree-counting
automorphism (a |-> q^{|a|} a), the pair of twisted skew derivations with
Leibniz rule  d(pr) = d(p) nu^2(r) + p d(r), and the cone subalgebra of
degrees divisible by N with its generator images  x = 1 - z zs,  y = z^N.

``normal_form`` reduces free words by literal rewriting and is deliberately
independent of the memoized product tables used by ``DiscElement``
multiplication; the test suite plays them against each other.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from . import _kernels
from .errors import NotInCone, ParseError
from .report import AxiomReport, Witness
from .scalar import QLaurent, q_pow

Z = 0
ZS = 1

_LETTER_NAMES = {Z: "z", ZS: "zs"}
_LETTER_CODES = {"z": Z, "zs": ZS, "z*": ZS}


def word(letters: Iterable[str]) -> tuple:
    """Free-monoid word over {z, zs} from letter names ('z*' accepted)."""
    out = []
    for name in letters:
        code = _LETTER_CODES.get(name)
        if code is None:
            raise ParseError(f"unknown generator {name!r}")
        out.append(code)
    return tuple(out)


class DiscMonomial(NamedTuple):
    """Normal-ordered monomial z^a zs^b."""

    a: int
    b: int

    @property
    def degree(self) -> int:
        return self.a - self.b

    def __str__(self) -> str:
        return format_monomial(self)


def format_monomial(m: DiscMonomial) -> str:
    parts = []
    if m.a:
        parts.append("z" if m.a == 1 else f"z^{m.a}")
    if m.b:
        parts.append("zs" if m.b == 1 else f"zs^{m.b}")
    return "*".join(parts) if parts else "1"


class DiscElement:
    """Finite linear combination of normal-ordered disc monomials."""

    __slots__ = ("_d",)

    def __init__(self, terms=None):
        d = {}
        if terms:
            for m, c in terms.items():
                a, b = m
                if a < 0 or b < 0:
                    raise ValueError("monomial exponents must be nonnegative")
                if not isinstance(c, QLaurent):
                    c = QLaurent.gauss(c)
                if not c.is_zero():
                    d[(a, b)] = c._t
        self._d = d

    @classmethod
    def _from_prim(cls, d):
        self = object.__new__(cls)
        self._d = d
        return self

    @classmethod
    def zero(cls) -> "DiscElement":
        return cls._from_prim({})

    @classmethod
    def one(cls) -> "DiscElement":
        return cls._from_prim({(0, 0): {0: (1, 0, 1)}})

    @classmethod
    def z(cls) -> "DiscElement":
        return cls._from_prim({(1, 0): {0: (1, 0, 1)}})

    @classmethod
    def zs(cls) -> "DiscElement":
        return cls._from_prim({(0, 1): {0: (1, 0, 1)}})

    @classmethod
    def monomial(cls, a: int, b: int, coeff=1) -> "DiscElement":
        return cls({DiscMonomial(a, b): coeff})

    @property
    def terms(self) -> dict:
        return {
            DiscMonomial(a, b): QLaurent._from_prim(c)
            for (a, b), c in self._d.items()
        }

    def is_zero(self) -> bool:
        return not self._d

    def coefficient(self, a: int, b: int) -> QLaurent:
        return QLaurent._from_prim(self._d.get((a, b), {}))

    def __add__(self, other):
        if not isinstance(other, DiscElement):
            return NotImplemented
        return DiscElement._from_prim(_kernels.impl.de_add(self._d, other._d))

    def __sub__(self, other):
        if not isinstance(other, DiscElement):
            return NotImplemented
        return DiscElement._from_prim(
            _kernels.impl.de_add(self._d, _kernels.impl.de_neg(other._d))
        )

    def __neg__(self):
        return DiscElement._from_prim(_kernels.impl.de_neg(self._d))

    def __mul__(self, other):
        if isinstance(other, DiscElement):
            return DiscElement._from_prim(_kernels.impl.de_mul(self._d, other._d))
        if isinstance(other, (int, QLaurent)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, QLaurent)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "DiscElement":
        if not isinstance(c, QLaurent):
            c = QLaurent.gauss(c)
        return DiscElement._from_prim(_kernels.impl.de_scale(self._d, c._t))

    def star(self) -> "DiscElement":
        """Anti-linear anti-multiplicative involution; (z^a zs^b)* = z^b zs^a."""
        return DiscElement._from_prim(_kernels.impl.de_star(self._d))

    def nu(self, k: int = 1) -> "DiscElement":
        """k-th power of the degree-counting automorphism a |-> q^{|a|} a."""
        return DiscElement._from_prim(_kernels.impl.de_nu(self._d, k))

    def degree_components(self) -> dict:
        """Partition of the terms by degree a - b."""
        out = {}
        for (a, b), c in self._d.items():
            out.setdefault(a - b, {})[(a, b)] = c
        return {d: DiscElement._from_prim(p) for d, p in sorted(out.items())}

    def degrees(self):
        return sorted({a - b for (a, b) in self._d})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def is_in_cone(self, modulus: int) -> bool:
        if modulus < 2:
            raise ValueError("cone modulus must be >= 2")
        return all((a - b) % modulus == 0 for (a, b) in self._d)

    def __eq__(self, other):
        if not isinstance(other, DiscElement):
            return NotImplemented
        return self._d == other._d

    def __bool__(self):
        return bool(self._d)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"DiscElement({format_element(self)!r})"

    def serialize(self):
        """Sorted [a, b, laurent-tuples] rows for report JSON."""
        rows = []
        for (a, b) in sorted(self._d, key=lambda m: (m[0] + m[1], m[0])):
            rows.append([a, b, QLaurent._from_prim(self._d[(a, b)]).serialize()])
        return rows


def _needs_parens(s: str) -> bool:
    """True if s has a top-level +/- that is not an exponent sign."""
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0 and s[i - 1] != "^":
            return True
    return False


def format_element(p: DiscElement) -> str:
    """Canonical text form; round-trips through the element parser."""
    if p.is_zero():
        return "0"
    minus_one = {0: (-1, 0, 1)}
    parts = []
    for (a, b) in sorted(p._d, key=lambda m: (m[0] + m[1], m[0])):
        coeff = QLaurent._from_prim(p._d[(a, b)])
        mon = format_monomial(DiscMonomial(a, b))
        if coeff.is_one():
            parts.append(mon)
            continue
        if coeff._t == minus_one and mon != "1":
            parts.append(f"-{mon}")
            continue
        cs = str(coeff)
        if _needs_parens(cs):
            cs = f"({cs})"
        parts.append(cs if mon == "1" else f"{cs}*{mon}")
    out = parts[0]
    for s in parts[1:]:
        if s.startswith("-"):
            out += f" - {s[1:]}"
        else:
            out += f" + {s}"
    return out


def normal_form(w, strategy: str = "leftmost") -> DiscElement:
    """Exhaustively rewrite a free word into the normal-ordered basis.

    Each step removes one (zs, z) inversion, so rewriting terminates; the
    result is independent of the redex choice (confluence is covered by the
    property tests, not assumed here).
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError("strategy must be 'leftmost' or 'rightmost'")
    w = tuple(w)
    if w and isinstance(w[0], str):
        w = word(w)
    impl = _kernels.impl
    ql_one = {0: (1, 0, 1)}
    pending = {w: ql_one}
    done = {}
    while pending:
        # deterministic scan; pick the first term that still has a redex
        term = min(pending)
        coeff = pending.pop(term)
        pos = _find_redex(term, strategy)
        if pos is None:
            a = term.count(Z)
            _accumulate(done, (a, len(term) - a), coeff, impl)
            continue
        # zs z -> q^2 z zs + (1 - q^2), locally at pos
        head, tail = term[:pos], term[pos + 2 :]
        swapped = head + (Z, ZS) + tail
        dropped = head + tail
        _accumulate(pending, swapped, impl.ql_shift(coeff, 2), impl)
        drop_coeff = impl.ql_mul(coeff, {0: (1, 0, 1), 2: (-1, 0, 1)})
        _accumulate(pending, dropped, drop_coeff, impl)
    return DiscElement._from_prim(done)


def _find_redex(term, strategy):
    rng = range(len(term) - 1)
    if strategy == "rightmost":
        rng = reversed(rng)
    for i in rng:
        if term[i] == ZS and term[i + 1] == Z:
            return i
    return None


def _accumulate(table, key, coeff, impl):
    cur = table.get(key)
    if cur is None:
        if coeff:
            table[key] = coeff
        return
    s = impl.ql_add(cur, coeff)
    if s:
        table[key] = s
    else:
        del table[key]


def mul(p: DiscElement, r: DiscElement) -> DiscElement:
    return p * r


def star(p: DiscElement) -> DiscElement:
    return p.star()


def nu(p: DiscElement, k: int = 1) -> DiscElement:
    return p.nu(k)


def degree_components(p: DiscElement) -> dict:
    return p.degree_components()


def is_in_cone(p: DiscElement, modulus: int) -> bool:
    return p.is_in_cone(modulus)


# Generator values of the two twisted skew derivations:
#   minus: z |-> zs, zs |-> 0      (degree -2)
#   plus:  z |-> 0,  zs |-> q^2 z  (degree +2)
_DEL_MEMO = {}


def skew_derivative(p: DiscElement, sign: int) -> DiscElement:
    """Apply the twisted skew derivation of the given sign (+1 or -1).

    Values on monomials are built by peeling one generator from the left and
    applying the twisted Leibniz rule  d(gw) = d(g) nu^2(w) + g d(w).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    impl = _kernels.impl
    out = {}
    for m, c in p._d.items():
        piece = impl.de_scale(_del_monomial(m, sign), c)
        out = impl.de_add(out, piece)
    return DiscElement._from_prim(out)


def _del_monomial(m, sign):
    got = _DEL_MEMO.get((m, sign))
    if got is not None:
        return got
    impl = _kernels.impl
    a, b = m
    if a == 0 and b == 0:
        res = {}
    elif a > 0:
        rest = (a - 1, b)
        # d(z) nu^2(rest) + z d(rest)
        if sign == -1:
            dg = {(0, 1): {0: (1, 0, 1)}}  # zs
            res = impl.de_mul(dg, {rest: {2 * (rest[0] - rest[1]): (1, 0, 1)}})
        else:
            res = {}
        res = impl.de_add(
            res, impl.de_mul({(1, 0): {0: (1, 0, 1)}}, _del_monomial(rest, sign))
        )
    else:
        rest = (0, b - 1)
        if sign == 1:
            dg = {(1, 0): {2: (1, 0, 1)}}  # q^2 z
            res = impl.de_mul(dg, {rest: {2 * (rest[0] - rest[1]): (1, 0, 1)}})
        else:
            res = {}
        res = impl.de_add(
            res, impl.de_mul({(0, 1): {0: (1, 0, 1)}}, _del_monomial(rest, sign))
        )
    _DEL_MEMO[(m, sign)] = res
    return res


def d_plus(p: DiscElement) -> DiscElement:
    return skew_derivative(p, 1)


def d_minus(p: DiscElement) -> DiscElement:
    return skew_derivative(p, -1)


class ConeGens:
    """Images of the cone generators inside the disc: x = 1 - z zs, y = z^N."""

    __slots__ = ("N", "x_img", "y_img")

    def __init__(self, N: int):
        if not isinstance(N, int) or N < 2:
            raise ValueError("cone modulus N must be an integer >= 2")
        self.N = N
        self.x_img = DiscElement.one() - DiscElement.monomial(1, 1)
        self.y_img = DiscElement.monomial(N, 0)

    def __repr__(self):
        return f"ConeGens(N={self.N})"


def cone_relation_check(N: int) -> AxiomReport:
    """Verify the three cone relations on the embedded generators.

    Relations:  x y = q^{2N} y x;
                y y* = prod_{l=0..N-1} (1 - q^{-2l} x);
                y* y = prod_{l=1..N} (1 - q^{2l} x);
    plus self-adjointness of x.  Both sides are reported in normal form.
    """
    gens = ConeGens(N)
    x, y = gens.x_img, gens.y_img
    one = DiscElement.one()

    prod_left = one
    for l in range(N):
        prod_left = prod_left * (one - x.scale(q_pow(-2 * l)))
    prod_right = one
    for l in range(1, N + 1):
        prod_right = prod_right * (one - x.scale(q_pow(2 * l)))

    checks = [
        ("x*y = q^(2N)*y*x", x * y, (y * x).scale(q_pow(2 * N))),
        ("y*star(y)", y * y.star(), prod_left),
        ("star(y)*y", y.star() * y, prod_right),
        ("star(x) = x", x.star(), x),
    ]
    detail = {}
    witness = None
    ok = True
    for name, lhs, rhs in checks:
        detail[name] = {"lhs": str(lhs), "rhs": str(rhs)}
        if ok and lhs != rhs:
            ok = False
            witness = Witness(
                inputs={"N": str(N), "relation": name},
                lhs=str(lhs),
                rhs=str(rhs),
                lhs_data=lhs.serialize(),
                rhs_data=rhs.serialize(),
            )
    return AxiomReport(
        axiom="CONE_RELATIONS",
        verdict=ok,
        instances=len(checks),
        inputs=f"embedded cone generators, N={N}",
        witness=witness,
        detail=detail,
    )
