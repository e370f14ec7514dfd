"""Exact scalars: Gaussian rationals and Laurent polynomials in q.

q is kept as a formal symbol throughout, so every identity checked downstream
is a Laurent-polynomial identity and therefore holds for all numerical values
of q in (0, 1) simultaneously.  Only the monomials q^k are invertible; there
is deliberately no division of polynomials.
"""

from __future__ import annotations

from fractions import Fraction

from . import _kernels
from .errors import ParseError


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class GaussRational:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("_t",)

    def __init__(self, re=0, im=0):
        re = _as_fraction(re)
        im = _as_fraction(im)
        den = re.denominator * im.denominator
        self._t = _kernels.impl.g_make(
            re.numerator * im.denominator, im.numerator * re.denominator, den
        )

    @classmethod
    def _from_triple(cls, t):
        self = object.__new__(cls)
        self._t = t
        return self

    @property
    def re(self) -> Fraction:
        rn, _, den = self._t
        return Fraction(rn, den)

    @property
    def im(self) -> Fraction:
        _, im, den = self._t
        return Fraction(im, den)

    def conjugate(self) -> "GaussRational":
        return GaussRational._from_triple(_kernels.impl.g_conj(self._t))

    def inverse(self) -> "GaussRational":
        return GaussRational._from_triple(_kernels.impl.g_inv(self._t))

    def is_zero(self) -> bool:
        return self._t[0] == 0 and self._t[1] == 0

    def _coerce(other):
        if isinstance(other, GaussRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussRational(other)
        return None

    def __add__(self, other):
        o = GaussRational._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational._from_triple(_kernels.impl.g_add(self._t, o._t))

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussRational._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational._from_triple(_kernels.impl.g_sub(self._t, o._t))

    def __rsub__(self, other):
        o = GaussRational._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational._from_triple(_kernels.impl.g_sub(o._t, self._t))

    def __mul__(self, other):
        o = GaussRational._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational._from_triple(_kernels.impl.g_mul(self._t, o._t))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussRational._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = GaussRational._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return GaussRational._from_triple(_kernels.impl.g_neg(self._t))

    def __eq__(self, other):
        o = GaussRational._coerce(other)
        if o is None:
            return NotImplemented
        return self._t == o._t

    def __hash__(self):
        return hash(self._t)

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return format_gauss(self)

    def __repr__(self):
        return f"GaussRational({self.re!r}, {self.im!r})"

    def is_canonical(self) -> bool:
        rn, im, den = self._t
        from math import gcd

        return den > 0 and gcd(gcd(rn, im), den) == 1


GAUSS_ZERO = GaussRational(0)
GAUSS_ONE = GaussRational(1)
GAUSS_I = GaussRational(0, 1)


def format_gauss(g: GaussRational) -> str:
    """Canonical text form, e.g. ``0``, ``-3/2``, ``i``, ``1/2-3/4*i``."""
    re, im = g.re, g.im
    if im == 0:
        return str(re)
    if im == 1:
        im_part = "i"
    elif im == -1:
        im_part = "-i"
    else:
        im_part = f"{im}*i"
    if re == 0:
        return im_part
    sep = "-" if im_part.startswith("-") else "+"
    return f"{re}{sep}{im_part.lstrip('-')}"


class QLaurent:
    """Laurent polynomial in q with Gaussian rational coefficients.

    Canonical sparse form: no stored coefficient is zero, the zero element is
    the empty term map.
    """

    __slots__ = ("_t",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(e, int):
                    raise TypeError("exponents must be ints")
                if not isinstance(c, GaussRational):
                    c = GaussRational(c)
                if not c.is_zero():
                    t[e] = c._t
        self._t = t

    @classmethod
    def _from_prim(cls, t):
        self = object.__new__(cls)
        self._t = t
        return self

    @classmethod
    def zero(cls) -> "QLaurent":
        return cls._from_prim({})

    @classmethod
    def one(cls) -> "QLaurent":
        return cls._from_prim({0: (1, 0, 1)})

    @classmethod
    def gauss(cls, g) -> "QLaurent":
        if not isinstance(g, GaussRational):
            g = GaussRational(g)
        return cls._from_prim({} if g.is_zero() else {0: g._t})

    @property
    def terms(self) -> dict:
        return {e: GaussRational._from_triple(c) for e, c in self._t.items()}

    def conj(self) -> "QLaurent":
        """Coefficientwise Gaussian conjugation; q itself is real and fixed."""
        return QLaurent._from_prim(_kernels.impl.ql_conj(self._t))

    def is_zero(self) -> bool:
        return not self._t

    def is_one(self) -> bool:
        return self._t == {0: (1, 0, 1)}

    def as_gauss(self):
        """The constant coefficient if this is a degree-0 scalar, else None."""
        if not self._t:
            return GAUSS_ZERO
        if set(self._t) == {0}:
            return GaussRational._from_triple(self._t[0])
        return None

    def monomial_inverse(self) -> "QLaurent":
        """Inverse of a single-term c*q^k; raises for anything else."""
        if len(self._t) != 1:
            raise ZeroDivisionError("only monomials c*q^k are invertible")
        (e, c), = self._t.items()
        return QLaurent._from_prim({-e: _kernels.impl.g_inv(c)})

    def _coerce(other):
        if isinstance(other, QLaurent):
            return other
        if isinstance(other, (int, Fraction, GaussRational)):
            return QLaurent.gauss(other)
        return None

    def __add__(self, other):
        o = QLaurent._coerce(other)
        if o is None:
            return NotImplemented
        return QLaurent._from_prim(_kernels.impl.ql_add(self._t, o._t))

    __radd__ = __add__

    def __sub__(self, other):
        o = QLaurent._coerce(other)
        if o is None:
            return NotImplemented
        return QLaurent._from_prim(
            _kernels.impl.ql_add(self._t, _kernels.impl.ql_neg(o._t))
        )

    def __rsub__(self, other):
        o = QLaurent._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = QLaurent._coerce(other)
        if o is None:
            return NotImplemented
        return QLaurent._from_prim(_kernels.impl.ql_mul(self._t, o._t))

    __rmul__ = __mul__

    def __neg__(self):
        return QLaurent._from_prim(_kernels.impl.ql_neg(self._t))

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.monomial_inverse() ** (-k)
        out = QLaurent.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        o = QLaurent._coerce(other)
        if o is None:
            return NotImplemented
        return self._t == o._t

    def __bool__(self):
        return bool(self._t)

    def __str__(self):
        return format_qlaurent(self)

    def __repr__(self):
        return f"QLaurent({format_qlaurent(self)!r})"

    def is_canonical(self) -> bool:
        return all(
            isinstance(e, int)
            and c[2] > 0
            and (c[0] != 0 or c[1] != 0)
            and GaussRational._from_triple(c).is_canonical()
            for e, c in self._t.items()
        )

    def serialize(self):
        """Sorted (exponent, re_num, re_den, im_num, im_den) tuples."""
        out = []
        for e in sorted(self._t):
            g = GaussRational._from_triple(self._t[e])
            out.append(
                (e, g.re.numerator, g.re.denominator, g.im.numerator, g.im.denominator)
            )
        return out

    @classmethod
    def deserialize(cls, data) -> "QLaurent":
        terms = {}
        for e, rn, rd, im, iden in data:
            terms[int(e)] = GaussRational(Fraction(rn, rd), Fraction(im, iden))
        return cls(terms)


def q_pow(k: int) -> QLaurent:
    """The monomial q^k."""
    if not isinstance(k, int):
        raise TypeError("exponent must be an int")
    return QLaurent._from_prim({k: (1, 0, 1)})


Q = q_pow(1)
QL_ZERO = QLaurent.zero()
QL_ONE = QLaurent.one()


def field_arith(op: str, a: QLaurent, b: QLaurent) -> QLaurent:
    """Ring operation dispatch: op in {"add", "sub", "mul"}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ParseError(f"unknown ring operation {op!r}", field="op")


def conj(a: QLaurent) -> QLaurent:
    return a.conj()


def format_qlaurent(p: QLaurent) -> str:
    """Canonical text form, terms by ascending exponent, e.g. ``1 - q^2``."""
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p._t):
        g = GaussRational._from_triple(p._t[e])
        if e == 0:
            qpart = ""
        elif e == 1:
            qpart = "q"
        else:
            qpart = f"q^{e}"
        if g.im == 0 and qpart:
            if g.re == 1:
                s = qpart
            elif g.re == -1:
                s = f"-{qpart}"
            else:
                s = f"{g.re}*{qpart}"
        else:
            gs = format_gauss(g)
            if qpart:
                if any(c in gs[1:] for c in "+-"):
                    gs = f"({gs})"
                s = f"{gs}*{qpart}"
            else:
                s = gs
        parts.append(s)
    out = parts[0]
    for s in parts[1:]:
        if s.startswith("-"):
            out += f" - {s[1:]}"
        else:
            out += f" + {s}"
    return out
