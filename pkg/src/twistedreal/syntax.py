"""Text syntax for scalars, disc elements and free words.

Grammar (whitespace insensitive)::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' signed_int)?
    atom   := NUMBER ('/' NUMBER)? | 'i' | 'q' | 'z' | 'zs' | '(' expr ')'

``zs`` denotes z*.  A juxtaposed number-times-symbol ("2q", "3/4 i") is
accepted on input; the canonical printers in ``scalar`` and ``ncalg`` always
emit the explicit '*'.  Negative powers are only defined for invertible
scalars (monomials c*q^k); ``z^-1`` is rejected.

Parsing an expression yields an element of the free *-algebra which is then
normal-ordered, so non-normal input such as ``zs*z`` is fine and
``parse_element(format_element(e)) == e`` holds on canonical forms.
"""

from __future__ import annotations

import re
from fractions import Fraction

from . import _kernels
from .errors import ParseError
from .ncalg import DiscElement, word
from .scalar import GaussRational, QLaurent

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>zs|z|q|i)|(?P<op>[-+*/^()]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r}", position=pos)
        if m.lastgroup == "num":
            tokens.append(("num", int(m.group("num")), pos))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name"), pos))
        else:
            tokens.append(("op", m.group("op"), pos))
        pos = m.end()
    return tokens


class _Free:
    """Linear combination of free words over {z, zs} with Laurent scalars."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = terms  # dict[word-tuple -> laurent prim]

    @classmethod
    def scalar(cls, ql):
        return cls({(): ql} if ql else {})

    @classmethod
    def generator(cls, letter):
        return cls({(letter,): {0: (1, 0, 1)}})

    def add(self, other):
        impl = _kernels.impl
        out = dict(self.terms)
        for w, c in other.terms.items():
            cur = out.get(w)
            s = impl.ql_add(cur, c) if cur is not None else c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        return _Free(out)

    def neg(self):
        impl = _kernels.impl
        return _Free({w: impl.ql_neg(c) for w, c in self.terms.items()})

    def mul(self, other):
        impl = _kernels.impl
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = impl.ql_mul(c1, c2)
                cur = out.get(w)
                if cur is None:
                    if c:
                        out[w] = c
                else:
                    s = impl.ql_add(cur, c)
                    if s:
                        out[w] = s
                    else:
                        del out[w]
        return _Free(out)

    def pow(self, k, position):
        if k >= 0:
            out = _Free.scalar({0: (1, 0, 1)})
            for _ in range(k):
                out = out.mul(self)
            return out
        # negative powers: only invertible scalars, i.e. single q-monomials
        if set(self.terms) == {()} and len(self.terms[()]) == 1:
            (e, g), = self.terms[()].items()
            inv = {-e: _kernels.impl.g_inv(g)}
            base = _Free.scalar(inv)
            return base.pow(-k, position)
        raise ParseError(
            "negative powers are only defined for scalar q-monomials",
            position=position,
        )


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.idx = 0

    def peek(self):
        return self.tokens[self.idx] if self.idx < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", position=len(self.text))
        self.idx += 1
        return tok

    def expect_op(self, op):
        tok = self.next()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}", position=tok[2])

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"trailing input {tok[1]!r}", position=tok[2])
        return value

    def expr(self):
        value = self.term()
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "op" or tok[1] not in "+-":
                return value
            self.next()
            rhs = self.term()
            value = value.add(rhs if tok[1] == "+" else rhs.neg())

    def term(self):
        value = self.unary()
        while True:
            tok = self.peek()
            if tok is not None and tok[0] == "op" and tok[1] == "*":
                self.next()
                value = value.mul(self.unary())
            elif tok is not None and (
                tok[0] in ("num", "name") or (tok[0] == "op" and tok[1] == "(")
            ):
                # implicit multiplication, e.g. "3/4 i" or "2q"
                value = value.mul(self.unary())
            else:
                return value

    def unary(self):
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == "-":
            self.next()
            return self.unary().neg()
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == "^":
            self.next()
            sign = 1
            tok = self.next()
            if tok[0] == "op" and tok[1] == "-":
                sign = -1
                tok = self.next()
            if tok[0] != "num":
                raise ParseError("expected integer exponent", position=tok[2])
            return base.pow(sign * tok[1], tok[2])
        return base

    def atom(self):
        tok = self.next()
        if tok[0] == "num":
            num = tok[1]
            den = 1
            nxt = self.peek()
            if nxt is not None and nxt[0] == "op" and nxt[1] == "/":
                self.next()
                dtok = self.next()
                if dtok[0] != "num":
                    raise ParseError("expected denominator", position=dtok[2])
                den = dtok[1]
                if den == 0:
                    raise ParseError("zero denominator", position=dtok[2])
            if num == 0:
                return _Free.scalar({})
            return _Free.scalar({0: _kernels.impl.g_make(num, 0, den)})
        if tok[0] == "name":
            if tok[1] == "i":
                return _Free.scalar({0: (0, 1, 1)})
            if tok[1] == "q":
                return _Free.scalar({1: (1, 0, 1)})
            if tok[1] == "z":
                return _Free.generator(0)
            return _Free.generator(1)  # zs
        if tok[0] == "op" and tok[1] == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError(f"unexpected token {tok[1]!r}", position=tok[2])


def _parse_free(text) -> _Free:
    if not isinstance(text, str):
        raise ParseError("expected a string")
    if not text.strip():
        raise ParseError("empty input", position=0)
    return _Parser(text).parse()


def parse_element(text: str) -> DiscElement:
    """Parse an algebra element; the result is in normal-ordered form."""
    free = _parse_free(text)
    impl = _kernels.impl
    gen = ({(1, 0): {0: (1, 0, 1)}}, {(0, 1): {0: (1, 0, 1)}})
    total = {}
    for w, coeff in free.terms.items():
        prim = {(0, 0): {0: (1, 0, 1)}}
        for letter in w:
            prim = impl.de_mul(prim, gen[letter])
        total = impl.de_add(total, impl.de_scale(prim, coeff))
    return DiscElement._from_prim(total)


def parse_scalar(text: str) -> QLaurent:
    """Parse a Laurent polynomial in q; rejects z and zs."""
    free = _parse_free(text)
    if set(free.terms) - {()}:
        raise ParseError("expected a scalar, found algebra generators")
    return QLaurent._from_prim(free.terms.get((), {}))


def parse_gauss(text: str) -> GaussRational:
    """Parse a Gaussian rational; rejects q, z and zs."""
    ql = parse_scalar(text)
    g = ql.as_gauss()
    if g is None:
        raise ParseError("expected a Gaussian rational, found powers of q")
    return g


def parse_word(text: str) -> tuple:
    """Parse a product of generators with unit coefficient into a free word."""
    free = _parse_free(text)
    if len(free.terms) != 1:
        raise ParseError("expected a single word, found a sum")
    (w, coeff), = free.terms.items()
    if coeff != {0: (1, 0, 1)}:
        raise ParseError("expected unit coefficient on a word")
    return tuple("z" if letter == 0 else "zs" for letter in w)
