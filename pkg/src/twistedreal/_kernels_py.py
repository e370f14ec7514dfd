"""Pure-Python arithmetic kernels.

Reference implementation of the hot loops; the compiled backend in
``_kernels_cy.pyx`` mirrors these functions exactly.  Data layout shared by
both backends:

* Gaussian rational: tuple ``(re_num, im_num, den)`` of ints, ``den > 0``,
  ``gcd(re_num, im_num, den) == 1``.
* Laurent polynomial in q: dict ``{exponent: gauss}``, no zero values.
* Disc element: dict ``{(a, b): laurent}`` keyed by the exponents of the
  normal-ordered monomial ``z^a zs^b``, no empty values.

Inputs are never mutated; sharing of leaf tuples between results is fine.
"""

from math import gcd

G_ZERO = (0, 0, 1)
G_ONE = (1, 0, 1)
G_MINUS_ONE = (-1, 0, 1)
QL_ONE = {0: G_ONE}


def g_make(rn, im, den):
    """Canonical Gaussian rational from an unreduced numerator pair."""
    if den == 0:
        raise ZeroDivisionError("Gaussian rational with zero denominator")
    if den < 0:
        rn, im, den = -rn, -im, -den
    g = gcd(gcd(rn, im), den)
    if g > 1:
        rn //= g
        im //= g
        den //= g
    return (rn, im, den)


def g_add(x, y):
    a, b, d = x
    e, f, h = y
    return g_make(a * h + e * d, b * h + f * d, d * h)


def g_neg(x):
    a, b, d = x
    return (-a, -b, d)


def g_sub(x, y):
    a, b, d = x
    e, f, h = y
    return g_make(a * h - e * d, b * h - f * d, d * h)


def g_mul(x, y):
    a, b, d = x
    e, f, h = y
    return g_make(a * e - b * f, a * f + b * e, d * h)


def g_conj(x):
    a, b, d = x
    return (a, -b, d)


def g_inv(x):
    a, b, d = x
    n = a * a + b * b
    if n == 0:
        raise ZeroDivisionError("inverse of zero Gaussian rational")
    return g_make(d * a, -d * b, n)


def ql_add(p, r):
    out = dict(p)
    for e, c in r.items():
        cur = out.get(e)
        if cur is None:
            out[e] = c
        else:
            s = g_add(cur, c)
            if s[0] == 0 and s[1] == 0:
                del out[e]
            else:
                out[e] = s
    return out


def ql_neg(p):
    return {e: (-a, -b, d) for e, (a, b, d) in p.items()}


def ql_conj(p):
    return {e: (a, -b, d) for e, (a, b, d) in p.items()}


def ql_shift(p, k):
    if k == 0:
        return dict(p)
    return {e + k: c for e, c in p.items()}


def ql_scale(p, g):
    if g[0] == 0 and g[1] == 0:
        return {}
    return {e: g_mul(c, g) for e, c in p.items()}


def ql_mul(p, r):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in r.items():
            e = e1 + e2
            prod = g_mul(c1, c2)
            cur = out.get(e)
            if cur is None:
                out[e] = prod
            else:
                s = g_add(cur, prod)
                if s[0] == 0 and s[1] == 0:
                    del out[e]
                else:
                    out[e] = s
    return out


def de_add(p, r):
    out = dict(p)
    for m, c in r.items():
        cur = out.get(m)
        if cur is None:
            out[m] = c
        else:
            s = ql_add(cur, c)
            if s:
                out[m] = s
            else:
                del out[m]
    return out


def de_neg(p):
    return {m: ql_neg(c) for m, c in p.items()}


def de_scale(p, ql):
    if not ql:
        return {}
    out = {}
    for m, c in p.items():
        s = ql_mul(c, ql)
        if s:
            out[m] = s
    return out


def de_star(p):
    return {(b, a): ql_conj(c) for (a, b), c in p.items()}


def de_nu(p, k):
    if k == 0:
        return dict(p)
    return {(a, b): ql_shift(c, k * (a - b)) for (a, b), c in p.items()}


_REORDER = {(0, 0): {(0, 0): QL_ONE}}


def reorder(b, c):
    """Normal form of ``zs^b z^c`` as a disc-element dict.

    Uses the one-step commutation ``zs z = q^2 z zs + (1 - q^2)`` folded into
    ``zs z^c = q^{2c} z^c zs + (1 - q^{2c}) z^{c-1}``; memoized.
    """
    got = _REORDER.get((b, c))
    if got is not None:
        return got
    if b == 0:
        res = {(c, 0): QL_ONE}
        _REORDER[(b, c)] = res
        return res
    if c == 0:
        res = {(0, b): QL_ONE}
        _REORDER[(b, c)] = res
        return res
    for bb in range(1, b + 1):
        for cc in range(1, c + 1):
            if (bb, cc) in _REORDER:
                continue
            res = {}
            for (a1, b1), co in reorder(bb - 1, cc).items():
                res[(a1, b1 + 1)] = ql_shift(co, 2 * cc)
            drop = {0: G_ONE, 2 * cc: G_MINUS_ONE}
            for (a1, b1), co in reorder(bb - 1, cc - 1).items():
                term = ql_mul(co, drop)
                key = (a1, b1)
                cur = res.get(key)
                if cur is None:
                    res[key] = term
                else:
                    s = ql_add(cur, term)
                    if s:
                        res[key] = s
                    else:
                        del res[key]
            _REORDER[(bb, cc)] = res
    return _REORDER[(b, c)]


def de_mul(p, r):
    """Product of two disc elements in normal form."""
    out = {}
    for (a1, b1), c1 in p.items():
        for (a2, b2), c2 in r.items():
            c = ql_mul(c1, c2)
            for (am, bm), co in reorder(b1, a2).items():
                key = (a1 + am, bm + b2)
                term = ql_mul(c, co)
                cur = out.get(key)
                if cur is None:
                    out[key] = term
                else:
                    s = ql_add(cur, term)
                    if s:
                        out[key] = s
                    else:
                        del out[key]
    return out
