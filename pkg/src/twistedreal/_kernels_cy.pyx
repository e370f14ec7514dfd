# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled arithmetic kernels.

Same functions and data layout as ``_kernels_py`` (the reference
implementation); numerators stay arbitrary-precision Python ints, the win is
C-level loop and call overhead in the dict convolutions.
"""

from math import gcd

G_ZERO = (0, 0, 1)
G_ONE = (1, 0, 1)
G_MINUS_ONE = (-1, 0, 1)
QL_ONE = {0: G_ONE}


cdef inline tuple _norm(object rn, object im, object den):
    if den < 0:
        rn = -rn
        im = -im
        den = -den
    g = gcd(gcd(rn, im), den)
    if g > 1:
        rn //= g
        im //= g
        den //= g
    return (rn, im, den)


def g_make(rn, im, den):
    if den == 0:
        raise ZeroDivisionError("Gaussian rational with zero denominator")
    return _norm(rn, im, den)


cdef inline tuple _g_add(tuple x, tuple y):
    return _norm(x[0] * y[2] + y[0] * x[2], x[1] * y[2] + y[1] * x[2], x[2] * y[2])


cdef inline tuple _g_mul(tuple x, tuple y):
    return _norm(x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0], x[2] * y[2])


def g_add(x, y):
    return _g_add(x, y)


def g_neg(x):
    return (-x[0], -x[1], x[2])


def g_sub(x, y):
    return _norm(x[0] * y[2] - y[0] * x[2], x[1] * y[2] - y[1] * x[2], x[2] * y[2])


def g_mul(x, y):
    return _g_mul(x, y)


def g_conj(x):
    return (x[0], -x[1], x[2])


def g_inv(x):
    n = x[0] * x[0] + x[1] * x[1]
    if n == 0:
        raise ZeroDivisionError("inverse of zero Gaussian rational")
    return _norm(x[2] * x[0], -x[2] * x[1], n)


cdef dict _ql_add(dict p, dict r):
    cdef dict out = dict(p)
    cdef tuple s
    for e, c in r.items():
        cur = out.get(e)
        if cur is None:
            out[e] = c
        else:
            s = _g_add(<tuple> cur, <tuple> c)
            if s[0] == 0 and s[1] == 0:
                del out[e]
            else:
                out[e] = s
    return out


def ql_add(p, r):
    return _ql_add(p, r)


def ql_neg(p):
    cdef dict out = {}
    for e, c in (<dict> p).items():
        out[e] = (-(<tuple> c)[0], -(<tuple> c)[1], (<tuple> c)[2])
    return out


def ql_conj(p):
    cdef dict out = {}
    for e, c in (<dict> p).items():
        out[e] = ((<tuple> c)[0], -(<tuple> c)[1], (<tuple> c)[2])
    return out


def ql_shift(p, k):
    if k == 0:
        return dict(p)
    cdef dict out = {}
    for e, c in (<dict> p).items():
        out[e + k] = c
    return out


def ql_scale(p, g):
    cdef tuple gg = g
    if gg[0] == 0 and gg[1] == 0:
        return {}
    cdef dict out = {}
    for e, c in (<dict> p).items():
        out[e] = _g_mul(<tuple> c, gg)
    return out


cdef dict _ql_mul(dict p, dict r):
    cdef dict out = {}
    cdef tuple prod, s
    for e1, c1 in p.items():
        for e2, c2 in r.items():
            e = e1 + e2
            prod = _g_mul(<tuple> c1, <tuple> c2)
            cur = out.get(e)
            if cur is None:
                out[e] = prod
            else:
                s = _g_add(<tuple> cur, prod)
                if s[0] == 0 and s[1] == 0:
                    del out[e]
                else:
                    out[e] = s
    return out


def ql_mul(p, r):
    return _ql_mul(p, r)


def de_add(p, r):
    cdef dict out = dict(p)
    cdef dict s
    for m, c in (<dict> r).items():
        cur = out.get(m)
        if cur is None:
            out[m] = c
        else:
            s = _ql_add(<dict> cur, <dict> c)
            if s:
                out[m] = s
            else:
                del out[m]
    return out


def de_neg(p):
    cdef dict out = {}
    for m, c in (<dict> p).items():
        out[m] = ql_neg(c)
    return out


def de_scale(p, ql):
    if not ql:
        return {}
    cdef dict out = {}
    cdef dict s
    for m, c in (<dict> p).items():
        s = _ql_mul(<dict> c, <dict> ql)
        if s:
            out[m] = s
    return out


def de_star(p):
    cdef dict out = {}
    for m, c in (<dict> p).items():
        out[((<tuple> m)[1], (<tuple> m)[0])] = ql_conj(c)
    return out


def de_nu(p, k):
    if k == 0:
        return dict(p)
    cdef dict out = {}
    for m, c in (<dict> p).items():
        out[m] = ql_shift(c, k * ((<tuple> m)[0] - (<tuple> m)[1]))
    return out


_REORDER = {(0, 0): {(0, 0): QL_ONE}}


def reorder(b, c):
    """Normal form of ``zs^b z^c`` as a disc-element dict (memoized)."""
    cdef dict memo = _REORDER
    got = memo.get((b, c))
    if got is not None:
        return got
    cdef dict res, term_src
    if b == 0:
        res = {(c, 0): QL_ONE}
        memo[(b, c)] = res
        return res
    if c == 0:
        res = {(0, b): QL_ONE}
        memo[(b, c)] = res
        return res
    cdef dict drop, term, s
    for bb in range(1, b + 1):
        for cc in range(1, c + 1):
            if (bb, cc) in memo:
                continue
            res = {}
            for m, co in (<dict> reorder(bb - 1, cc)).items():
                res[((<tuple> m)[0], (<tuple> m)[1] + 1)] = ql_shift(co, 2 * cc)
            drop = {0: G_ONE, 2 * cc: G_MINUS_ONE}
            for m, co in (<dict> reorder(bb - 1, cc - 1)).items():
                term = _ql_mul(<dict> co, drop)
                cur = res.get(m)
                if cur is None:
                    res[m] = term
                else:
                    s = _ql_add(<dict> cur, term)
                    if s:
                        res[m] = s
                    else:
                        del res[m]
            memo[(bb, cc)] = res
    return memo[(b, c)]


def de_mul(p, r):
    """Product of two disc elements in normal form."""
    cdef dict out = {}
    cdef dict c, term, s
    cdef tuple m1, m2, mm, key
    for m1, c1 in (<dict> p).items():
        for m2, c2 in (<dict> r).items():
            c = _ql_mul(<dict> c1, <dict> c2)
            for mm, co in (<dict> reorder(m1[1], m2[0])).items():
                key = (m1[0] + mm[0], mm[1] + m2[1])
                term = _ql_mul(c, <dict> co)
                cur = out.get(key)
                if cur is None:
                    out[key] = term
                else:
                    s = _ql_add(<dict> cur, term)
                    if s:
                        out[key] = s
                    else:
                        del out[key]
    return out
