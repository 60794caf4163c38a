# cython: language_level=3
"""Compiled term-map kernels.

Mirrors kronecker._kernel.pure exactly; coefficients are arbitrary-precision
Python ints / Fractions, the win over the pure version is loop and dict
dispatch overhead plus skipping per-product Fraction normalization.
"""

from fractions import Fraction

IMPL = "fast"


def mul_terms(dict a, dict b):
    """Product of two term maps."""
    cdef dict acc = {}
    cdef dict out = {}
    cdef tuple ea, eb, key
    cdef list cur
    cdef Py_ssize_t i, m
    if len(a) > len(b):
        a, b = b, a
    for ea, ca in a.items():
        na = ca.numerator
        da = ca.denominator
        m = len(ea)
        for eb, cb in b.items():
            key = tuple([ea[i] + eb[i] for i in range(m)])
            n = na * cb.numerator
            d = da * cb.denominator
            cur = <list> acc.get(key)
            if cur is None:
                acc[key] = [n, d]
            elif cur[1] == d:
                cur[0] = cur[0] + n
            else:
                cur[0] = cur[0] * d + n * cur[1]
                cur[1] = cur[1] * d
    for key, nd in acc.items():
        n = (<list> nd)[0]
        if n:
            out[key] = Fraction(n, (<list> nd)[1])
    return out


def add_scaled_terms(dict a, dict b, c):
    """a + c*b for term maps a, b and a Fraction scale c."""
    if not c:
        return dict(a)
    cdef dict out = dict(a)
    cdef tuple eb
    cn = c.numerator
    cd = c.denominator
    cdef bint unit = cn == 1 and cd == 1
    for eb, cb in b.items():
        cur = out.get(eb)
        if cur is None:
            v = cb if unit else Fraction(cn * cb.numerator, cd * cb.denominator)
            if v:
                out[eb] = v
        else:
            v = cur + cb if unit else Fraction(
                cur.numerator * cd * cb.denominator + cn * cb.numerator * cur.denominator,
                cur.denominator * cd * cb.denominator,
            )
            if v:
                out[eb] = v
            else:
                del out[eb]
    return out
