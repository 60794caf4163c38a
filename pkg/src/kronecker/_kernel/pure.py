"""Pure-Python term-map kernels.

A term map is a dict mapping exponent tuples (one int per variable) to
nonzero Fraction coefficients.  These two functions carry almost all of the
package's arithmetic load, so coefficient sums are accumulated on raw
(numerator, denominator) integer pairs and normalized once per output term
instead of going through Fraction on every partial product.
"""

from fractions import Fraction

IMPL = "pure"


def mul_terms(a, b):
    """Product of two term maps."""
    if len(a) > len(b):
        a, b = b, a
    acc = {}
    get = acc.get
    for ea, ca in a.items():
        na = ca.numerator
        da = ca.denominator
        for eb, cb in b.items():
            key = tuple(i + j for i, j in zip(ea, eb))
            n = na * cb.numerator
            d = da * cb.denominator
            cur = get(key)
            if cur is None:
                acc[key] = [n, d]
            elif cur[1] == d:
                cur[0] += n
            else:
                cur[0] = cur[0] * d + n * cur[1]
                cur[1] *= d
    out = {}
    for key, (n, d) in acc.items():
        if n:
            out[key] = Fraction(n, d)
    return out


def add_scaled_terms(a, b, c):
    """a + c*b for term maps a, b and a Fraction scale c."""
    if not c:
        return dict(a)
    out = dict(a)
    cn = c.numerator
    cd = c.denominator
    for eb, cb in b.items():
        cur = out.get(eb)
        if cur is None:
            v = cb if cn == 1 and cd == 1 else Fraction(cn * cb.numerator, cd * cb.denominator)
            if v:
                out[eb] = v
        else:
            v = cur + cb if cn == 1 and cd == 1 else Fraction(
                cur.numerator * cd * cb.denominator + cn * cb.numerator * cur.denominator,
                cur.denominator * cd * cb.denominator,
            )
            if v:
                out[eb] = v
            else:
                del out[eb]
    return out
