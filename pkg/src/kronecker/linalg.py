"""Exact dense linear algebra over Q: determinants, solving, charpoly."""

from fractions import Fraction

from kronecker.errors import AlgebraError


def mat_det(rows):
    """Determinant of a square Fraction matrix (fraction-free Bareiss)."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    m = [[Fraction(x) for x in r] for r in rows]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) / prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def mat_solve(rows, rhs):
    """Solve A x = b exactly; raises on singular A."""
    n = len(rows)
    m = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    for k in range(n):
        piv = None
        for i in range(k, n):
            if m[i][k]:
                piv = i
                break
        if piv is None:
            raise AlgebraError("singular matrix")
        m[k], m[piv] = m[piv], m[k]
        inv = 1 / m[k][k]
        m[k] = [x * inv for x in m[k]]
        for i in range(n):
            if i != k and m[i][k]:
                f = m[i][k]
                m[i] = [a - f * b for a, b in zip(m[i], m[k])]
    return [m[i][n] for i in range(n)]


def mat_mul(a, b):
    n, mid, m = len(a), len(b), len(b[0])
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(mid):
            x = ai[k]
            if x:
                bk = b[k]
                for j in range(m):
                    oi[j] += x * bk[j]
    return out


def charpoly(rows):
    """Monic characteristic polynomial coefficients, low to high.

    Faddeev-LeVerrier; for integer matrices every intermediate stays integral,
    which is how the big resolvent matrices are handled without fractions.
    """
    n = len(rows)
    if n == 0:
        return [1]
    integral = all(
        isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)
        for r in rows
        for x in r
    )
    if integral:
        a = [[int(x) for x in r] for r in rows]
        one = 1
    else:
        a = [[Fraction(x) for x in r] for r in rows]
        one = Fraction(1)
    coeffs = [one]  # c_0 = 1 for lambda^n, collected high to low
    m = [row[:] for row in a]
    for k in range(1, n + 1):
        tr = sum(m[i][i] for i in range(n))
        if integral:
            ck, r = divmod(tr, k)
            if r:
                raise AlgebraError("trace division not exact")
            ck = -ck
        else:
            ck = -tr / k
        coeffs.append(ck)
        if k < n:
            for i in range(n):
                m[i][i] += ck
            m = mat_mul(a, m)
    coeffs.reverse()
    return [Fraction(c) for c in coeffs]
