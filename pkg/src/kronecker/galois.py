"""The splitting algebra and Galois groups through resolvent factorization.

For monic f of degree n the splitting algebra is the dimension-n! quotient
carrying universal roots x_1, ..., x_n; its basis is the monomial family
x_1^(h_1) * ... * x_(n-1)^(h_(n-1)) with h_k <= n-k, and the reduction data
is the cascade f_1 = f, f_(j+1) = f_j / (x - x_j) of universal synthetic
divisions.  The total resolvent of f at a weight vector u is the
characteristic polynomial of multiplication by u_1 x_1 + ... + u_n x_n in
this algebra: a degree-n! polynomial whose roots are the n! permuted
combinations of the true roots.  The Galois group is read off the
irreducible factor of the resolvent that vanishes at the distinguished
combination, with the permutation identification done by adaptive-precision
evaluation and certified after the fact by exact closure, transitivity and
factor-product checks.
"""

import itertools
from fractions import Fraction

import mpmath

from kronecker import polyring
from kronecker.errors import AlgebraError, DomainError
from kronecker.factorization import factor_univariate, is_irreducible
from kronecker.linalg import charpoly
from kronecker.polyring import MultiPoly, UniPoly, parse_poly, poly_matrix_det

MAX_DEGREE = 5  # splitting dimension 120

_FACT = [1, 1, 2, 6, 24, 120]


class SplittingAlgebra:
    """Q[x_1..x_n]/(symmetric relations of f), dimension n!."""

    def __init__(self, f):
        if isinstance(f, MultiPoly):
            f = UniPoly.from_multipoly(f)
        if f.degree < 1:
            raise DomainError("positive degree required")
        if f.degree > MAX_DEGREE:
            raise DomainError(f"splitting algebra capped at degree {MAX_DEGREE} (dimension 120)")
        if not f.is_monic():
            raise DomainError("splitting algebra requires a monic polynomial")
        self.f = f
        n = self.n = f.degree
        self.dim = _FACT[n]
        self.variables = tuple(f"x{i}" for i in range(1, n))
        # cascade of universal synthetic divisions f_(j+1) = f_j / (x - x_j)
        self.cascade = []
        coeffs = [MultiPoly.const(c, self.variables) for c in f.coeffs]
        self.cascade.append(coeffs)
        for j in range(1, n):
            xj = MultiPoly.var(f"x{j}", self.variables)
            m = len(coeffs) - 1
            quo = [None] * m
            quo[m - 1] = coeffs[m]
            for i in range(m - 1, 0, -1):
                quo[i - 1] = coeffs[i] + xj * quo[i]
            coeffs = quo
            self.cascade.append(coeffs)
        # x_n in terms of the earlier variables: f_n is monic linear
        self.last_root = -self.cascade[n - 1][0]
        self.basis = sorted(
            itertools.product(*[range(n - k + 1) for k in range(1, n)])
        )
        self._index = {b: i for i, b in enumerate(self.basis)}
        # reduction rule per variable: x_j^(deg f_j) -> rest_j
        self._rules = []
        for j in range(1, n):
            xj = MultiPoly.var(f"x{j}", self.variables)
            fj = self.cascade[j - 1]
            rest = MultiPoly.zero(self.variables)
            for i, c in enumerate(fj[:-1]):
                rest = rest - c * xj**i
            self._rules.append((len(fj) - 1, rest))

    def reduce(self, p):
        """Canonical representative: every exponent of x_j below deg f_j."""
        p = p.with_variables(self.variables) if p.variables != self.variables else p
        for j in range(self.n - 1, 0, -1):
            name = f"x{j}"
            m, rest = self._rules[j - 1]
            while p.degree(name) >= m:
                d = p.degree(name)
                lead = p.coeffs_in(name)[d]
                xj = MultiPoly.var(name, self.variables)
                p = p - lead * xj**d + lead * xj ** (d - m) * rest
        return p

    def roots(self):
        """The universal roots x_1, ..., x_n as reduced algebra elements."""
        out = [MultiPoly.var(f"x{j}", self.variables) for j in range(1, self.n)]
        out.append(self.reduce(self.last_root))
        return out

    def elementary_symmetric(self, k):
        """e_k(x_1..x_n) reduced in the algebra."""
        rs = self.roots()
        total = MultiPoly.zero(self.variables)
        for combo in itertools.combinations(rs, k):
            prod = MultiPoly.const(1, self.variables)
            for r in combo:
                prod = prod * r
            total = total + prod
        return self.reduce(total)

    def multiplication_matrix(self, element):
        """Matrix of multiplication by a reduced element, basis-indexed."""
        elem = self.reduce(element)
        cols = []
        for b in self.basis:
            mono = MultiPoly(self.variables, {b: Fraction(1)})
            prod = self.reduce(elem * mono)
            col = [Fraction(0)] * self.dim
            for e, c in prod.terms.items():
                col[self._index[e]] = c
            cols.append(col)
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]


def splitting_algebra(f):
    return SplittingAlgebra(f)


def resolvent_total_symmetric(f, u):
    """Characteristic polynomial of multiplication by u . (x_1, ..., x_n).

    Degree n!; its roots with multiplicity are the values
    u_1 x_(s(1)) + ... + u_n x_(s(n)) over all permutations s.
    """
    alg = f if isinstance(f, SplittingAlgebra) else SplittingAlgebra(f)
    if len(u) != alg.n:
        raise DomainError("need one weight per root")
    rs = alg.roots()
    ell = MultiPoly.zero(alg.variables)
    for ui, r in zip(u, rs):
        ell = ell + r * Fraction(ui)
    matrix = alg.multiplication_matrix(ell)
    return UniPoly("x", charpoly(matrix))


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------


def _compose(a, b):
    """(a o b)(i) = a[b[i]] on 0-indexed image tuples."""
    return tuple(a[b[i]] for i in range(len(a)))


def _closure(gens, n):
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    gens = list(gens)
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                c = _compose(h, g)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return frozenset(seen)


def _is_group(perms, n):
    s = set(perms)
    if tuple(range(n)) not in s:
        return False
    return all(_compose(a, b) in s for a in s for b in s)


def _is_transitive(perms, n):
    orbit = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for g in perms:
            if g[i] not in orbit:
                orbit.add(g[i])
                frontier.append(g[i])
    return len(orbit) == n


_subgroup_cache = {}


def _transitive_subgroups(n):
    """All transitive subgroups of S_n, ascending order; n <= 5 so every
    subgroup is generated by at most two elements."""
    if n in _subgroup_cache:
        return _subgroup_cache[n]
    elems = list(itertools.permutations(range(n)))
    groups = set()
    for g in elems:
        groups.add(_closure([g], n))
    for g, h in itertools.combinations(elems, 2):
        groups.add(_closure([g, h], n))
    out = [sorted(H) for H in groups if _is_transitive(H, n)]
    out.sort(key=lambda H: (len(H), H))
    _subgroup_cache[n] = out
    return out


# ---------------------------------------------------------------------------
# Galois group extraction
# ---------------------------------------------------------------------------


class GaloisResult:
    """Permutations of the roots (1-indexed), resolvent and factor pattern."""

    def __init__(self, group, resolvent, factor_pattern, u):
        self.group = sorted(tuple(i + 1 for i in g) for g in group)
        self.order = len(group)
        self.resolvent = resolvent
        self.factor_pattern = factor_pattern
        self.u = tuple(u)

    def to_json(self):
        return {
            "order": self.order,
            "elements": [list(g) for g in self.group],
            "factor_pattern": list(self.factor_pattern),
        }

    def __repr__(self):
        return f"GaloisResult(order={self.order}, pattern={self.factor_pattern})"


def _monic_integer_model(f):
    """Monic integer polynomial with the same splitting field and root order
    (roots scale by the leading coefficient of the cleared form)."""
    scale, prim = f.content_primitive()
    a = int(prim.coeffs[-1])
    n = prim.degree
    if a == 1:
        return prim
    coeffs = [c * Fraction(a) ** (n - 1 - k) for k, c in enumerate(prim.coeffs)]
    out = UniPoly(f.variable, coeffs)
    assert out.is_monic() and out.has_integer_coeffs()
    return out


def _squarefree(r):
    """Exact squarefreeness of an integer univariate polynomial.

    gcd(r, r') = 1 mod p already implies coprimality over Q, so a few
    mod-p probes settle the common case cheaply; inconclusive probes fall
    back to rational Euclid.
    """
    from kronecker import primes

    dr = r.derivative()
    if dr.is_zero:
        return r.degree <= 0
    if r.has_integer_coeffs():
        p = 10007
        for _ in range(6):
            lc = int(r.coeffs[-1])
            if lc % p:
                a = tuple(int(c) % p for c in r.coeffs)
                b = tuple(int(c) % p for c in dr.coeffs)
                if _modp_gcd_is_one(a, b, p):
                    return True
            p = primes.next_prime(p)
    return r.gcd(dr).degree == 0


def _modp_gcd_is_one(a, b, p):
    from kronecker.factorization import _modp_divmod, _modp_norm

    r0, r1 = _modp_norm(a, p), _modp_norm(b, p)
    while r1:
        _, rem = _modp_divmod(r0, r1, p)
        r0, r1 = r1, rem
    return len(r0) == 1


def _numeric_roots(f, dps):
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(int(c.numerator)) / int(c.denominator) for c in reversed(f.coeffs)]
        roots, err = mpmath.polyroots(coeffs, maxsteps=200, extraprec=dps, error=True)
        return [mpmath.mpc(r) for r in roots], err


def _coeffs_from_roots(roots, dps):
    with mpmath.workdps(dps):
        poly = [mpmath.mpc(1)]
        for r in roots:
            nxt = [mpmath.mpc(0)] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i] += c
                nxt[i + 1] -= c * r
            poly = nxt
        return poly  # high to low


def _try_round_integer(coeffs_high_low, eps_accept, eps_reject):
    """Round complex coefficients to integers; True/False/None = need more dps."""
    out = []
    for c in coeffs_high_low:
        re = mpmath.nstr(c.real, 30)
        nearest = int(mpmath.nint(c.real))
        dist = abs(c.real - nearest) + abs(c.imag)
        if dist < eps_accept:
            out.append(nearest)
        elif dist > eps_reject:
            return False, None
        else:
            return None, None
    return True, out


def galois_group(f, u=None, max_attempts=20):
    """Galois group of an irreducible polynomial of degree <= 5.

    The resolvent is computed exactly in the splitting algebra; the returned
    permutation set is certified by exact closure, transitivity, the factor
    pattern of the resolvent, and order * number_of_factors = n!.
    """
    if isinstance(f, str):
        f = UniPoly.from_multipoly(parse_poly(f))
    if isinstance(f, MultiPoly):
        f = UniPoly.from_multipoly(f)
    n = f.degree
    if n < 1:
        raise DomainError("positive degree required")
    if n > MAX_DEGREE:
        raise DomainError(f"degree capped at {MAX_DEGREE}")
    if not is_irreducible(f):
        raise DomainError("polynomial is reducible: the group is defined for irreducible input")
    work = _monic_integer_model(f)
    if n == 1:
        triv = UniPoly(f.variable, [-work.coeffs[0], 1])
        return GaloisResult([(0,)], triv, [1], u or (1,))
    if u is None:
        u = tuple(range(n))
    u = tuple(int(x) for x in u)
    if len(u) != n:
        raise DomainError("need one weight per root")
    alg = SplittingAlgebra(work)
    for attempt in range(max_attempts):
        resolvent = resolvent_total_symmetric(alg, u)
        if _squarefree(resolvent):
            result = _identify_group(work, u, resolvent, alg)
            if result is not None:
                return result
        # component-dependent increments; i*i breaks the arithmetic
        # progressions that stay degenerate for root sets symmetric about 0
        u = tuple(ui + i * i for i, ui in enumerate(u))
    raise AlgebraError("could not find a separating, closure-verified weight vector")


def _identify_group(f, u, resolvent, alg):
    n = f.degree
    perms = list(itertools.permutations(range(n)))
    use_exact_factors = resolvent.degree <= 12
    exact_factors = None
    if use_exact_factors:
        fact = factor_univariate(resolvent)
        exact_factors = [UniPoly.from_multipoly(g, resolvent.variable) for g, _ in fact.factors]
    for dps in (40, 80, 160, 320, 640):
        eps_accept = mpmath.mpf(10) ** (-dps // 2)
        eps_reject = mpmath.mpf(10) ** (-dps // 8)
        with mpmath.workdps(dps):
            roots, err = _numeric_roots(f, dps)
            values = {}
            for sigma in perms:
                values[sigma] = mpmath.fsum(
                    [u[i] * roots[sigma[i]] for i in range(n)], absolute=False
                )
            sep = min(
                abs(values[a] - values[b])
                for a, b in itertools.combinations(perms, 2)
            )
            if sep < eps_reject * 100:
                continue  # need more precision to trust the separation
            if use_exact_factors:
                group = _match_exact_factor(values, exact_factors, sep, dps)
                pattern = sorted(g.degree for g in exact_factors)
            else:
                group, pattern = _subgroup_search(
                    values, resolvent, n, eps_accept, eps_reject, dps
                )
            if group is None:
                continue
            if not _is_group(group, n) or not _is_transitive(group, n):
                continue
            if len(group) * len(pattern) != _FACT[n]:
                continue
            return GaloisResult(group, resolvent, pattern, u)
    return None


def _match_exact_factor(values, factors, sep, dps):
    """Permutations whose value is a root of the factor vanishing at the
    distinguished combination (the identity permutation's value)."""
    identity = tuple(range(len(next(iter(values)))))
    alpha = values[identity]
    target = None
    best = None
    for g in factors:
        mag = abs(_eval_uni_mpc(g, alpha))
        if best is None or mag < best:
            best = mag
            target = g
    group = []
    threshold = (sep / 2) ** target.degree
    for sigma, v in values.items():
        mag = abs(_eval_uni_mpc(target, v))
        if mag < threshold:
            group.append(sigma)
    if len(group) != target.degree:
        return None
    return group


def _eval_uni_mpc(g, z):
    total = mpmath.mpc(0)
    for c in reversed(g.coeffs):
        total = total * z + mpmath.mpf(int(c.numerator)) / int(c.denominator)
    return total


def _subgroup_search(values, resolvent, n, eps_accept, eps_reject, dps):
    """Smallest transitive subgroup whose orbit polynomial has integer
    coefficients and divides the resolvent exactly; its cosets then factor
    the resolvent completely, with the product verified exactly."""
    perms = list(values)
    for H in _transitive_subgroups(n):
        coeffs = _coeffs_from_roots([values[s] for s in H], dps)
        ok, ints = _try_round_integer(coeffs, eps_accept, eps_reject)
        if ok is None:
            return None, None  # precision insufficient to classify
        if not ok:
            continue
        g = UniPoly(resolvent.variable, list(reversed(ints)))
        if resolvent.div_exact(g) is None:
            continue
        # factor the rest by cosets of H
        factors = [g]
        covered = set(H)
        for sigma in perms:
            if sigma in covered:
                continue
            coset = [_compose(h, sigma) for h in H]
            covered.update(coset)
            cc = _coeffs_from_roots([values[s] for s in coset], dps)
            ok2, ints2 = _try_round_integer(cc, eps_accept, eps_reject)
            if not ok2:
                return None, None
            factors.append(UniPoly(resolvent.variable, list(reversed(ints2))))
        product = UniPoly(resolvent.variable, [1])
        for fac in factors:
            product = product * fac
        if product != resolvent:
            return None, None
        return list(H), sorted(fac.degree for fac in factors)
    return None, None


# ---------------------------------------------------------------------------
# the genus-discriminant identity det^2 = D^(n!/2)
# ---------------------------------------------------------------------------


def genus_disc_identity(n):
    """Square of the basis-conjugates determinant against the discriminant
    power: builds the n! x n! matrix of permuted basis monomials in
    indeterminate roots, returns (det^2, D^(n!/2), equal)."""
    if n not in (2, 3):
        raise DomainError("identity is computed symbolically for n = 2 and 3")
    variables = tuple(f"x{i}" for i in range(1, n + 1))
    basis = sorted(itertools.product(*[range(n - k + 1) for k in range(1, n)]))
    perms = sorted(itertools.permutations(range(n)))
    rows = []
    for sigma in perms:
        row = []
        for b in basis:
            exps = [0] * n
            for k, h in enumerate(b):
                exps[sigma[k]] += h
            row.append(MultiPoly(variables, {tuple(exps): Fraction(1)}))
        rows.append(row)
    det = poly_matrix_det(rows)
    lhs = det * det
    disc = MultiPoly.const(1, variables)
    for i in range(n):
        for j in range(i + 1, n):
            diff = MultiPoly.var(variables[i], variables) - MultiPoly.var(
                variables[j], variables
            )
            disc = disc * diff * diff
    rhs = disc ** (_FACT[n] // 2)
    return lhs, rhs, lhs == rhs
