"""Sparse multivariate and dense univariate polynomials over Q, exactly.

MultiPoly is the universal carrier: variables are an ordered name tuple and
terms map exponent tuples to nonzero Fraction coefficients.  The canonical
term order is graded lexicographic with respect to the declared variable
order; printing and hashing follow it, so equal polynomials print and hash
identically.

All values are immutable after construction and every operation is a pure
function.
"""

from fractions import Fraction
from math import gcd as int_gcd
from math import lcm as int_lcm

from kronecker._kernel import add_scaled_terms, mul_terms
from kronecker.errors import AlgebraError, DomainError, ParseError

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _grlex_key(exps):
    return (sum(exps), exps)


class MultiPoly:
    """Sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables, terms):
        self.variables = tuple(variables)
        clean = {}
        width = len(self.variables)
        for exps, c in terms.items():
            if len(exps) != width:
                raise AlgebraError("exponent tuple width does not match variable count")
            c = Fraction(c)
            if c:
                clean[tuple(exps)] = c
        self.terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables=()):
        return cls(variables, {})

    @classmethod
    def const(cls, value, variables=()):
        value = Fraction(value)
        if not value:
            return cls(variables, {})
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def var(cls, name, variables=None):
        if variables is None:
            variables = (name,)
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls(variables, {tuple(exps): _ONE})

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        if not self.terms:
            return _ZERO
        if not self.is_constant:
            raise AlgebraError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree(self, name):
        """Degree in one variable; -1 for the zero polynomial, 0 if absent."""
        if not self.terms:
            return -1
        if name not in self.variables:
            return 0
        i = self.variables.index(name)
        return max(e[i] for e in self.terms)

    def used_variables(self):
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(self.variables[i])
        return used

    def sorted_terms(self):
        """Terms in graded-lex descending order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading_term(self):
        """(exponents, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise AlgebraError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def lc(self):
        return self.leading_term()[1]

    # -- variable bookkeeping ----------------------------------------------

    def with_variables(self, variables):
        """Same polynomial over a (super)set of variables, reordered at will."""
        variables = tuple(variables)
        idx = []
        for i, v in enumerate(self.variables):
            if v in variables:
                idx.append((i, variables.index(v)))
            else:
                if any(e[i] for e in self.terms):
                    raise AlgebraError(f"cannot drop used variable {v!r}")
        terms = {}
        for e, c in self.terms.items():
            new = [0] * len(variables)
            for i, j in idx:
                new[j] = e[i]
            terms[tuple(new)] = c
        return MultiPoly(variables, terms)

    def _align(self, other):
        if isinstance(other, MultiPoly):
            if other.variables == self.variables:
                return self, other
            merged = list(self.variables)
            for v in other.variables:
                if v not in merged:
                    merged.append(v)
            return self.with_variables(merged), other.with_variables(merged)
        return self, MultiPoly.const(other, self.variables)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        a, b = self._align(other)
        return MultiPoly(a.variables, add_scaled_terms(a.terms, b.terms, _ONE))

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._align(other)
        return MultiPoly(a.variables, add_scaled_terms(a.terms, b.terms, Fraction(-1)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return MultiPoly.zero(self.variables)
            return MultiPoly(self.variables, {e: c * v for e, v in self.terms.items()})
        a, b = self._align(other)
        return MultiPoly(a.variables, mul_terms(a.terms, b.terms))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise AlgebraError("negative polynomial power")
        result = MultiPoly.const(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant and self.constant_value() == other
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._align(other)
        return a.terms == b.terms

    def __hash__(self):
        if self._hash is None:
            used = sorted(self.used_variables())
            p = self.with_variables(used) if tuple(used) != self.variables else self
            self._hash = hash((tuple(used), tuple(p.sorted_terms())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- calculus / evaluation ----------------------------------------------

    def derivative(self, name):
        if name not in self.variables:
            return MultiPoly.zero(self.variables)
        i = self.variables.index(name)
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                terms[tuple(ne)] = c * e[i]
        return MultiPoly(self.variables, terms)

    def subs(self, assignment):
        """Substitute variables by polynomials or rationals; the rest stay.

        Substituted variables remain in the variable tuple (with exponent 0)
        so repeated substitutions compose predictably.
        """
        target_vars = list(self.variables)
        values = {}
        for name, val in assignment.items():
            if name not in self.variables:
                continue
            if not isinstance(val, MultiPoly):
                val = MultiPoly.const(val, ())
            values[name] = val
            for v in val.variables:
                if v not in target_vars:
                    target_vars.append(v)
        target = tuple(target_vars)
        power_cache = {}
        result = MultiPoly.zero(target)
        for e, c in self.terms.items():
            part = MultiPoly.const(c, target)
            for i, k in enumerate(e):
                if not k:
                    continue
                name = self.variables[i]
                key = (name, k)
                val = power_cache.get(key)
                if val is None:
                    base = values[name] if name in values else MultiPoly.var(name, target)
                    val = power_cache[key] = base**k
                part = part * val
            result = result + part
        return result

    def eval_at(self, point):
        """Full evaluation; point maps every used variable to a Fraction."""
        total = _ZERO
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    v *= Fraction(point[self.variables[i]]) ** k
            total += v
        return total

    # -- views ---------------------------------------------------------------

    def coeffs_in(self, name):
        """dict power -> MultiPoly coefficient (same variable tuple, name unused)."""
        if name not in self.variables:
            return {0: self} if self.terms else {}
        i = self.variables.index(name)
        out = {}
        for e, c in self.terms.items():
            ne = list(e)
            k = ne[i]
            ne[i] = 0
            bucket = out.setdefault(k, {})
            bucket[tuple(ne)] = bucket.get(tuple(ne), _ZERO) + c
        return {k: MultiPoly(self.variables, t) for k, t in out.items() if any(t.values())}

    def monomial_coefficient(self, name_powers):
        """Coefficient (a MultiPoly) of a product of variable powers."""
        fixed = {self.variables.index(n): k for n, k in name_powers.items()}
        terms = {}
        for e, c in self.terms.items():
            if all(e[i] == k for i, k in fixed.items()):
                ne = list(e)
                for i in fixed:
                    ne[i] = 0
                terms[tuple(ne)] = c
        return MultiPoly(self.variables, terms)

    # -- exact division -------------------------------------------------------

    def div_exact(self, other):
        """Quotient q with self == other*q, or None when not divisible."""
        a, b = self._align(other)
        if b.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if a.is_zero:
            return MultiPoly.zero(a.variables)
        be, bc = b.leading_term()
        rem = dict(a.terms)
        quo = {}
        while rem:
            ae = max(rem, key=_grlex_key)
            ac = rem[ae]
            qe = tuple(i - j for i, j in zip(ae, be))
            if any(k < 0 for k in qe):
                return None
            qc = ac / bc
            quo[qe] = qc
            shifted = {tuple(i + j for i, j in zip(e, qe)): c for e, c in b.terms.items()}
            rem = add_scaled_terms(rem, shifted, -qc)
        return MultiPoly(a.variables, quo)

    def divides(self, other):
        return other.div_exact(self) is not None

    # -- printing -------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(self.variables, e)
                if k
            )
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            chunks.append(("-" if c < 0 else "+", body))
        sign, body = chunks[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MultiPoly({self})"


def poly_from_terms(variables, items):
    """Build a MultiPoly from (exponents, coefficient) pairs, summing repeats."""
    terms = {}
    for e, c in items:
        e = tuple(e)
        terms[e] = terms.get(e, _ZERO) + Fraction(c)
    return MultiPoly(variables, terms)


# ---------------------------------------------------------------------------
# dense univariate polynomials
# ---------------------------------------------------------------------------


class UniPoly:
    """Dense univariate polynomial; coefficients low to high, exact rationals."""

    __slots__ = ("variable", "coeffs")

    def __init__(self, variable, coeffs):
        self.variable = variable
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_multipoly(cls, p, variable=None):
        used = p.used_variables()
        if len(used) > 1:
            raise AlgebraError("polynomial is not univariate")
        if variable is None:
            variable = next(iter(used)) if used else (p.variables[0] if p.variables else "x")
        out = [_ZERO] * (p.degree(variable) + 1)
        for e, c in p.terms.items():
            k = e[p.variables.index(variable)] if variable in p.variables else 0
            out[k] += c
        return cls(variable, out)

    def to_multipoly(self, variables=None):
        if variables is None:
            variables = (self.variable,)
        i = variables.index(self.variable)
        terms = {}
        for k, c in enumerate(self.coeffs):
            if c:
                e = [0] * len(variables)
                e[i] = k
                terms[tuple(e)] = c
        return MultiPoly(variables, terms)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            return _ZERO
        return self.coeffs[-1]

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _ZERO

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def has_integer_coeffs(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly(self.variable, [other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.variable, self.coeffs))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly(self.variable, [other])
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            self.variable,
            [self[i] + other[i] for i in range(n)],
        )

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.variable, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly(self.variable, [other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly(self.variable, [c * other for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return UniPoly(self.variable, [])
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return UniPoly(self.variable, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = UniPoly(self.variable, [1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def divmod(self, other):
        """Quotient and remainder over Q."""
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(self.variable, []), self
        quo = [_ZERO] * (dq + 1)
        blc = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / blc
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UniPoly(self.variable, quo), UniPoly(self.variable, rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def div_exact(self, other):
        q, r = self.divmod(other)
        return q if r.is_zero else None

    def derivative(self):
        return UniPoly(self.variable, [c * k for k, c in enumerate(self.coeffs)][1:])

    def eval(self, x):
        x = Fraction(x)
        total = _ZERO
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def compose(self, other):
        total = UniPoly(self.variable, [])
        for c in reversed(self.coeffs):
            total = total * other + c
        return total

    def monic(self):
        if self.is_zero:
            return self
        return self * (1 / self.coeffs[-1])

    def gcd(self, other):
        """Monic gcd over Q (plain Euclid)."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def squarefree_part(self):
        if self.degree <= 0:
            return self.monic()
        g = self.gcd(self.derivative())
        return (self.div_exact(g) or self).monic()

    def content_primitive(self):
        """(content, primitive) with integer primitive and positive lc."""
        if self.is_zero:
            return Fraction(0), self
        den = 1
        for c in self.coeffs:
            den = int_lcm(den, c.denominator)
        num = 0
        for c in self.coeffs:
            num = int_gcd(num, c.numerator * (den // c.denominator))
        scale = Fraction(num, den)
        if self.coeffs[-1] < 0:
            scale = -scale
        return scale, self * (1 / scale)

    def shift_ring(self, variable):
        return UniPoly(variable, self.coeffs)

    def __str__(self):
        return str(self.to_multipoly())

    def __repr__(self):
        return f"UniPoly({self})"


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_MAX_EXP = 2**31 - 1


def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if c.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if c in "+-*/^()":
            tokens.append((c, c, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    """Recursive descent over the grammar:

    expr   := term (('+'|'-') term)*
    term   := ['-'] factor ('*' factor)*
    factor := base ('^' uint)?
    base   := uint ('/' uint)? | name | '(' expr ')'
    """

    def __init__(self, text, variables):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.fixed = variables is not None
        self.variables = list(variables) if variables is not None else []

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1]!r}", tok[2])
        self.pos += 1
        return tok

    def parse(self):
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return p

    def expr(self):
        p = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        negate = False
        if self.peek()[0] == "-":
            self.take()
            negate = True
        p = self.factor()
        while self.peek()[0] == "*":
            self.take()
            p = p * self.factor()
        return -p if negate else p

    def factor(self):
        p = self.base()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("int")
            e = int(tok[1])
            if e > _MAX_EXP:
                raise ParseError("exponent overflow", tok[2])
            p = p**e
        return p

    def base(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            value = Fraction(int(tok[1]))
            if self.peek()[0] == "/":
                self.take()
                den = self.take("int")
                if int(den[1]) == 0:
                    raise ParseError("zero denominator", den[2])
                value /= int(den[1])
            return MultiPoly.const(value, tuple(self.variables))
        if tok[0] == "name":
            self.take()
            name = tok[1]
            if name not in self.variables:
                if self.fixed:
                    raise ParseError(f"unknown variable {name!r}", tok[2])
                self.variables.append(name)
            return MultiPoly.var(name, (name,))
        if tok[0] == "(":
            self.take()
            p = self.expr()
            self.take(")")
            return p
        raise ParseError(f"expected a value, found {tok[1]!r}", tok[2])


def parse_poly(text, variables="infer"):
    """Parse an expression into a MultiPoly.

    With variables="infer" the variable order is first appearance; otherwise
    pass an ordered name sequence and unknown names are rejected.
    """
    parser = _Parser(text, None if variables == "infer" else tuple(variables))
    p = parser.parse()
    return p.with_variables(tuple(parser.variables))


# ---------------------------------------------------------------------------
# content, gcd, resultants
# ---------------------------------------------------------------------------


def content_primitive(p):
    """(content, primitive) with content*primitive == p exactly.

    For integer-coefficient input the content is a nonnegative integer-valued
    Fraction and the primitive part has coprime integer coefficients with the
    graded-lex leading coefficient positive.  Rational coefficients are
    handled by folding the denominator-clearing scale into the content.
    The zero polynomial yields (0, 0) by convention.
    """
    if p.is_zero:
        return Fraction(0), p
    den = 1
    for c in p.terms.values():
        den = int_lcm(den, c.denominator)
    num = 0
    for c in p.terms.values():
        num = int_gcd(num, c.numerator * (den // c.denominator))
    scale = Fraction(num, den)
    if p.lc() < 0:
        scale = -scale
    return scale, p * (1 / scale)


def normalize_primitive(p):
    """Primitive part with positive graded-lex leading coefficient; 0 stays 0."""
    return content_primitive(p)[1]


def _coeff_polys(p, name):
    return list(p.coeffs_in(name).values())


def _content_in(p, name):
    """Content of p viewed in (rest)[name]: gcd of its coefficient polys."""
    cont = MultiPoly.zero(p.variables)
    for c in _coeff_polys(p, name):
        cont = gcd(cont, c)
        if cont.is_constant and not cont.is_zero:
            break
    return cont


def _prem(a, b, name):
    """Pseudo-remainder of a by b in the variable name."""
    da, db = a.degree(name), b.degree(name)
    if db < 0:
        raise ZeroDivisionError("pseudo-division by zero")
    if da < db:
        return a
    b_coeffs = b.coeffs_in(name)
    blc = b_coeffs.get(db, MultiPoly.zero(b.variables))
    x = MultiPoly.var(name, a.variables)
    rem = a
    while not rem.is_zero and rem.degree(name) >= db:
        d = rem.degree(name)
        rlc = rem.coeffs_in(name).get(d)
        rem = rem * blc - rlc * b * x ** (d - db)
    return rem


def gcd(p, q):
    """Greatest common divisor, normalized primitive with positive leading
    coefficient; computed by primitive-part pseudo-remainder sequences
    recursing on the variable count."""
    if p.is_zero and q.is_zero:
        return MultiPoly.zero(p.variables)
    if p.is_zero:
        return normalize_primitive(q)
    if q.is_zero:
        return normalize_primitive(p)
    p, q = p._align(q)
    used = sorted(p.used_variables() | q.used_variables())
    if not used:
        return MultiPoly.const(1, p.variables)
    name = used[0]
    if p.degree(name) == 0 or q.degree(name) == 0:
        # a poly of degree 0 in the chosen variable divides only via content
        if p.degree(name) == 0:
            return gcd(p, _content_in(q, name))
        return gcd(_content_in(p, name), q)
    cp = _content_in(p, name)
    cq = _content_in(q, name)
    cont = gcd(cp, cq)
    a = p.div_exact(cp)
    b = q.div_exact(cq)
    if a.degree(name) < b.degree(name):
        a, b = b, a
    while True:
        r = _prem(a, b, name)
        if r.is_zero:
            g = normalize_primitive(b.div_exact(_content_in(b, name)))
            break
        if r.degree(name) == 0:
            g = MultiPoly.const(1, p.variables)
            break
        a, b = b, r.div_exact(_content_in(r, name))
    return normalize_primitive(cont * g)


def poly_matrix_det(rows):
    """Determinant of a square matrix of MultiPoly entries.

    Fraction-free Bareiss elimination; all interior divisions are exact.
    """
    n = len(rows)
    if n == 0:
        return MultiPoly.const(1)
    m = [list(r) for r in rows]
    variables = m[0][0].variables
    sign = 1
    prev = MultiPoly.const(1, variables)
    for k in range(n - 1):
        if m[k][k].is_zero:
            for i in range(k + 1, n):
                if not m[i][k].is_zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero(variables)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = num.div_exact(prev)
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def sylvester_matrix(p, q, name):
    """Sylvester matrix of p and q with respect to one variable."""
    dp, dq = p.degree(name), q.degree(name)
    pc = p.coeffs_in(name)
    qc = q.coeffs_in(name)
    zero = MultiPoly.zero(p.variables)
    size = dp + dq
    rows = []
    for i in range(dq):
        row = [zero] * size
        for k in range(dp + 1):
            row[i + dp - k] = pc.get(k, zero)
        rows.append(row)
    for i in range(dp):
        row = [zero] * size
        for k in range(dq + 1):
            row[i + dq - k] = qc.get(k, zero)
        rows.append(row)
    return rows


def resultant(p, q, name):
    """Resultant with respect to one variable, as the Sylvester determinant.

    When exactly one argument is constant in the variable, the convention
    Res = const^deg(other) applies; two constants have nothing to eliminate.
    """
    p, q = p._align(q)
    dp, dq = p.degree(name), q.degree(name)
    if dp <= 0 and dq <= 0:
        raise DomainError("no elimination variable")
    if p.is_zero or q.is_zero:
        return MultiPoly.zero(p.variables)
    if dp == 0:
        return p**dq
    if dq == 0:
        return q**dp
    return poly_matrix_det(sylvester_matrix(p, q, name))


def discriminant(p, name):
    """Discriminant in one variable: (-1)^(m(m-1)/2) Res(p, p')/lc."""
    m = p.degree(name)
    if m < 1:
        raise DomainError("discriminant requires positive degree")
    if m == 1:
        return MultiPoly.const(1, p.variables)
    res = resultant(p, p.derivative(name), name)
    lc = p.coeffs_in(name)[m]
    quo = res.div_exact(lc)
    if quo is None:
        raise AlgebraError("resultant not divisible by leading coefficient")
    return -quo if (m * (m - 1) // 2) % 2 else quo


# ---------------------------------------------------------------------------
# Kronecker substitution
# ---------------------------------------------------------------------------


class SubstitutionCodec:
    """Records the base g and variable order of a Kronecker substitution."""

    __slots__ = ("g", "variables", "target")

    def __init__(self, g, variables, target):
        self.g = g
        self.variables = tuple(variables)
        self.target = target

    def decode_exponent(self, e):
        digits = []
        for _ in self.variables:
            digits.append(e % self.g)
            e //= self.g
        if e:
            raise AlgebraError("exponent outside the decodable range")
        return tuple(digits)


def kronecker_substitute(p, g):
    """Map each variable v_i to x^(g^i); invertible when g exceeds every
    per-variable degree."""
    if g <= max((p.degree(v) for v in p.variables), default=0):
        raise DomainError("substitution base must exceed every per-variable degree")
    target = p.variables[0] if p.variables else "x"
    out = {}
    for e, c in p.terms.items():
        packed = 0
        weight = 1
        for k in e:
            packed += k * weight
            weight *= g
        out[packed] = out.get(packed, _ZERO) + c
    coeffs = [_ZERO] * (max(out) + 1 if out else 0)
    for k, c in out.items():
        coeffs[k] = c
    return UniPoly(target, coeffs), SubstitutionCodec(g, p.variables, target)


def kronecker_inverse(u, codec):
    """Inverse of kronecker_substitute via base-g digit expansion."""
    terms = {}
    for k, c in enumerate(u.coeffs):
        if c:
            e = codec.decode_exponent(k)
            terms[e] = terms.get(e, _ZERO) + c
    return MultiPoly(codec.variables, terms)
