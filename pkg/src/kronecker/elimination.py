"""Equidimensional decomposition of affine varieties by successive
elimination.

The loop, for k = n-1 down to 0: the gcd of the current generators is the
partial resolvent describing the codimension-(n-k) part; dividing it out
and eliminating the last remaining variable through the resultant of two
indeterminate-weighted combinations projects what is left one dimension
down.  The product of the partial resolvents is the total resolvent.

Component parametrization follows the classical extraction from the
u-weighted resolvent: writing the fiber coordinate as
x = u_0 x0 + u_1 x1 + ... and rerunning the elimination, an irreducible
factor of the u-resolvent of degree d carries the projection equation as
its u_0^d coefficient, and the coefficient of u_i u_0^(d-1) has the shape
x_i * phi' - phi_i with phi' the derivative of the projection equation, so
each dependent coordinate is recovered as phi_i / phi'.

Coordinates: the first attempt uses the input coordinates unchanged; when a
degeneracy is detected (a resolvent not involving the fiber coordinate, a
mismatch between the plain and u-weighted runs, an unverifiable
parametrization), the decomposition restarts with a seeded unimodular
upper-triangular change of coordinates, at most 8 redraws.  The skeleton
(parts, resolvents, factors) is reported mapped back to the input
coordinates; parametrizations live in the working coordinates, which the
result records.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from kronecker import polyring
from kronecker.errors import AlgebraError, DomainError
from kronecker.factorization import factor_multivariate
from kronecker.polyring import MultiPoly, content_primitive, normalize_primitive

MAX_RETRIES = 8

_X = "X_"  # reserved fiber-combination variable for the u-weighted run


@dataclass(frozen=True)
class EliminationConfig:
    seed: int = 0
    max_vars: int = 3
    max_degree: int = 4

    def __post_init__(self):
        if self.max_vars < 1 or self.max_degree < 1:
            raise DomainError("bounds must be positive")


@dataclass
class EliminationStep:
    generators: list
    eliminated: bool


@dataclass
class VarietyPart:
    codim: int
    resolvent: MultiPoly            # squarefree, input coordinates
    factors: list                   # irreducible factors, input coordinates
    resolvent_working: MultiPoly    # same data in the working coordinates
    factors_working: list


@dataclass
class ComponentParam:
    codim: int
    degree: int
    phi: MultiPoly                  # projection equation, working coordinates
    phi_prime: MultiPoly            # shared denominator
    params: dict                    # variable -> numerator (x_i = num / phi')
    immersed: bool = False


@dataclass
class VarietyDecomposition:
    variables: tuple
    coordinate_change: list         # row i: working_i as integer combo of input vars
    parts: list = field(default_factory=list)
    components: list = field(default_factory=list)
    empty: bool = False
    whole_space: bool = False

    def to_json(self):
        return {
            "empty": self.empty,
            "parts": [
                {
                    "codim": p.codim,
                    "resolvent": str(p.resolvent),
                    "factors": [str(f) for f in p.factors],
                }
                for p in self.parts
            ],
            "components": [
                {
                    "phi": str(c.phi),
                    "params": [
                        {"var": v, "num": str(num), "den": str(c.phi_prime)}
                        for v, num in sorted(c.params.items())
                    ],
                }
                for c in self.components
                if not c.immersed
            ],
        }


class _Degenerate(Exception):
    """Coordinate system insufficiently general; redraw and retry."""


# ---------------------------------------------------------------------------
# one elimination step
# ---------------------------------------------------------------------------


def eliminate_step(generators, var):
    """Coefficients, with respect to the U,V monomials, of the resultant of
    two indeterminate combinations of the generators.

    Generators free of the eliminated variable pass through untouched.  A
    single active generator projects densely, so it contributes nothing.
    When nothing involves the variable the input is returned unchanged with
    eliminated=False.
    """
    gens = [g for g in generators if not g.is_zero]
    active = [g for g in gens if g.degree(var) > 0]
    passive = [g for g in gens if g.degree(var) <= 0]
    if not active:
        return EliminationStep(list(gens), False)
    if len(active) == 1:
        return EliminationStep(_interreduce(passive), True)
    m = len(active)
    unames = [f"U{i + 1}" for i in range(m)]
    vnames = [f"V{i + 1}" for i in range(m)]
    a = MultiPoly.zero(())
    b = MultiPoly.zero(())
    for i, g in enumerate(active):
        a = a + MultiPoly.var(unames[i], (unames[i],)) * g
        b = b + MultiPoly.var(vnames[i], (vnames[i],)) * g
    res = polyring.resultant(a, b, var)
    coeffs = _coefficients_wrt(res, unames + vnames)
    out = list(passive)
    out.extend(coeffs)
    return EliminationStep(_interreduce(out), True)


def _coefficients_wrt(p, names):
    """Bucket the terms of p by their exponents in the given variables."""
    idx = [p.variables.index(n) for n in names if n in p.variables]
    buckets = {}
    for e, c in p.terms.items():
        key = tuple(e[i] for i in idx)
        stripped = tuple(x if i not in idx else 0 for i, x in enumerate(e))
        buckets.setdefault(key, {})[stripped] = c
    out = []
    for key in sorted(buckets):
        poly = MultiPoly(p.variables, buckets[key])
        keep = [v for v in p.variables if v not in names]
        out.append(poly.with_variables(keep))
    return out


def _interreduce(gens):
    """Primitive-normalize, dedupe, drop multiples of other generators."""
    norm = []
    for g in gens:
        if g.is_zero:
            continue
        p = normalize_primitive(g)
        if p not in norm:
            norm.append(p)
    out = []
    for g in norm:
        if any(h is not g and h.divides(g) and not h.is_constant for h in norm):
            continue
        out.append(g)
    out.sort(key=lambda g: (g.total_degree(), str(g)))
    return out


def _gcd_of_list(gens):
    acc = MultiPoly.zero(())
    for g in gens:
        acc = polyring.gcd(acc, g)
        if acc.is_constant and not acc.is_zero:
            break
    return acc


# ---------------------------------------------------------------------------
# coordinate changes
# ---------------------------------------------------------------------------


def _draw_matrix(nvars, seed, attempt):
    """Unimodular upper-triangular integer matrix; attempt 0 is identity."""
    m = [[1 if i == j else 0 for j in range(nvars)] for i in range(nvars)]
    if attempt == 0:
        return m
    rng = random.Random((seed, attempt))
    for i in range(nvars):
        for j in range(i + 1, nvars):
            entry = 0
            while entry == 0:
                entry = rng.randint(-9, 9)
            m[i][j] = entry
    return m


def _invert_unitriangular(m):
    n = len(m)
    inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n):
            # subtract m[i][j] * row j of inv from row i
            for k in range(n):
                inv[i][k] -= m[i][j] * inv[j][k]
    return inv


def _apply_matrix(p, matrix, variables):
    """Substitute variable_i -> sum_j matrix[i][j] * variable_j."""
    assignment = {}
    for i, v in enumerate(variables):
        expr = MultiPoly.zero(variables)
        for j, c in enumerate(matrix[i]):
            if c:
                expr = expr + MultiPoly.var(variables[j], variables) * Fraction(c)
        assignment[v] = expr
    return p.subs(assignment).with_variables(variables)


# ---------------------------------------------------------------------------
# the decomposition loop
# ---------------------------------------------------------------------------


def _squarefree_factors(poly):
    fact = factor_multivariate(poly)
    factors = [f for f, _ in fact.factors if f.total_degree() >= 1]
    sq = MultiPoly.const(1, poly.variables)
    for f in factors:
        sq = sq * f
    return normalize_primitive(sq), sorted(factors, key=lambda f: (f.total_degree(), str(f)))


def _skeleton(gens, variables):
    """Plain run: [(codim, full gcd F, current-after)] down the dimensions.

    Returns (stages, saw_constant) where stages hold the full (non-squarefree)
    partial resolvents in the working coordinates.
    """
    n = len(variables)
    current = _interreduce(gens)
    stages = []
    saw_constant = False
    for k in range(n - 1, -1, -1):
        if not current:
            break
        if any(g.is_constant for g in current):
            saw_constant = True
            break
        f = _gcd_of_list(current)
        if f.is_zero:
            break
        if f.total_degree() >= 1:
            stages.append((n - k, f))
            current = _interreduce([g.div_exact(f) for g in current])
        if k == 0:
            if current and not any(g.is_constant for g in current):
                # leftover generators in one variable with no common root
                saw_constant = True
            break
        if not current:
            break
        if any(g.is_constant for g in current):
            saw_constant = True
            break
        step = eliminate_step(current, variables[k])
        current = step.generators
    return stages, saw_constant


def _u_substituted(gens, variables, unames):
    """Generators with x0 replaced by (X - u_1 x_1 - ... )/u_0, cleared."""
    x0 = variables[0]
    u0 = MultiPoly.var(unames[0], (unames[0],))
    repl = MultiPoly.var(_X, (_X,))
    for i in range(1, len(variables)):
        repl = repl - MultiPoly.var(unames[i], (unames[i],)) * MultiPoly.var(
            variables[i], (variables[i],)
        )
    out = []
    for g in gens:
        d = g.degree(x0)
        if d <= 0:
            out.append(g)
            continue
        # g(x0, ...) * u0^d with x0 -> repl/u0, cleared of denominators
        buckets = g.coeffs_in(x0)
        total = MultiPoly.zero(())
        for k, c in buckets.items():
            total = total + c * repl**k * u0 ** (d - k)
        out.append(total)
    return out


def _strip_u_content(p, unames):
    """Primitive part of p with respect to the geometric variables: divide
    out any factor involving only the u weights."""
    names = [v for v in p.variables if v not in unames and v != _X] + [_X]
    cont = MultiPoly.zero(())
    for c in _coefficients_wrt_keep(p, names):
        cont = polyring.gcd(cont, c)
        if cont.is_constant and not cont.is_zero:
            break
    if cont.is_constant:
        return normalize_primitive(p)
    return normalize_primitive(p.div_exact(cont))


def _coefficients_wrt_keep(p, names):
    """Coefficients of p viewed as a polynomial in the given variables."""
    idx = [p.variables.index(n) for n in names if n in p.variables]
    buckets = {}
    for e, c in p.terms.items():
        key = tuple(e[i] for i in idx)
        stripped = tuple(0 if i in idx else x for i, x in enumerate(e))
        buckets.setdefault(key, {})[stripped] = c
    return [MultiPoly(p.variables, t) for t in buckets.values()]


def _u_skeleton(gens, variables, unames):
    """The elimination loop rerun on the u-substituted generators.

    Factors involving only the weights are units of the localized ring: they
    are divided out with the rest of the gcd but never recorded as parts.
    """
    n = len(variables)
    current = _interreduce(_u_substituted(gens, variables, unames))
    stages = []
    geometric = set(variables) | {_X}
    for k in range(n - 1, -1, -1):
        if not current or any(g.is_constant for g in current):
            break
        f_full = _gcd_of_list(current)
        if f_full.is_zero:
            break
        if f_full.total_degree() >= 1:
            f = _strip_u_content(f_full, unames)
            if f.used_variables() & geometric:
                stages.append((n - k, f))
            current = _interreduce([g.div_exact(f_full) for g in current])
        if k == 0:
            break
        if not current or any(g.is_constant for g in current):
            break
        step = eliminate_step(current, variables[k])
        current = step.generators
    return stages


def decompose_variety(generators, config=None):
    """Decompose V(generators) into equidimensional parts with parametrized
    components; deterministic for a fixed config.seed."""
    config = config or EliminationConfig()
    gens = [g for g in generators if not g.is_zero]
    variables = []
    for g in generators:
        for v in g.variables:
            if v not in variables:
                variables.append(v)
    variables = tuple(variables)
    if len(variables) > config.max_vars:
        raise DomainError(f"at most {config.max_vars} variables (got {len(variables)})")
    for g in gens:
        if g.total_degree() > config.max_degree:
            raise DomainError(f"total degree capped at {config.max_degree}")
    if not gens:
        out = VarietyDecomposition(variables, _draw_matrix(len(variables), config.seed, 0))
        out.whole_space = True
        out.parts.append(
            VarietyPart(0, MultiPoly.zero(variables), [], MultiPoly.zero(variables), [])
        )
        return out
    if any(g.is_constant for g in gens):
        return VarietyDecomposition(
            variables, _draw_matrix(len(variables), config.seed, 0), empty=True
        )
    if not variables:
        return VarietyDecomposition((), [[1]], empty=True)

    last_error = None
    for attempt in range(MAX_RETRIES):
        matrix = _draw_matrix(len(variables), config.seed, attempt)
        try:
            return _decompose_with_matrix(gens, variables, matrix)
        except _Degenerate as exc:
            last_error = exc
            continue
    raise AlgebraError(
        f"no sufficiently general coordinates found in {MAX_RETRIES} attempts: {last_error}"
    )


def _decompose_with_matrix(gens, variables, matrix):
    n = len(variables)
    inverse = _invert_unitriangular(matrix)
    working = [_apply_matrix(g, inverse, variables) for g in gens]
    unames = tuple(f"u{i}" for i in range(n))

    stages, saw_constant = _skeleton(working, variables)
    u_stages = dict()
    for codim, fu in _u_skeleton(working, variables, unames):
        u_stages[codim] = fu

    out = VarietyDecomposition(variables, matrix)
    for codim, f in stages:
        sq, factors = _squarefree_factors(f)
        fu = u_stages.get(codim)
        if fu is None:
            raise _Degenerate(f"u-run lost the codimension-{codim} part")
        if codim >= 2 and fu.degree(_X) <= 0:
            # a dimension-k part (k < n-1) must carry the fiber coordinate
            raise _Degenerate(
                f"codimension-{codim} resolvent does not involve the fiber coordinate"
            )
        spec = fu.subs({unames[0]: 1, **{u: 0 for u in unames[1:]}, _X: MultiPoly.var(variables[0], variables)})
        spec_sq = _squarefree_factors(normalize_primitive(spec))[0]
        if spec_sq != sq:
            raise _Degenerate(
                f"plain and u-weighted resolvents disagree at codimension {codim}"
            )
        back = _apply_matrix(sq, matrix, variables)
        back_factors = [normalize_primitive(_apply_matrix(f_, matrix, variables)) for f_ in factors]
        part = VarietyPart(codim, normalize_primitive(back), sorted(back_factors, key=str), sq, factors)
        out.parts.append(part)
        k = n - codim
        for fac in factors:
            if len(factors) == 1:
                fu_i = fu
            else:
                # the u-resolvent of one component: rerun with the factor
                # adjoined, which keeps that component and drops its siblings
                # to lower stages
                sub = dict(_u_skeleton(working + [fac], variables, unames))
                fu_i = sub.get(codim)
                if fu_i is None:
                    raise _Degenerate(
                        f"augmented u-run lost a codimension-{codim} factor"
                    )
            if fu_i.degree(_X) <= 0:
                continue  # cylinder over a smaller base: nothing to parametrize
            comp = parametrize_component(working, fu_i, variables, unames, k)
            out.components.append(comp)
    if not out.parts and saw_constant:
        out.empty = True
    return out


def parametrize_component(generators, factor, variables=None, unames=None, k=None):
    """Extract the projection equation and the dependent-coordinate
    parametrization from one irreducible factor of the u-weighted resolvent.

    The factor arrives as a polynomial in the fiber combination X_, the
    weights u_i and the free coordinates; substituting X_ = u_0 x_0 + ... and
    reading off the u_0^d and u_i u_0^(d-1) coefficients yields phi and the
    pairs (phi', phi_i) with x_i = phi_i/phi' on the component.  Components
    whose sheets depend on the weights (immersed varieties) are flagged.
    """
    if variables is None:
        variables = tuple(
            v for v in factor.variables if not v.startswith("u") and v != _X
        )
    if unames is None:
        unames = tuple(u for u in factor.variables if u.startswith("u"))
    d = factor.degree(_X)
    if d <= 0:
        raise DomainError("factor does not involve the fiber combination")
    if k is None:
        k = max(
            (i for i in range(1, len(variables)) if variables[i] in factor.used_variables()),
            default=0,
        )
    x = MultiPoly.zero(())
    for i, v in enumerate(variables):
        x = x + MultiPoly.var(unames[i], (unames[i],)) * MultiPoly.var(v, (v,))
    phi_full = factor.subs({_X: x})
    codim = len(variables) - k
    # the u_0^d coefficient is the projection equation; the u_i u_0^(d-1)
    # coefficients are only consistent with it at the same overall scale, so
    # normalization happens jointly at the very end
    phi = phi_full.monomial_coefficient({unames[0]: d}).with_variables(variables)
    if phi.is_zero or phi.degree(variables[0]) != d:
        return ComponentParam(codim, d, phi, MultiPoly.zero(variables), {}, immersed=True)
    if any(v in phi.used_variables() for v in variables[k + 1 :]):
        return ComponentParam(codim, d, phi, MultiPoly.zero(variables), {}, immersed=True)
    # homogeneity of degree d in the weights marks a weight-independent sheet set
    for e, _ in phi_full.terms.items():
        deg_u = sum(e[phi_full.variables.index(u)] for u in unames if u in phi_full.variables)
        if deg_u != d:
            return ComponentParam(codim, d, phi, MultiPoly.zero(variables), {}, immersed=True)
    phi_prime = phi.derivative(variables[0])
    params = {}
    for i in range(k + 1, len(variables)):
        v = variables[i]
        c = phi_full.monomial_coefficient({unames[i]: 1, unames[0]: d - 1}).with_variables(
            variables
        )
        num = MultiPoly.var(v, variables) * phi_prime - c
        if v in num.used_variables():
            return ComponentParam(codim, d, phi, phi_prime, {}, immersed=True)
        params[v] = num
    scale = content_primitive(phi)[0]
    phi = phi * (1 / scale)
    phi_prime = phi_prime * (1 / scale)
    params = {v: num * (1 / scale) for v, num in params.items()}
    comp = ComponentParam(codim, d, phi, phi_prime, params)
    if generators and not _verify_parametrization(generators, comp, variables):
        comp.immersed = True
    return comp


def _verify_parametrization(generators, comp, variables):
    """Every generator must vanish after substituting x_i = phi_i/phi' and
    reducing modulo the projection equation."""
    x0 = variables[0]
    for g in generators:
        sub = g
        degree_budget = 0
        for v, num in comp.params.items():
            degree_budget += g.degree(v)
        # clear denominators: substitute x_i -> phi_i, scaling by phi'^deg
        work = MultiPoly.zero(())
        scaled = {}
        for v, num in comp.params.items():
            scaled[v] = num
        total = MultiPoly.zero(())
        for e, c in g.terms.items():
            term = MultiPoly.const(c)
            used = 0
            for i, v in enumerate(g.variables):
                if not e[i]:
                    continue
                if v in scaled:
                    term = term * scaled[v] ** e[i]
                    used += e[i]
                else:
                    term = term * MultiPoly.var(v, (v,)) ** e[i]
            term = term * comp.phi_prime ** (degree_budget - used)
            total = total + term
        if total.degree(x0) >= comp.phi.degree(x0):
            total = polyring._prem(total, comp.phi, x0)
        if not total.is_zero:
            return False
    return True


def total_resolvente(decomposition):
    """Product of all partial resolvents; 1 for the empty variety."""
    out = MultiPoly.const(1, decomposition.variables)
    for p in decomposition.parts:
        if p.codim == 0:
            continue
        out = out * p.resolvent
    return out
