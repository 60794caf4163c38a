"""Splitting algebra, resolvents, Galois groups, determinant identity."""

import itertools
from fractions import Fraction

import pytest

from kronecker.errors import DomainError
from kronecker.galois import (
    GaloisResult,
    SplittingAlgebra,
    galois_group,
    genus_disc_identity,
    resolvent_total_symmetric,
    splitting_algebra,
)
from kronecker.polyring import MultiPoly, UniPoly, parse_poly


def test_algebra_dimension_and_basis():
    alg = splitting_algebra(parse_poly("x^3 - 3*x - 1"))
    assert alg.dim == 6
    assert alg.basis == [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)]
    with pytest.raises(DomainError):
        splitting_algebra(UniPoly("x", [1] * 7))


def test_quadratic_reduction():
    # f = x^2 - c1 x + c2 with c1=3, c2=2: x1^2 reduces to 3 x1 - 2
    alg = splitting_algebra(UniPoly("x", [2, -3, 1]))
    x1 = MultiPoly.var("x1", alg.variables)
    assert alg.reduce(x1 * x1) == 3 * x1 - 2


def test_elementary_symmetric_functions_reproduce_coefficients():
    f = UniPoly("x", [-1, -3, 0, 1])  # x^3 - 3x - 1: e1=0, e2=-3, e3=1
    alg = splitting_algebra(f)
    assert alg.elementary_symmetric(1) == MultiPoly.const(0, alg.variables)
    assert alg.elementary_symmetric(2) == MultiPoly.const(-3, alg.variables)
    assert alg.elementary_symmetric(3) == MultiPoly.const(1, alg.variables)


def test_sum_of_roots_is_constant():
    alg = splitting_algebra(UniPoly("x", [-1, -3, 0, 1]))
    rs = alg.roots()
    total = rs[0] + rs[1] + rs[2]
    assert alg.reduce(total) == MultiPoly.const(0, alg.variables)


def test_resolvent_n2_first_root():
    r = resolvent_total_symmetric(UniPoly("x", [2, -3, 1]), (1, 0))
    assert r == UniPoly("x", [2, -3, 1])


def test_resolvent_n2_sum():
    r = resolvent_total_symmetric(UniPoly("x", [2, -3, 1]), (1, 1))
    assert r == UniPoly("x", [9, -6, 1])  # (X - 3)^2


def test_resolvent_degree_and_u_permutation_invariance():
    f = UniPoly("x", [-1, -3, 0, 1])
    base = resolvent_total_symmetric(f, (0, 1, 2))
    assert base.degree == 6
    for perm in itertools.permutations((0, 1, 2)):
        assert resolvent_total_symmetric(f, perm) == base


def test_resolvent_roots_are_weighted_root_sums():
    # f = (x-1)(x-2): roots 1, 2; u = (1, 2): values 1+4=5 and 2+2=4
    r = resolvent_total_symmetric(UniPoly("x", [2, -3, 1]), (1, 2))
    assert r == UniPoly("x", [20, -9, 1])  # (X-5)(X-4)


def test_cubic_cyclic():
    res = galois_group("x^3 - 3*x - 1")
    assert res.order == 3
    assert res.factor_pattern == [3, 3]
    assert res.group == [(1, 2, 3), (2, 3, 1), (3, 1, 2)]


def test_cubic_full_symmetric():
    res = galois_group("x^3 - x - 1")
    assert res.order == 6
    assert res.factor_pattern == [6]
    assert len(res.group) == 6


def test_quadratic():
    res = galois_group("x^2 - 2")
    assert res.order == 2
    assert res.group == [(1, 2), (2, 1)]


def test_quartic_klein_four():
    res = galois_group("x^4 + 1")
    assert res.order == 4
    assert res.factor_pattern == [4] * 6
    # identity plus the three double transpositions
    assert res.group == [(1, 2, 3, 4), (2, 1, 4, 3), (3, 4, 1, 2), (4, 3, 2, 1)]


def test_quartic_cyclic():
    res = galois_group("x^4 + x^3 + x^2 + x + 1")
    assert res.order == 4
    perms = [tuple(i - 1 for i in g) for g in res.group]
    # cyclic: a single generator of order 4
    orders = sorted(_perm_order(p) for p in perms)
    assert orders == [1, 2, 4, 4]


def test_quartic_s4():
    res = galois_group("x^4 + x + 1")
    assert res.order == 24
    assert res.factor_pattern == [24]


def _perm_order(p):
    n = len(p)
    e = tuple(range(n))
    q = p
    k = 1
    while q != e:
        q = tuple(p[q[i]] for i in range(n))
        k += 1
    return k


def test_group_closure_and_transitivity():
    for text in ("x^3 - 3*x - 1", "x^3 - x - 1", "x^4 + 1"):
        res = galois_group(text)
        perms = [tuple(i - 1 for i in g) for g in res.group]
        n = len(perms[0])
        assert tuple(range(n)) in perms
        for a in perms:
            for b in perms:
                assert tuple(a[b[i]] for i in range(n)) in perms
        orbit = {0}
        for _ in range(n):
            orbit |= {g[i] for g in perms for i in orbit}
        assert orbit == set(range(n))
        assert res.order * len(res.factor_pattern) == _factorial(n)


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def test_reducible_rejected():
    with pytest.raises(DomainError):
        galois_group("x^2 - 1")


def test_degree_cap():
    with pytest.raises(DomainError):
        galois_group("x^6 + x + 1")


def test_genus_disc_identity_n2():
    lhs, rhs, equal = genus_disc_identity(2)
    assert equal
    assert lhs == parse_poly("(x1-x2)*(x1-x2)", ["x1", "x2"])


def test_genus_disc_identity_n3():
    lhs, rhs, equal = genus_disc_identity(3)
    assert equal
    assert lhs.total_degree() == 18  # D^3, D of degree 6


def test_genus_disc_identity_range():
    with pytest.raises(DomainError):
        genus_disc_identity(4)


def test_genus_disc_specialization_23():
    """disc(x^3 - x - 1) = -23, so the n=3 identity specializes to (-23)^3."""
    from kronecker.polyring import discriminant

    d = discriminant(parse_poly("x^3 - x - 1"), "x").constant_value()
    assert d == -23
    _, _, equal = genus_disc_identity(3)
    assert equal
    assert d ** 3 == -12167
