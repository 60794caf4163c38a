"""Factorization by interpolation search and Kronecker substitution."""

import random
from fractions import Fraction

import pytest

from kronecker.errors import DomainError
from kronecker.factorization import (
    _modp_divmod,
    factor,
    factor_mod_p,
    factor_multivariate,
    factor_univariate,
    is_irreducible,
)
from kronecker.polyring import MultiPoly, UniPoly, parse_poly


def _multiset(fact):
    return sorted((str(f), m) for f, m in fact.factors)


# -- univariate ----------------------------------------------------------------


def test_difference_of_squares():
    fact = factor_univariate(parse_poly("x^2 - 1"))
    assert _multiset(fact) == [("x + 1", 1), ("x - 1", 1)]


def test_quartic_two_quadratics():
    fact = factor_univariate(parse_poly("x^4 + x^2 + 1"))
    assert _multiset(fact) == [("x^2 + x + 1", 1), ("x^2 - x + 1", 1)]


def test_cubic_irreducible():
    fact = factor_univariate(parse_poly("x^3 - x - 1"))
    assert _multiset(fact) == [("x^3 - x - 1", 1)]
    assert is_irreducible(parse_poly("x^3 - x - 1"))


def test_multiplicities_and_unit():
    fact = factor_univariate(parse_poly("-18*x^2 + 36*x - 18"))
    assert fact.unit == -18
    assert _multiset(fact) == [("x - 1", 2)]
    assert fact.expand() == parse_poly("-18*x^2 + 36*x - 18")


def test_rational_roots():
    fact = factor_univariate(parse_poly("6*x^2 - 5*x + 1"))
    assert _multiset(fact) == [("2*x - 1", 1), ("3*x - 1", 1)]


def test_rational_coefficients_fold_into_unit():
    fact = factor_univariate(parse_poly("1/2*x^2 - 1/2"))
    assert fact.unit == Fraction(1, 2)
    assert _multiset(fact) == [("x + 1", 1), ("x - 1", 1)]


def test_degree_cap():
    coeffs = [1] + [0] * 12 + [1]  # x^13 + 1 has an interpolation-search core beyond 12
    with pytest.raises(DomainError):
        factor_univariate(UniPoly("x", [-2] + [0] * 12 + [1]))


def test_zero_rejected():
    with pytest.raises(DomainError):
        factor_univariate(UniPoly("x", []))


# -- multivariate -----------------------------------------------------------------


def test_x2_minus_y2():
    fact = factor_multivariate(parse_poly("x^2 - y^2"))
    assert _multiset(fact) == [("x + y", 1), ("x - y", 1)]


def test_x2_plus_y2_irreducible():
    fact = factor_multivariate(parse_poly("x^2 + y^2"))
    assert _multiset(fact) == [("x^2 + y^2", 1)]


def test_constant():
    fact = factor_multivariate(parse_poly("6", ["x"]))
    assert fact.unit == 6 and fact.factors == []


def test_multivariate_with_content():
    fact = factor_multivariate(parse_poly("2*x^2*y - 2*y^3"))
    assert fact.unit == 2
    assert _multiset(fact) == sorted([("x - y", 1), ("x + y", 1), ("y", 1)])


def test_multivariate_square():
    fact = factor_multivariate(parse_poly("x^2 - 2*x*y + y^2"))
    assert _multiset(fact) == [("x - y", 2)]


def test_expansion_identity_random():
    rng = random.Random(23)
    seeds = [
        parse_poly("x - y"),
        parse_poly("x + y"),
        parse_poly("x + 1"),
        parse_poly("y - 2"),
        parse_poly("x^2 + y^2"),
        parse_poly("x*y + 1"),
        parse_poly("x^2 + x + 1"),
        parse_poly("x^2 - 2"),
    ]
    for _ in range(300):
        # pairs keep the Kronecker image inside what the divisor-tuple
        # search can exhaust quickly; triple products can explode
        parts = rng.sample(seeds, rng.randint(1, 2))
        unit = rng.choice([1, -1, 2, 3])
        prod = MultiPoly.const(unit)
        for p in parts:
            prod = prod * p
        fact = factor(prod)
        assert fact.expand() == prod


def test_factor_multiset_union_for_coprime():
    rng = random.Random(29)
    seeds = [
        parse_poly("x + 1"),
        parse_poly("x - 1"),
        parse_poly("x + 3"),
        parse_poly("x^2 + 1"),
        parse_poly("x^2 + x + 1"),
        parse_poly("x^2 - 2"),
    ]
    for _ in range(40):
        fs = rng.sample(seeds, 2)
        gs = [s for s in seeds if s not in fs][: rng.randint(1, 2)]
        f = fs[0] * fs[1]
        g = gs[0] * (gs[1] if len(gs) > 1 else MultiPoly.const(1))
        mf = _multiset(factor(f))
        mg = _multiset(factor(g))
        mfg = _multiset(factor(f * g))
        assert mfg == sorted(mf + mg)


# -- modulo p ------------------------------------------------------------------------


def test_mod5_splits():
    out = factor_mod_p(UniPoly("x", [1, 0, 1]), 5)
    assert [(list(map(int, f.coeffs)), m) for f, m in out.factors] == [
        ([2, 1], 1),
        ([3, 1], 1),
    ]


def test_mod3_irreducible():
    out = factor_mod_p(UniPoly("x", [1, 0, 1]), 3)
    assert [(f.degree, m) for f, m in out.factors] == [(2, 1)]


def test_mod2_square():
    out = factor_mod_p(UniPoly("x", [0, 0, 1]), 2)
    assert [(list(map(int, f.coeffs)), m) for f, m in out.factors] == [([0, 1], 2)]


def test_modp_rejects_bad_input():
    with pytest.raises(DomainError):
        factor_mod_p(UniPoly("x", [1, 2]), 4)
    with pytest.raises(DomainError):
        factor_mod_p(UniPoly("x", [1, 3]), 3)  # lc vanishes mod 3


def test_modp_degree_sum():
    rng = random.Random(31)
    for _ in range(60):
        p = rng.choice([2, 3, 5, 7, 11])
        coeffs = [rng.randrange(p) for _ in range(rng.randint(2, 6))] + [1]
        f = UniPoly("x", coeffs)
        out = factor_mod_p(f, p)
        assert sum(g.degree * m for g, m in out.factors) == f.degree


def test_dedekind_compatibility():
    """Rational factors reduce mod p to products of the mod-p factors."""
    from kronecker.polyring import discriminant

    rng = random.Random(37)
    candidates = [
        parse_poly("(x^2+x+1)*(x^2-2)"),
        parse_poly("(x-1)*(x^2+1)"),
        parse_poly("x^4 + x^2 + 1"),
        parse_poly("(x+2)*(x^2+x+1)"),
    ]
    for F in candidates:
        f = UniPoly.from_multipoly(F)
        disc = int(discriminant(F, "x").constant_value())
        for p in (5, 7, 11, 13):
            if disc % p == 0 or int(f.coeffs[-1]) % p == 0:
                continue
            modp = factor_mod_p(f, p)
            for g, _ in factor_univariate(F).factors:
                gp = tuple(int(c) % p for c in UniPoly.from_multipoly(g).coeffs)
                rem_deg = sum(1 for _ in gp)
                work = gp
                for h, m in modp.factors:
                    hh = tuple(int(c) for c in h.coeffs)
                    for _ in range(m):
                        quo, rem = _modp_divmod(work, hh, p)
                        if rem == () and quo:
                            work = quo
                assert len(work) == 1  # reduced to a constant
