"""Exact polynomial arithmetic: parser, gcd, resultants, substitution."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kronecker.errors import DomainError, ParseError
from kronecker.polyring import (
    MultiPoly,
    UniPoly,
    content_primitive,
    discriminant,
    gcd,
    kronecker_inverse,
    kronecker_substitute,
    parse_poly,
    poly_matrix_det,
    resultant,
    sylvester_matrix,
)


def rand_poly(rng, nvars=2, max_deg=3, nterms=4, coeff=9):
    names = ("x", "y", "z")[:nvars]
    terms = {}
    for _ in range(nterms):
        e = tuple(rng.randint(0, max_deg) for _ in range(nvars))
        c = rng.randint(-coeff, coeff)
        if c:
            terms[e] = terms.get(e, 0) + c
    return MultiPoly(names, {e: Fraction(c) for e, c in terms.items() if c})


# -- parsing ----------------------------------------------------------------


def test_parse_zero():
    assert parse_poly("0").is_zero


def test_parse_simple():
    p = parse_poly("x^2 - 1")
    assert p.terms == {(2,): Fraction(1), (0,): Fraction(-1)}


def test_parse_product_expands():
    assert parse_poly("(x+y)*(x-y)") == parse_poly("x^2 - y^2")


def test_parse_rational_literal():
    p = parse_poly("1/2*x + 3/4")
    assert p.terms == {(1,): Fraction(1, 2), (0,): Fraction(3, 4)}


def test_parse_syntax_error_position():
    with pytest.raises(ParseError) as err:
        parse_poly("x + * y")
    assert err.value.position == 4


def test_parse_unknown_variable():
    with pytest.raises(ParseError):
        parse_poly("x + q", variables=("x", "y"))


def test_parse_exponent_overflow():
    with pytest.raises(ParseError):
        parse_poly(f"x^{2**31}")


def test_juxtaposition_is_not_multiplication():
    with pytest.raises(ParseError):
        parse_poly("2 x")


def test_variable_order_first_appearance():
    assert parse_poly("y + x").variables == ("y", "x")
    assert parse_poly("y + x", variables=("x", "y")).variables == ("x", "y")


def test_print_parse_roundtrip_corpus():
    corpus = [
        "0",
        "x^2 - 1",
        "(x+y)*(x-y)",
        "-x^3 + 2*x*y - 7",
        "1/3*x^2*y^3 - 5/2",
        "x*y*z - x - y - z + 1",
        "-1",
        "x^2 + 2*x + 1",
    ]
    for text in corpus:
        p = parse_poly(text)
        assert parse_poly(str(p)) == p


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.tuples(
            st.tuples(st.integers(0, 5), st.integers(0, 5)),
            st.fractions(min_value=-50, max_value=50),
        ),
        min_size=0,
        max_size=6,
    )
)
def test_print_parse_roundtrip_random(items):
    terms = {}
    for e, c in items:
        terms[e] = terms.get(e, Fraction(0)) + c
    p = MultiPoly(("x", "y"), {e: c for e, c in terms.items() if c})
    assert parse_poly(str(p), variables=("x", "y")) == p


# -- content and primitive part ----------------------------------------------


def test_content_linear():
    c, prim = content_primitive(parse_poly("2*x + 4"))
    assert c == 2 and prim == parse_poly("x + 2")


def test_content_bivariate():
    c, prim = content_primitive(parse_poly("6*x^2*y - 9*y"))
    assert c == 3 and prim == parse_poly("2*x^2*y - 3*y")


def test_content_zero_convention():
    c, prim = content_primitive(parse_poly("0"))
    assert c == 0 and prim.is_zero


def test_content_gauss_multiplicative():
    rng = random.Random(11)
    for _ in range(120):
        p = rand_poly(rng)
        q = rand_poly(rng)
        if p.is_zero or q.is_zero:
            continue
        cp = content_primitive(p)[0]
        cq = content_primitive(q)[0]
        cpq = content_primitive(p * q)[0]
        assert cpq == cp * cq


# -- gcd ----------------------------------------------------------------------


def test_gcd_monomials():
    assert gcd(parse_poly("x*z"), parse_poly("y*z")) == parse_poly("z")


def test_gcd_explicit_factor():
    assert gcd(parse_poly("x^2-1"), parse_poly("x-1")) == parse_poly("x - 1")


def test_gcd_with_zero():
    p = parse_poly("-3*x + 3")
    g = gcd(p, MultiPoly.zero(("x",)))
    assert g == parse_poly("x - 1")  # normalized primitive, positive lc
    assert gcd(MultiPoly.zero(()), MultiPoly.zero(())).is_zero


def test_gcd_divides_both_ways():
    rng = random.Random(5)
    checked = 0
    for _ in range(500):
        p = rand_poly(rng, nvars=rng.randint(1, 3), max_deg=2, nterms=3, coeff=6)
        q = rand_poly(rng, nvars=rng.randint(1, 3), max_deg=2, nterms=3, coeff=6)
        common = rand_poly(rng, nvars=2, max_deg=2, nterms=2, coeff=3)
        if not common.is_zero:
            p = p * common
            q = q * common
        g = gcd(p, q)
        if g.is_zero:
            continue
        for f in (p, q):
            quo = f.div_exact(g)
            assert quo is not None
            assert g * quo == f
        checked += 1
    assert checked >= 450


# -- resultants -----------------------------------------------------------------


def test_resultant_linear():
    p = parse_poly("x - a")
    q = parse_poly("x - b")
    assert resultant(p, q, "x") == parse_poly("a - b")


def test_resultant_eliminates():
    assert resultant(parse_poly("x^2+y^2-1"), parse_poly("y", ["y"]), "y") == parse_poly(
        "x^2 - 1"
    )


def test_resultant_shared_factor_vanishes():
    p = parse_poly("x^2 + 1")
    assert resultant(p, p, "x").is_zero


def test_resultant_constant_convention():
    assert resultant(parse_poly("5", ["x"]), parse_poly("x^3 - 2"), "x") == 125
    with pytest.raises(DomainError):
        resultant(parse_poly("3", ["x"]), parse_poly("4", ["x"]), "x")


def test_resultant_swap_sign():
    rng = random.Random(13)
    for _ in range(40):
        p = rand_poly(rng, nvars=2, max_deg=3, nterms=3)
        q = rand_poly(rng, nvars=2, max_deg=3, nterms=3)
        if p.degree("x") < 1 or q.degree("x") < 1:
            continue
        lhs = resultant(p, q, "x")
        rhs = resultant(q, p, "x")
        sign = (-1) ** (p.degree("x") * q.degree("x"))
        assert lhs == rhs * sign


def test_resultant_is_sylvester_det():
    p = parse_poly("2*x^2 + y")
    q = parse_poly("x^3 - y*x + 1")
    assert resultant(p, q, "x") == poly_matrix_det(sylvester_matrix(p, q, "x"))


# -- discriminant -----------------------------------------------------------------


def test_disc_quadratic_formula():
    assert discriminant(parse_poly("x^2 + b*x + c", ["x", "b", "c"]), "x") == parse_poly(
        "b^2 - 4*c", ["b", "c"]
    )


def test_disc_23():
    assert discriminant(parse_poly("x^3 - x - 1"), "x") == -23


def test_disc_double_root():
    assert discriminant(parse_poly("x^2"), "x").is_zero


def test_disc_degree_zero_error():
    with pytest.raises(DomainError):
        discriminant(parse_poly("5", ["x"]), "x")


def test_disc_against_root_differences():
    # (x-1)(x-2)(x-4): disc = prod (ri - rj)^2 = 1*9*4 = 36
    p = parse_poly("(x-1)*(x-2)*(x-4)")
    assert discriminant(p, "x") == 36


# -- Kronecker substitution ---------------------------------------------------------


def test_substitute_basic():
    u, codec = kronecker_substitute(parse_poly("x + y"), 2)
    assert u == UniPoly("x", [0, 1, 1])


def test_substitute_xy():
    u, codec = kronecker_substitute(parse_poly("x*y"), 3)
    assert u == UniPoly("x", [0, 0, 0, 0, 1])
    assert kronecker_inverse(u, codec) == parse_poly("x*y")


def test_substitute_requires_large_base():
    with pytest.raises(DomainError):
        kronecker_substitute(parse_poly("x^3 + y"), 3)


def test_substitute_roundtrip_random():
    rng = random.Random(17)
    for _ in range(500):
        p = rand_poly(rng, nvars=rng.randint(1, 3), max_deg=3, nterms=4)
        if p.is_zero:
            continue
        g = max(p.degree(v) for v in p.variables) + rng.randint(1, 3)
        u, codec = kronecker_substitute(p, g)
        assert kronecker_inverse(u, codec) == p


# -- misc structures ---------------------------------------------------------------


def test_exact_division_detects_failure():
    p = parse_poly("x^2 + 1")
    q = parse_poly("x + 1")
    assert p.div_exact(q) is None
    assert (q * q).div_exact(q) == q


def test_canonical_print_order_is_graded_lex():
    p = parse_poly("y^3 + x^2*y + x", variables=("x", "y"))
    assert str(p) == "x^2*y + y^3 + x"


def test_eval_and_derivative():
    p = parse_poly("x^2*y - 3*y")
    assert p.eval_at({"x": 2, "y": 5}) == 5
    assert p.derivative("x") == parse_poly("2*x*y")
