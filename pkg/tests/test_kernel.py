"""The compiled and pure kernels must agree bit for bit."""

import random
from fractions import Fraction

import pytest

from kronecker._kernel import IMPL
from kronecker._kernel import pure

try:
    from kronecker._kernel import fast
except ImportError:
    fast = None


def random_terms(rng, nvars, nterms, rational=False):
    out = {}
    for _ in range(nterms):
        e = tuple(rng.randrange(0, 5) for _ in range(nvars))
        num = rng.randint(-99, 99)
        den = rng.randint(1, 12) if rational else 1
        if num:
            out[e] = Fraction(num, den)
    return out


@pytest.mark.skipif(fast is None, reason="compiled kernel not built")
def test_mul_terms_agree():
    rng = random.Random(7)
    for _ in range(200):
        nvars = rng.randint(1, 3)
        a = random_terms(rng, nvars, rng.randint(1, 8), rational=rng.random() < 0.4)
        b = random_terms(rng, nvars, rng.randint(1, 8), rational=rng.random() < 0.4)
        if not a or not b:
            continue
        assert pure.mul_terms(a, b) == fast.mul_terms(a, b)


@pytest.mark.skipif(fast is None, reason="compiled kernel not built")
def test_add_scaled_agree():
    rng = random.Random(8)
    for _ in range(200):
        nvars = rng.randint(1, 3)
        a = random_terms(rng, nvars, rng.randint(1, 8), rational=True)
        b = random_terms(rng, nvars, rng.randint(1, 8), rational=True)
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        assert pure.add_scaled_terms(a, b, c) == fast.add_scaled_terms(a, b, c)


def test_mul_is_convolution():
    a = {(1, 0): Fraction(2)}
    b = {(0, 1): Fraction(3), (1, 0): Fraction(-2)}
    assert pure.mul_terms(a, b) == {(1, 1): Fraction(6), (2, 0): Fraction(-4)}


def test_cancellation_drops_zero():
    a = {(0,): Fraction(1), (1,): Fraction(1)}
    b = {(0,): Fraction(-1), (1,): Fraction(1)}
    # (1+x)(x-1) = x^2 - 1
    assert pure.mul_terms(a, b) == {(2,): Fraction(1), (0,): Fraction(-1)}


def test_impl_reports_name():
    assert IMPL in ("pure", "fast")
