"""Polynomial and rational-function arithmetic."""

import random

import pytest

from equiops.cyclotomic import rational, sqrt2
from equiops.parsing import parse_poly, parse_ratfn
from equiops.poly import Poly
from equiops.ratfn import RatFn


def rand_poly(rng, deg):
    coeffs = [rational(rng.randint(-5, 5)) for _ in range(deg + 1)]
    coeffs[-1] = rational(rng.choice([1, 2, -1]))
    return Poly(coeffs)


def test_poly_divmod_roundtrip():
    rng = random.Random(1)
    for _ in range(20):
        a = rand_poly(rng, rng.randint(0, 6))
        b = rand_poly(rng, rng.randint(1, 4))
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.is_zero or r.degree < b.degree


def test_poly_gcd_divides():
    rng = random.Random(2)
    for _ in range(10):
        g = rand_poly(rng, rng.randint(1, 3))
        a = g * rand_poly(rng, 2)
        b = g * rand_poly(rng, 2)
        d = a.gcd(b)
        assert (a % d).is_zero and (b % d).is_zero
        assert d.degree >= g.degree


def test_ratfn_reduced_and_monic():
    f = parse_ratfn("(2*z^2 - 2)/(4*z - 4)")
    assert f.den.is_monic
    assert f == parse_ratfn("(z + 1)/2")


def test_ratfn_field_ops():
    f = parse_ratfn("(z^2 - 1)/z")
    g = parse_ratfn("1/(z + 2)")
    assert (f + g) - g == f
    assert (f * g) / g == f
    assert f * f.inverse() == RatFn.constant(rational(1))


def test_ratfn_compose():
    f = parse_ratfn("z^2")
    g = parse_ratfn("(z + 1)/(z - 1)")
    h = f.compose(g)
    assert h == parse_ratfn("(z + 1)^2/(z - 1)^2")


def test_derivative_quotient_rule():
    f = parse_ratfn("(z^3 + 1)/(z - 2)")
    g = parse_ratfn("z^2 + 3")
    assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


def test_taylor_coefficients():
    f = parse_ratfn("(z^2 - 1)/z")
    coeffs = f.taylor(rational(1), 5)
    expected = [0, 2, -1, 1, -1]
    assert [c for c in coeffs] == [rational(v) for v in expected]


def test_evaluate_at_infinity():
    f = parse_ratfn("(3*z^2 + 1)/(z^2 - 5)")
    assert f.eval_at_infinity_symbol() == rational(3)
    g = parse_ratfn("z/(z^2+1)")
    assert g.eval_at_infinity_symbol() == rational(0)


def test_infinity_arithmetic_guard():
    inf = RatFn.infinity()
    assert inf.is_infinity
    with pytest.raises(Exception):
        inf + inf


def test_cyclotomic_coefficients():
    p = parse_poly("z^4 - 2*(zeta^15+zeta^105)*z")
    root_scale = sqrt2()
    assert p.coeffs[1] == -(root_scale + root_scale)
