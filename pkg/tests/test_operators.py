"""Differential operators: Schwarzian/D duality, phi-operators, brackets,
deformations and period residues."""

import random
from fractions import Fraction

import pytest

from equiops.cyclotomic import rational
from equiops.operators import (FormCoeff, d_operator, dd_deformation_h,
                               deform_corollary, general_binomial,
                               klein_vector_field, period_residues,
                               phi_biweight, phi_operator, pre_schwarzian,
                               rankin_cohen, schwarzian)
from equiops.parsing import parse_poly, parse_ratfn
from equiops.poly import Poly
from equiops.properties import (check_cocycle, check_critical_identity,
                                check_dd_identity, check_duality,
                                check_equivariance, check_inversion,
                                check_ramification, random_moebius,
                                random_poly, random_ratfn)
from equiops.ratfn import RatFn

RNG_SEED = 20260826


def test_schwarzian_of_square():
    assert schwarzian(parse_ratfn("z^2")) == parse_ratfn("3/(4*z^2)")


def test_schwarzian_vanishes_exactly_on_moebius():
    rng = random.Random(1)
    m = random_moebius(rng)
    assert schwarzian(m.as_ratfn()).is_zero
    f = random_ratfn(rng, 4)
    assert not schwarzian(f).is_zero


def test_d_operator_examples():
    assert d_operator(parse_ratfn("z^2")) == parse_ratfn("-3*z^2")
    deg = d_operator(parse_ratfn("z"))
    assert deg.degenerate and deg.is_infinity


def test_phi_operator_klein():
    v5 = parse_poly("z^11 + 11*z^6 - z")
    k = phi_operator(RatFn(v5, Poly.one(v5.order)), -12)
    assert k == parse_ratfn(
        "(z^11 + 66*z^6 - 11*z)/(-11*z^10 - 66*z^5 + 1)")


def test_phi_biweight_matches_vector_field():
    v5 = parse_poly("z^11 + 11*z^6 - z")
    zero = Poly.zero(v5.order)
    assert klein_vector_field(v5, 12) == phi_biweight(
        RatFn(v5, Poly.one(v5.order)), RatFn(zero, Poly.one(v5.order)), -12)


def test_general_binomial_negative():
    # falling factorial: (-6)(-7)/2
    assert general_binomial(Fraction(-6), 2) == Fraction(21)
    assert general_binomial(Fraction(3), 5) == 0


def test_rankin_cohen_bracket_example():
    v4 = parse_ratfn("z^5 - z")
    bracket = rankin_cohen(v4, -6, v4, -6, 2)
    vv = parse_ratfn("30*(z^5 - z)*(20*z^3) - 25*(5*z^4 - 1)^2")
    assert bracket == vv


def test_identities_on_seeded_samples():
    rng = random.Random(RNG_SEED)
    for _ in range(5):
        f = random_ratfn(rng, 5)
        w = random_ratfn(rng, 3)
        m = random_moebius(rng)
        h = RatFn(random_poly(rng, 2), random_poly(rng, 1))
        assert check_duality(f)[0]
        assert check_cocycle(f, w)[0]
        assert check_equivariance(f, m)[0]
        assert check_dd_identity(f)[0]
        assert check_inversion(f, h)[0]
        assert check_ramification(f)[0]
        assert check_critical_identity(random_poly(rng, 4), -6)[0]


def test_dd_deformation_h_formula():
    # H = -2 S^2 / X(S) makes D(Df) = f + fdot/(H + phi)
    f = parse_ratfn("(z^3 + z)/(z - 2)")
    s = schwarzian(f)
    assert dd_deformation_h(f) == (s * s * (-2)) / s.derivative()


def test_deform_corollary_endpoints():
    f = parse_ratfn("z^3 + z")
    z = RatFn.x(f.order)
    zero = RatFn.constant(rational(0))
    assert deform_corollary(f, z, zero) == d_operator(f)


def test_ramification_not_globally_preserved():
    # f = z^3 + z: the dual gains critical points at the zeros of S, so
    # flat divisor equality fails while support agreement holds.
    from equiops.divisors import ramification_divisor
    f = parse_ratfn("z^3 + z")
    fhat = d_operator(f)
    rf = ramification_divisor(f)
    rdf = ramification_divisor(fhat)
    assert rf != rdf
    assert rf.agrees_with_on_support(rdf)


def test_period_residues_examples():
    assert [(p.data, v.as_fraction()) for p, v in period_residues(
        parse_ratfn("z^2"), parse_ratfn("-3*z^2"))] == [(rational(0), 1)]
    assert [(p.data, v.as_fraction()) for p, v in period_residues(
        parse_ratfn("z^3"), parse_ratfn("-2*z^3"))] == [(rational(0), 2)]
    assert period_residues(parse_ratfn("z"), parse_ratfn("z + 1")) == []


def test_period_residues_are_integers():
    rng = random.Random(RNG_SEED + 1)
    for _ in range(5):
        f = random_ratfn(rng, 4)
        fhat = d_operator(f)
        if fhat.degenerate:
            continue
        for place, value in period_residues(f, fhat):
            assert value.is_rational
            assert value.as_fraction().denominator == 1


def test_pre_schwarzian_constant_rejected():
    with pytest.raises(ValueError):
        pre_schwarzian(RatFn.constant(rational(5)))
