"""Moebius action, equivariance checks, characters, cross-ratio."""

import random

import pytest

from equiops.cyclotomic import imag_unit, rational, zeta
from equiops.moebius import (Moebius, compose_after, cross_ratio,
                             equivariance_residual, form_character,
                             form_invariance_check, is_equivariant,
                             moebius_apply)
from equiops.parsing import parse_poly, parse_ratfn
from equiops.properties import random_moebius, random_ratfn
from equiops.ratfn import RatFn


def test_group_operations():
    rng = random.Random(5)
    m1 = random_moebius(rng)
    m2 = random_moebius(rng)
    f = random_ratfn(rng, 4)
    # action is contravariant in the argument slot
    assert compose_after(compose_after(f, m1), m2) == compose_after(f, m1 * m2)
    assert moebius_apply(m1, moebius_apply(m2, f)) == moebius_apply(m1 * m2, f)


def test_inverse_and_projective_equality():
    rng = random.Random(6)
    m = random_moebius(rng)
    ident = m * m.inverse()
    assert ident.is_projectively(Moebius.identity())
    scaled = Moebius(m.a * rational(3), m.b * rational(3),
                     m.c * rational(3), m.d * rational(3))
    assert scaled.is_projectively(m)


def test_klein_map_is_equivariant_for_icosahedral_generator():
    k = parse_ratfn("(z^11 + 66*z^6 - 11*z)/(-11*z^10 - 66*z^5 + 1)")
    rot = Moebius(zeta(120, 12), rational(0), rational(0),
                  zeta(120, 120 - 12))
    assert is_equivariant(k, rot)
    assert equivariance_residual(k, rot).is_zero


def test_non_equivariant_witness():
    f = parse_ratfn("z^2 + 1")
    rot = Moebius(zeta(120, 12), rational(0), rational(0),
                  zeta(120, 120 - 12))
    assert not is_equivariant(f, rot)


def test_form_character_discovery():
    # z^4 + 1 under z -> iz is invariant; z^3 picks up character i^3... use
    # the weight convention of the package: chi is discovered, then checked.
    m = Moebius(imag_unit(), rational(0), rational(0), rational(1))
    p = parse_poly("z^4 + 1")
    chi = form_character(p, -4, m)
    ok, witness = form_invariance_check(p, -4, chi, m)
    assert ok, witness


def test_cross_ratio_values():
    # (a-c)(b-d) / ((a-d)(b-c)) on constants
    v = cross_ratio(rational(0), rational(1), rational(2), rational(3))
    assert v == RatFn.constant(rational(4) / rational(3))
    # with infinity the ratio degenerates to (a-c)/(b-c)
    v = cross_ratio(rational(0), rational(1), rational(2), "inf")
    assert v == RatFn.constant(rational(2))


def test_cross_ratio_moebius_invariance():
    rng = random.Random(8)
    m = random_moebius(rng)
    fs = [random_ratfn(rng, 3) for _ in range(4)]
    before = cross_ratio(*fs)
    after = cross_ratio(*[moebius_apply(m, f) for f in fs])
    assert before == after


def test_cross_ratio_degenerate():
    with pytest.raises(Exception):
        cross_ratio(rational(1), rational(1), rational(1), rational(1))
