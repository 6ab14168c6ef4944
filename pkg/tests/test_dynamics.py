"""Newton/Halley maps, root finding, cycle classification."""

import cmath
import random

import pytest

from equiops.dynamics import (CxMap, classify_multiplier, cycle_report,
                              iteration_map, poly_roots)
from equiops.moebius import moebius_apply
from equiops.operators import phi_operator
from equiops.parsing import parse_poly, parse_ratfn
from equiops.properties import random_moebius, random_ratfn
from equiops.ratfn import RatFn


def test_newton_map():
    assert iteration_map(parse_poly("z^2 - 1"), "newton") == parse_ratfn(
        "(z^2 + 1)/(2*z)")


def test_halley_map():
    assert iteration_map(parse_poly("z^2 - 1"), "halley") == parse_ratfn(
        "(z^3 + 3*z)/(3*z^2 + 1)")


def test_halley_is_phi_operator_of_fprime_over_fsq():
    for text in ("z^2 - 1", "z^3 + 2*z - 7"):
        f = parse_poly(text)
        from equiops.poly import Poly
        alpha = RatFn(f.derivative(), f * f)
        assert iteration_map(f, "halley") == phi_operator(alpha, 2)


def test_constant_rejected():
    with pytest.raises(ValueError):
        iteration_map(parse_poly("5"), "newton")


def test_cxmap_matches_exact_evaluation():
    rng = random.Random(12)
    from equiops.cyclotomic import rational
    for _ in range(5):
        f = random_ratfn(rng, 5)
        cmap = CxMap(f)
        for point in (2, 3, -5, 7):
            exact = complex(f(rational(point)))
            approx = cmap(complex(point))
            assert abs(approx - exact) <= 1e-12 * max(1.0, abs(exact))


def test_poly_roots_simple():
    roots = sorted(poly_roots(parse_poly("z^2 + 1")), key=lambda z: z.imag)
    assert abs(roots[0] + 1j) < 1e-9 and abs(roots[1] - 1j) < 1e-9


def test_poly_roots_v5_structure():
    # z(z^10 + 11 z^5 - 1): 0 plus ten roots on two circles |z|^5 = roots
    # of x^2 + 11x - 1
    roots = poly_roots(parse_poly("z^11 + 11*z^6 - z"), tol=1e-10)
    assert len(roots) == 11
    zero_like = [z for z in roots if abs(z) < 1e-9]
    assert len(zero_like) == 1
    x1 = (-11 + 125 ** 0.5) / 2
    x2 = (-11 - 125 ** 0.5) / 2
    mags = {abs(x1) ** 0.2, abs(x2) ** 0.2}
    for z in roots:
        if z in zero_like:
            continue
        assert min(abs(abs(z) - m) for m in mags) < 1e-8


def test_poly_roots_deterministic():
    a = poly_roots(parse_poly("z^7 - 3*z^2 + 1"))
    b = poly_roots(parse_poly("z^7 - 3*z^2 + 1"))
    assert a == b


def test_newton_multiplier_at_double_root():
    newton = iteration_map(parse_poly("z^2 - 2*z + 1"), "newton")
    report = cycle_report(newton, [1.0 + 0j], 1, tol=1e-6)
    record = report.records[0]
    assert abs(abs(record.multiplier) - 0.5) < 1e-12
    assert record.classification == "attracting"


def test_halley_superattracting_fixed_points():
    halley = iteration_map(parse_poly("z^2 - 1"), "halley")
    report = cycle_report(halley, [1.0 + 0j, -1.0 + 0j], 1, tol=1e-10)
    assert report.passed
    assert all(r.classification == "superattracting" for r in report.records)


def test_classification_thresholds():
    assert classify_multiplier(0) == "superattracting"
    assert classify_multiplier(0.5) == "attracting"
    assert classify_multiplier(1.0) == "indifferent"
    assert classify_multiplier(1.5) == "repelling"


def test_conjugation_commutes_numerically():
    rng = random.Random(13)
    f = parse_ratfn("(z^2 + 1)/(2*z)")
    m = random_moebius(rng)
    conj = moebius_apply(m, f.compose(m.inverse().as_ratfn()))
    direct = CxMap(f)
    conjmap = CxMap(conj)
    mmap = CxMap(m.as_ratfn())
    z = 0.7 + 0.3j
    for _ in range(6):
        assert abs(conjmap(mmap(z)) - mmap(direct(z))) < 1e-8
        z = direct(z)


def test_report_text_format():
    halley = iteration_map(parse_poly("z^2 - 1"), "halley")
    report = cycle_report(halley, [1.0 + 0j], 1, tol=1e-10)
    text = report.text()
    assert "PASS" in text and "class=superattracting" in text
