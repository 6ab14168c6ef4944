"""Field axioms and known constants of the cyclotomic arithmetic layer."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from equiops.cyclotomic import (Cyclo, DEFAULT_ORDER, imag_unit, rational,
                                sqrt2, sqrt3, sqrt5, zeta)

ORDER = DEFAULT_ORDER


def small_cyclo():
    return st.builds(
        lambda pairs: sum((zeta(ORDER, p % ORDER) * rational(Fraction(a, b))
                           for p, a, b in pairs),
                          rational(0)),
        st.lists(st.tuples(st.integers(0, ORDER - 1),
                           st.integers(-9, 9),
                           st.integers(1, 9)),
                 max_size=4))


@settings(max_examples=60, deadline=None)
@given(small_cyclo(), small_cyclo(), small_cyclo())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + rational(0) == a
    assert a * rational(1) == a
    assert (a - a).is_zero


@settings(max_examples=40, deadline=None)
@given(small_cyclo())
def test_multiplicative_inverse(a):
    if a.is_zero:
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert (a * a.inverse() == rational(1))


def test_primitive_root_order():
    z = zeta(ORDER)
    acc = z
    for _ in range(ORDER - 1):
        assert acc != rational(1)
        acc = acc * z
    assert acc == rational(1)


def test_surd_constants():
    assert sqrt2() * sqrt2() == rational(2)
    assert sqrt3() * sqrt3() == rational(3)
    assert sqrt5() * sqrt5() == rational(5)
    i = imag_unit()
    assert i * i == rational(-1)


def test_rational_detection():
    assert (sqrt2() * sqrt2()).is_rational
    assert (sqrt2() * sqrt2()).as_fraction() == Fraction(2)
    assert not sqrt2().is_rational


def test_roots_of_unity():
    assert zeta(ORDER, 30).is_root_of_unity()
    assert (zeta(ORDER, 24) ** 5) == rational(1)  # primitive 5th root
    assert not (sqrt2()).is_root_of_unity()


def test_complex_embedding():
    import cmath
    z = complex(zeta(ORDER))
    assert abs(z - cmath.exp(2j * cmath.pi / ORDER)) < 1e-12
    assert abs(complex(sqrt2()) - 2 ** 0.5) < 1e-12
