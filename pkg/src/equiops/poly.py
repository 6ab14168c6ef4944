"""Univariate polynomials over a cyclotomic field.

Coefficient lists are stored low degree first with no trailing zeros.
GCDs use an integer primitive-remainder sequence when every coefficient
is rational (the common case) and monic Euclid with content control
otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

from .cyclotomic import DEFAULT_ORDER, Cyclo, rational


class Poly:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=DEFAULT_ORDER):
        cs = []
        for c in coeffs:
            if isinstance(c, Cyclo):
                order = c.order
                cs.append(c)
            else:
                cs.append(Fraction(c))
        cs = [c if isinstance(c, Cyclo) else rational(c, order) for c in cs]
        while cs and cs[-1].is_zero:
            cs.pop()
        self.coeffs = tuple(cs)
        self.order = order

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero(order=DEFAULT_ORDER):
        return Poly((), order)

    @staticmethod
    def one(order=DEFAULT_ORDER):
        return Poly((1,), order)

    @staticmethod
    def x(order=DEFAULT_ORDER):
        return Poly((0, 1), order)

    @staticmethod
    def constant(c, order=DEFAULT_ORDER):
        return Poly((c,), order)

    @staticmethod
    def monomial(degree, coeff=1, order=DEFAULT_ORDER):
        return Poly([0] * degree + [coeff], order)

    # -- basic queries ------------------------------------------------

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_constant(self):
        return len(self.coeffs) <= 1

    @property
    def leading(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self):
        return not self.is_zero and self.leading == 1

    def constant_value(self):
        if not self.is_constant:
            raise ValueError("not a constant polynomial")
        return self.coeffs[0] if self.coeffs else rational(0, self.order)

    def is_rational_poly(self):
        return all(c.is_rational for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            other = Poly.constant(other, self.order)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, Cyclo)):
            return Poly.constant(other, self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out, self.order)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly.zero(self.order)
        if len(a) == 1:
            c = a[0]
            return Poly([c * x for x in b], self.order)
        if len(b) == 1:
            c = b[0]
            return Poly([c * x for x in a], self.order)
        out = [rational(0, self.order)] * (len(a) + len(b) - 1)
        nz_b = [(j, bj) for j, bj in enumerate(b) if not bj.is_zero]
        for i, ai in enumerate(a):
            if not ai.is_zero:
                for j, bj in nz_b:
                    out[i + j] = out[i + j] + ai * bj
        return Poly(out, self.order)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c):
        return self * Poly.constant(c, self.order)

    def shift_degree(self, k):
        """Multiply by z^k."""
        if self.is_zero:
            return self
        zero = rational(0, self.order)
        return Poly((zero,) * k + self.coeffs, self.order)

    def divmod(self, other):
        """Quotient and remainder; requires other nonzero."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Poly.zero(self.order), self
        inv_lead = other.leading.inverse()
        rem = list(self.coeffs)
        db = other.degree
        q = [rational(0, self.order)] * (len(rem) - db)
        bco = other.coeffs
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if not c.is_zero:
                c = c * inv_lead
                q[i - db] = c
                for j, bj in enumerate(bco):
                    if not bj.is_zero:
                        rem[i - db + j] = rem[i - db + j] - c * bj
        return Poly(q, self.order), Poly(rem[:db], self.order)

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError("division is not exact")
        return q

    # -- calculus, evaluation -----------------------------------------

    def derivative(self):
        return Poly([c * i for i, c in enumerate(self.coeffs)][1:], self.order)

    def __call__(self, x):
        """Horner evaluation at a Cyclo/Fraction/int/complex or Poly."""
        if isinstance(x, Poly):
            acc = Poly.zero(self.order)
            for c in reversed(self.coeffs):
                acc = acc * x + Poly.constant(c, self.order)
            return acc
        if isinstance(x, complex):
            acc = 0j
            for c in reversed(self.coeffs):
                acc = acc * x + complex(c)
            return acc
        acc = rational(0, self.order)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def taylor_shift(self, p):
        """Coefficients of self(z + p)."""
        acc = Poly.zero(self.order)
        zp = Poly((p, 1), self.order)
        for c in reversed(self.coeffs):
            acc = acc * zp + Poly.constant(c, self.order)
        return acc

    def reversed_coeffs(self, degree=None):
        """z^d * self(1/z) for d = degree (default the polynomial degree)."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        zero = rational(0, self.order)
        cs = list(reversed(self.coeffs)) + [zero] * (d - self.degree)
        return Poly(cs, self.order)

    def compose_mobius(self, a, b, c, d):
        """Numerator of self((a z + b)/(c z + d)); denominator is (c z + d)^degree."""
        if self.is_zero:
            return self
        den = Poly((d, c), self.order)
        num = Poly((b, a), self.order)
        deg = self.degree
        den_pows = [Poly.one(self.order)]
        for _ in range(deg):
            den_pows.append(den_pows[-1] * den)
        acc = Poly.constant(self.coeffs[-1], self.order)
        for i in range(deg - 1, -1, -1):
            acc = acc * num
            ci = self.coeffs[i]
            if not ci.is_zero:
                acc = acc + den_pows[deg - i].scale(ci)
        return acc

    # -- normalization, gcd -------------------------------------------

    def monic(self):
        if self.is_zero or self.is_monic:
            return self
        inv = self.leading.inverse()
        return Poly([c * inv for c in self.coeffs], self.order)

    def rational_content_normalized(self):
        """Divide by a positive rational making integer data small; zero stays zero."""
        if self.is_zero:
            return self
        num_g = 0
        den_l = 1
        for c in self.coeffs:
            for n in c.num:
                num_g = _int_gcd(num_g, n)
            den_l = den_l * c.den // _int_gcd(den_l, c.den)
        if num_g == 0:
            return self
        factor = Fraction(den_l, num_g)
        if factor == 1:
            return self
        return Poly([c * factor for c in self.coeffs], self.order)

    def gcd(self, other):
        a, b = self, other
        if a.is_zero:
            return b.monic()
        if b.is_zero:
            return a.monic()
        if a.is_rational_poly() and b.is_rational_poly():
            return _gcd_rational(a, b)
        if a.degree < b.degree:
            a, b = b, a
        a = a.rational_content_normalized()
        b = b.rational_content_normalized()
        while not b.is_zero:
            b = b.monic()
            _, r = a.divmod(b)
            a, b = b, r.rational_content_normalized()
        return a.monic()

    def squarefree_decomposition(self):
        """Yun's algorithm: list of (factor, multiplicity), factors monic squarefree."""
        if self.degree < 1:
            return []
        p = self.monic()
        dp = p.derivative()
        a = p.gcd(dp)
        out = []
        b = p.exact_div(a)
        c = dp.exact_div(a)
        i = 1
        while b.degree >= 1:
            d = c - b.derivative()
            f = b.gcd(d)
            if f.degree >= 1:
                out.append((f, i))
            b = b.exact_div(f)
            c = d.exact_div(f)
            i += 1
        return out

    def is_squarefree(self):
        return self.degree >= 1 and self.gcd(self.derivative()).degree == 0

    def __repr__(self):
        from .parsing import poly_literal

        return poly_literal(self)


def _to_int_poly(p):
    """Primitive integer coefficient list proportional to p."""
    den_l = 1
    for c in p.coeffs:
        den_l = den_l * c.den // _int_gcd(den_l, c.den)
    ints = [c.num[0] * (den_l // c.den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = _int_gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _gcd_rational(a, b):
    """Primitive PRS over the integers for rational-coefficient polynomials."""
    fa, fb = _to_int_poly(a), _to_int_poly(b)
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while fb:
        rem = list(fa)
        db = len(fb) - 1
        lead_b = fb[-1]
        while rem and len(rem) - 1 >= db:
            lr = rem[-1]
            dr = len(rem) - 1
            rem = [v * lead_b for v in rem]
            for j in range(db + 1):
                rem[dr - db + j] -= lr * fb[j]
            while rem and rem[-1] == 0:
                rem.pop()
        g = 0
        for v in rem:
            g = _int_gcd(g, v)
        if g > 1:
            rem = [v // g for v in rem]
        fa, fb = fb, rem
    g = 0
    for v in fa:
        g = _int_gcd(g, v)
    if g > 1:
        fa = [v // g for v in fa]
    if fa and fa[-1] < 0:
        fa = [-v for v in fa]
    order = a.order
    out = Poly([Fraction(v) for v in fa], order)
    return out.monic()
