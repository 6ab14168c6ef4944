"""Differential operators for rational maps: pre-Schwarzian, Schwarzian,
the D operator and its deformations, the phi-operator family, Rankin-Cohen
brackets, Klein's vector-field construction, and period residues.

Every operator is relative to a meromorphic 1-form theta = alpha dz with
dual vector field X = (1/alpha) d/dz; the plain-dz versions are the
default theta.  Dots in formulas always mean X-derivatives.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import DEFAULT_ORDER, Cyclo, rational
from .divisors import Divisor, Place
from .poly import Poly
from .ratfn import INF, RatFn


class FormCoeff:
    """Coefficient alpha of a 1-form theta = alpha dz; alpha != 0."""

    __slots__ = ("alpha",)

    def __init__(self, alpha):
        if not isinstance(alpha, RatFn):
            alpha = RatFn(alpha)
        if alpha.is_zero or alpha.is_infinity:
            raise ValueError("form coefficient must be a nonzero function")
        self.alpha = alpha

    @staticmethod
    def dz(order=DEFAULT_ORDER):
        return FormCoeff(RatFn.constant(1, order))

    @staticmethod
    def d_of(g):
        """theta = dg for a non-constant rational g."""
        return FormCoeff(g.derivative())

    def xderiv(self, f):
        """X(f) = f' / alpha."""
        return f.derivative() / self.alpha

    def __repr__(self):
        return "FormCoeff(%r)" % (self.alpha,)


def _theta(theta, order):
    if theta is None:
        return FormCoeff.dz(order)
    if isinstance(theta, RatFn):
        return FormCoeff(theta)
    return theta


def pre_schwarzian(f, theta=None):
    """phi = -(1/2) fdd/fd with dots along X."""
    theta = _theta(theta, f.order)
    fd = theta.xderiv(f)
    if fd.is_zero:
        raise ValueError("pre-Schwarzian of a constant")
    fdd = theta.xderiv(fd)
    return -fdd / (fd * 2)


def schwarzian(f, theta=None):
    """S = X(phi) + phi^2, the theta-coefficient of the quadratic
    differential S theta^2."""
    theta = _theta(theta, f.order)
    phi = pre_schwarzian(f, theta)
    return theta.xderiv(phi) + phi * phi


class DResult(RatFn):
    """Value of the D operator; `degenerate` marks inputs where the dual
    map collapses to a constant (including the constant infinity)."""

    __slots__ = ("degenerate",)

    def __init__(self, value, degenerate):
        super().__init__(value.num, value.den, reduce=False)
        self.degenerate = degenerate


def d_operator(f, theta=None):
    """D f = f - 2 fd^2/fdd, the projectively equivariant dual of f.

    When fdd vanishes identically the dual is the constant infinity; when
    the dual is any other constant the input is likewise degenerate, and
    both cases are flagged rather than raised.
    """
    theta = _theta(theta, f.order)
    fd = theta.xderiv(f)
    if fd.is_zero:
        raise ValueError("D of a constant")
    fdd = theta.xderiv(fd)
    if fdd.is_zero:
        return DResult(RatFn.infinity(f.order), True)
    value = f - (fd * fd * 2) / fdd
    return DResult(value, value.is_constant)


def deform_corollary(f, g, h):
    """f + fd (h - (1/2) fd^-1 fdd)^-1 along X = (1/g') d/dz.

    h = 0 gives the D operator relative to dg; h ranges over functions of
    an absolute invariant in the equivariant application.
    """
    theta = FormCoeff.d_of(g) if not isinstance(g, FormCoeff) else g
    if not isinstance(h, RatFn):
        h = RatFn.constant(h, f.order)
    fd = theta.xderiv(f)
    if fd.is_zero:
        raise ValueError("deformation of a constant")
    fdd = theta.xderiv(fd)
    den = h - fdd / (fd * 2)
    if den.is_zero:
        return DResult(RatFn.infinity(f.order), True)
    value = f + fd / den
    return DResult(value, value.is_constant)


def dd_deformation_h(f, theta=None):
    """The invariant H with D(D f) = f + fd/(H(f) + phi(f)).

    Closed form -2 S^2 / X(S) where S = X(phi) + phi^2; with this S
    normalization the factor 2 is forced (derivable by eliminating fdd via
    fdd = -2 phi fd).
    """
    theta = _theta(theta, f.order)
    s = schwarzian(f, theta)
    ds = theta.xderiv(s)
    if ds.is_zero:
        raise ValueError("Schwarzian with vanishing X-derivative")
    return -(s * s * 2) / ds


def phi_operator(alpha, k):
    """z + k alpha/alpha', sending a weight-k form to an equivariant map."""
    if not isinstance(alpha, RatFn):
        alpha = RatFn(alpha)
    ad = alpha.derivative()
    if ad.is_zero:
        raise ValueError("form with vanishing derivative")
    return RatFn.x(alpha.order) + (alpha * k) / ad


def phi_biweight(alpha, beta, k):
    """z + k alpha/(alpha' + beta), the biweight variant."""
    if not isinstance(alpha, RatFn):
        alpha = RatFn(alpha)
    if not isinstance(beta, RatFn):
        beta = RatFn(beta) if isinstance(beta, Poly) else RatFn.constant(beta, alpha.order)
    den = alpha.derivative() + beta
    if den.is_zero:
        raise ValueError("degenerate denominator alpha' + beta")
    return RatFn.x(alpha.order) + (alpha * k) / den


def general_binomial(x, m):
    """Falling-factorial binomial x(x-1)...(x-m+1)/m!, valid for any
    integer x including negatives."""
    num = 1
    for j in range(m):
        num *= x - j
    den = 1
    for j in range(2, m + 1):
        den *= j
    return Fraction(num, den)


def rankin_cohen(alpha, k, beta, l, n):
    """Bracket of forms of weights k and l, a form of weight k + l + 2n.

    sum_m (-1)^m C(n+k-1, n-m) C(n+l-1, m) alpha^(m) beta^(n-m), with
    generalized binomials so negative weights are allowed.
    """
    if n < 0:
        raise ValueError("bracket order must be >= 0")
    if not isinstance(alpha, RatFn):
        alpha = RatFn(alpha)
    if not isinstance(beta, RatFn):
        beta = RatFn(beta)
    a_derivs = [alpha]
    b_derivs = [beta]
    for _ in range(n):
        a_derivs.append(a_derivs[-1].derivative())
        b_derivs.append(b_derivs[-1].derivative())
    total = RatFn.constant(0, alpha.order)
    for m in range(n + 1):
        c = general_binomial(n + k - 1, n - m) * general_binomial(n + l - 1, m)
        if m % 2:
            c = -c
        if c == 0:
            continue
        total = total + a_derivs[m] * b_derivs[n - m] * rational(c, alpha.order)
    return total


def klein_vector_field(alpha, a, beta=None):
    """Dehomogenized equivariant vector field from homogeneous data.

    alpha lifts to A = z2^a alpha(z1/z2) and beta to B = z2^(a-2)
    beta(z1/z2); the projectivized field (d_z2 A - B z1, -d_z1 A - B z2)
    at z2 = 1 gives the map (a alpha - z alpha' - z beta)/(-alpha' - beta),
    which coincides with the biweight operator at weight -a.  A constant
    result is flagged degenerate.
    """
    if not isinstance(alpha, Poly):
        raise TypeError("alpha must be a polynomial")
    if alpha.degree > a:
        raise ValueError("homogenization degree below deg alpha")
    order = alpha.order
    if beta is None:
        beta = Poly.zero(order)
    if beta.degree > a - 2:
        raise ValueError("beta exceeds degree a - 2")
    z = Poly.x(order)
    num = alpha.scale(rational(a, order)) - z * alpha.derivative() - z * beta
    den = -alpha.derivative() - beta
    if num.is_zero and den.is_zero:
        raise ValueError("identically degenerate field")
    value = RatFn(num, den)
    return DResult(value, value.is_constant or value.is_infinity)


# -- period residues --------------------------------------------------


class _QuotientRing:
    """Q(zeta)[z] modulo a monic squarefree polynomial s.

    Elements are Polys of degree < deg s.  Inversion can fail when s is
    reducible and the element is a zero divisor; the failure carries the
    discovered factor so callers can split s and retry.
    """

    def __init__(self, s):
        self.s = s
        self.order = s.order

    def reduce(self, p):
        return p % self.s

    def mul(self, a, b):
        return (a * b) % self.s

    def inverse(self, a):
        # extended Euclid on (a, s)
        s = self.s
        r0, r1 = s, self.reduce(a)
        t0, t1 = Poly.zero(self.order), Poly.one(self.order)
        while not r1.is_zero:
            lead = r1.leading.inverse()
            r1m, t1m = r1.scale(lead), t1.scale(lead)
            q, r = r0.divmod(r1m)
            r0, r1 = r1m, r
            t0, t1 = t1m, t0 - q * t1m
        # r0 = gcd(a, s); t0 a == r0 (mod s)
        if r0.degree > 0:
            raise ZeroDivisorError(r0)
        return t0.scale(r0.coeffs[0].inverse()) % s


class ZeroDivisorError(ArithmeticError):
    def __init__(self, factor):
        super().__init__("zero divisor modulo reducible place")
        self.factor = factor


def period_residues(f, fhat):
    """Periods of the closed form d log(f - fhat) relative to d f.

    Returns [(place, period)] over the finite poles of f'/(f - fhat),
    where period = 2 * residue; for fhat = D f every period is an integer,
    which is the well-definedness criterion for the primitive.  Bundle
    places report a Poly value when the residue varies over the bundle.
    """
    if not isinstance(fhat, RatFn):
        fhat = RatFn.constant(fhat, f.order)
    diff = f - fhat
    if diff.is_zero:
        raise ValueError("f and fhat coincide")
    g = f.derivative() / diff
    bound = 2 * (f.num.degree + f.den.degree) + 4
    out = []
    for s, mult in g.den.squarefree_decomposition():
        for piece, value in _residues_at(g.num, g.den, s, mult):
            period = value + value
            if isinstance(period, Poly) and period.degree > 0:
                out.extend(_split_by_integer_values(piece, period, bound))
            else:
                out.append((Place.bundle(piece), period))
    return out


def _split_by_integer_values(piece, period, bound):
    """Refine a bundle on which the period varies: peel off the loci where
    it equals each small integer, leaving any non-integer remainder as a
    bundle with a polynomial value."""
    out = []
    rest = piece
    for c in range(-bound, bound + 1):
        if rest.degree < 1:
            break
        locus = rest.gcd(period - Poly.constant(rational(c, piece.order),
                                               piece.order))
        if locus.degree >= 1:
            out.append((Place.bundle(locus.monic()), rational(c, piece.order)))
            rest = rest.exact_div(locus)
    if rest.degree >= 1:
        out.append((Place.bundle(rest.monic()), period % rest))
    return out


def _residues_at(num, den, s, mult):
    """Residues of num/den at the roots of the squarefree factor s, which
    divides den exactly `mult` times.  Yields (sub-place, value in the
    quotient ring); splits s on zero divisors."""
    order = s.order
    u = den
    for _ in range(mult):
        u = u.exact_div(s)
    ring = _QuotientRing(s)
    try:
        value = _residue_value(ring, num, u, s, mult)
    except ZeroDivisorError as exc:
        s1 = exc.factor
        if s1.degree >= s.degree:
            raise
        s2 = s.exact_div(s1)
        yield from _residues_at(num, den, s1.monic(), mult)
        yield from _residues_at(num, den, s2.monic(), mult)
        return
    const = value.coeffs[0] if not value.is_zero else rational(0, order)
    if value.degree <= 0:
        yield s, const
    else:
        yield s, value


def _residue_value(ring, num, u, s, mult):
    """Coefficient of t^(mult-1) in num(x+t) / (u(x+t) (s(x+t)/t)^mult),
    computed in ring[[t]] with x the residue class of z."""
    n = mult  # series length needed
    num_s = _shift_series(ring, num, n)
    u_s = _shift_series(ring, u, n)
    s_s = _shift_series(ring, s, n + 1)
    # s(x+t) has zero constant term; divide by t
    s_div_t = s_s[1:]
    den_series = _series_mul_ring(ring, u_s, _series_pow_ring(ring, s_div_t, mult, n), n)
    series = _series_div_ring(ring, num_s, den_series, n)
    return series[n - 1]


def _shift_series(ring, p, n):
    """First n Taylor coefficients of p(x + t) as elements of the ring."""
    # Horner in t: repeatedly divide by (z - x), i.e. synthetic shift
    coeffs = [ring.reduce(Poly([c], ring.order)) for c in p.coeffs]
    x = ring.reduce(Poly.x(ring.order))
    out = []
    work = list(coeffs)
    for _ in range(n):
        if not work:
            out.append(Poly.zero(ring.order))
            continue
        # evaluate work at x, and divide synthetically
        acc = Poly.zero(ring.order)
        new = []
        for c in reversed(work):
            acc = ring.mul(acc, x) + c
            new.append(acc)
        new.pop()
        new.reverse()
        out.append(ring.reduce(acc))
        work = [ring.reduce(w) for w in new]
    return out


def _series_mul_ring(ring, a, b, n):
    zero = Poly.zero(ring.order)
    out = [zero] * n
    for i, ai in enumerate(a[:n]):
        if ai.is_zero:
            continue
        for j, bj in enumerate(b[: n - i]):
            if not bj.is_zero:
                out[i + j] = out[i + j] + ring.mul(ai, bj)
    return out


def _series_pow_ring(ring, a, k, n):
    out = [Poly.one(ring.order)] + [Poly.zero(ring.order)] * (n - 1)
    for _ in range(k):
        out = _series_mul_ring(ring, out, a, n)
    return out


def _series_div_ring(ring, a, b, n):
    inv0 = ring.inverse(b[0])
    out = []
    for k in range(n):
        acc = a[k] if k < len(a) else Poly.zero(ring.order)
        for j in range(1, k + 1):
            if j < len(b) and not b[j].is_zero and not out[k - j].is_zero:
                acc = acc - ring.mul(b[j], out[k - j])
        out.append(ring.mul(acc, inv0))
    return out
