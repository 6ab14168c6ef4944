"""Moebius transformations, group actions on rational maps, group configs.

A Moebius element is a 2x2 matrix over Q(zeta_N) acting on the sphere by
(a z + b)/(c z + d).  Finite group data (generators, invariant forms and
their weights) is loaded from small text config files; every claim a config
makes is re-checked at load time, so configs are data, never trusted code.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cyclotomic import DEFAULT_ORDER, Cyclo, rational
from .parsing import parse_cyclo, parse_poly
from .poly import Poly
from .ratfn import INF, RatFn


class Moebius:
    """Invertible 2x2 matrix acting projectively."""

    __slots__ = ("a", "b", "c", "d", "order")

    def __init__(self, a, b, c, d, order=DEFAULT_ORDER):
        def lift(x):
            return x if isinstance(x, Cyclo) else rational(x, order)
        self.a, self.b, self.c, self.d = lift(a), lift(b), lift(c), lift(d)
        self.order = self.a.order
        if self.det().is_zero:
            raise ValueError("singular matrix")

    @staticmethod
    def identity(order=DEFAULT_ORDER):
        return Moebius(1, 0, 0, 1, order)

    def det(self):
        return self.a * self.d - self.b * self.c

    def __mul__(self, other):
        return Moebius(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            self.order,
        )

    def inverse(self):
        return Moebius(self.d, -self.b, -self.c, self.a, self.order)

    def apply_value(self, x):
        """Image of a point (Cyclo or 'inf')."""
        if isinstance(x, str):
            if x != INF:
                raise ValueError(x)
            if self.c.is_zero:
                return INF
            return self.a / self.c
        if not isinstance(x, Cyclo):
            x = rational(x, self.order)
        den = self.c * x + self.d
        if den.is_zero:
            return INF
        return (self.a * x + self.b) / den

    def as_ratfn(self):
        return RatFn(
            Poly((self.b, self.a), self.order),
            Poly((self.d, self.c), self.order),
        )

    def is_projectively(self, other):
        """Equal in PGL2: rows proportional."""
        return (
            self.a * other.b == self.b * other.a
            and self.a * other.c == self.c * other.a
            and self.a * other.d == self.d * other.a
            and self.b * other.c == self.c * other.b
            and self.b * other.d == self.d * other.b
            and self.c * other.d == self.d * other.c
        )

    def __repr__(self):
        return "Moebius(%r, %r, %r, %r)" % (self.a, self.b, self.c, self.d)


def compose_after(f, m, reduce=True):
    """f(m) as a rational function: precompose with the Moebius map."""
    return f.compose_mobius_arg(m.a, m.b, m.c, m.d, reduce=reduce)


def moebius_apply(m, f, reduce=True):
    """m . f = (a f + b)/(c f + d), postcomposition."""
    num = f.num.scale(m.a) + f.den.scale(m.b)
    den = f.num.scale(m.c) + f.den.scale(m.d)
    return RatFn(num, den, reduce=reduce)


def equivariance_residual(f, m, rho_m=None):
    """Zero iff f(m z) = rho(m) . f(z).

    Returned as a pair of cross products whose vanishing expresses the
    identity; no gcd is ever taken, so this stays cheap at large degree.
    """
    if rho_m is None:
        rho_m = m
    lhs = compose_after(f, m, reduce=False)
    rhs = moebius_apply(rho_m, f, reduce=False)
    return lhs.num * rhs.den - rhs.num * lhs.den


def is_equivariant(f, m, rho_m=None):
    return equivariance_residual(f, m, rho_m).is_zero


def form_character(poly, weight, m):
    """Multiplier chi in  poly(m z) (c z + d)^(-weight) = chi poly(z).

    weight is negative for the forms handled here, and -weight >= deg poly.
    Returns None when poly is not relatively invariant under m.
    """
    d = poly.degree
    transformed = poly.compose_mobius(m.a, m.b, m.c, m.d)
    # poly(mz) (cz+d)^(-weight) = transformed * (cz+d)^(-weight-d), and the
    # right side must be chi * poly exactly
    if d != -weight:
        low = Poly((m.d, m.c), poly.order)
        transformed = transformed * low ** (-weight - d)
    lead_t = None
    for k in range(transformed.degree, -1, -1):
        if not transformed.coeffs[k].is_zero:
            lead_t = (k, transformed.coeffs[k])
            break
    if lead_t is None or transformed.degree != poly.degree:
        return None
    k, ct = lead_t
    if poly.coeffs[k].is_zero:
        return None
    chi = ct / poly.coeffs[k]
    if transformed == poly.scale(chi):
        return chi
    return None


def cross_ratio(a, b, c, d, order=DEFAULT_ORDER):
    """(a-c)(b-d) / ((a-d)(b-c)) as a rational function.

    Arguments may be RatFn, constants, or the symbol 'inf'; each is lifted
    to homogeneous coordinates (num, den) and differences become 2x2
    determinants, so arguments at infinity need no special cases.  The
    result is a RatFn (constant when the inputs are points); a degenerate
    quadruple raises.
    """
    def lift(x):
        if isinstance(x, str):
            if x != INF:
                raise ValueError(x)
            return (Poly.one(order), Poly.zero(order))
        if isinstance(x, RatFn):
            return (x.num, x.den)
        if isinstance(x, Poly):
            return (x, Poly.one(order))
        if not isinstance(x, Cyclo):
            x = rational(x, order)
        return (Poly.constant(x, order), Poly.one(order))

    A, B, C, D = lift(a), lift(b), lift(c), lift(d)

    def det(u, v):
        return u[0] * v[1] - u[1] * v[0]

    num = det(A, C) * det(B, D)
    den = det(A, D) * det(B, C)
    if num.is_zero and den.is_zero:
        raise ZeroDivisionError("degenerate quadruple")
    return RatFn(num, den)


def form_invariance_check(alpha, weight, chi, m):
    """Verify alpha(m z) (cz+d)^(-weight) = chi alpha(z).

    Returns (ok, witness): witness is None on success, the nonzero residual
    polynomial on failure.
    """
    if isinstance(alpha, RatFn):
        if alpha.den.degree != 0:
            raise ValueError("invariant forms must be polynomial")
        alpha = alpha.num.scale(alpha.den.coeffs[0].inverse())
    d = alpha.degree
    transformed = alpha.compose_mobius(m.a, m.b, m.c, m.d)
    if d != -weight:
        low = Poly((m.d, m.c), alpha.order)
        transformed = transformed * low ** (-weight - d)
    residual = transformed - alpha.scale(chi)
    if residual.is_zero:
        return True, None
    return False, residual


def equivariance_check(f, pairs):
    """Verify f(A z) = rho(A)(f(z)) for every (A, rho(A)) pair.

    Returns (ok, witness): witness is the first failing (A, rhoA, residual)
    triple, or None.
    """
    for m, rho_m in pairs:
        res = equivariance_residual(f, m, rho_m)
        if not res.is_zero:
            return False, (m, rho_m, res)
    return True, None


class InvariantForm:
    """Polynomial invariant of a finite Moebius group with its weight."""

    __slots__ = ("name", "poly", "weight", "characters")

    def __init__(self, name, poly, weight, characters):
        self.name = name
        self.poly = poly
        self.weight = weight
        self.characters = characters  # per generator, same order as group gens

    def __repr__(self):
        return "InvariantForm(%s, weight=%d)" % (self.name, self.weight)


class GroupConfig:
    """Validated description of a finite Moebius group with invariants."""

    def __init__(self, name, order, generators, rho_generators, forms):
        self.name = name
        self.order = order
        self.generators = generators
        self.rho_generators = rho_generators
        self.forms = forms

    def form(self, name):
        for f in self.forms:
            if f.name == name:
                return f
        raise KeyError(name)

    @property
    def vertex_form(self):
        return self.forms[0]

    def __repr__(self):
        return "GroupConfig(%s, %d generators, %d forms)" % (
            self.name, len(self.generators), len(self.forms))


class ConfigError(ValueError):
    pass


def load_group_config(path):
    """Read and validate a group config file.

    The file is JSON with string-valued matrix entries and polynomials in
    the literal syntax of this package.  Everything stated in the file is
    re-derived: determinants, invariance of each form, the recorded
    character values, and the recorded weights against the degrees.
    """
    with open(path) as fh:
        raw = json.load(fh)
    return _validate_config(raw, path)


def _validate_config(raw, src="<config>"):
    try:
        name = raw["name"]
        order = int(raw["cyclotomic_order"])
        gen_rows = raw["generators"]
        rho_rows = raw.get("rho_generators", gen_rows)
        inv_rows = raw["invariants"]
    except (KeyError, TypeError) as exc:
        raise ConfigError("%s: missing field %s" % (src, exc))

    def mat(entries):
        vals = [parse_cyclo(e, order) for e in entries]
        if len(vals) != 4:
            raise ConfigError("%s: matrix needs 4 entries" % src)
        return Moebius(*vals, order=order)

    generators = [mat(g) for g in gen_rows]
    rho_generators = [mat(g) for g in rho_rows]
    if len(rho_generators) != len(generators):
        raise ConfigError("%s: generator count mismatch" % src)

    forms = []
    for row in inv_rows:
        poly = parse_poly(row["poly"], order)
        weight = int(row["weight"])
        chars = []
        for g in generators:
            chi = form_character(poly, weight, g)
            if chi is None:
                raise ConfigError(
                    "%s: %s is not invariant under a stated generator"
                    % (src, row.get("name", "form")))
            if not chi.is_root_of_unity():
                raise ConfigError(
                    "%s: character of %s is not a root of unity"
                    % (src, row.get("name", "form")))
            chars.append(chi)
        stated = row.get("characters")
        if stated is not None:
            for chi, s in zip(chars, stated):
                if chi != parse_cyclo(s, order):
                    raise ConfigError("%s: recorded character is wrong" % src)
        forms.append(InvariantForm(row["name"], poly, weight, chars))

    return GroupConfig(name, order, generators, rho_generators, forms)


def config_to_raw(cfg):
    """Serializable dict matching the config file layout."""
    from .parsing import cyclo_literal, poly_literal

    def row(m):
        return [cyclo_literal(x) for x in (m.a, m.b, m.c, m.d)]

    return {
        "name": cfg.name,
        "cyclotomic_order": cfg.order,
        "generators": [row(g) for g in cfg.generators],
        "rho_generators": [row(g) for g in cfg.rho_generators],
        "invariants": [
            {
                "name": f.name,
                "poly": poly_literal(f.poly),
                "weight": f.weight,
                "characters": [cyclo_literal(c) for c in f.characters],
            }
            for f in cfg.forms
        ],
    }
