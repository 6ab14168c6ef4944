"""Non-commutative calculus of matrix-valued rational functions.

Free algebra over generators p_1, p_2, ... (the matrix pre-Schwarzian and
its higher companions), the derivation and q-composition producing the S_n
hierarchy, evaluation on matrices of rational functions, the generalized
Moebius action, and the non-commutative D operator and its deformations.
"""

from fractions import Fraction

from .cyclotomic import Cyclo, DEFAULT_ORDER, rational
from .poly import Poly
from .ratfn import RatFn

# -- free algebra -----------------------------------------------------


def _coeff_is_zero(c):
    if isinstance(c, RatFn):
        return c.is_zero
    if isinstance(c, Cyclo):
        return c.is_zero
    return c == 0


class NCPoly:
    """Finite linear combination of words in the generators p_1, p_2, ...

    Words are tuples of generator indices; multiplication concatenates
    words.  Coefficients are integers/Fractions for the S_n layer and may
    be Cyclo or RatFn in the general layer.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for word, coeff in (terms or {}).items():
            if not _coeff_is_zero(coeff):
                clean[tuple(word)] = coeff
        self.terms = clean

    @staticmethod
    def zero():
        return NCPoly()

    @staticmethod
    def one():
        return NCPoly({(): 1})

    @staticmethod
    def generator(k):
        if k < 1:
            raise ValueError("generator index must be >= 1")
        return NCPoly({(k,): 1})

    @property
    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        other = _coerce_nc(other)
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            terms[word] = terms.get(word, 0) + coeff
        return NCPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce_nc(other))

    def __rsub__(self, other):
        return _coerce_nc(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            return NCPoly({w: c * other for w, c in self.terms.items()})
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                terms[w] = terms.get(w, 0) + c1 * c2
        return NCPoly(terms)

    def __rmul__(self, other):
        # scalar * NCPoly (scalars commute with coefficients)
        return NCPoly({w: other * c for w, c in self.terms.items()})

    def scale(self, c):
        return NCPoly({w: coeff * c for w, coeff in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            other = _coerce_nc(other)
        return (self - other).is_zero

    def __hash__(self):
        raise TypeError("NCPoly is not hashable")

    def coefficient(self, word):
        return self.terms.get(tuple(word), 0)

    def weights(self):
        """Set of word weights present, weight(word) = sum of indices."""
        return {sum(w) for w in self.terms}

    @property
    def is_homogeneous(self):
        return len(self.weights()) <= 1

    def weight(self):
        ws = self.weights()
        if len(ws) != 1:
            raise ValueError("not homogeneous: weights %s" % sorted(ws))
        return ws.pop()

    def coefficient_sum(self):
        total = 0
        for coeff in self.terms.values():
            total = total + coeff
        return total

    def classical_limit(self):
        """Project onto the commutative quotient: sort each word."""
        terms = {}
        for word, coeff in self.terms.items():
            key = tuple(sorted(word))
            terms[key] = terms.get(key, 0) + coeff
        return NCPoly(terms)

    def max_generator(self):
        return max((max(w) for w in self.terms if w), default=0)

    def canonical_text(self):
        """Golden-file format: `p3 + 4 p2 p1 + 4 p1 p2 + 12 p1^3`.

        Monomials are sorted by weight, then lexicographically by word.
        """
        if not self.terms:
            return "0"
        keys = sorted(self.terms,
                      key=lambda w: (sum(w), tuple(-k for k in w)))
        parts = []
        for word in keys:
            coeff = self.terms[word]
            parts.append(_monomial_text(word, coeff, not parts))
        return " ".join(parts)

    def __repr__(self):
        return "NCPoly(%s)" % self.canonical_text()


def _coerce_nc(value):
    if isinstance(value, NCPoly):
        return value
    return NCPoly({(): value})


def _word_text(word):
    pieces = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        run = j - i
        pieces.append("p%d" % word[i] if run == 1 else "p%d^%d" % (word[i], run))
        i = j
    return " ".join(pieces)


def _monomial_text(word, coeff, leading):
    neg = False
    if isinstance(coeff, (int, Fraction)):
        neg = coeff < 0
        if neg:
            coeff = -coeff
        body = "" if coeff == 1 and word else str(coeff)
    else:
        body = "(%r)" % (coeff,)
    wtext = _word_text(word)
    text = " ".join(p for p in (body, wtext) if p) or "1"
    if leading:
        return "-" + text if neg else text
    return ("- " if neg else "+ ") + text


def nc_derive(p):
    """The derivation with d(p_k) = p_{k+1} + 2 p_1 p_k, by Leibniz.

    Forced by p_k = -(1/2) fdot^{-1} f^{(k+1)} and the matrix product
    rule d(fdot^{-1}) = -fdot^{-1} fddot fdot^{-1}.
    """
    p = _coerce_nc(p)
    result = NCPoly.zero()
    for word, coeff in p.terms.items():
        for i, k in enumerate(word):
            left = NCPoly({word[:i]: coeff})
            right = NCPoly({word[i + 1:]: 1})
            dgen = NCPoly.generator(k + 1) + NCPoly.generator(1) * NCPoly.generator(k) * 2
            result = result + left * dgen * right
    return result


def q_compose_step(h):
    """One q-composition step: X o_q H = d(H) - (p_1 H - H p_1)."""
    h = _coerce_nc(h)
    p1 = NCPoly.generator(1)
    return nc_derive(h) - (p1 * h - h * p1)


_S_CACHE = [NCPoly.one(),
            NCPoly.generator(2) + NCPoly.generator(1) * NCPoly.generator(1) * 3]


def s_poly(n):
    """S_0 = 1, S_1 = p2 + 3 p1^2, S_{n+1} = X o_q S_n.

    Homogeneous of weight n + 1 for n >= 1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_S_CACHE) <= n:
        _S_CACHE.append(q_compose_step(_S_CACHE[-1]))
    return _S_CACHE[n]


# -- matrices of rational functions ----------------------------------


def _as_ratfn(value, order):
    if isinstance(value, RatFn):
        return value
    if isinstance(value, Poly):
        return RatFn(value, Poly.one(order))
    return RatFn.constant(rational(value, order) if not isinstance(value, Cyclo)
                          else value, order)


class MatFn:
    """Square matrix of rational functions with exact arithmetic."""

    __slots__ = ("rows", "size", "order")

    def __init__(self, rows, order=DEFAULT_ORDER):
        self.size = len(rows)
        self.order = order
        self.rows = [[_as_ratfn(entry, order) for entry in row] for row in rows]
        for row in self.rows:
            if len(row) != self.size:
                raise ValueError("matrix must be square")

    @staticmethod
    def identity(size, order=DEFAULT_ORDER):
        return MatFn([[1 if i == j else 0 for j in range(size)]
                      for i in range(size)], order)

    @staticmethod
    def zero(size, order=DEFAULT_ORDER):
        return MatFn([[0] * size for _ in range(size)], order)

    @staticmethod
    def scalar(value, size, order=DEFAULT_ORDER):
        v = _as_ratfn(value, order)
        z = RatFn.constant(rational(0, order), order)
        return MatFn([[v if i == j else z for j in range(size)]
                      for i in range(size)], order)

    def __add__(self, other):
        other = self._coerce(other)
        return MatFn([[self.rows[i][j] + other.rows[i][j]
                       for j in range(self.size)] for i in range(self.size)],
                     self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        return MatFn([[self.rows[i][j] - other.rows[i][j]
                       for j in range(self.size)] for i in range(self.size)],
                     self.order)

    def __neg__(self):
        return MatFn([[-e for e in row] for row in self.rows], self.order)

    def _coerce(self, other):
        if isinstance(other, MatFn):
            if other.size != self.size:
                raise ValueError("size mismatch")
            return other
        return MatFn.scalar(other, self.size, self.order)

    def __mul__(self, other):
        if not isinstance(other, MatFn):
            return MatFn([[e * other for e in row] for row in self.rows],
                         self.order)
        if other.size != self.size:
            raise ValueError("size mismatch")
        n = self.size
        return MatFn([[sum((self.rows[i][k] * other.rows[k][j]
                            for k in range(n)),
                           RatFn.constant(rational(0, self.order), self.order))
                       for j in range(n)] for i in range(n)], self.order)

    def __rmul__(self, other):
        return MatFn.scalar(other, self.size, self.order) * self

    def __eq__(self, other):
        other = self._coerce(other)
        return all(self.rows[i][j] == other.rows[i][j]
                   for i in range(self.size) for j in range(self.size))

    def __hash__(self):
        raise TypeError("MatFn is not hashable")

    def derivative(self):
        return MatFn([[e.derivative() for e in row] for row in self.rows],
                     self.order)

    def _minor(self, i, j):
        rows = [[e for jj, e in enumerate(row) if jj != j]
                for ii, row in enumerate(self.rows) if ii != i]
        return MatFn(rows, self.order)

    def det(self):
        n = self.size
        if n == 1:
            return self.rows[0][0]
        total = RatFn.constant(rational(0, self.order), self.order)
        for j in range(n):
            cof = self.rows[0][j] * self._minor(0, j).det()
            total = total + (cof if j % 2 == 0 else -cof)
        return total

    def inverse(self):
        """Adjugate inverse; raises on identically singular matrices."""
        d = self.det()
        if d.is_zero:
            raise ZeroDivisionError("matrix is singular over the function field")
        n = self.size
        dinv = d.inverse()
        adj = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                cof = self._minor(j, i).det() if n > 1 else _as_ratfn(1, self.order)
                if (i + j) % 2:
                    cof = -cof
                adj[i][j] = cof * dinv
        return MatFn(adj, self.order)

    @property
    def is_zero(self):
        return all(e.is_zero for row in self.rows for e in row)

    def __repr__(self):
        return "MatFn(%s)" % self.rows


# -- generalized Moebius action --------------------------------------


def _cyclo_matrix(rows, order):
    return [[c if isinstance(c, Cyclo) else rational(c, order) for c in row]
            for row in rows]


def _cyclo_mat_det(rows):
    """Determinant of a square Cyclo matrix by fraction-free expansion."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        minor = [[e for jj, e in enumerate(row) if jj != j]
                 for row in rows[1:]]
        term = rows[0][j] * _cyclo_mat_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


class GenMoebius:
    """Block matrix (a, b; c, d) of n x n Cyclo blocks acting by
    f -> (a f + b)(c f + d)^{-1}."""

    __slots__ = ("a", "b", "c", "d", "size", "order")

    def __init__(self, a, b, c, d, order=DEFAULT_ORDER):
        self.order = order
        self.a = _cyclo_matrix(a, order)
        self.b = _cyclo_matrix(b, order)
        self.c = _cyclo_matrix(c, order)
        self.d = _cyclo_matrix(d, order)
        self.size = len(self.a)
        blocks = [self.a, self.b, self.c, self.d]
        if any(len(blk) != self.size or
               any(len(row) != self.size for row in blk) for blk in blocks):
            raise ValueError("blocks must be square of equal size")
        full = [self.a[i] + self.b[i] for i in range(self.size)] + \
               [self.c[i] + self.d[i] for i in range(self.size)]
        if _cyclo_mat_det(full).is_zero:
            raise ValueError("block matrix is not invertible")

    @staticmethod
    def identity(size, order=DEFAULT_ORDER):
        one = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
        zero = [[0] * size for _ in range(size)]
        return GenMoebius(one, zero, zero, one, order)

    @staticmethod
    def inversion(size, order=DEFAULT_ORDER):
        one = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
        zero = [[0] * size for _ in range(size)]
        return GenMoebius(zero, one, one, zero, order)

    def _block_matfn(self, block):
        return MatFn(block, self.order)

    def __repr__(self):
        return "GenMoebius(size=%d)" % self.size


def gen_moebius_apply(t, f):
    """(a f + b)(c f + d)^{-1} as an exact MatFn."""
    if f.size != t.size:
        raise ValueError("size mismatch")
    a = t._block_matfn(t.a)
    b = t._block_matfn(t.b)
    c = t._block_matfn(t.c)
    d = t._block_matfn(t.d)
    denom = c * f + d
    if denom.det().is_zero:
        raise ZeroDivisionError("c f + d is singular over the function field")
    return (a * f + b) * denom.inverse()


# -- evaluation of the free algebra ----------------------------------


def phi_generators(f, count):
    """p_k(f) = -(1/2) fdot^{-1} f^{(k+1)} for k = 1..count."""
    fdot = f.derivative()
    if fdot.det().is_zero:
        raise ZeroDivisionError("f is not regular: fdot is singular")
    dinv = fdot.inverse()
    half = Fraction(-1, 2)
    out = {}
    deriv = fdot
    for k in range(1, count + 1):
        deriv = deriv.derivative()
        out[k] = (dinv * deriv) * half
    return out

def nc_eval(p, f):
    """Evaluate a free-algebra element on a matrix function."""
    p = _coerce_nc(p)
    gens = phi_generators(f, p.max_generator())
    total = MatFn.zero(f.size, f.order)
    for word, coeff in p.terms.items():
        acc = MatFn.identity(f.size, f.order)
        for k in word:
            acc = acc * gens[k]
        if isinstance(coeff, (int, Fraction, Cyclo, RatFn)):
            acc = acc * coeff
        else:
            raise TypeError("unsupported coefficient %r" % (coeff,))
        total = total + acc
    return total


# -- operators --------------------------------------------------------


def nc_d_operator(f):
    """D f = f - 2 fdot fddot^{-1} fdot."""
    fdot = f.derivative()
    fddot = fdot.derivative()
    if fddot.det().is_zero:
        raise ZeroDivisionError("degenerate (affine-type) input: fddot singular")
    return f - (fdot * fddot.inverse() * fdot) * 2


def nc_phi_deform(f, h):
    """Phi_X H at f: f + fdot [H(f) + p_1(f)]^{-1}."""
    fdot = f.derivative()
    bracket = nc_eval(h, f) + nc_eval(NCPoly.generator(1), f)
    if bracket.det().is_zero:
        raise ZeroDivisionError("H(f) + p1(f) is singular over the function field")
    return f + fdot * bracket.inverse()


def deform_family(f, t):
    """f_t = f + t fdot [1 - (t/2) fdot^{-1} fddot]^{-1}; f_0 = f."""
    t = _as_ratfn(t, f.order)
    fdot = f.derivative()
    if fdot.det().is_zero:
        raise ZeroDivisionError("f is not regular: fdot is singular")
    bracket = MatFn.identity(f.size, f.order) - \
        (fdot.inverse() * fdot.derivative()) * (t * Fraction(1, 2))
    if bracket.det().is_zero:
        raise ZeroDivisionError("deformation bracket is singular")
    return f + (fdot * bracket.inverse()) * t


# -- expressions over X_0, X_1, ... and the Theorem-2 substitution ----


class NCExpr:
    """Rational expression over the operator generators X_0, X_1, ...

    Built from variables by sums, products and inverses, with scalar
    (RatFn or rational) coefficients.
    """

    __slots__ = ("kind", "args", "value")

    def __init__(self, kind, args=(), value=None):
        self.kind = kind
        self.args = tuple(args)
        self.value = value

    @staticmethod
    def var(n):
        if n < 0:
            raise ValueError("variable index must be >= 0")
        return NCExpr("var", value=n)

    @staticmethod
    def scalar(value):
        return NCExpr("scalar", value=value)

    def __add__(self, other):
        return NCExpr("sum", (self, _coerce_expr(other)))

    def __mul__(self, other):
        return NCExpr("prod", (self, _coerce_expr(other)))

    def inverse(self):
        return NCExpr("inv", (self,))

    def substitute(self):
        """The homomorphism X_n -> S_{n+1}, leaving scalars fixed.

        Returns an NCExpr whose variables have been replaced by NCPoly
        leaves (kind 'poly'); products map to products and inverses to
        inverses.
        """
        if self.kind == "var":
            return NCExpr("poly", value=s_poly(self.value + 1))
        if self.kind == "scalar":
            return self
        return NCExpr(self.kind, tuple(a.substitute() for a in self.args))

    def eval(self, f):
        if self.kind == "poly":
            return nc_eval(self.value, f)
        if self.kind == "var":
            raise ValueError("evaluate after substitute()")
        if self.kind == "scalar":
            return MatFn.scalar(self.value, f.size, f.order)
        if self.kind == "sum":
            return self.args[0].eval(f) + self.args[1].eval(f)
        if self.kind == "prod":
            return self.args[0].eval(f) * self.args[1].eval(f)
        if self.kind == "inv":
            inner = self.args[0].eval(f)
            if inner.det().is_zero:
                raise ZeroDivisionError("inverse of a singular expression")
            return inner.inverse()
        raise ValueError(self.kind)


def _coerce_expr(value):
    if isinstance(value, NCExpr):
        return value
    return NCExpr.scalar(value)


class Theorem2Operator:
    """Equivariant operator Id + X [E o_q S_1 + p_1]^{-1} built from an
    invariant expression E by the substitution X_n -> S_{n+1}."""

    __slots__ = ("expr", "substituted")

    def __init__(self, expr):
        self.expr = expr
        self.substituted = expr.substitute()

    def apply(self, f):
        fdot = f.derivative()
        bracket = self.substituted.eval(f) + nc_eval(NCPoly.generator(1), f)
        if bracket.det().is_zero:
            raise ZeroDivisionError("operator bracket is singular")
        return f + fdot * bracket.inverse()


def theorem2_substitute(expr):
    """Wrap an expression over the X_n as the equivariant operator of
    the duality theorem; for E = X_0 this is Phi(S_1)."""
    return Theorem2Operator(expr)
