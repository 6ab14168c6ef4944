"""Series lift of a map/form pair to a curve in the 2x2 matrix group.

Around a regular point p the pair (f, theta) lifts to L = [psi, psidot]
with psi = (f psi2, psi2) and psi2 solving the first order equation
psidot2 = phi psi2, phi the pre-Schwarzian.  Both columns then satisfy the
second order equation psidotdot = S psi, the Maurer-Cartan form L^-1 dL
equals [[0, S],[1, 0]] theta, and the ratio of the second column recovers
the dual map D f.  Everything here is truncated power series in t = z - p
with exact coefficients.
"""

from __future__ import annotations

from .cyclotomic import Cyclo, rational
from .operators import FormCoeff, _theta, d_operator, pre_schwarzian, schwarzian
from .ratfn import RatFn


def _szero(order):
    return rational(0, order)


def series_mul(a, b, n, order):
    out = [_szero(order)] * n
    for i, ai in enumerate(a[:n]):
        if ai.is_zero:
            continue
        for j, bj in enumerate(b[: n - i]):
            if not bj.is_zero:
                out[i + j] = out[i + j] + ai * bj
    return out


def series_div(a, b, n, order):
    if b[0].is_zero:
        raise ZeroDivisionError("series division by positive valuation")
    inv0 = b[0].inverse()
    out = []
    for k in range(n):
        acc = a[k] if k < len(a) else _szero(order)
        for j in range(1, k + 1):
            if j < len(b) and not b[j].is_zero and not out[k - j].is_zero:
                acc = acc - b[j] * out[k - j]
        out.append(acc * inv0)
    return out


def series_diff(a, order):
    """d/dt of a truncated series (one order shorter)."""
    return [c * rational(k + 1, order) for k, c in enumerate(a[1:])]


def series_sub(a, b, order):
    n = max(len(a), len(b))
    out = []
    for k in range(n):
        x = a[k] if k < len(a) else _szero(order)
        y = b[k] if k < len(b) else _szero(order)
        out.append(x - y)
    return out


class LiftSeries:
    """Truncated lift L = [[psi1, psidot1], [psi2, psidot2]] at p.

    Attributes hold series (lists of Cyclo, coefficients of (z-p)^k) and
    the exact potential q_potential = S as a RatFn; mc entries carry the
    extra factor theta.
    """

    def __init__(self, p, n, entries, q_potential, alpha_series, order):
        self.p = p
        self.n = n
        self.psi1, self.psidot1, self.psi2, self.psidot2 = entries
        self.q_potential = q_potential
        self._alpha = alpha_series
        self.order = order

    @property
    def matrix(self):
        return ((self.psi1, self.psidot1), (self.psi2, self.psidot2))

    def determinant(self):
        """det L = -fdot(p), constant to the reliable order n - 1
        (psidot carries one order less than psi)."""
        n = self.n - 1
        return series_sub(
            series_mul(self.psi1, self.psidot2, n, self.order),
            series_mul(self.psidot1, self.psi2, n, self.order),
            self.order,
        )

    def _xderiv(self, a, n):
        return series_div(series_diff(a, self.order), self._alpha, n, self.order)

    def mc_form(self):
        """Entries of L^-1 (dL/dtheta), each a series of length n - 2.

        Truncation: X-differentiating twice costs two orders.
        """
        n = self.n - 2
        o = self.order
        det = self.determinant()[:n]
        d11 = self._xderiv(self.psi1, n)
        d12 = self._xderiv(self.psidot1, n)
        d21 = self._xderiv(self.psi2, n)
        d22 = self._xderiv(self.psidot2, n)
        # adjugate / det
        def entry(a, b, c, d):
            # row of adj(L) times column of Ldot, over det
            num = series_sub(series_mul(a, b, n, o), series_mul(c, d, n, o), o)
            return series_div(num, det, n, o)
        return (
            (entry(self.psidot2, d11, self.psidot1, d21),
             entry(self.psidot2, d12, self.psidot1, d22)),
            (entry(self.psi1, d21, self.psi2, d11),
             entry(self.psi1, d22, self.psi2, d12)),
        )

    def pi2_series(self):
        """Ratio of the second column, psidot1/psidot2 = D f as a series."""
        n = self.n - 1
        return series_div(self.psidot1[:n], self.psidot2[:n], n, self.order)

    def contact_residuals(self):
        """Diagonal Maurer-Cartan entries plus the column Schrodinger
        residuals psidotdot - q psi; all should vanish to truncation."""
        mc = self.mc_form()
        n = self.n - 2
        o = self.order
        q = _ratfn_taylor(self.q_potential, self.p, n)
        res = [mc[0][0], mc[1][1]]
        for col in ((self.psi1, self.psidot1), (self.psi2, self.psidot2)):
            dd = self._xderiv(col[1], n)
            res.append(series_sub(dd, series_mul(q, col[0][:n], n, o), o))
        return res


def _ratfn_taylor(f, p, n):
    return f.taylor(p, n)


def legendrian_lift_series(f, theta=None, p=None, n=8):
    """Series lift of (f, theta) at a regular point p to order n.

    Regularity: fdot(p) finite and nonzero, potential finite at p, f(p)
    finite (move f by a Moebius transformation first otherwise).
    """
    theta = _theta(theta, f.order)
    if p is None:
        p = rational(0, f.order)
    elif not isinstance(p, Cyclo):
        p = rational(p, f.order)
    o = f.order
    fd = theta.xderiv(f)
    if fd.is_zero:
        raise ValueError("lift of a constant")
    fd_p = fd(p)
    if not isinstance(fd_p, Cyclo) or fd_p.is_zero:
        raise ValueError("p is not a regular point of (f, theta)")
    if not isinstance(f(p), Cyclo):
        raise ValueError("f(p) must be finite; precompose with a Moebius move")
    phi = pre_schwarzian(f, theta)
    s = schwarzian(f, theta)

    alpha = _ratfn_taylor(theta.alpha, p, n)
    phi_s = _ratfn_taylor(phi, p, n)
    f_s = _ratfn_taylor(f, p, n)

    # psi2' = alpha phi psi2 (prime = d/dt), psi2(p) = 1
    rhs_coeff = series_mul(alpha, phi_s, n, o)
    psi2 = [rational(1, o)]
    for k in range(1, n):
        acc = _szero(o)
        for j in range(k):
            if not rhs_coeff[k - 1 - j].is_zero and not psi2[j].is_zero:
                acc = acc + rhs_coeff[k - 1 - j] * psi2[j]
        psi2.append(acc * rational(1, o) / rational(k, o))
    psi1 = series_mul(f_s, psi2, n, o)
    psidot1 = series_div(series_diff(psi1, o), alpha, n - 1, o)
    psidot2 = series_div(series_diff(psi2, o), alpha, n - 1, o)
    return LiftSeries(p, n, (psi1, psidot1, psi2, psidot2), s, alpha, o)
