"""The non-commutative Schwarzian hierarchy S_1, S_2, S_3, ...

Prints the first members of the hierarchy in the free algebra on the
pre-Schwarzian derivatives p1, p2, ..., their commutative (classical)
limits, and checks the gauge bridge: evaluated on a scalar function,
S_{n+1} is the n-th derivative of S_1 (the ordinary Schwarzian).

Run: python demos/noncommutative_hierarchy.py
"""

from equiops.ncalg import MatFn, nc_eval, s_poly
from equiops.operators import schwarzian
from equiops.parsing import parse_ratfn, ratfn_literal

for n in range(1, 4):
    poly = s_poly(n)
    print("S%d = %s" % (n, poly.canonical_text()))
    print("   classical limit: %s" % poly.classical_limit().canonical_text())

f = parse_ratfn("z^3 + z")
fm = MatFn([[f]])
s1 = nc_eval(s_poly(1), fm).rows[0][0]
print()
print("scalar check on f = z^3 + z:")
print("  S1(f) =", ratfn_literal(s1))
print("  equals the Schwarzian derivative:", s1 == schwarzian(f))
print("  S2(f) equals d/dz S1(f):",
      nc_eval(s_poly(2), fm).rows[0][0] == s1.derivative())
print("  S3(f) equals d^2/dz^2 S1(f):",
      nc_eval(s_poly(3), fm).rows[0][0] == s1.derivative().derivative())
