"""
Groebner-basis criteria
=======================

With every X above every Y, the reduced basis of (Y_i - F_i(X)) has the form
{X_i - G_i(Y)} exactly when F is invertible, and G is then the inverse. The
same idea decides point preimages and finds curve preimages.
"""

from polyinv import gb_curve_preimage, gb_inverse, gb_point_preimage, iterative_inverse, parse_curve, parse_map
from polyinv.groebner import essen_basis
from polyinv.parsing import format_poly

F = parse_map("[X + Y^2 + 2*X^2*Y + X^4, Y + X^2] over QQ[X,Y]")
names = ["X", "Y", "U", "V"]
for g in essen_basis(F).basis:
    print("  ", format_poly(g, names))
G = gb_inverse(F)
print("inverse:", G.text(), "| iterative agrees:", G == iterative_inverse(F).inverse)

N = parse_map("[x + y^2, y + x^2] over QQ[x,y]")
print("non-automorphism:", gb_inverse(N))
for g in essen_basis(N).basis:
    print("  ", format_poly(g, ["x", "y", "u", "v"]))

print(gb_point_preimage(F, (1, 1)).point)
print(gb_point_preimage(N, (2, 2)).status.value)

r = gb_curve_preimage(F, parse_curve("[t + 4*t^4, 2*t^2] over QQ[t]"))
print(r.status.value, r.curve.text())
# for non-automorphisms a non-shape basis is evidence, not a proof
print(gb_curve_preimage(N, parse_curve("[t, t] over QQ[t]")).status.value)
