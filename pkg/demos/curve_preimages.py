"""
Preimages of curves and points
==============================

A centered curve f(t) has at most one centered polynomial preimage g(t). The
t-adic iteration K_{d+1} = H(f + K_d) mod t^(d+1) finds it when it exists,
even if F itself is not invertible.
"""

from polyinv import apply_to_curve, curve_preimage, parse_curve, parse_map, point_preimage

F = parse_map("[X + Y^2 + 2*X^2*Y + X^4, Y + X^2] over QQ[X,Y]")
f = parse_curve("[t + 4*t^4, 2*t^2] over QQ[t]")
out = curve_preimage(F, f)
print(out.status.value, out.curve.text(), "after", out.iterations, "steps")
print("check:", apply_to_curve(F, out.curve).text())

# a point c is the value at t = 1 of the preimage of the line c*t
print("F^-1(1, 1) =", point_preimage(F, (1, 1)))

# not an automorphism, but curves in the image still come back
N = parse_map("[x + y^2, y + x^2] over QQ[x,y]")
g = parse_curve("[t, -t^2] over QQ[t]")
print(curve_preimage(N, apply_to_curve(N, g)).curve.text())

# and (t, t) has no polynomial preimage at all
print(curve_preimage(N, parse_curve("[t, t] over QQ[t]"), max_deg=16).status.value)
