"""
Inverting a polynomial automorphism by fixed-point iteration
============================================================

Write F = I - H. The inverse is I + K where K solves K = H(I + K), and the
iterates K_d pin it down one filtration level at a time.
"""

from polyinv import DEGREE, iterative_inverse, padic, parse_map
from polyinv.inverse import degree_bound

# degree filtration: H has no terms below degree 2, so K_d is exact up to degree d
F = parse_map("[X + Y^2 + 2*X^2*Y + X^4, Y + X^2] over QQ[X,Y]")
out = iterative_inverse(F, DEGREE)
for d, K in enumerate(out.trace):
    print(f"K_{d} = {K.text()}")
print(out.status.value, out.inverse.text())

# deg(F)**(n-1) bounds the degree of any inverse, so running out of room is a proof
G = parse_map("[x + y^2, y + x^2] over QQ[x,y]")
print("bound", degree_bound(G), "->", iterative_inverse(G).status.value)

# 2-adic filtration: the linear part is not I, but H = I - F is divisible by 2
T = parse_map("[x + 2*y + 4*x^2, y + 2*x^2] over ZZ[x,y]")
out = iterative_inverse(T, padic(2))
for d, K in enumerate(out.trace):
    print(f"K_{d} = {K.text()}")
print(out.status.value, out.inverse.text())
