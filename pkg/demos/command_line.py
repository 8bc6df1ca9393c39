"""
Driving the command line front end
==================================

The same entry point is installed as ``polyinv``; ``python -m polyinv`` works too.
Exit status 0 means a definitive answer, 2 means the budget ran out.
"""

from polyinv.cli import main

F = "[X + Y^2 + 2*X^2*Y + X^4, Y + X^2] over QQ[X,Y]"

print("exit", main(["invert", F]))
print("exit", main(["invert", F, "--engine", "both", "--format", "machine"]))
print("exit", main(["invert", "[x + 2*y + 4*x^2, y + 2*x^2] over ZZ[x,y]", "--filtration", "padic:2"]))

# affine maps are normalised first
print("exit", main(["invert", "[1 + y, 2 + x + y^3] over QQ[x,y]"]))

print("exit", main(["preimage", F, "--point", "(1, 1)"]))
print("exit", main(["gb-preimage", "[x + y^2, y + x^2] over QQ[x,y]", "--curve", "[t, t] over QQ[t]"]))
print("exit", main(["bench", "--seed", "7", "--count", "5"]))
