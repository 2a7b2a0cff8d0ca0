"""
Exact arithmetic in the equivariant parameters
==============================================

Everything downstream is a polynomial or rational function in t0, t1, t2
with Gaussian-rational coefficients.  This walks through the basic objects.
"""

from gwdt.algebra import DualP, RatFunc, dual_inverse, random_points, ratfunc_eq, t

t0, t1, t2 = t(0), t(1), t(2)

# Denominators are products of normalized linear forms, so 1/(t1-t0)
# is stored as -1/(t0-t1) and the sum below cancels exactly.
x = 1 / (t0 - t1) + 1 / (t1 - t0)
print("1/(t0-t1) + 1/(t1-t0) =", x.render())

# Common factors cancel on construction.
y = (t0**2 - t1**2) / (t0 - t1)
print("(t0^2 - t1^2)/(t0 - t1) =", y.render())

# Equality is structural, and agrees with evaluation at random points.
z = (t0 + t1 - 2 * t2) / ((t0 - t1) * (t0 - t2))
pts = random_points(5, seed=1)
print("z * (1/z) == 1:", ratfunc_eq(z * (1 / z), RatFunc.const(1)))
print("z at the first random point:", z.evaluate(pts[0]))

# Integration over the curve only ever needs first order in the point class,
# so Euler classes live in R[p]/(p^2).
e = DualP(t2 - t1, -1)
print("((t2-t1) - [p])^-1 =", dual_inverse(e))
