"""
The Gromov-Witten side as a trace of operators
==============================================

The section-class partition function is a sum of traces of interleaved
products of five 3x3 operators.  For one fibre class (r = 1) the sum
collapses to a closed form; we compute it three ways.
"""

from gwdt.tqft import GwInput, build_operators, interleave_sum, z_closed_r1, z_proof_form, z_trace

ops = build_operators()
print("A[0,0] =", ops.A[0, 0].render())
print("N[2,0] =", ops.N[2, 0].render())

# (U^2, V) is the sum of the three words with two U's and one V.
U, V = ops.M1, ops.N
assert interleave_sum(U, V, 2, 1) == U @ U @ V + U @ V @ U + V @ U @ U

for g, k1, k2 in [(1, -2, -2), (2, -2, -2), (3, -2, -3)]:
    inp = GwInput(g, k1, k2, r=1)
    z = z_trace(inp)
    same = z == z_closed_r1(inp) == z_proof_form(inp)
    (deg,) = z.degrees()
    print(f"g={g} k=({k1},{k2}): phi^{deg} * {z.coeff(deg).pretty()}   three routes agree: {same}")

# Other fibre multiplicities have no closed form, but the trace sum still runs.
z2 = z_trace(GwInput(2, -2, -3, r=2))
print("r = 2 lives in phi degree", sorted(z2.degrees()))
