"""
Eliminating X from a bihomogeneous system: a hypersurface in the Y-space
that contains the projection of the common zeros.
"""
from arithbertini import MultiPoly, VarietyPresentation
from arithbertini.elimination import BiSystem, eliminate_projection, sylvester_resultant

P1 = VarietyPresentation.projective_space(1)
X0, X1, Y0, Y1, Y2 = MultiPoly.variables_of(("X0", "X1", "Y0", "Y1", "Y2"))

# binary quadrics Y0 X0^2 + Y1 X0 X1 + Y2 X1^2 with a double root
w = Y0 * X0 ** 2 + Y1 * X0 * X1 + Y2 * X1 ** 2
sys_ = BiSystem(P1, (w, w.diff("X0"), w.diff("X1")), ("Y0", "Y1", "Y2"))
cert = eliminate_projection(sys_)
print("ell =", cert.ell, " degree =", cert.degree, " bound =", cert.degree_bound)
print("certificate:", cert.poly)
print("witness point off the hypersurface:", cert.witness_point)

# the same locus from a resultant: the discriminant, up to a factor Y0
a, b, c, x0, x1 = MultiPoly.variables_of(("a", "b", "c", "x0", "x1"))
q = a * x0 ** 2 + b * x0 * x1 + c * x1 ** 2
print("Res(q, dq/dx0) =", sylvester_resultant(q, q.diff("x0"), ("x0", "x1")))

# a double root at (1:2) forces the certificate to vanish
print("vanishes at (4, -4, 1):", cert.vanishes_at((4, -4, 1)))
