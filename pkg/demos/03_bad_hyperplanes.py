"""
Degree bounds for the bad-hyperplane locus and the locus itself.
"""
from arithbertini import LinearSeries, MultiPoly, VarietyPresentation
from arithbertini.bertini import bad_hyperplane_hypersurface, degree_bound_profile, restricted_bad_locus

P1 = VarietyPresentation.projective_space(1)
S = LinearSeries(P1, MultiPoly.variables_of(P1.variables))
prof = degree_bound_profile(S)
print("P^1 with O(1):  P(m) =", prof.P_poly, "  deg P =", prof.deg_P)

names = ("X0", "X1", "X2")
conic = VarietyPresentation(names, (MultiPoly.parse("X0*X2 - X1^2", names),), 1, 2)
Sc = LinearSeries(conic, MultiPoly.variables_of(names))
print("conic:          P(m) =", degree_bound_profile(Sc).P_poly)

for m in (1, 2, 3):
    Z = bad_hyperplane_hypersurface(S, m)
    print(f"m = {m}: empty = {Z.empty}, degree = {Z.degree}, bound = {Z.bound_value}")

# m = 2: sections a X0^2 + b X0 X1 + c X1^2 are bad on the discriminant
Z = bad_hyperplane_hypersurface(S, 2)
print("Z_2 =", Z.expanded())

# also mark the sections vanishing at (1:0); that adds the factor Y0
R = restricted_bad_locus(S, None, [(1, 0)], 2)
print("restricted locus degree:", R.degree)

# the conic needs lazy determinants; evaluate one without expanding it
Zc = bad_hyperplane_hypersurface(Sc, 1)
print("conic Z_1 degree:", Zc.degree, " value at (1,0,1):", Zc.evaluate((1, 0, 1)) != 0)
