"""
Finding a nonvanishing point on a small grid, and residue offsets that keep
a section nonzero at points over finite fields.
"""
from arithbertini import MultiPoly
from arithbertini.cnsolve import GridSpec, PolyOracle, cn_search, combined_grid_search, poschr_offsets

names = ("v1", "v2", "v3")
f = MultiPoly.parse("(v1 - 1)*(v1 - 2)*v2*(v3 - 1)", names)
u = PolyOracle.from_poly(f)
# degree 4, so five values per coordinate are enough
print("first nonzero point:", cn_search(u, GridSpec.ranges(3, 5)))

x0, x1 = MultiPoly.variables_of(("X0", "X1"))
basis = [x0 ** 2, x0 * x1, x1 ** 2]
points = [((1, 1), 2), ((0, 1), 3)]
off = poschr_offsets(basis, points)
print("offsets:", off.offsets, "modulo", off.F)

# any c = a + F b keeps the residues nonzero; search among those
g = PolyOracle(3, 1, lambda c: c[0] - c[2])
c = combined_grid_search(g, off, 2)
s = sum((e * k for e, k in zip(basis, c)), MultiPoly.zero(("X0", "X1")))
print("coefficients:", c, " section:", s)
print("residues:", [s.evaluate_mod(pt, p) for pt, p in points])
