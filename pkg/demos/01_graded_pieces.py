"""
Graded pieces of coordinate rings and the Hilbert bound.
"""
from math import comb

from arithbertini import MultiPoly, VarietyPresentation
from arithbertini.variety import hilbert_bound, ideal_graded_piece

names = ("X0", "X1", "X2")
conic = VarietyPresentation(names, (MultiPoly.parse("X0*X2 - X1^2", names),), 1, 2)
cubic = VarietyPresentation(names, (MultiPoly.parse("X0^3 + X1^3 + X2^3", names),), 1, 3)
P2 = VarietyPresentation.projective_space(2)

print(f"{'l':>3} {'P2':>6} {'C(l+2,2)':>9} {'conic':>6} {'bound':>6} {'cubic':>6} {'bound':>6}")
for l in range(9):
    row = [ideal_graded_piece(P2, l).quotient_dim, comb(l + 2, 2)]
    for V in (conic, cubic):
        row += [ideal_graded_piece(V, l).quotient_dim, hilbert_bound(V, l)]
    print(f"{l:>3} " + " ".join(f"{x:>6}" for x in row[:1]) + f" {row[1]:>9} "
          + " ".join(f"{x:>6}" for x in row[2:]))

# standard monomials represent k[X]_3 on the conic; X1^2 reduces to X0*X2
piece = ideal_graded_piece(conic, 3)
print("standard monomials in degree 3:", ", ".join(str(MultiPoly.monomial(names, e)) for e in piece.standard_monomials))
