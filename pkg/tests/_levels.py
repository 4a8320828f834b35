"""Coordinates of sections in a level basis, solved exactly (test helper)."""

from fractions import Fraction

import sympy

from arithbertini.bertini import level_basis
from arithbertini.variety import ideal_graded_piece


def coords_in_level_basis(S, m, s):
    basis = [f for _, f in level_basis(S, m)]
    piece = ideal_graded_piece(S.variety, m * S.d)
    idx = piece.index
    M = sympy.zeros(len(idx), len(basis))
    for j, f in enumerate(basis):
        for k, v in piece.normal_form(f.terms).items():
            M[idx[k], j] = sympy.Rational(v.numerator, v.denominator)
    b = sympy.zeros(len(idx), 1)
    for k, v in piece.normal_form(s.terms).items():
        b[idx[k], 0] = sympy.Rational(v.numerator, v.denominator)
    sol, params = M.gauss_jordan_solve(b)
    assert not params.free_symbols
    return [Fraction(int(x.p), int(x.q)) for x in sol]
