"""Sylvester matrices and resultants with polynomial coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exactalg import QQ, DomainError, MultiPoly
from .matrices import det_poly, det_rational

__all__ = ["sylvester_matrix", "resultant_in"]


def sylvester_matrix(f_coeffs: Sequence, g_coeffs: Sequence, zero) -> list[list]:
    """Sylvester matrix from coefficient lists ordered highest power first.

    The first ``deg g`` rows carry shifted copies of ``f``, the remaining
    ``deg f`` rows shifted copies of ``g``.
    """
    df, dg = len(f_coeffs) - 1, len(g_coeffs) - 1
    n = df + dg
    rows = []
    for i in range(dg):
        rows.append([zero] * i + list(f_coeffs) + [zero] * (n - i - df - 1))
    for i in range(df):
        rows.append([zero] * i + list(g_coeffs) + [zero] * (n - i - dg - 1))
    return rows


def _coeff_list(f: MultiPoly, var: str, degree: int, rest: tuple) -> list[MultiPoly]:
    parts = f.coefficients_in((var,))
    zero = MultiPoly.zero(rest, f.domain)
    out = [zero] * (degree + 1)
    for (k,), c in parts.items():
        if k > degree:
            raise DomainError(f"degree in {var} exceeds the formal degree {degree}")
        out[degree - k] = c
    return out


def resultant_in(f: MultiPoly, g: MultiPoly, var: str,
                 df: int | None = None, dg: int | None = None) -> MultiPoly:
    """Resultant of ``f`` and ``g`` with respect to ``var``.

    ``df``/``dg`` are formal degrees (default: actual degrees in ``var``).
    The result is a polynomial in the remaining variables.
    """
    f._check(g)
    if f.is_zero() or g.is_zero():
        raise DomainError("resultant with the zero polynomial")
    df = f.degree_in(var) if df is None else df
    dg = g.degree_in(var) if dg is None else dg
    rest = tuple(v for v in f.variables if v != var)
    fc = _coeff_list(f, var, df, rest)
    gc = _coeff_list(g, var, dg, rest)
    if df + dg == 0:
        return MultiPoly.constant(rest, 1, f.domain)
    zero = MultiPoly.zero(rest, f.domain)
    S = sylvester_matrix(fc, gc, zero)
    if not rest and f.domain == QQ:
        val = det_rational([[c.constant_value() for c in row] for row in S])
        return MultiPoly.constant(rest, Fraction(val))
    return det_poly(S)
