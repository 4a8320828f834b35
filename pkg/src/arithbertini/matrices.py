"""Exact determinants, modular rank profiles and sparse echelon forms."""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .exactalg import DomainError, MultiPoly

__all__ = [
    "det_int",
    "det_rational",
    "det_poly",
    "det_cofactor",
    "rank_profile_mod_p",
    "SparseEchelon",
]


def _square(M) -> int:
    n = len(M)
    if any(len(row) != n for row in M):
        raise DomainError("determinant of a non-square matrix")
    return n


def det_int(M: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination over the integers."""
    n = _square(M)
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        rowk = A[k]
        for i in range(k + 1, n):
            rowi = A[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (akk * rowi[j] - aik * rowk[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


def det_rational(M: Sequence[Sequence]) -> Fraction:
    """Determinant of a rational matrix: clear row denominators, then Bareiss."""
    n = _square(M)
    scale = Fraction(1)
    rows = []
    for row in M:
        row = [Fraction(x) for x in row]
        den = 1
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
        rows.append([int(x * den) for x in row])
        scale /= den
    return det_int(rows) * scale if n else Fraction(1)


def det_poly(M: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Bareiss elimination over a polynomial ring; every division is exact."""
    n = _square(M)
    if n == 0:
        raise DomainError("empty polynomial matrix")
    A = [list(row) for row in M]
    one = MultiPoly.constant(A[0][0].variables, 1, A[0][0].domain)
    sign, prev = 1, one
    for k in range(n - 1):
        if A[k][k].is_zero():
            # prefer the sparsest available pivot
            cands = [i for i in range(k + 1, n) if not A[i][k].is_zero()]
            if not cands:
                return A[0][0] * 0
            i = min(cands, key=lambda r: len(A[r][k]))
            A[k], A[i] = A[i], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            for j in range(k + 1, n):
                num = akk * A[i][j] - aik * A[k][j]
                A[i][j] = num if prev == one else num.exact_div(prev)
        prev = akk
    d = A[n - 1][n - 1]
    return d if sign == 1 else -d


def det_cofactor(M: Sequence[Sequence]):
    """Leibniz expansion; only meant as an independent check for small sizes."""
    n = _square(M)
    if n > 6:
        raise DomainError("cofactor expansion is reserved for tiny matrices")
    total = None
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = None
        for i, j in enumerate(perm):
            term = M[i][j] if term is None else term * M[i][j]
        if term is None:
            term = 1
        if inv % 2:
            term = -term
        total = term if total is None else total + term
    return total


def rank_profile_mod_p(M: Sequence[Sequence[int]], p: int) -> tuple[list[int], list[int]]:
    """Pivot rows and pivot columns from Gaussian elimination mod ``p``.

    Columns are scanned left to right and the first usable row (in original
    order) becomes the pivot, so the submatrix on the returned rows and
    columns is invertible mod ``p``.
    """
    if not M:
        return [], []
    nrows, ncols = len(M), len(M[0])
    A = [[x % p for x in row] for row in M]
    free_rows = list(range(nrows))
    piv_rows, piv_cols = [], []
    for j in range(ncols):
        r = next((i for i in free_rows if A[i][j]), None)
        if r is None:
            continue
        free_rows.remove(r)
        piv_rows.append(r)
        piv_cols.append(j)
        inv = pow(A[r][j], -1, p)
        rowr = A[r]
        for i in free_rows:
            f = A[i][j]
            if f:
                f = f * inv % p
                rowi = A[i]
                for jj in range(j, ncols):
                    if rowr[jj]:
                        rowi[jj] = (rowi[jj] - f * rowr[jj]) % p
        if not free_rows:
            break
    return piv_rows, piv_cols


class SparseEchelon:
    """Rational row space with rows keyed by their largest key.

    Vectors are dicts from comparable keys (exponent tuples of equal
    degree) to nonzero Fractions.  Each stored row has leading coefficient 1
    and all of its other keys are smaller than the leading key.
    """

    def __init__(self):
        self.rows: dict = {}

    def __len__(self):
        return len(self.rows)

    def _subtract(self, vec: dict, key, coeff):
        for k, c in self.rows[key].items():
            v = vec.get(k, 0) - coeff * c
            if v:
                vec[k] = v
            else:
                vec.pop(k, None)

    def insert(self, vec: dict) -> bool:
        """Add a vector; returns False when it was already in the span."""
        vec = {k: Fraction(c) for k, c in vec.items() if c}
        while vec:
            lead = max(vec)
            if lead in self.rows:
                self._subtract(vec, lead, vec[lead])
                continue
            inv = 1 / vec[lead]
            self.rows[lead] = {k: c * inv for k, c in vec.items()}
            return True
        return False

    def reduce(self, vec: dict) -> dict:
        """Fully reduced remainder: no key of the result is a leading key."""
        vec = {k: Fraction(c) for k, c in vec.items() if c}
        rows = self.rows
        while True:
            hits = [k for k in vec if k in rows]
            if not hits:
                return vec
            k = max(hits)
            self._subtract(vec, k, vec[k])
