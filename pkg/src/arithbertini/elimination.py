"""Hypersurfaces of bounded degree containing the projection of a
bihomogeneous system on ``X x P^m``.

Given ``u_1, ..., u_h`` bihomogeneous in ``(X; Y)``, the map
``T(y): (f_i) -> sum_i u_i(X; y) f_i`` from ``sum_i k[X]_{l - deg_X u_i}`` to
``k[X]_l`` is surjective exactly when ``y`` is off the projection (for ``l``
at the effective Nullstellensatz level).  Any maximal minor of ``T(Y)``
that is not identically zero therefore cuts out a hypersurface containing
the projection.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactalg import QQ, BiDegree, DomainError, MultiPoly, bidegree
from .matrices import det_poly, det_rational, rank_profile_mod_p
from .resultants import sylvester_matrix
from .variety import VarietyPresentation, hilbert_bound, ideal_graded_piece

__all__ = [
    "BiSystem",
    "TMatrix",
    "MinorDeterminant",
    "HypersurfaceCertificate",
    "NoNonzeroMinor",
    "ProjectionMayCoverSpace",
    "nullstellensatz_exponent",
    "build_T_matrix",
    "locate_nonzero_minor",
    "find_nonzero_minor",
    "eliminate_projection",
    "sylvester_resultant",
    "SPECIALIZATION_PRIME",
]

SPECIALIZATION_PRIME = (1 << 61) - 1
MAX_RETRIES = 32


class NoNonzeroMinor(ArithmeticError):
    """Every specialization of the matrix had rank below the requested size."""


class ProjectionMayCoverSpace(ArithmeticError):
    """No nonzero maximal minor was found.

    Either the projection is all of ``P^m`` (the properness hypothesis
    fails) or the working exponent is too small for a non-prime ideal.
    """


@dataclass(frozen=True)
class BiSystem:
    """Equations in ``variety.variables + y_vars``, reduced modulo ``I_X``.

    ``p_bound``/``q_bound`` are declared upper bounds for the X- and
    Y-degrees; they default to the actual maxima.
    """

    variety: VarietyPresentation
    equations: tuple[MultiPoly, ...]
    y_vars: tuple[str, ...]
    p_bound: int | None = None
    q_bound: int | None = None

    def __post_init__(self):
        xs, ys = self.variety.variables, tuple(self.y_vars)
        if set(xs) & set(ys):
            raise DomainError("X and Y variable names overlap")
        allv = xs + ys
        eqs = tuple(u.embed(allv) for u in self.equations)
        object.__setattr__(self, "y_vars", ys)
        object.__setattr__(self, "equations", eqs)
        for u in eqs:
            if u.is_zero():
                continue
            degs = {(sum(e[:len(xs)]), sum(e[len(xs):])) for e in u.terms}
            if len(degs) != 1:
                raise DomainError(f"equation {u} is not bihomogeneous")
        p, q = self.actual_p, self.actual_q
        if self.p_bound is None:
            object.__setattr__(self, "p_bound", p)
        if self.q_bound is None:
            object.__setattr__(self, "q_bound", q)
        if self.p_bound < p or self.q_bound < q:
            raise DomainError("declared degree bounds are below the actual degrees")

    @property
    def x_vars(self) -> tuple[str, ...]:
        return self.variety.variables

    def bidegrees(self) -> list[BiDegree]:
        return [bidegree(u, len(self.x_vars)) for u in self.equations]

    @property
    def actual_p(self) -> int:
        return max((b.deg_x for b in self.bidegrees()), default=0)

    @property
    def actual_q(self) -> int:
        return max((b.deg_y for b in self.bidegrees()), default=0)

    def specialize(self, y_point: Sequence) -> list[MultiPoly]:
        """The X-equations obtained by fixing ``Y = y_point``."""
        n = len(self.x_vars)
        if len(y_point) != len(self.y_vars):
            raise DomainError("Y-point has the wrong length")
        xs = MultiPoly.variables_of(self.x_vars)
        images = xs + [MultiPoly.constant(self.x_vars, c) for c in y_point]
        return [u.compose(images) for u in self.equations]


def nullstellensatz_exponent(V: VarietyPresentation, p: int) -> int:
    """Working exponent ``deg X * p^(dim X + 1)``."""
    if p < 1:
        raise DomainError("p must be at least 1")
    return V.degree * p ** (V.dim + 1)


@dataclass(frozen=True, eq=False)
class TMatrix:
    """Matrix of ``T(Y)``: rows are standard monomials of ``k[X]_ell``,
    columns are pairs ``(equation index, standard monomial)``."""

    ell: int
    y_vars: tuple[str, ...]
    rows: tuple
    cols: tuple
    entries: list = field(repr=False)
    col_degrees: tuple = field(repr=False)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)


def build_T_matrix(sys: BiSystem, ell: int) -> TMatrix:
    V = sys.variety
    n = len(sys.x_vars)
    bds = sys.bidegrees()
    live = [(i, u, b) for i, (u, b) in enumerate(zip(sys.equations, bds)) if not u.is_zero()]
    if any(b.deg_x > ell for _, _, b in live):
        raise DomainError(f"ell = {ell} is below an equation's X-degree")
    tgt = ideal_graded_piece(V, ell)
    index = tgt.index
    zero = MultiPoly.zero(sys.y_vars)
    rows = tgt.standard_monomials
    cols, columns, cdeg = [], [], []
    for i, u, b in live:
        parts = u.coefficients_in(sys.x_vars)  # {beta: c_beta(Y)}
        parts = {beta: c.embed(sys.y_vars) for beta, c in parts.items()}
        src = ideal_graded_piece(V, ell - b.deg_x)
        for mu in src.standard_monomials:
            col: dict[int, MultiPoly] = {}
            for beta, c in parts.items():
                e = tuple(a + bb for a, bb in zip(mu, beta))
                for k, v in tgt.normal_form_monomial(e).items():
                    r = index[k]
                    col[r] = col.get(r, zero) + c * v
            cols.append((i, mu))
            columns.append(col)
            cdeg.append(b.deg_y)
    entries = [[columns[j].get(r, zero) for j in range(len(cols))] for r in range(len(rows))]
    return TMatrix(ell, sys.y_vars, rows, tuple(cols), entries, tuple(cdeg))


def _specialize_mod(mat: Sequence[Sequence[MultiPoly]], point, p):
    return [[e.evaluate_mod(point, p) if e.terms else 0 for e in row] for row in mat]


def locate_nonzero_minor(mat: Sequence[Sequence[MultiPoly]], r: int,
                         seed: int = 0) -> tuple[list[int], list[int]]:
    """Rows and columns of an ``r x r`` minor that is not identically zero.

    Specializes ``Y`` at random points modulo a 61-bit prime; a minor that
    is invertible after specialization is nonzero as a polynomial.
    """
    if not mat or r < 1:
        raise DomainError("minor size must be positive")
    nr, nc = len(mat), len(mat[0])
    if r > min(nr, nc):
        raise NoNonzeroMinor(f"a {r}x{r} minor does not fit in a {nr}x{nc} matrix")
    nvars = next((e.nvars for row in mat for e in row), 0)
    rng = random.Random(seed)
    p = SPECIALIZATION_PRIME
    best = 0
    for _ in range(MAX_RETRIES):
        point = [rng.randrange(1, p) for _ in range(nvars)]
        prow, pcol = rank_profile_mod_p(_specialize_mod(mat, point, p), p)
        best = max(best, len(prow))
        if len(prow) >= r:
            return prow[:r], pcol[:r]
    raise NoNonzeroMinor(f"rank stayed at {best} < {r} over {MAX_RETRIES} specializations")


def find_nonzero_minor(mat: Sequence[Sequence[MultiPoly]], r: int, seed: int = 0) -> MultiPoly:
    """Expanded determinant of a nonzero ``r x r`` minor."""
    rows, cols = locate_nonzero_minor(mat, r, seed)
    return det_poly([[mat[i][j] for j in cols] for i in rows])


@dataclass(frozen=True, eq=False)
class MinorDeterminant:
    """An unexpanded determinant, evaluated exactly on demand."""

    y_vars: tuple[str, ...]
    matrix: tuple = field(repr=False)

    def evaluate(self, point: Sequence) -> Fraction:
        return Fraction(det_rational([[e.evaluate(point) if e.terms else 0 for e in row]
                                      for row in self.matrix]))

    def evaluate_mod(self, point: Sequence[int], p: int) -> int:
        from .matrices import det_int
        return det_int([[e.evaluate_mod(point, p) if e.terms else 0 for e in row]
                        for row in self.matrix]) % p

    def expand(self) -> MultiPoly:
        return det_poly([list(r) for r in self.matrix])

    @property
    def size(self) -> int:
        return len(self.matrix)


@dataclass(frozen=True, eq=False)
class HypersurfaceCertificate:
    """A nonzero form in ``Y`` vanishing on the projection of ``Z``.

    ``poly`` is an expanded primitive :class:`MultiPoly` or, for large
    minors, a :class:`MinorDeterminant`; ``degree`` is exact either way
    since the minor is homogeneous.
    """

    poly: MultiPoly | MinorDeterminant
    degree: int
    degree_bound: int
    witness_point: tuple
    seed: int
    ell: int
    y_vars: tuple[str, ...]

    @property
    def expanded(self) -> bool:
        return isinstance(self.poly, MultiPoly)

    def evaluate(self, point: Sequence) -> Fraction:
        return Fraction(self.poly.evaluate(point))

    def vanishes_at(self, point: Sequence) -> bool:
        return self.evaluate(point) == 0

    def vanishes_at_mod(self, point: Sequence[int], p: int) -> bool:
        return self.poly.evaluate_mod(point, p) == 0


def _witness(poly, nvars: int, degree: int, rng: random.Random) -> tuple:
    bound = max(2, degree + 1)
    for attempt in range(200):
        pt = tuple(rng.randint(-bound, bound) for _ in range(nvars))
        if any(pt) and poly.evaluate(pt) != 0:
            return pt
        if attempt % 20 == 19:
            bound *= 4
    raise ArithmeticError("could not find a point off a nonzero hypersurface")


def eliminate_projection(sys: BiSystem, seed: int = 0, expand_limit: int = 10) -> HypersurfaceCertificate:
    """Degree-bounded hypersurface containing ``pr_2(Z)``.

    Minors of size at most ``expand_limit`` are expanded; larger ones are
    kept in determinantal form.
    """
    V = sys.variety
    p = max(sys.actual_p, 1)
    ell = nullstellensatz_exponent(V, p)
    T = build_T_matrix(sys, ell)
    r = len(T.rows)
    try:
        rows, cols = locate_nonzero_minor(T.entries, r, seed)
    except NoNonzeroMinor as exc:
        raise ProjectionMayCoverSpace(
            f"{exc}; either the projection is all of P^{len(sys.y_vars) - 1} "
            f"or ell = {ell} is too small for this ideal") from exc
    sub = tuple(tuple(T.entries[i][j] for j in cols) for i in rows)
    degree = sum(T.col_degrees[j] for j in cols)
    if r <= expand_limit:
        poly = det_poly([list(row) for row in sub])
        if poly.domain == QQ:
            poly = poly.primitive()
    else:
        poly = MinorDeterminant(sys.y_vars, sub)
    bound = hilbert_bound(V, ell) * sys.q_bound
    wp = _witness(poly, len(sys.y_vars), degree, random.Random(seed + 1))
    return HypersurfaceCertificate(poly, degree, bound, wp, seed, ell, sys.y_vars)


def sylvester_resultant(f: MultiPoly, g: MultiPoly, binary_vars: Sequence[str] | None = None):
    """Resultant of two binary forms.

    Coefficient lists run from the top power of the first binary variable
    down, with the rows for ``f`` first.  Other variables are parameters:
    the result is a Fraction without parameters, else a MultiPoly in them.
    """
    f._check(g)
    if binary_vars is None:
        if f.nvars != 2:
            raise DomainError("name the two binary variables when parameters are present")
        binary_vars = f.variables
    x0, x1 = binary_vars
    rest = tuple(v for v in f.variables if v not in (x0, x1))

    def coeffs(h):
        parts = h.coefficients_in((x0, x1))
        degs = {a + b for a, b in parts}
        if len(degs) != 1:
            raise DomainError(f"{h} is not a binary form in {x0}, {x1}")
        d = degs.pop()
        zero = MultiPoly.zero(rest, h.domain)
        return [parts.get((d - k, k), zero) for k in range(d + 1)]

    if f.is_zero() or g.is_zero():
        return Fraction(0) if not rest else MultiPoly.zero(rest, f.domain)
    fc, gc = coeffs(f), coeffs(g)
    if len(fc) + len(gc) == 2:
        S = []
    else:
        S = sylvester_matrix(fc, gc, MultiPoly.zero(rest, f.domain))
    if not rest:
        if not S:
            return Fraction(1)
        return Fraction(det_rational([[c.constant_value() for c in row] for row in S]))
    if not S:
        return MultiPoly.constant(rest, 1, f.domain)
    return det_poly(S)
