"""Embedded projective varieties and linear algebra on graded pieces.

A variety is presented by the homogeneous generators of its ideal plus the
caller's values for its dimension and degree.  Everything here is linear
algebra in a fixed degree; no Groebner bases are computed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

from .exactalg import (
    QQ,
    DomainError,
    MultiPoly,
    binary_coefficients,
    binary_gcd,
    is_squarefree_binary,
    monomials_of_degree,
)
from .matrices import SparseEchelon, det_poly
from .resultants import resultant_in

__all__ = [
    "VarietyPresentation",
    "GradedPieceBasis",
    "CapabilityError",
    "HilbertBoundViolation",
    "SmoothnessResult",
    "ideal_graded_piece",
    "hilbert_bound",
    "validate_hilbert_bound",
    "estimate_dim_degree",
    "forms_without_common_zero",
    "jacobian_minor_system",
    "smoothness_check",
    "points_mod_p",
]


class CapabilityError(DomainError):
    """The requested verification is outside the supported variety classes."""


class HilbertBoundViolation(ValueError):
    """``dim k[X]_l`` exceeded the fixed Hilbert-type bound at some level."""


@dataclass(frozen=True)
class VarietyPresentation:
    """``X`` in ``P^n`` given by generators of its (assumed prime) ideal.

    ``dim`` and ``degree`` are supplied by the caller; see
    :func:`estimate_dim_degree` for a desk-scale cross-check.
    """

    variables: tuple[str, ...]
    generators: tuple[MultiPoly, ...]
    dim: int
    degree: int

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        gens = tuple(g.embed(self.variables) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        n = len(self.variables) - 1
        if n < 0:
            raise DomainError("a projective space needs at least one coordinate")
        for g in gens:
            if g.domain != QQ:
                raise DomainError("generators must have rational coefficients")
            if g.is_zero() or not g.is_homogeneous():
                raise DomainError(f"generator {g} is not a nonzero form")
        if not 0 <= self.dim <= n:
            raise DomainError(f"dim {self.dim} outside [0, {n}]")
        if self.degree < 1:
            raise DomainError("degree must be at least 1")

    @property
    def ambient_dim(self) -> int:
        return len(self.variables) - 1

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    @property
    def max_generator_degree(self) -> int:
        return max((g.total_degree() for g in self.generators), default=0)

    @classmethod
    def projective_space(cls, n: int, names: Sequence[str] | None = None) -> "VarietyPresentation":
        names = tuple(names) if names else tuple(f"X{i}" for i in range(n + 1))
        return cls(names, (), n, 1)

    @classmethod
    def hypersurface(cls, f: MultiPoly) -> "VarietyPresentation":
        return cls(f.variables, (f,), f.nvars - 2, f.total_degree())

    def contains_point(self, point: Sequence) -> bool:
        if len(point) != len(self.variables) or not any(point):
            return False
        return all(g.evaluate(point) == 0 for g in self.generators)

    def contains_point_mod(self, point: Sequence[int], p: int) -> bool:
        if len(point) != len(self.variables) or not any(x % p for x in point):
            return False
        return all(g.evaluate_mod(point, p) == 0 for g in self.generators)


@dataclass(frozen=True, eq=False)
class GradedPieceBasis:
    """The degree-``level`` pieces of ``I_X`` and ``k[X]``.

    ``standard_monomials`` (those that are not leading monomials of the
    echelonized ideal piece) represent a basis of ``k[X]_level``.
    """

    level: int
    monomials: tuple
    ideal_rank: int
    quotient_dim: int
    standard_monomials: tuple
    echelon: SparseEchelon = field(repr=False)
    _nf: dict = field(default_factory=dict, repr=False)

    def normal_form_monomial(self, e) -> dict:
        got = self._nf.get(e)
        if got is None:
            got = self.echelon.reduce({e: Fraction(1)})
            self._nf[e] = got
        return got

    def normal_form(self, terms) -> dict:
        """Reduce ``{exponent: coeff}`` of degree ``level`` to standard monomials."""
        out: dict = {}
        for e, c in terms.items():
            for k, v in self.normal_form_monomial(e).items():
                s = out.get(k, 0) + c * v
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    @property
    def index(self) -> dict:
        return {e: i for i, e in enumerate(self.standard_monomials)}


@lru_cache(maxsize=256)
def ideal_graded_piece(V: VarietyPresentation, level: int) -> GradedPieceBasis:
    """Row space of ``{mono * g}`` in degree ``level``, by exact elimination."""
    if level < 0:
        raise DomainError("level must be nonnegative")
    nv = len(V.variables)
    monos = tuple(monomials_of_degree(nv, level))
    ech = SparseEchelon()
    for g in V.generators:
        dg = g.total_degree()
        if dg > level:
            continue
        for mu in monomials_of_degree(nv, level - dg):
            row = {tuple(a + b for a, b in zip(mu, e)): c for e, c in g.terms.items()}
            ech.insert(row)
    std = tuple(e for e in monos if e not in ech.rows)
    return GradedPieceBasis(level, monos, len(ech), len(monos) - len(ech), std, ech)


def hilbert_bound(V: VarietyPresentation, level: int) -> int:
    """The fixed bound ``deg X * (l + dim X)^dim X`` (``deg X`` for points)."""
    if level < 0:
        raise DomainError("level must be nonnegative")
    if V.dim == 0:
        return V.degree
    return V.degree * (level + V.dim) ** V.dim


def validate_hilbert_bound(V: VarietyPresentation, cap: int = 12) -> list[tuple[int, int, int]]:
    """Check ``dim k[X]_l <= hilbert_bound`` for ``l = 0..cap``.

    Returns the table ``(l, quotient_dim, bound)``; raises on a violation.
    """
    table = []
    for l in range(cap + 1):
        q = ideal_graded_piece(V, l).quotient_dim
        b = hilbert_bound(V, l)
        table.append((l, q, b))
        if q > b:
            raise HilbertBoundViolation(
                f"dim k[X]_{l} = {q} exceeds the bound {b}; check dim/degree of the presentation")
    return table


def estimate_dim_degree(V: VarietyPresentation, start: int | None = None) -> tuple[int, int]:
    """Dimension and degree read off finite differences of ``dim k[X]_l``.

    Uses the window ``start .. start + ambient_dim + 1``; the Hilbert
    function must already agree with the Hilbert polynomial there.
    """
    if start is None:
        start = 2 * V.max_generator_degree + 2
    n = V.ambient_dim
    vals = [ideal_graded_piece(V, start + i).quotient_dim for i in range(n + 2)]
    diffs = [vals]
    while len(diffs[-1]) > 1:
        d = diffs[-1]
        diffs.append([d[i + 1] - d[i] for i in range(len(d) - 1)])
    for k in range(n + 1):
        if all(v == 0 for v in diffs[k + 1]):
            return k, diffs[k][0]
    return n, diffs[n][0]


def forms_without_common_zero(V: VarietyPresentation, forms: Sequence[MultiPoly],
                              level: int | None = None) -> bool:
    """True iff the forms have no common zero on ``X`` (over the closure).

    Tests whether the forms generate all of ``k[X]_l`` at the effective
    Nullstellensatz level ``l = deg X * p^(dim X + 1)``.
    """
    forms = [f.embed(V.variables) for f in forms if not f.is_zero()]
    if not forms:
        return V.dim < 0
    if any(f.total_degree() == 0 for f in forms):
        return True
    p = max(f.total_degree() for f in forms)
    if level is None:
        level = V.degree * p ** (V.dim + 1)
    target = ideal_graded_piece(V, level)
    if target.quotient_dim == 0:
        return True
    ech = SparseEchelon()
    for f in forms:
        src = ideal_graded_piece(V, level - f.total_degree())
        for mu in src.standard_monomials:
            prod = {tuple(a + b for a, b in zip(mu, e)): c for e, c in f.terms.items()}
            ech.insert(target.normal_form(prod))
            if len(ech) == target.quotient_dim:
                return True
    return False


def jacobian_minor_system(polys: Sequence[MultiPoly], codim: int,
                          wrt: Sequence[str] | None = None) -> list[MultiPoly]:
    """Determinants of all ``codim x codim`` minors of ``(d polys_i / d x_j)``.

    ``wrt`` restricts the columns to a block of variables (default: all).
    Minors are listed row-combination major, both in lexicographic order.
    """
    polys = list(polys)
    if not polys:
        raise DomainError("empty polynomial list")
    for f in polys[1:]:
        polys[0]._check(f)
    cols = tuple(wrt) if wrt is not None else polys[0].variables
    if not 1 <= codim <= min(len(polys), len(cols)):
        raise DomainError(f"minor size {codim} out of range")
    J = [[f.diff(x) for x in cols] for f in polys]
    out = []
    for rs in combinations(range(len(polys)), codim):
        for cs in combinations(range(len(cols)), codim):
            sub = [[J[r][c] for c in cs] for r in rs]
            if codim == 1:
                out.append(sub[0][0])
            elif codim == 2:
                out.append(sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0])
            else:
                out.append(det_poly(sub))
    return out


def points_mod_p(V: VarietyPresentation, p: int) -> Iterator[tuple[int, ...]]:
    """Normalized ``GF(p)``-points of ``X`` (generators reduced mod ``p``)."""
    n = V.ambient_dim
    for lead in range(n + 1):
        for tail in product(range(p), repeat=n - lead):
            pt = (0,) * lead + (1,) + tail
            if all(g.evaluate_mod(pt, p) == 0 for g in V.generators):
                yield pt


# --- smoothness of hyperplane sections -----------------------------------


@dataclass(frozen=True)
class SmoothnessResult:
    smooth: bool
    witness: tuple | None = None
    detail: str = ""

    def __bool__(self):
        return self.smooth


def _binary_root(G: MultiPoly) -> tuple | None:
    """A rational root of a binary form when one is cheap to read off."""
    c = binary_coefficients(G)
    if c[0] == 0:
        return (Fraction(0), Fraction(1))
    if c[-1] == 0:
        return (Fraction(1), Fraction(0))
    if len(c) == 2:
        # c1*x0 + c0*x1 = 0
        return (-c[0], c[1])
    return None


def _check_P1(s: MultiPoly) -> SmoothnessResult:
    if not s.is_homogeneous():
        raise DomainError("section is not a form")
    if s.is_zero():
        return SmoothnessResult(False, None, "section vanishes identically")
    if s.total_degree() == 0:
        return SmoothnessResult(True, None, "empty divisor")
    x0, x1 = s.variables
    G = binary_gcd(s, binary_gcd(s.diff(x0), s.diff(x1)))
    if G.total_degree() == 0:
        return SmoothnessResult(True, None, "squarefree binary form")
    return SmoothnessResult(False, _binary_root(G), f"repeated factor {G}")


def _centers(limit_family: int):
    """Projection centres on two fixed irreducible conics (o2 or o1 = 1)."""
    ts = [0]
    for k in range(1, limit_family + 1):
        ts += [k, -k]
    return ([(Fraction(t), Fraction(t * t + t + 1), Fraction(1)) for t in ts],
            [(Fraction(t * t + 2), Fraction(1), Fraction(t)) for t in ts])


def _change_coords(center, variables):
    """Linear substitution sending (0:0:1) to ``center``.

    Returns the images of the coordinates (as polys in the new coordinates)
    and the 3x3 matrix ``M`` with ``X = M X'``.
    """
    k = next(i for i in (2, 1, 0) if center[i])
    a, b = [i for i in range(3) if i != k]
    M = [[Fraction(0)] * 3 for _ in range(3)]
    M[a][0] = Fraction(1)
    M[b][1] = Fraction(1)
    for i in range(3):
        M[i][2] = Fraction(center[i])
    xs = MultiPoly.variables_of(variables)
    images = [sum((xs[j] * M[i][j] for j in range(3) if M[i][j]), MultiPoly.zero(variables))
              for i in range(3)]
    return images, M


def _lift_witness(Q: MultiPoly, f: MultiPoly, g: MultiPoly, M, variables) -> tuple | None:
    root = _binary_root(Q) if Q.total_degree() >= 1 else None
    if root is None:
        return None
    a0, a1 = root
    # points (a0 : a1 : t) on the line through the centre; common root in t
    t_vars = (variables[2], "_h")
    sub = [MultiPoly.constant(t_vars, a0) * MultiPoly.var(t_vars, "_h"),
           MultiPoly.constant(t_vars, a1) * MultiPoly.var(t_vars, "_h"),
           MultiPoly.var(t_vars, variables[2])]
    ff, gg = f.compose(sub), g.compose(sub)
    if ff.is_zero() or gg.is_zero():
        return None
    G = binary_gcd(ff, gg) if ff.is_homogeneous() and gg.is_homogeneous() else None
    if G is None or G.total_degree() < 1:
        return None
    r = _binary_root(G)
    if r is None or r[1] == 0:
        return None
    t = r[0] / r[1]
    xp = (a0, a1, t)
    X = tuple(sum(M[i][j] * xp[j] for j in range(3)) for i in range(3))
    den = next(x for x in X if x)
    return tuple(x / den for x in X)


def _projection_test(pairs, D_bad_lines: int, variables, label: str) -> SmoothnessResult:
    """Shared loop: ``pairs(center)`` gives the two transformed forms whose
    resultant in the last coordinate must be squarefree."""
    need = 2 * D_bad_lines + 1
    last = None
    for family in _centers(4 * need + 8):
        usable = skipped = 0
        for center in family:
            got = pairs(center)
            if got is None:
                skipped += 1
                if skipped > 4 * need + 8:
                    break
                continue
            usable += 1
            F, G, M, orig = got
            R = resultant_in(F, G, variables[2])
            if R.is_zero():
                return SmoothnessResult(False, None, f"{label}: common component")
            x0, x1 = variables[0], variables[1]
            if R.total_degree() == 0:
                return SmoothnessResult(True, None, f"{label}: empty intersection")
            Q = binary_gcd(R, binary_gcd(R.diff(x0), R.diff(x1)))
            if Q.total_degree() == 0:
                return SmoothnessResult(True, None, f"{label}: squarefree resultant at centre {tuple(map(str, center))}")
            last = (Q, F, G, M)
            if usable >= need:
                w = _lift_witness(Q, F, G, M, variables)
                return SmoothnessResult(False, w, f"{label}: repeated factor {Q} for {usable} centres")
    if last is None:
        raise CapabilityError("no usable projection centre found")
    Q, F, G, M = last
    return SmoothnessResult(False, _lift_witness(Q, F, G, M, variables), f"{label}: repeated factor {Q}")


def smoothness_check(V: VarietyPresentation, s: MultiPoly) -> SmoothnessResult:
    """Is the hyperplane section ``{s = 0}`` of ``X`` smooth?

    Supported: ``X = P^1`` (squarefreeness), ``X`` a plane curve
    (transversality of ``X`` and ``{s = 0}``) and ``X = P^2`` (smoothness of
    the plane curve ``{s = 0}``).  The plane cases project from centres
    ``O`` and test the resultant in the last coordinate for squarefreeness;
    for a smooth section only finitely many lines through two special
    points spoil this, and each such line meets the centre conic at most
    twice, so ``2 * (#lines) + 1`` usable centres decide the question.
    """
    s = s.embed(V.variables)
    n = V.ambient_dim
    if n == 1 and not V.generators:
        return _check_P1(s)
    if n != 2 or V.dim == 0:
        raise CapabilityError(f"smoothness verification is not supported for {V}")
    if not s.is_homogeneous():
        raise DomainError("section is not a form")
    if s.is_zero():
        return SmoothnessResult(False, None, "section vanishes identically")
    d = s.total_degree()
    variables = V.variables
    if V.dim == 2 and not V.generators:
        if d == 0:
            return SmoothnessResult(True, None, "empty divisor")
        bad = max(0, 3 * d * (d - 2) + d * (d - 2) * (d - 3) * (d + 3) // 2)

        def pairs(center):
            if s.evaluate(center) == 0:
                return None
            images, M = _change_coords(center, variables)
            st = s.compose(images)
            return st, st.diff(variables[2]), M, s
        return _projection_test(pairs, bad, variables, "plane curve")
    if V.dim == 1 and len(V.generators) == 1:
        g = V.generators[0]
        if d == 0:
            return SmoothnessResult(True, None, "empty divisor")
        D = g.total_degree() * d
        bad = D * (D - 1) // 2

        def pairs(center):
            if g.evaluate(center) == 0 or s.evaluate(center) == 0:
                return None
            images, M = _change_coords(center, variables)
            return g.compose(images), s.compose(images), M, s
        return _projection_test(pairs, bad, variables, "curve section")
    raise CapabilityError("only P^1, P^2 and plane curves given by one equation are supported")
