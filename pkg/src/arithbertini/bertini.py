"""Bad-hyperplane hypersurfaces for linear series with explicit degree bounds.

A hyperplane ``H = {sum_i Y_i e_i^(m) = 0}`` is bad when the divisor it cuts
on ``X`` is singular (or all of ``X``).  The singular points of the universal
hyperplane section are cut out by the section itself, the ideal of ``X``
and the Jacobian minors in the ``X``-variables; eliminating ``X`` from that
system yields a hypersurface ``Z_m`` of degree at most ``P(m)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Sequence

from .elimination import (
    BiSystem,
    HypersurfaceCertificate,
    ProjectionMayCoverSpace,
    eliminate_projection,
)
from .exactalg import DomainError, MultiPoly, monomials_of_degree
from .matrices import SparseEchelon, rank_profile_mod_p
from .variety import (
    VarietyPresentation,
    forms_without_common_zero,
    hilbert_bound,
    ideal_graded_piece,
    jacobian_minor_system,
)

__all__ = [
    "LinearSeries",
    "DegreeBoundProfile",
    "BadLocusCertificate",
    "UniversalSystem",
    "BadLocusCoversSpace",
    "PointInBaseLocus",
    "BoundViolation",
    "level_basis",
    "universal_hyperplane_system",
    "singular_locus_system",
    "degree_bound_profile",
    "bad_hyperplane_hypersurface",
    "restricted_bad_locus",
    "hyperplane_of_point",
]

EXACT_RANK_LEVELS = 6


class BadLocusCoversSpace(ArithmeticError):
    """Every hyperplane looks bad: the input violates the properness that
    holds in characteristic zero for reduced varieties."""


class PointInBaseLocus(ArithmeticError):
    """All level-m sections vanish at a prescribed point."""


class BoundViolation(AssertionError):
    """A certificate exceeded its proven degree bound (a bug or bad input)."""


@dataclass(frozen=True)
class LinearSeries:
    """The series generated by forms ``e_0, ..., e_N`` of degree ``d`` on ``X``."""

    variety: VarietyPresentation
    level_one_basis: tuple[MultiPoly, ...]
    kappa: int | None = None
    check_base_points: bool = field(default=True, compare=False)

    def __post_init__(self):
        V = self.variety
        basis = tuple(e.embed(V.variables) for e in self.level_one_basis)
        object.__setattr__(self, "level_one_basis", basis)
        if not basis:
            raise DomainError("empty level-one basis")
        degs = {e.total_degree() for e in basis}
        if len(degs) != 1 or any(not e.is_homogeneous() or e.is_zero() for e in basis):
            raise DomainError("level-one sections must be nonzero forms of one degree")
        if self.kappa is None:
            object.__setattr__(self, "kappa", V.dim)
        if not 0 <= self.kappa <= V.dim:
            raise DomainError(f"kappa {self.kappa} outside [0, dim X]")
        if self.check_base_points and not forms_without_common_zero(V, basis):
            raise DomainError("the level-one sections have a common zero on X")

    @property
    def d(self) -> int:
        return self.level_one_basis[0].total_degree()

    @property
    def N1(self) -> int:
        return len(level_basis(self, 1)) - 1

    def level(self, m: int) -> list[tuple[tuple[int, ...], MultiPoly]]:
        return level_basis(self, m)

    def N(self, m: int) -> int:
        return len(level_basis(self, m)) - 1

    def restrict(self, Y: VarietyPresentation) -> "LinearSeries":
        return LinearSeries(Y, self.level_one_basis, min(self.kappa, Y.dim))

    def section(self, m: int, coefficients: Sequence) -> MultiPoly:
        basis = level_basis(self, m)
        if len(coefficients) != len(basis):
            raise DomainError("coefficient count does not match the level basis")
        out = MultiPoly.zero(self.variety.variables)
        for c, (_, e) in zip(coefficients, basis):
            if c:
                out = out + e * c
        return out


def _product(S: LinearSeries, alpha) -> MultiPoly:
    out = MultiPoly.constant(S.variety.variables, 1)
    for e, k in zip(S.level_one_basis, alpha):
        if k:
            out = out * e ** k
    return out


@lru_cache(maxsize=128)
def level_basis(S: LinearSeries, m: int) -> list[tuple[tuple[int, ...], MultiPoly]]:
    """Basis of ``R_m`` as products ``prod e_i^alpha_i`` with ``|alpha| = m``.

    Exponents are scanned in descending graded-lex order, so ``e_0^m`` comes
    first; products dependent modulo ``I_X`` are dropped.
    """
    if m < 0:
        raise DomainError("level must be nonnegative")
    piece = ideal_graded_piece(S.variety, m * S.d)
    ech = SparseEchelon()
    out = []
    for alpha in monomials_of_degree(len(S.level_one_basis), m):
        f = _product(S, alpha)
        if ech.insert(piece.normal_form(f.terms)):
            out.append((alpha, f))
            if len(out) == piece.quotient_dim:
                break
    return out


@dataclass(frozen=True)
class UniversalSystem(BiSystem):
    """A :class:`BiSystem` remembering the series data it came from."""

    series_rank: int = 0  # N_1 + 1
    level: int = 0


def _y_names(V: VarietyPresentation, count: int) -> tuple[str, ...]:
    for prefix in ("Y", "H", "W", "U"):
        names = tuple(f"{prefix}{i}" for i in range(count))
        if not set(names) & set(V.variables):
            return names
    raise DomainError("could not choose fresh names for the dual coordinates")


def universal_hyperplane_system(S: LinearSeries, m: int,
                                on: VarietyPresentation | None = None) -> UniversalSystem:
    """``sum_i e_i^(m)(X) Y_i`` together with the ideal generators.

    The sections are global forms, so this single equation describes the
    incidence on every chart.  ``on`` reads the same sections on a
    subvariety (its own generators are appended instead).
    """
    if m < 1:
        raise DomainError("level must be at least 1")
    V = on if on is not None else S.variety
    basis = level_basis(S, m)
    ys = _y_names(V, len(basis))
    allv = V.variables + ys
    yv = MultiPoly.variables_of(allv)[len(V.variables):]
    w = MultiPoly.zero(allv)
    for (_, e), y in zip(basis, yv):
        w = w + e.embed(allv) * y
    eqs = (w,) + tuple(g.embed(allv) for g in V.generators)
    return UniversalSystem(V, eqs, ys, None, 1, series_rank=S.N1 + 1, level=m)


def singular_locus_system(W: BiSystem, p_declared: int | None = None) -> BiSystem:
    """Append the ``(n - dim X + 1)``-minors of the X-Jacobian of ``W``."""
    V = W.variety
    c = V.codim + 1
    minors = jacobian_minor_system(list(W.equations), min(c, len(W.equations)), wrt=W.x_vars)
    minors = [f for f in minors if not f.is_zero()]
    eqs = tuple(W.equations) + tuple(minors)
    tmp = BiSystem(V, eqs, W.y_vars)
    q = tmp.actual_q
    if isinstance(W, UniversalSystem) and W.series_rank:
        q = max(q, W.series_rank)
    p = max(tmp.actual_p, p_declared or 0)
    if isinstance(W, UniversalSystem):
        return UniversalSystem(V, eqs, W.y_vars, p, q, series_rank=W.series_rank, level=W.level)
    return BiSystem(V, eqs, W.y_vars, p, q)


@dataclass(frozen=True, eq=False)
class DegreeBoundProfile:
    D1: int
    D2: int
    Dprime: int
    M_check: int
    kappa: int
    N1: int
    P_poly: MultiPoly = field(repr=False)
    phi: Callable[[int], int] = field(repr=False)
    degree_of_X: int = 1
    dim: int = 0

    def P(self, m: int) -> int:
        t = self.degree_of_X * (self.Dprime * m ** (self.kappa + 1)) ** (self.dim + 1)
        return self.phi(t) * (self.N1 + 1)

    @property
    def deg_P(self) -> int:
        return self.P_poly.total_degree()

    def lhs(self, m: int, N_m: int, codim: int) -> int:
        return (self.N1 + 1) * (self.D1 * m * N_m - 1) + codim * (self.D2 - 1)


def _N_upper(S: LinearSeries, m: int) -> int:
    """``N_m`` exactly for small ``m``, else a safe upper bound."""
    if m <= EXACT_RANK_LEVELS:
        return S.N(m)
    N1 = S.N1
    return min(comb(m + N1, N1), hilbert_bound(S.variety, m * S.d)) - 1


def degree_bound_profile(S: LinearSeries, M_check: int = 64) -> DegreeBoundProfile:
    """Constants ``D1, D2, D'`` and ``P(m) = phi_X(deg X (D' m^(k+1))^(dim+1)) (N_1+1)``.

    ``D'`` is the least power of two meeting the defining inequality for
    ``m = 1..M_check``.
    """
    if M_check < 1:
        raise DomainError("M_check must be positive")
    V = S.variety
    D1 = S.d
    D2 = V.max_generator_degree
    N1 = S.N1
    k = S.kappa
    need = 1
    for m in range(1, M_check + 1):
        lhs = (N1 + 1) * (D1 * m * _N_upper(S, m) - 1) + V.codim * (D2 - 1)
        while lhs > need * m ** (k + 1):
            need *= 2
    mv = ("m",)
    mm = MultiPoly.var(mv, "m")
    t = (mm ** (k + 1) * need) ** (V.dim + 1) * V.degree
    if V.dim == 0:
        phi_t = MultiPoly.constant(mv, V.degree)
    else:
        phi_t = (t + V.dim) ** V.dim * V.degree
    P_poly = phi_t * (N1 + 1)
    return DegreeBoundProfile(D1, D2, need, M_check, k, N1, P_poly,
                              lambda l: hilbert_bound(V, l), V.degree, V.dim)


@dataclass(frozen=True, eq=False)
class BadLocusCertificate:
    """``Z_m`` (possibly times point forms) on the dual space of ``R_m``.

    ``hypersurface`` is None when ``empty``: no hyperplane is bad, which
    honours the convention that the empty divisor is smooth.
    """

    m: int
    hypersurface: HypersurfaceCertificate | None
    bound_value: int
    empty: bool
    y_vars: tuple[str, ...]
    point_forms: tuple[MultiPoly, ...] = ()
    reason: str = ""

    @property
    def degree(self) -> int:
        base = 0 if self.hypersurface is None else self.hypersurface.degree
        return base + len(self.point_forms)

    def evaluate(self, point: Sequence) -> Fraction:
        val = Fraction(1) if self.hypersurface is None else self.hypersurface.evaluate(point)
        for f in self.point_forms:
            if not val:
                break
            val *= f.evaluate(point)
        return val

    def vanishes_at(self, point: Sequence) -> bool:
        return self.evaluate(point) == 0

    def expanded(self) -> MultiPoly | None:
        """The full polynomial when all factors are expanded."""
        if self.hypersurface is not None and not self.hypersurface.expanded:
            return None
        out = (MultiPoly.constant(self.y_vars, 1) if self.hypersurface is None
               else self.hypersurface.poly)
        for f in self.point_forms:
            out = out * f
        return out


def _pure_y_empty(sys: BiSystem) -> bool:
    """Linear equations free of X with full rank force ``Y = 0``."""
    n = len(sys.x_vars)
    ny = len(sys.y_vars)
    rows = []
    for u in sys.equations:
        if u.is_zero() or any(sum(e[:n]) for e in u.terms):
            continue
        if u.total_degree() != 1:
            continue
        row = [0] * ny
        for e, c in u.terms.items():
            row[e[n:].index(1)] = c
        rows.append(row)
    if len(rows) < ny:
        return False
    p = (1 << 61) - 1
    modrows = [[(c.numerator * pow(c.denominator, -1, p)) % p for c in map(Fraction, r)] for r in rows]
    return len(rank_profile_mod_p(modrows, p)[0]) == ny


def _bad_locus(S: LinearSeries, V: VarietyPresentation, m: int, seed: int,
               expand_limit: int, profile: DegreeBoundProfile) -> BadLocusCertificate:
    W = universal_hyperplane_system(S, m, on=V)
    N_m = len(level_basis(S, m)) - 1
    p_decl = (S.N1 + 1) * (S.d * m * N_m - 1) + V.codim * (V.max_generator_degree - 1)
    sing = singular_locus_system(W, p_decl)
    bound = profile.P(m)
    if _pure_y_empty(sing):
        return BadLocusCertificate(m, None, bound, True, W.y_vars, (), "pure-Y equations have no common zero")
    try:
        hyp = eliminate_projection(sing, seed=seed, expand_limit=expand_limit)
    except ProjectionMayCoverSpace as exc:
        raise BadLocusCoversSpace(
            f"level {m}: every hyperplane appears singular ({exc}); the input may be "
            "non-reduced or outside characteristic zero") from exc
    if hyp.degree > bound or hyp.degree > hyp.degree_bound:
        raise BoundViolation(f"degree {hyp.degree} exceeds P({m}) = {bound}")
    if hyp.degree == 0:
        return BadLocusCertificate(m, None, bound, True, W.y_vars, (), "the minor is a nonzero constant")
    return BadLocusCertificate(m, hyp, bound, False, W.y_vars)


def bad_hyperplane_hypersurface(S: LinearSeries, m: int, seed: int = 0, expand_limit: int = 10,
                                profile: DegreeBoundProfile | None = None) -> BadLocusCertificate:
    """``Z_m`` for ``S`` on its own variety, with ``deg Z_m <= P(m)``."""
    profile = profile or degree_bound_profile(S)
    return _bad_locus(S, S.variety, m, seed, expand_limit, profile)


def hyperplane_of_point(S: LinearSeries, m: int, point: Sequence, y_vars) -> MultiPoly:
    """The linear form ``H -> sum_i e_i^(m)(y) Y_i``."""
    out = MultiPoly.zero(y_vars)
    for (_, e), y in zip(level_basis(S, m), MultiPoly.variables_of(y_vars)):
        v = e.evaluate(point)
        if v:
            out = out + y * v
    return out


def restricted_bad_locus(S: LinearSeries, Y: VarietyPresentation | None, points: Sequence,
                         m: int, seed: int = 0, expand_limit: int = 10) -> BadLocusCertificate:
    """Bad locus for the sections restricted to ``Y`` times the point forms.

    The dual coordinates stay those of ``R_m`` on ``X``.  ``Y = None``
    means ``Y = X``.  The degree is at most ``P_Y(m) + len(points)``.
    """
    if Y is None or Y == S.variety:
        SY, VY = S, S.variety
    else:
        VY = Y
        for g in S.variety.generators:
            if not ideal_graded_piece(VY, g.total_degree()).normal_form(g.terms) == {}:
                raise DomainError(f"{g} does not vanish on the subvariety")
        SY = S.restrict(VY)
    profile = degree_bound_profile(SY)
    base = _bad_locus(S, VY, m, seed, expand_limit, profile)
    forms = []
    for pt in points:
        if not VY.contains_point(pt):
            raise DomainError(f"point {pt} does not lie on the subvariety")
        f = hyperplane_of_point(S, m, pt, base.y_vars)
        if f.is_zero():
            raise PointInBaseLocus(f"every level-{m} section vanishes at {pt}")
        forms.append(f)
    return BadLocusCertificate(m, base.hypersurface, profile.P(m) + len(forms), base.empty,
                               base.y_vars, tuple(forms), base.reason)
