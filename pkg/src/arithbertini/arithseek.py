"""Search for strictly small sections with smooth divisors that avoid given points.

For each level ``m`` the bad loci of the subvarieties and the point forms
multiply to a polynomial ``u`` on coefficient space.  A grid search on the
progressions ``a_j + F b_j`` finds coefficients where ``u`` does not vanish
and the residues at the finite-field points stay nonzero; the level is
accepted once the resulting section has norm below one.
"""

from __future__ import annotations

import json
import subprocess
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .bertini import (
    LinearSeries,
    PointInBaseLocus,
    degree_bound_profile,
    level_basis,
    restricted_bad_locus,
)
from .cnsolve import PolyOracle, combined_grid_search, poschr_offsets
from .exactalg import QQ, DomainError, MultiPoly, l1_norm
from .matrices import SparseEchelon
from .variety import CapabilityError, VarietyPresentation, ideal_graded_piece, smoothness_check

__all__ = [
    "NormFamily",
    "ProblemSpec",
    "SectionCertificate",
    "VerificationReport",
    "NormBudgetNotReached",
    "l1_theta_norm",
    "reduce_basis",
    "find_small_smooth_section",
    "verify_certificate",
]


class NormBudgetNotReached(ArithmeticError):
    """No level in the range produced a section of norm below one."""

    def __init__(self, message, log=()):
        super().__init__(message)
        self.log = list(log)


def l1_theta_norm(s: MultiPoly, m: int, theta) -> Fraction:
    theta = Fraction(theta)
    if not 0 < theta < 1:
        raise DomainError("theta must lie strictly between 0 and 1")
    return l1_norm(s) * theta ** m


@dataclass(frozen=True)
class NormFamily:
    """Norms ``||.||_m``: the built-in l1 family or an external oracle.

    An external command receives ``{"variables", "section", "m"}`` as JSON
    on stdin and prints the norm as an exact rational such as ``3/8``.
    """

    kind: str = "l1-theta"
    theta: Fraction = Fraction(1, 2)
    command: tuple[str, ...] = ()
    func: Callable | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "theta", Fraction(self.theta))
        if self.kind == "l1-theta":
            if not 0 < self.theta < 1:
                raise DomainError("theta must lie strictly between 0 and 1")
        elif self.kind == "external":
            if not self.command and self.func is None:
                raise DomainError("an external norm needs a command or a callable")
        else:
            raise DomainError(f"unknown norm kind {self.kind!r}")

    def __call__(self, s: MultiPoly, m: int) -> Fraction:
        if self.kind == "l1-theta":
            return l1_theta_norm(s, m, self.theta)
        if self.func is not None:
            return Fraction(self.func(s, m))
        from .documents import poly_to_doc
        payload = json.dumps({"variables": list(s.variables), "section": poly_to_doc(s), "m": m})
        out = subprocess.run(list(self.command), input=payload, capture_output=True,
                             text=True, check=True, timeout=600)
        return Fraction(out.stdout.strip())

    def check_multiplicative(self, pairs: Sequence[tuple[MultiPoly, int, MultiPoly, int]]) -> bool:
        """Sampled check of ``||s t||_(m+n) <= ||s||_m ||t||_n``."""
        return all(self(s * t, m + n) <= self(s, m) * self(t, n) for s, m, t, n in pairs)


@dataclass(frozen=True)
class ProblemSpec:
    """Input of the search.  ``subvarieties`` are smooth subvarieties of
    ``X`` (``X`` itself allowed); ``charp_points`` are ``(coords, p)``."""

    series: LinearSeries
    norm: NormFamily = NormFamily()
    subvarieties: tuple[VarietyPresentation, ...] = ()
    char0_points: tuple[tuple, ...] = ()
    charp_points: tuple[tuple[tuple[int, ...], int], ...] = ()
    m_range: tuple[int, int] = (1, 16)
    seed: int = 0
    expand_limit: int = 10
    document: dict | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        V = self.variety
        for g in V.generators:
            if not g.is_integral():
                raise DomainError("the variety must be defined over the integers")
        for e in self.series.level_one_basis:
            if not e.is_integral():
                raise DomainError("level-one sections must have integer coefficients")
        object.__setattr__(self, "subvarieties", tuple(self.subvarieties))
        pts = tuple(tuple(Fraction(c) for c in pt) for pt in self.char0_points)
        object.__setattr__(self, "char0_points", pts)
        for pt in pts:
            if not V.contains_point(pt):
                raise DomainError(f"point {pt} is not on X")
        cps = tuple((tuple(int(c) for c in pt), int(p)) for pt, p in self.charp_points)
        object.__setattr__(self, "charp_points", cps)
        for pt, p in cps:
            if not V.contains_point_mod(pt, p):
                raise DomainError(f"point {pt} is not on X modulo {p}")
        lo, hi = self.m_range
        if not 1 <= lo <= hi:
            raise DomainError("m_range must satisfy 1 <= A <= B")

    @property
    def variety(self) -> VarietyPresentation:
        return self.series.variety

    def problem_hash(self) -> str:
        from .documents import problem_hash
        return problem_hash(self)


@dataclass(frozen=True, eq=False)
class SectionCertificate:
    m: int
    basis_exponents: tuple[tuple[int, ...], ...]
    coefficients: tuple[int, ...]
    section: MultiPoly
    norm_value: Fraction
    search_coefficients: tuple[int, ...] = ()
    transform: tuple[tuple[int, ...], ...] = ()
    F: int = 1
    offsets: tuple[int, ...] = ()
    smooth_witnesses: tuple[dict, ...] = ()
    point_values: tuple[Fraction, ...] = ()
    residues: tuple[int, ...] = ()
    bad_locus_value: Fraction | None = None
    problem_hash: str = ""
    seed: int = 0
    log: tuple[dict, ...] = field(default=(), compare=False)


@dataclass
class VerificationReport:
    checks: dict = field(default_factory=dict)

    def add(self, name: str, ok: bool, detail: str = ""):
        self.checks[name] = (bool(ok), detail)

    @property
    def ok(self) -> bool:
        return all(ok for ok, _ in self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, (ok, _) in self.checks.items() if not ok]

    def lines(self) -> list[str]:
        return [f"{'PASS' if ok else 'FAIL'} {k}: {d}" for k, (ok, d) in self.checks.items()]


def _vector(poly: MultiPoly, index: dict) -> list:
    return [(index[e], c) for e, c in poly.terms.items()]


def reduce_basis(sections: Sequence[MultiPoly], norm: Callable[[MultiPoly], Fraction]
                 ) -> tuple[list[MultiPoly], list[list[int]]]:
    """Pairwise integer size reduction, then an ascending sort by norm.

    Returns the new sections and the unimodular matrix ``T`` with
    ``new[k] = sum_j T[k][j] * sections[j]``.
    """
    vecs = list(sections)
    n = len(vecs)
    ech = SparseEchelon()
    for v in vecs:
        if not ech.insert(dict(v.terms)):
            raise DomainError("sections are linearly dependent")
    T = [[int(i == j) for j in range(n)] for i in range(n)]
    norms = [norm(v) for v in vecs]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                for t in (1, -1):
                    cand = vecs[i] - vecs[j] * t
                    cn = norm(cand)
                    if cn < norms[i]:
                        vecs[i], norms[i] = cand, cn
                        T[i] = [a - t * b for a, b in zip(T[i], T[j])]
                        changed = True
                        break
    order = sorted(range(n), key=lambda k: (norms[k], tuple(-x for x in vecs[k].leading_term()[0])))
    return [vecs[k] for k in order], [T[k] for k in order]


def _linear_sum_oracle(n: int) -> PolyOracle:
    return PolyOracle(n, 1, lambda c: sum(c))


def _attempt_level(P: ProblemSpec, m: int) -> tuple[SectionCertificate | None, dict]:
    S = P.series
    basis = level_basis(S, m)
    alphas = tuple(a for a, _ in basis)
    forms = [f for _, f in basis]
    new, T = reduce_basis(forms, lambda s: P.norm(s, m))
    n = len(forms)
    entry: dict = {"m": m, "N_m": n - 1}

    subs = P.subvarieties
    certs = [restricted_bad_locus(S, Y if Y != S.variety else None, [], m,
                                  seed=P.seed, expand_limit=P.expand_limit) for Y in subs]
    point_forms = []
    ys = certs[0].y_vars if certs else tuple(f"Y{i}" for i in range(n))
    from .bertini import hyperplane_of_point
    for pt in P.char0_points:
        f = hyperplane_of_point(S, m, pt, ys)
        if f.is_zero():
            raise PointInBaseLocus(f"every level-{m} section vanishes at {pt}")
        point_forms.append(f)
    deg_u = sum(c.degree for c in certs) + len(point_forms)
    bound_sum = sum(c.bound_value for c in certs) + len(point_forms)

    def to_y(c):
        return [sum(c[k] * T[k][j] for k in range(n)) for j in range(n)]

    def u_eval(c):
        y = to_y(c)
        val = Fraction(1)
        for cert in certs:
            val *= cert.evaluate(y)
            if not val:
                return val
        for f in point_forms:
            val *= f.evaluate(y)
            if not val:
                return val
        return val

    oracle = PolyOracle(n, deg_u, u_eval) if deg_u > 0 else _linear_sum_oracle(n)
    b_cap = max(bound_sum, oracle.total_degree)
    offs = poschr_offsets(new, P.charp_points)
    c = combined_grid_search(oracle, offs, b_cap, seed=P.seed)
    y = to_y(c)
    s = S.section(m, y)
    normv = P.norm(s, m)
    entry.update({"P": bound_sum, "deg_u": deg_u, "F": offs.F, "offsets": list(offs.offsets),
                  "coefficients": [int(v) for v in y], "norm": str(normv),
                  "empty_bad_loci": [cert.empty for cert in certs]})
    if normv >= 1:
        return None, entry

    witnesses = []
    for j, Y in enumerate(subs):
        try:
            res = smoothness_check(Y, s)
            witnesses.append({"index": j, "smooth": res.smooth, "detail": res.detail,
                              "witness": None if res.witness is None else [str(x) for x in res.witness]})
        except CapabilityError as exc:
            witnesses.append({"index": j, "smooth": None, "detail": str(exc), "witness": None})
    cert = SectionCertificate(
        m=m,
        basis_exponents=alphas,
        coefficients=tuple(int(v) for v in y),
        section=s,
        norm_value=normv,
        search_coefficients=tuple(int(v) for v in c),
        transform=tuple(tuple(r) for r in T),
        F=offs.F,
        offsets=tuple(offs.offsets),
        smooth_witnesses=tuple(witnesses),
        point_values=tuple(Fraction(s.evaluate(pt)) for pt in P.char0_points),
        residues=tuple(s.evaluate_mod(pt, p) for pt, p in P.charp_points),
        bad_locus_value=Fraction(u_eval(c)) if deg_u > 0 else None,
        problem_hash=P.problem_hash(),
        seed=P.seed,
    )
    return cert, entry


def find_small_smooth_section(P: ProblemSpec, jobs: int = 1) -> SectionCertificate:
    """Smallest level in ``P.m_range`` that yields a certified section.

    With ``jobs > 1`` levels are tried in parallel batches; the result is
    the same as the sequential run.
    """
    lo, hi = P.m_range
    log: list[dict] = []
    levels = list(range(lo, hi + 1))
    if jobs <= 1 or P.norm.func is not None:
        for m in levels:
            cert, entry = _attempt_level(P, m)
            log.append(entry)
            if cert is not None:
                return _with_log(cert, log)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for start in range(0, len(levels), jobs):
                batch = levels[start:start + jobs]
                for cert, entry in pool.map(_attempt_level, [P] * len(batch), batch):
                    log.append(entry)
                    if cert is not None:
                        return _with_log(cert, log)
    raise NormBudgetNotReached(f"no section of norm < 1 for m in {lo}..{hi}", log)


def _with_log(cert: SectionCertificate, log) -> SectionCertificate:
    object.__setattr__(cert, "log", tuple(log))
    return cert


def _product_form(S: LinearSeries, alpha) -> MultiPoly:
    out = MultiPoly.constant(S.variety.variables, 1)
    for e, k in zip(S.level_one_basis, alpha):
        out = out * e ** k
    return out


def verify_certificate(cert: SectionCertificate, P: ProblemSpec) -> VerificationReport:
    """Re-derive every conclusion from the recorded coefficients."""
    rep = VerificationReport()
    S = P.series
    V = P.variety
    h = P.problem_hash()
    rep.add("problem_hash", cert.problem_hash == h, "matches" if cert.problem_hash == h else "differs")

    shapes_ok = (len(cert.basis_exponents) == len(cert.coefficients)
                 and all(len(a) == len(S.level_one_basis) and sum(a) == cert.m and min(a) >= 0
                         for a in cert.basis_exponents))
    rep.add("basis", shapes_ok, f"{len(cert.basis_exponents)} products of degree {cert.m}")
    if not shapes_ok:
        return rep
    s = MultiPoly.zero(V.variables)
    for a, c in zip(cert.basis_exponents, cert.coefficients):
        if c:
            s = s + _product_form(S, a) * c
    rep.add("section", s == cert.section, str(s))

    piece = ideal_graded_piece(V, cert.m * S.d)
    nonzero = bool(piece.normal_form(s.terms))
    rep.add("nonzero", nonzero, "nonzero on X" if nonzero else "vanishes on X")

    normv = P.norm(s, cert.m)
    rep.add("norm", normv == cert.norm_value and normv < 1, f"recomputed {normv}, recorded {cert.norm_value}")

    vals = [Fraction(s.evaluate(pt)) for pt in P.char0_points]
    ok = all(vals) and tuple(vals) == tuple(cert.point_values)
    rep.add("points", ok, ", ".join(map(str, vals)) or "none")
    res = [s.evaluate_mod(pt, p) for pt, p in P.charp_points]
    ok = all(res) and tuple(res) == tuple(cert.residues)
    rep.add("residues", ok, ", ".join(map(str, res)) or "none")
    if P.charp_points:
        F = cert.F
        if cert.search_coefficients and cert.transform:
            n = len(cert.coefficients)
            recon = [sum(cert.search_coefficients[k] * cert.transform[k][j] for k in range(n))
                     for j in range(n)]
            ok = (recon == list(cert.coefficients)
                  and all((c - a) % F == 0 for c, a in zip(cert.search_coefficients, cert.offsets)))
            rep.add("offsets", ok, f"F = {F}")

    for j, Y in enumerate(P.subvarieties):
        try:
            r = smoothness_check(Y, s)
            rep.add(f"smooth[{j}]", r.smooth, r.detail + (f"; witness {r.witness}" if r.witness else ""))
        except CapabilityError as exc:
            rep.add(f"smooth[{j}]", False, f"unsupported: {exc}")
    return rep
