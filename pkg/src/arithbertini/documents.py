"""JSON documents for problems, systems and certificates.

Polynomials are lists of ``{"exponents": [...], "num": "..", "den": ".."}``
over a variable list declared once per document; a plain string such as
``"X0^2 - X1^2"`` is accepted on input as well.  Integers travel as decimal
strings where they may grow large.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Any

from .arithseek import NormFamily, ProblemSpec, SectionCertificate
from .bertini import BadLocusCertificate, LinearSeries
from .elimination import BiSystem, HypersurfaceCertificate, MinorDeterminant
from .exactalg import DomainError, MultiPoly
from .variety import VarietyPresentation

__all__ = [
    "SchemaError",
    "poly_to_doc",
    "poly_from_doc",
    "variety_from_doc",
    "variety_to_doc",
    "problem_from_doc",
    "problem_to_doc",
    "problem_hash",
    "certificate_to_doc",
    "certificate_from_doc",
    "bisystem_from_doc",
    "hypersurface_to_doc",
    "badlocus_to_doc",
    "dumps",
    "parse_m_range",
]


class SchemaError(ValueError):
    """A document is malformed; ``path`` names the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _get(doc, key, path, kind=None, default=...):
    if not isinstance(doc, dict):
        raise SchemaError(path, "expected an object")
    if key not in doc:
        if default is ...:
            raise SchemaError(f"{path}.{key}", "missing required field")
        return default
    val = doc[key]
    if kind is not None and not isinstance(val, kind):
        raise SchemaError(f"{path}.{key}", f"expected {getattr(kind, '__name__', kind)}")
    return val


def _frac(x, path) -> Fraction:
    try:
        if isinstance(x, bool):
            raise TypeError
        return Fraction(x) if not isinstance(x, float) else Fraction(str(x))
    except (TypeError, ValueError, ZeroDivisionError):
        raise SchemaError(path, f"not an exact rational: {x!r}") from None


def _int(x, path) -> int:
    f = _frac(x, path)
    if f.denominator != 1:
        raise SchemaError(path, f"not an integer: {x!r}")
    return int(f)


def poly_to_doc(f: MultiPoly) -> list[dict]:
    return [{"exponents": list(e), "num": str(Fraction(c).numerator), "den": str(Fraction(c).denominator)}
            for e, c in f.items()]


def poly_from_doc(doc, variables, path="poly") -> MultiPoly:
    variables = tuple(variables)
    if isinstance(doc, str):
        try:
            return MultiPoly.parse(doc, variables)
        except (DomainError, ValueError) as exc:
            raise SchemaError(path, f"cannot parse polynomial: {exc}") from None
    if not isinstance(doc, list):
        raise SchemaError(path, "expected a term list or a string")
    terms: dict = {}
    for i, t in enumerate(doc):
        tp = f"{path}[{i}]"
        e = _get(t, "exponents", tp, list)
        if len(e) != len(variables):
            raise SchemaError(f"{tp}.exponents", f"expected {len(variables)} entries")
        e = tuple(_int(k, f"{tp}.exponents") for k in e)
        if min(e, default=0) < 0:
            raise SchemaError(f"{tp}.exponents", "negative exponent")
        num = _int(_get(t, "num", tp), f"{tp}.num")
        den = _int(t.get("den", "1"), f"{tp}.den")
        if den == 0:
            raise SchemaError(f"{tp}.den", "zero denominator")
        terms[e] = terms.get(e, 0) + Fraction(num, den)
    return MultiPoly(variables, terms)


def variety_to_doc(V: VarietyPresentation) -> dict:
    return {"ambient_dim": V.ambient_dim, "dim": V.dim, "degree": V.degree,
            "generators": [poly_to_doc(g) for g in V.generators]}


def variety_from_doc(doc, variables, path="variety") -> VarietyPresentation:
    variables = tuple(variables)
    n = _int(_get(doc, "ambient_dim", path), f"{path}.ambient_dim")
    if n != len(variables) - 1:
        raise SchemaError(f"{path}.ambient_dim", f"{n} does not match {len(variables)} variables")
    dim = _int(_get(doc, "dim", path), f"{path}.dim")
    deg = _int(_get(doc, "degree", path), f"{path}.degree")
    gens = _get(doc, "generators", path, list, default=[])
    polys = tuple(poly_from_doc(g, variables, f"{path}.generators[{i}]") for i, g in enumerate(gens))
    try:
        return VarietyPresentation(variables, polys, dim, deg)
    except DomainError as exc:
        raise SchemaError(path, str(exc)) from None


def parse_m_range(text, path="m_range") -> tuple[int, int]:
    if isinstance(text, (list, tuple)) and len(text) == 2:
        lo, hi = (_int(x, path) for x in text)
    elif isinstance(text, str) and ".." in text:
        a, _, b = text.partition("..")
        lo, hi = _int(a.strip(), path), _int(b.strip(), path)
    else:
        raise SchemaError(path, "expected 'A..B'")
    if not 1 <= lo <= hi:
        raise SchemaError(path, "need 1 <= A <= B")
    return lo, hi


def _norm_from_doc(doc, path) -> NormFamily:
    if doc is None:
        return NormFamily()
    if "command" in doc:
        cmd = doc["command"]
        if isinstance(cmd, str):
            cmd = cmd.split()
        if not isinstance(cmd, list) or not cmd:
            raise SchemaError(f"{path}.command", "expected a non-empty command")
        return NormFamily("external", command=tuple(map(str, cmd)))
    theta = _frac(_get(doc, "theta", path), f"{path}.theta")
    if not 0 < theta < 1:
        raise SchemaError(f"{path}.theta", "must lie strictly between 0 and 1")
    return NormFamily("l1-theta", theta)


def problem_from_doc(doc: dict, m_range: tuple[int, int] | None = None,
                     seed: int | None = None) -> ProblemSpec:
    variables = _get(doc, "variables", "$", list)
    if not variables or not all(isinstance(v, str) for v in variables):
        raise SchemaError("$.variables", "expected a list of names")
    variables = tuple(variables)
    V = variety_from_doc(_get(doc, "variety", "$"), variables, "$.variety")
    sdoc = _get(doc, "series", "$", dict)
    basis = _get(sdoc, "level_one", "$.series", list)
    basis = tuple(poly_from_doc(b, variables, f"$.series.level_one[{i}]") for i, b in enumerate(basis))
    kappa = sdoc.get("kappa")
    try:
        S = LinearSeries(V, basis, None if kappa is None else _int(kappa, "$.series.kappa"))
    except DomainError as exc:
        raise SchemaError("$.series", str(exc)) from None
    norm = _norm_from_doc(doc.get("norm"), "$.norm")
    subs_doc = doc.get("subvarieties", [])
    if subs_doc == "self":
        subs = (V,)
    elif isinstance(subs_doc, list):
        subs = tuple(V if s == "self" else variety_from_doc(s, variables, f"$.subvarieties[{i}]")
                     for i, s in enumerate(subs_doc))
    else:
        raise SchemaError("$.subvarieties", "expected a list or \"self\"")
    c0, cp = [], []
    for i, pt in enumerate(_get(doc, "points", "$", list, default=[])):
        pp = f"$.points[{i}]"
        coords = _get(pt, "coords", pp, list)
        if len(coords) != len(variables):
            raise SchemaError(f"{pp}.coords", f"expected {len(variables)} coordinates")
        ch = pt.get("characteristic", 0)
        ch = _int(ch, f"{pp}.characteristic")
        if ch == 0:
            c0.append(tuple(_frac(c, f"{pp}.coords") for c in coords))
        else:
            cp.append((tuple(_int(c, f"{pp}.coords") for c in coords), ch))
    mr = m_range or parse_m_range(doc.get("m_range", "1..16"), "$.m_range")
    sd = seed if seed is not None else _int(doc.get("seed", 0), "$.seed")
    try:
        return ProblemSpec(S, norm, subs, tuple(c0), tuple(cp), mr, sd, document=doc)
    except DomainError as exc:
        raise SchemaError("$", str(exc)) from None


def problem_to_doc(P: ProblemSpec) -> dict:
    V = P.variety
    if P.norm.kind == "l1-theta":
        norm = {"theta": str(P.norm.theta)}
    else:
        norm = {"command": list(P.norm.command)}
    pts = [{"coords": [str(c) for c in pt], "characteristic": 0} for pt in P.char0_points]
    pts += [{"coords": [str(c) for c in pt], "characteristic": p} for pt, p in P.charp_points]
    return {
        "variables": list(V.variables),
        "variety": variety_to_doc(V),
        "series": {"level_one": [poly_to_doc(e) for e in P.series.level_one_basis],
                   "kappa": P.series.kappa},
        "norm": norm,
        "subvarieties": [variety_to_doc(Y) for Y in P.subvarieties],
        "points": pts,
    }


def problem_hash(P: ProblemSpec) -> str:
    """Content hash of the mathematical problem (search range and seed excluded)."""
    blob = json.dumps(problem_to_doc(P), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def certificate_to_doc(cert: SectionCertificate) -> dict:
    return {
        "kind": "section-certificate",
        "variables": list(cert.section.variables),
        "m": cert.m,
        "basis_exponents": [list(a) for a in cert.basis_exponents],
        "coefficients": [str(c) for c in cert.coefficients],
        "search_coefficients": [str(c) for c in cert.search_coefficients],
        "transform": [[str(x) for x in row] for row in cert.transform],
        "F": str(cert.F),
        "offsets": [str(a) for a in cert.offsets],
        "section": poly_to_doc(cert.section),
        "norm_value": str(cert.norm_value),
        "smooth_witnesses": list(cert.smooth_witnesses),
        "point_values": [str(v) for v in cert.point_values],
        "residues": [str(r) for r in cert.residues],
        "bad_locus_value": None if cert.bad_locus_value is None else str(cert.bad_locus_value),
        "problem_hash": cert.problem_hash,
        "seed": cert.seed,
        "log": list(cert.log),
    }


def certificate_from_doc(doc: dict) -> SectionCertificate:
    p = "$"
    if _get(doc, "kind", p, str) != "section-certificate":
        raise SchemaError("$.kind", "not a section certificate")
    variables = tuple(_get(doc, "variables", p, list))
    ints = lambda key: tuple(_int(x, f"$.{key}") for x in _get(doc, key, p, list, default=[]))
    blv = doc.get("bad_locus_value")
    return SectionCertificate(
        m=_int(_get(doc, "m", p), "$.m"),
        basis_exponents=tuple(tuple(_int(k, "$.basis_exponents") for k in a)
                              for a in _get(doc, "basis_exponents", p, list)),
        coefficients=ints("coefficients"),
        section=poly_from_doc(_get(doc, "section", p), variables, "$.section"),
        norm_value=_frac(_get(doc, "norm_value", p), "$.norm_value"),
        search_coefficients=ints("search_coefficients"),
        transform=tuple(tuple(_int(x, "$.transform") for x in row)
                        for row in _get(doc, "transform", p, list, default=[])),
        F=_int(doc.get("F", 1), "$.F"),
        offsets=ints("offsets"),
        smooth_witnesses=tuple(doc.get("smooth_witnesses", [])),
        point_values=tuple(_frac(x, "$.point_values") for x in doc.get("point_values", [])),
        residues=ints("residues"),
        bad_locus_value=None if blv is None else _frac(blv, "$.bad_locus_value"),
        problem_hash=str(doc.get("problem_hash", "")),
        seed=_int(doc.get("seed", 0), "$.seed"),
        log=tuple(doc.get("log", [])),
    )


def bisystem_from_doc(doc: dict) -> BiSystem:
    xs = tuple(_get(doc, "variables", "$", list))
    ys = tuple(_get(doc, "y_variables", "$", list))
    V = variety_from_doc(_get(doc, "variety", "$"), xs, "$.variety")
    eqs = tuple(poly_from_doc(e, xs + ys, f"$.equations[{i}]")
                for i, e in enumerate(_get(doc, "equations", "$", list)))
    pb, qb = doc.get("p_bound"), doc.get("q_bound")
    try:
        return BiSystem(V, eqs, ys, None if pb is None else _int(pb, "$.p_bound"),
                        None if qb is None else _int(qb, "$.q_bound"))
    except DomainError as exc:
        raise SchemaError("$.equations", str(exc)) from None


def hypersurface_to_doc(h: HypersurfaceCertificate) -> dict:
    if isinstance(h.poly, MinorDeterminant):
        poly: Any = {"determinant": [[poly_to_doc(e) for e in row] for row in h.poly.matrix]}
    else:
        poly = poly_to_doc(h.poly)
    return {"kind": "hypersurface-certificate", "y_variables": list(h.y_vars), "poly": poly,
            "degree": h.degree, "degree_bound": str(h.degree_bound), "ell": h.ell,
            "witness_point": [str(x) for x in h.witness_point], "seed": h.seed}


def badlocus_to_doc(c: BadLocusCertificate) -> dict:
    return {"kind": "bad-locus-certificate", "m": c.m, "empty": c.empty, "reason": c.reason,
            "bound_value": str(c.bound_value), "degree": c.degree,
            "y_variables": list(c.y_vars),
            "hypersurface": None if c.hypersurface is None else hypersurface_to_doc(c.hypersurface),
            "point_forms": [poly_to_doc(f) for f in c.point_forms]}
