"""Command-line front end: ``arithbertini {bound,badlocus,cnsolve,search,verify}``.

Exit codes::

    0  success
    2  usage error
    3  unreadable or schema-invalid document
    4  no section of norm < 1 in the level range (retry with larger m)
    5  the bad locus covers the whole dual space
    6  a prescribed point lies in the base locus
    7  verification failed
    8  certificate belongs to a different problem
    9  any other computational failure
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import documents as D
from .arithseek import NormBudgetNotReached, find_small_smooth_section, verify_certificate
from .bertini import (
    BadLocusCoversSpace,
    PointInBaseLocus,
    bad_hyperplane_hypersurface,
    degree_bound_profile,
)
from .cnsolve import GridSpec, PolyOracle, cn_search
from .elimination import ProjectionMayCoverSpace, eliminate_projection
from .exactalg import DomainError
from .variety import validate_hilbert_bound, HilbertBoundViolation

EXIT_OK, EXIT_USAGE, EXIT_SCHEMA = 0, 2, 3
EXIT_BUDGET, EXIT_COVERS, EXIT_BASEPOINT = 4, 5, 6
EXIT_VERIFY, EXIT_HASH, EXIT_OTHER = 7, 8, 9


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(EXIT_SCHEMA, f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_SCHEMA, f"{path}: line {exc.lineno}: {exc.msg}") from None


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _problem(args):
    doc = _load(args.problem)
    mr = D.parse_m_range(args.m_range, "--m-range") if args.m_range else None
    P = D.problem_from_doc(doc, m_range=mr, seed=args.seed)
    try:
        validate_hilbert_bound(P.variety)
    except HilbertBoundViolation as exc:
        raise CliError(EXIT_SCHEMA, f"$.variety: {exc}") from None
    return P


def cmd_bound(args) -> int:
    P = _problem(args)
    prof = degree_bound_profile(P.series, args.m_check)
    lo, hi = P.m_range
    rows = [(m, prof.P(m)) for m in range(lo, hi + 1)]
    if args.format == "json":
        _emit(D.dumps({"D1": prof.D1, "D2": prof.D2, "Dprime": prof.Dprime, "M_check": prof.M_check,
                       "kappa": prof.kappa, "N1": prof.N1, "deg_P": prof.deg_P,
                       "P_polynomial": str(prof.P_poly),
                       "table": [{"m": m, "P": str(v)} for m, v in rows]}), args.out)
    else:
        lines = [f"D1 = {prof.D1}", f"D2 = {prof.D2}", f"D' = {prof.Dprime} (checked for m <= {prof.M_check})",
                 f"kappa = {prof.kappa}", f"P(m) = {prof.P_poly}", f"deg P = {prof.deg_P}",
                 f"{'m':>4}  P(m)"]
        lines += [f"{m:>4}  {v}" for m, v in rows]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_badlocus(args) -> int:
    doc = _load(args.document)
    if "equations" in doc:
        sys_ = D.bisystem_from_doc(doc)
        seed = args.seed if args.seed is not None else int(doc.get("seed", 0))
        try:
            cert = eliminate_projection(sys_, seed=seed, expand_limit=args.expand_limit)
        except ProjectionMayCoverSpace as exc:
            raise CliError(EXIT_COVERS, str(exc)) from None
        out = D.hypersurface_to_doc(cert)
    else:
        if args.m is None:
            raise CliError(EXIT_USAGE, "a series document needs --m")
        P = D.problem_from_doc(doc, seed=args.seed)
        cert = bad_hyperplane_hypersurface(P.series, args.m, seed=P.seed, expand_limit=args.expand_limit)
        out = D.badlocus_to_doc(cert)
    if args.format == "json":
        _emit(D.dumps(out), args.out)
    else:
        poly = out.get("poly", out.get("hypersurface"))
        _emit(f"degree {out['degree']} (bound {out.get('degree_bound', out.get('bound_value'))})\n"
              f"{json.dumps(poly)}\n", args.out)
    return EXIT_OK


def cmd_cnsolve(args) -> int:
    doc = _load(args.document)
    variables = D._get(doc, "variables", "$", list)
    f = D.poly_from_doc(D._get(doc, "oracle", "$"), variables, "$.oracle")
    deg = int(doc.get("degree", max(f.total_degree(), 0)))
    grids = D._get(doc, "grids", "$", list)
    sets = tuple(tuple(D._frac(x, f"$.grids[{i}]") for x in g) for i, g in enumerate(grids))
    pt = cn_search(PolyOracle(f.nvars, deg, f.evaluate), GridSpec(sets), seed=args.seed or 0)
    vals = [str(Fraction(x)) for x in pt]
    _emit(D.dumps({"point": vals, "value": str(f.evaluate(pt))}) if args.format == "json"
          else " ".join(vals) + "\n", args.out)
    return EXIT_OK


def cmd_search(args) -> int:
    P = _problem(args)
    try:
        cert = find_small_smooth_section(P, jobs=args.jobs)
    except NormBudgetNotReached as exc:
        _write_log(exc.log, args.log)
        raise CliError(EXIT_BUDGET, str(exc)) from None
    _write_log(cert.log, args.log)
    doc = D.certificate_to_doc(cert)
    if args.format == "json":
        _emit(D.dumps(doc), args.out)
    else:
        _emit(f"m = {cert.m}\nsection = {cert.section}\nnorm = {cert.norm_value}\n", args.out)
    return EXIT_OK


def _write_log(log, path):
    lines = []
    for e in log:
        lines.append(f"m={e['m']} P={e.get('P')} deg_u={e.get('deg_u')} F={e.get('F')} "
                     f"offsets={e.get('offsets')} coefficients={e.get('coefficients')} norm={e.get('norm')}")
    text = "\n".join(lines) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stderr.write(text)


def cmd_verify(args) -> int:
    cert = D.certificate_from_doc(_load(args.certificate))
    P = _problem(args)
    rep = verify_certificate(cert, P)
    if args.format == "json":
        _emit(D.dumps({"ok": rep.ok, "checks": {k: {"ok": ok, "detail": d}
                                               for k, (ok, d) in rep.checks.items()}}), args.out)
    else:
        _emit("\n".join(rep.lines()) + "\n", args.out)
    if not rep.checks["problem_hash"][0]:
        return EXIT_HASH
    return EXIT_OK if rep.ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="random seed (overrides the document)")
    common.add_argument("--jobs", type=int, default=1, help="parallel levels in search")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--m-range", dest="m_range", default=None, help="levels A..B")
    common.add_argument("-o", "--out", default=None, help="output file (default stdout)")

    ap = argparse.ArgumentParser(prog="arithbertini",
                                 description="Small smooth sections and bad-hyperplane loci, exactly.")
    sub = ap.add_subparsers(dest="command", required=True)
    p = sub.add_parser("bound", parents=[common], help="degree-bound profile P(m)")
    p.add_argument("problem")
    p.add_argument("--m-check", type=int, default=64)
    p.set_defaults(func=cmd_bound)
    p = sub.add_parser("badlocus", parents=[common], help="bad-hyperplane hypersurface")
    p.add_argument("document", help="a BiSystem document or a problem document (with --m)")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--expand-limit", type=int, default=10)
    p.set_defaults(func=cmd_badlocus)
    p = sub.add_parser("cnsolve", parents=[common], help="grid search for a nonzero point")
    p.add_argument("document")
    p.set_defaults(func=cmd_cnsolve)
    p = sub.add_parser("search", parents=[common], help="find a certified small section")
    p.add_argument("problem")
    p.add_argument("--log", default=None, help="run log file (default stderr)")
    p.set_defaults(func=cmd_search)
    p = sub.add_parser("verify", parents=[common], help="re-check a certificate")
    p.add_argument("certificate")
    p.add_argument("problem")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except D.SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except NormBudgetNotReached as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (BadLocusCoversSpace, ProjectionMayCoverSpace) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COVERS
    except PointInBaseLocus as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BASEPOINT
    except (ArithmeticError, DomainError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OTHER


if __name__ == "__main__":
    sys.exit(main())
