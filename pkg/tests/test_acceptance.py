"""End-to-end acceptance criteria, each timed against its budget.

Every test records one PASS/FAIL line; ``conftest.py`` prints them in the
terminal summary.
"""

import json
import random
import time
from contextlib import contextmanager
from fractions import Fraction
from math import comb
from pathlib import Path

import pytest

from arithbertini import documents as D
from arithbertini.arithseek import find_small_smooth_section, verify_certificate
from arithbertini.bertini import bad_hyperplane_hypersurface, degree_bound_profile
from arithbertini.cli import main
from arithbertini.cnsolve import (
    GridSpec,
    PolyOracle,
    brute_force_first_nonzero,
    cn_search,
    poschr_offsets,
)
from arithbertini.elimination import eliminate_projection, sylvester_resultant
from arithbertini.exactalg import MultiPoly, binary_gcd, is_squarefree_binary, l1_norm
from arithbertini.variety import VarietyPresentation, hilbert_bound, ideal_graded_piece, smoothness_check

from _levels import coords_in_level_basis
from _systems import hand_systems, projection_points_mod_p

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"
RESULTS: list[str] = []


@contextmanager
def criterion(label: str, budget: float):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        RESULTS.append(f"FAIL  {label} ({time.perf_counter() - t0:.2f}s): {type(exc).__name__}: {exc}")
        raise
    dt = time.perf_counter() - t0
    ok = dt < budget
    RESULTS.append(f"{'PASS' if ok else 'FAIL'}  {label} ({dt:.2f}s, budget {budget:g}s)")
    assert ok, f"{label} took {dt:.2f}s"


def test_1_discriminant_containment(series_P1):
    with criterion("1 discriminant containment on P^1, m = 2", 10):
        rng = random.Random(1)
        prof = degree_bound_profile(series_P1)
        assert prof.deg_P == 1 * 2 * 2
        c = bad_hyperplane_hypersurface(series_P1, 2)
        assert not c.empty and c.degree <= prof.P(2)
        x0, x1 = MultiPoly.variables_of(series_P1.variety.variables)
        hits = 0
        for _ in range(50):
            a, b = 0, 0
            while (a, b) == (0, 0):
                a, b = rng.randint(-9, 9), rng.randint(-9, 9)
            s = (x0 * a + x1 * b) ** 2
            hits += c.vanishes_at(coords_in_level_basis(series_P1, 2, s))
        assert hits == 50
        w = c.hypersurface.witness_point
        assert not c.vanishes_at(w)
        assert smoothness_check(series_P1.variety, series_P1.section(2, w)).smooth


def test_2_elimination_degree_bound():
    with criterion("2 elimination degree bound and F5/F7 soundness", 60):
        systems = hand_systems()
        assert len(systems) >= 5
        for name, sys_ in systems:
            V = sys_.variety
            cert = eliminate_projection(sys_)
            ell = V.degree * sys_.actual_p ** (V.dim + 1)
            assert cert.degree <= hilbert_bound(V, ell) * sys_.actual_q, name
            for p in (5, 7):
                for y in projection_points_mod_p(sys_, p):
                    assert cert.vanishes_at_mod(y, p), (name, p, y)


def _random_sparse(rng):
    n = rng.randint(1, 4)
    d = rng.randint(1, 3)
    names = tuple(f"v{i}" for i in range(n))
    while True:
        terms = {}
        for _ in range(rng.randint(1, 5)):
            e = [0] * n
            for _ in range(rng.randint(0, d)):
                e[rng.randrange(n)] += 1
            terms[tuple(e)] = rng.choice([-3, -2, -1, 1, 2, 3])
        f = MultiPoly(names, terms)
        if not f.is_zero():
            return f


def test_3_combinatorial_nullstellensatz():
    with criterion("3 cn_search vs brute force, 1000 polynomials", 30):
        rng = random.Random(3)
        agree = 0
        for _ in range(1000):
            f = _random_sparse(rng)
            d = f.total_degree()
            u = PolyOracle(f.nvars, d, f.evaluate)
            shift = rng.randint(-2, 2)
            grid = GridSpec(tuple(tuple(range(shift, shift + d + 1)) for _ in range(f.nvars)))
            got = cn_search(u, grid, seed=rng.randrange(2 ** 32))
            agree += tuple(got) == brute_force_first_nonzero(u, grid)
        assert agree == 1000


def test_4_poschr_perturbations():
    with criterion("4 poschr on P^1 with F2 and F3 points, 100 perturbations", 5):
        rng = random.Random(4)
        names = ("X0", "X1")
        x0, x1 = MultiPoly.variables_of(names)
        basis = [x0 ** 2, x0 * x1, x1 ** 2]
        pts = [((1, 1), 2), ((0, 1), 2), ((1, 2), 3), ((1, 0), 3)]
        off = poschr_offsets(basis, pts)
        assert off.F == 6
        good = 0
        for _ in range(100):
            c = [a + off.F * rng.randint(-10 ** 6, 10 ** 6) for a in off.offsets]
            s = sum((e * k for e, k in zip(basis, c)), MultiPoly.zero(names))
            good += all(s.evaluate_mod(pt, p) for pt, p in pts)
        assert good == 100


def _problem(name):
    return D.problem_from_doc(json.loads((DATA / name).read_text()))


def _three_conclusions(P, cert, squarefree):
    assert verify_certificate(cert, P).ok
    s = cert.section
    assert squarefree(s)
    assert all(s.evaluate(pt) != 0 for pt in P.char0_points)
    assert all(s.evaluate_mod(pt, p) != 0 for pt, p in P.charp_points)
    assert l1_norm(s) * P.norm.theta ** cert.m < 1


def test_5a_p1_end_to_end():
    with criterion("5 P^1 worked example within m <= 6", 120):
        P = _problem("p1_worked.json")
        assert P.m_range == (1, 6)
        cert = find_small_smooth_section(P)
        assert cert.m <= 6
        _three_conclusions(P, cert, is_squarefree_binary)


def _conic_pullback(s):
    # (a^2 : ab : b^2) parametrizes the conic, so {s = 0} is reduced iff the pullback is squarefree
    a, b = MultiPoly.variables_of(("a", "b"))
    return s.compose([a * a, a * b, b * b])


def test_5b_conic_end_to_end():
    with criterion("5 plane conic within m <= 4", 120):
        P = _problem("conic.json")
        assert P.m_range == (1, 4)
        cert = find_small_smooth_section(P)
        assert cert.m <= 4
        _three_conclusions(P, cert, lambda s: is_squarefree_binary(_conic_pullback(s)))


def _rand_form(rng, names, d, k=4):
    terms = {}
    n = len(names)
    for _ in range(k):
        e = [0] * n
        for _ in range(d):
            e[rng.randrange(n)] += 1
        terms[tuple(e)] = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    return MultiPoly(names, terms)


def test_6_exactness_substrate():
    with criterion("6 exactness substrate, 4 x 500 cases", 60):
        rng = random.Random(6)
        names = ("x0", "x1", "x2")
        n_sub = n_euler = n_eval = n_res = 0
        for _ in range(500):
            f = _rand_form(rng, names, rng.randint(0, 3))
            g = _rand_form(rng, names, rng.randint(0, 3))
            assert l1_norm(f * g) <= l1_norm(f) * l1_norm(g)
            n_sub += 1
            if not f.is_zero():
                d = f.total_degree()
                euler = sum((MultiPoly.var(names, v) * f.diff(v) for v in names), MultiPoly.zero(names))
                assert euler == f * d
            n_euler += 1
            pt = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in names]
            assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)
            assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)
            n_eval += 1
        bn = ("y0", "y1")
        while n_res < 500:
            h = _rand_form(rng, bn, rng.randint(0, 2), 3) if rng.random() < 0.5 else MultiPoly.constant(bn, 1)
            f = _rand_form(rng, bn, rng.randint(1, 3)) * h
            g = _rand_form(rng, bn, rng.randint(1, 3)) * h
            if f.is_zero() or g.is_zero():
                continue
            r = sylvester_resultant(f, g, bn)
            common = binary_gcd(f, g).total_degree() > 0
            assert (r == 0) == common
            n_res += 1
        assert min(n_sub, n_euler, n_eval, n_res) >= 500


def test_7_hilbert_bound(P1, P2, conic, cubic):
    with criterion("7 Hilbert bound for l <= 12", 10):
        for V in (P1, P2, conic, cubic):
            for ell in range(13):
                assert ideal_graded_piece(V, ell).quotient_dim <= hilbert_bound(V, ell)
        for n in (1, 2, 3):
            Pn = VarietyPresentation.projective_space(n)
            for ell in range(13):
                assert ideal_graded_piece(Pn, ell).quotient_dim == comb(ell + n, n)


def test_8_determinism_and_tamper_codes(tmp_path, capsys):
    with criterion("8 determinism and verify exit codes", 120):
        p1 = str(DATA / "p1_worked.json")
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for out in (a, b):
            assert main(["search", p1, "--seed", "11", "-o", str(out), "--log", str(tmp_path / "log")]) == 0
        assert a.read_bytes() == b.read_bytes()
        assert main(["verify", str(a), p1]) == 0
        doc = json.loads(a.read_text())
        doc["coefficients"] = [str(int(c) + 1) for c in doc["coefficients"]]
        t = tmp_path / "t.json"
        t.write_text(json.dumps(doc))
        assert main(["verify", str(t), p1]) == 7
        assert main(["verify", str(a), str(DATA / "conic.json")]) == 8
        capsys.readouterr()
