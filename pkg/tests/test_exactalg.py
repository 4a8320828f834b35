from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from arithbertini.exactalg import (
    GF,
    QQ,
    BiDegree,
    DomainError,
    MultiPoly,
    bidegree,
    binary_gcd,
    is_squarefree_binary,
    l1_norm,
    partial_derivative,
    poly_eval,
    poly_mul,
)

XV = ("X0", "X1")


def P(text, variables=XV):
    return MultiPoly.parse(text, variables)


def test_mul_examples():
    assert poly_mul(P("X0+X1"), P("X0-X1")) == P("X0^2 - X1^2")
    assert poly_mul(P("2*X0"), P("3*X1")) == P("6*X0*X1")
    s = P("X0+X1")
    assert l1_norm(s * s) == 4 == l1_norm(s) ** 2


def test_mul_rejects_mismatch():
    with pytest.raises(DomainError):
        poly_mul(P("X0"), MultiPoly.parse("Y0", ("Y0", "Y1")))
    with pytest.raises(DomainError):
        poly_mul(P("X0"), P("X0").to_domain(GF(5)))


def test_eval_examples():
    f = P("X0^2 - X1^2")
    assert poly_eval(f, [1, 1]) == 0
    assert poly_eval(f, [2, 1]) == 3
    disc = MultiPoly.parse("b^2 - 4*a*c", ("a", "b", "c"))
    assert poly_eval(disc, [1, 2, 1]) == 0
    with pytest.raises(DomainError):
        poly_eval(f, [1])


def test_derivative_examples():
    assert partial_derivative(P("X0^3"), "X0") == P("3*X0^2")
    assert partial_derivative(P("X0*X1"), "X1") == P("X0")
    f = P("X0^3 + X0*X1^2")
    euler = P("X0") * f.diff("X0") + P("X1") * f.diff("X1")
    assert euler == f * 3
    with pytest.raises(DomainError):
        partial_derivative(f, "Z")


def test_bidegree_examples():
    v = ("X0", "X1", "Y0", "Y1")
    assert bidegree(MultiPoly.parse("X0^2*Y0 + X0*X1*Y1", v), 2) == BiDegree(2, 1)
    assert bidegree(MultiPoly.constant(v, 1), ["X0", "X1"]) == (0, 0)


def test_l1_examples():
    assert l1_norm(P("X0-X1")) == 2
    assert l1_norm(MultiPoly.zero(XV)) == 0
    assert l1_norm(P("(X0+X1)^3")) == 8
    with pytest.raises(DomainError):
        l1_norm(P("X0").to_domain(GF(7)))


def test_scalar_invariants():
    f = MultiPoly(XV, {(1, 0): Fraction(4, -6), (0, 1): 0})
    assert f.terms == {(1, 0): Fraction(-2, 3)}
    g = MultiPoly(XV, {(1, 0): 12, (0, 1): -1}, GF(5))
    assert g.terms == {(1, 0): 2, (0, 1): 4}
    with pytest.raises(DomainError):
        MultiPoly(XV, {(1, 0, 0): 1})


def test_reduction_refuses_bad_denominator():
    with pytest.raises(DomainError):
        P("X0/5").to_domain(GF(5))


def test_printing_and_order():
    assert str(P("X1^2 - X0^2")) == "-X0^2 + X1^2"
    assert str(MultiPoly.zero(XV)) == "0"


def test_binary_gcd_and_squarefree():
    assert not is_squarefree_binary(P("X0^2*X1"))
    assert binary_gcd(P("X0^2*X1"), P("2*X0*X1")) == P("X0*X1")
    assert is_squarefree_binary(P("X0*X1*(X0-X1)"))
    assert (P("(X0+X1)^3")).exact_div(P("X0+X1")) == P("(X0+X1)^2")


# --- properties ---------------------------------------------------------

coef = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def polys(draw, nvars=3, maxdeg=4, homogeneous=None):
    names = tuple(f"X{i}" for i in range(nvars))
    n = draw(st.integers(0, 6))
    terms = {}
    for _ in range(n):
        if homogeneous is not None:
            parts = draw(st.lists(st.integers(0, homogeneous), min_size=nvars - 1, max_size=nvars - 1))
            cuts = sorted(parts)
            e = tuple(b - a for a, b in zip([0] + cuts, cuts + [homogeneous]))
        else:
            e = tuple(draw(st.lists(st.integers(0, maxdeg), min_size=nvars, max_size=nvars)))
        terms[e] = draw(coef)
    return MultiPoly(names, terms)


@settings(max_examples=500, deadline=None)
@given(polys(), polys())
def test_l1_submultiplicative(p, q):
    assert l1_norm(p * q) <= l1_norm(p) * l1_norm(q)


@settings(max_examples=500, deadline=None)
@given(st.integers(0, 5).flatmap(lambda d: st.tuples(st.just(d), polys(homogeneous=d))))
def test_euler_identity(data):
    d, f = data
    xs = MultiPoly.variables_of(f.variables)
    lhs = sum((x * f.diff(x.variables[i]) for i, x in enumerate(xs)), MultiPoly.zero(f.variables))
    assert lhs == f * d


@settings(max_examples=500, deadline=None)
@given(polys(), polys(), st.lists(coef, min_size=3, max_size=3))
def test_eval_homomorphism(p, q, v):
    assert poly_eval(p * q, v) == poly_eval(p, v) * poly_eval(q, v)
    assert poly_eval(p + q, v) == poly_eval(p, v) + poly_eval(q, v)


@settings(max_examples=200, deadline=None)
@given(polys(maxdeg=2), polys(maxdeg=2), polys(maxdeg=2))
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@settings(max_examples=200, deadline=None)
@given(polys(), polys())
def test_mul_matches_sympy(p, q):
    syms = sympy.symbols(p.variables)
    to = lambda f: sympy.Poly(sympy.sympify(str(f).replace("^", "**")), *syms, domain="QQ")
    assert to(p * q) == to(p) * to(q)


@settings(max_examples=200, deadline=None)
@given(polys(maxdeg=3), polys(maxdeg=3))
def test_exact_div_roundtrip(p, q):
    if q.is_zero():
        return
    assert (p * q).exact_div(q) == p
