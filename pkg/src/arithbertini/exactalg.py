"""Exact scalars and sparse multivariate polynomials.

Coefficients live either in the rationals (``QQ``, stored as
:class:`fractions.Fraction`) or in a prime field (``GF(p)``, stored as
reduced ints).  A :class:`MultiPoly` is a map from exponent vectors to
nonzero coefficients over a fixed, ordered list of variable names.  Terms
are iterated in graded-lexicographic order, largest first.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Mapping, Sequence, Union

__all__ = [
    "DomainError",
    "RationalField",
    "PrimeField",
    "QQ",
    "GF",
    "MultiPoly",
    "BiDegree",
    "poly_mul",
    "poly_eval",
    "partial_derivative",
    "bidegree",
    "l1_norm",
    "monomials_of_degree",
    "is_prime",
    "binary_coefficients",
    "binary_form",
    "binary_gcd",
    "is_squarefree_binary",
]

MAX_EXPONENT = 2**31 - 1


class DomainError(ValueError):
    """Mismatched variables or scalar domains, bad arity, or bad arguments."""


def is_prime(n: int) -> bool:
    """Miller-Rabin with fixed bases; exact for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field of rational numbers."""

    characteristic = 0
    name = "QQ"

    def convert(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, str)) and not isinstance(x, bool):
            return Fraction(x)
        raise DomainError(f"cannot convert {x!r} to a rational")

    def normalize(self, x):
        return x

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """Residues modulo a prime ``p``, represented in ``[0, p)``."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        self.characteristic = p
        self.name = f"GF({p})"

    def convert(self, x) -> int:
        p = self.characteristic
        if isinstance(x, bool):
            raise DomainError(f"cannot convert {x!r} to GF({p})")
        if isinstance(x, int):
            return x % p
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise DomainError(f"denominator of {x} is divisible by {p}")
            return x.numerator * pow(x.denominator, -1, p) % p
        raise DomainError(f"cannot convert {x!r} to GF({p})")

    def normalize(self, x):
        return x % self.characteristic

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __repr__(self):
        return self.name


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


Domain = Union[RationalField, PrimeField]
Exps = tuple


def _grlex_key(e: Exps):
    return (sum(e), e)


def monomials_of_degree(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of the given total degree, largest (grlex) first."""
    if degree < 0:
        return []
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


class MultiPoly:
    """Sparse polynomial over ``QQ`` or ``GF(p)``.

    Instances are immutable.  ``terms`` maps exponent tuples to nonzero
    coefficients; do not mutate it.

    >>> x0, x1 = MultiPoly.variables_of(("X0", "X1"))
    >>> str((x0 + x1) * (x0 - x1))
    'X0^2 - X1^2'
    """

    __slots__ = ("variables", "terms", "domain", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping | None = None,
                 domain: Domain = QQ, *, _trusted: bool = False):
        variables = tuple(variables)
        if not _trusted:
            if len(set(variables)) != len(variables):
                raise DomainError(f"duplicate variable names in {variables}")
            n = len(variables)
            clean = {}
            for e, c in (terms or {}).items():
                e = tuple(e)
                if len(e) != n:
                    raise DomainError(f"exponent vector {e} does not match {n} variables")
                for k in e:
                    if not isinstance(k, int) or k < 0:
                        raise DomainError(f"bad exponent {k!r}")
                    if k > MAX_EXPONENT:
                        raise OverflowError(f"exponent {k} exceeds {MAX_EXPONENT}")
                c = domain.convert(c)
                if c:
                    clean[e] = domain.normalize(clean.get(e, 0) + c)
            terms = {e: c for e, c in clean.items() if c}
        self.variables = variables
        self.terms = terms
        self.domain = domain
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def zero(cls, variables, domain: Domain = QQ) -> "MultiPoly":
        return cls(variables, {}, domain, _trusted=True)

    @classmethod
    def constant(cls, variables, c, domain: Domain = QQ) -> "MultiPoly":
        variables = tuple(variables)
        c = domain.convert(c)
        return cls(variables, {(0,) * len(variables): c} if c else {}, domain, _trusted=True)

    @classmethod
    def monomial(cls, variables, exps, c=1, domain: Domain = QQ) -> "MultiPoly":
        return cls(variables, {tuple(exps): c}, domain)

    @classmethod
    def var(cls, variables, name: str, domain: Domain = QQ) -> "MultiPoly":
        variables = tuple(variables)
        if name not in variables:
            raise DomainError(f"unknown variable {name!r}")
        e = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {e: domain.convert(1)}, domain, _trusted=True)

    @classmethod
    def variables_of(cls, variables, domain: Domain = QQ) -> list["MultiPoly"]:
        return [cls.var(variables, v, domain) for v in variables]

    @classmethod
    def parse(cls, text: str, variables: Sequence[str], domain: Domain = QQ) -> "MultiPoly":
        """Parse expressions such as ``"3/2*X0^2*X1 - X1^3 + 7"``.

        Products use ``*``, powers ``^`` or ``**``; parentheses are supported.
        """
        return _Parser(text, tuple(variables), domain).parse()

    # basic structure ----------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self) -> list[tuple[Exps, object]]:
        """Terms sorted in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise DomainError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def total_degree(self) -> int:
        """Maximal total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, var: str) -> int:
        i = self._index(var)
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, self.domain.convert(0))

    def _index(self, var: str) -> int:
        try:
            return self.variables.index(var)
        except ValueError:
            raise DomainError(f"unknown variable {var!r}") from None

    def _check(self, other: "MultiPoly"):
        if self.variables != other.variables:
            raise DomainError(f"variable lists differ: {self.variables} vs {other.variables}")
        if self.domain != other.domain:
            raise DomainError(f"scalar domains differ: {self.domain} vs {other.domain}")

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MultiPoly.constant(self.variables, other, self.domain)
        return NotImplemented

    def _make(self, terms) -> "MultiPoly":
        norm = self.domain.normalize
        return MultiPoly(self.variables, {e: c for e, c in ((e, norm(c)) for e, c in terms.items()) if c},
                         self.domain, _trusted=True)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return self._make(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._make({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) - c
        return self._make(terms)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c0 = self.domain.convert(other)
            return self._make({e: c * c0 for e, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return self._make(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise DomainError("exponent must be a nonnegative integer")
        result = MultiPoly.constant(self.variables, 1, self.domain)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return (self.variables == other.variables and self.domain == other.domain
                    and self.terms == other.terms)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == MultiPoly.constant(self.variables, other, self.domain)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, self.domain, frozenset(self.terms.items())))
        return self._hash

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        """Quotient of an exact division; raises :class:`DomainError` otherwise."""
        self._check(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        lb, cb = other.leading_term()
        inv = _inverse(cb, self.domain)
        rem = dict(self.terms)
        quot: dict = {}
        norm = self.domain.normalize
        while rem:
            lr = max(rem, key=_grlex_key)
            diff = tuple(x - y for x, y in zip(lr, lb))
            if min(diff, default=0) < 0:
                raise DomainError("polynomial division is not exact")
            c = norm(rem[lr] * inv)
            quot[diff] = c
            for e, cc in other.terms.items():
                t = tuple(x + y for x, y in zip(e, diff))
                v = norm(rem.get(t, 0) - c * cc)
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return MultiPoly(self.variables, quot, self.domain, _trusted=True)

    # calculus and evaluation ---------------------------------------------
    def diff(self, var: str) -> "MultiPoly":
        i = self._index(var)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                out[e[:i] + (k - 1,) + e[i + 1:]] = c * k
        return self._make(out)

    def evaluate(self, point: Sequence):
        """Exact value at ``point`` (coordinates converted into the domain)."""
        if len(point) != self.nvars:
            raise DomainError(f"point has {len(point)} coordinates, expected {self.nvars}")
        conv = self.domain.convert
        pt = [conv(v) for v in point]
        total = self.domain.convert(0)
        if isinstance(self.domain, PrimeField):
            p = self.domain.characteristic
            for e, c in self.terms.items():
                t = c
                for v, k in zip(pt, e):
                    if k:
                        t = t * pow(v, k, p) % p
                total = (total + t) % p
            return total
        for e, c in self.terms.items():
            t = c
            for v, k in zip(pt, e):
                if k:
                    t *= v ** k
            total += t
        return total

    def evaluate_mod(self, point: Sequence[int], p: int) -> int:
        """Value modulo ``p`` of a rational polynomial at an integer point."""
        total = 0
        for e, c in self.terms.items():
            if isinstance(c, Fraction):
                if c.denominator % p == 0:
                    raise DomainError(f"coefficient {c} has denominator divisible by {p}")
                t = c.numerator * pow(c.denominator, -1, p)
            else:
                t = c
            for v, k in zip(point, e):
                if k:
                    t = t * pow(v, k, p) % p
            total += t
        return total % p

    def compose(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Substitute ``images[i]`` for the i-th variable."""
        if len(images) != self.nvars:
            raise DomainError("need one image per variable")
        if not images:
            return self
        target = images[0]
        for im in images:
            target._check(im)
        cache: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = images[i] ** k
            return cache[key]

        result = MultiPoly.zero(target.variables, target.domain)
        for e, c in self.terms.items():
            t = MultiPoly.constant(target.variables, c, target.domain)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            result = result + t
        return result

    def embed(self, variables: Sequence[str]) -> "MultiPoly":
        """Same polynomial over a variable list containing all used variables."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        pos = []
        for i, v in enumerate(self.variables):
            if v in variables:
                pos.append(variables.index(v))
            else:
                if any(e[i] for e in self.terms):
                    raise DomainError(f"variable {v!r} is used but missing from {variables}")
                pos.append(None)
        n = len(variables)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for k, j in zip(e, pos):
                if j is not None:
                    ne[j] = k
            out[tuple(ne)] = c
        return MultiPoly(variables, out, self.domain, _trusted=True)

    def coefficients_in(self, block: Sequence[str]) -> dict[Exps, "MultiPoly"]:
        """Split as ``sum_a  coeff_a(rest) * block^a``; returns ``{a: coeff_a}``."""
        block = tuple(block)
        idx = [self._index(v) for v in block]
        rest = [i for i in range(self.nvars) if i not in idx]
        rest_vars = tuple(self.variables[i] for i in rest)
        groups: dict = {}
        for e, c in self.terms.items():
            a = tuple(e[i] for i in idx)
            groups.setdefault(a, {})[tuple(e[i] for i in rest)] = c
        return {a: MultiPoly(rest_vars, t, self.domain, _trusted=True) for a, t in groups.items()}

    def to_domain(self, domain: Domain) -> "MultiPoly":
        """Explicit change of scalar domain (QQ -> GF(p) reduction)."""
        return MultiPoly(self.variables, {e: domain.convert(c) for e, c in self.terms.items()}, domain)

    # norms and normalization --------------------------------------------
    def l1_norm(self) -> Fraction:
        if self.domain != QQ:
            raise DomainError("the l1 norm needs rational coefficients")
        return sum((abs(c) for c in self.terms.values()), Fraction(0))

    def primitive(self) -> "MultiPoly":
        """Integer coefficients with content 1 and positive leading coefficient."""
        if self.domain != QQ:
            raise DomainError("primitive part needs rational coefficients")
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [int(c * den) for c in self.terms.values()]
        g = 0
        for v in nums:
            g = math.gcd(g, v)
        _, lc = self.leading_term()
        sign = 1 if lc > 0 else -1
        scale = Fraction(den * sign, g)
        return self._make({e: c * scale for e, c in self.terms.items()})

    def is_integral(self) -> bool:
        return all(isinstance(c, int) or c.denominator == 1 for c in self.terms.values())

    # printing -----------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k)
            neg = isinstance(c, Fraction) and c < 0
            mag = -c if neg else c
            if mono:
                coef = "" if mag == 1 else f"{mag}*"
                body = coef + mono
            else:
                body = str(mag)
            parts.append(("-", body) if neg else ("+", body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MultiPoly({str(self)!r}, {self.variables})"


def _inverse(c, domain: Domain):
    if isinstance(domain, PrimeField):
        return pow(c, -1, domain.characteristic)
    return 1 / Fraction(c)


class _Parser:
    _token = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")

    def __init__(self, text, variables, domain):
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = self._token.match(text, pos)
            if not m or m.end() == pos:
                raise DomainError(f"cannot parse polynomial near {text[pos:pos + 10]!r}")
            num, name, op = m.groups()
            self.tokens.append(("num", int(num)) if num else ("var", name) if name else ("op", op))
            pos = m.end()
        self.i = 0
        self.variables = variables
        self.domain = domain

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise DomainError("empty polynomial expression")
        out = self.expr()
        if self.i != len(self.tokens):
            raise DomainError(f"unexpected token {self.peek()[1]!r}")
        return out

    def expr(self):
        sign = 1
        if self.peek() in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term() * sign
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            f = self.factor()
            if op == "*":
                acc = acc * f
            else:
                if not f.is_constant() or f.is_zero():
                    raise DomainError("can only divide by nonzero constants")
                acc = acc * _inverse(f.constant_value(), self.domain)
        return acc

    def factor(self):
        base = self.atom()
        if self.peek() in (("op", "^"), ("op", "**")):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise DomainError("exponent must be an integer literal")
            base = base ** val
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return MultiPoly.constant(self.variables, val, self.domain)
        if kind == "var":
            return MultiPoly.var(self.variables, val, self.domain)
        if (kind, val) == ("op", "("):
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise DomainError("unbalanced parentheses")
            return inner
        if (kind, val) == ("op", "-"):
            return -self.factor()
        raise DomainError(f"unexpected token {val!r}")


class BiDegree(tuple):
    """``(deg_x, deg_y)``: maximal degrees in the two variable blocks."""

    def __new__(cls, deg_x: int, deg_y: int):
        return super().__new__(cls, (deg_x, deg_y))

    @property
    def deg_x(self) -> int:
        return self[0]

    @property
    def deg_y(self) -> int:
        return self[1]

    def __repr__(self):
        return f"BiDegree(deg_x={self[0]}, deg_y={self[1]})"


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q


def poly_eval(p: MultiPoly, point: Sequence):
    return p.evaluate(point)


def partial_derivative(p: MultiPoly, var: str) -> MultiPoly:
    return p.diff(var)


def bidegree(p: MultiPoly, x_block: Iterable[str] | int) -> BiDegree:
    """Maximal degrees in the X-block and in the complementary Y-block.

    ``x_block`` is either a set of variable names or a split index ``k``
    meaning the first ``k`` variables.  The zero polynomial has bidegree (0, 0).
    """
    if isinstance(x_block, int):
        if not 0 <= x_block <= p.nvars:
            raise DomainError(f"split index {x_block} out of range")
        xs = set(p.variables[:x_block])
    else:
        xs = set(x_block)
        if not xs <= set(p.variables):
            raise DomainError(f"X-block {sorted(xs)} is not a subset of {p.variables}")
    mask = [v in xs for v in p.variables]
    dx = dy = 0
    for e in p.terms:
        sx = sum(k for k, m in zip(e, mask) if m)
        sy = sum(k for k, m in zip(e, mask) if not m)
        dx, dy = max(dx, sx), max(dy, sy)
    return BiDegree(dx, dy)


def l1_norm(p: MultiPoly) -> Fraction:
    return p.l1_norm()


# --- binary forms ------------------------------------------------------
#
# A binary form of degree d in (x0, x1) is stored densely as
# [c_0, ..., c_d] with c_k the coefficient of x0^k * x1^(d-k).

def binary_coefficients(f: MultiPoly, x0: str | None = None, x1: str | None = None,
                        degree: int | None = None) -> list:
    """Dense coefficient list of a binary form; coefficient ``k`` goes with ``x0^k``."""
    if f.nvars != 2:
        raise DomainError("binary_coefficients expects a polynomial in two variables")
    i0 = f._index(x0 or f.variables[0])
    if not f.is_homogeneous():
        raise DomainError("not a form")
    d = f.total_degree() if degree is None else degree
    if f.terms and f.total_degree() != d:
        raise DomainError("degree mismatch")
    coeffs = [f.domain.convert(0)] * (max(d, 0) + 1)
    for e, c in f.terms.items():
        coeffs[e[i0]] = c
    return coeffs


def binary_form(coeffs: Sequence, variables: Sequence[str], domain: Domain = QQ) -> MultiPoly:
    d = len(coeffs) - 1
    return MultiPoly(variables, {(k, d - k): c for k, c in enumerate(coeffs) if c}, domain)


def _trim(a: list) -> list:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def _udivmod(a: list, b: list):
    a, b = [Fraction(x) for x in _trim(a)], _trim(b)
    if not b:
        raise ZeroDivisionError
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv = 1 / Fraction(b[-1])
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = a[-1] * inv
        q[k] = c
        for j, bj in enumerate(b):
            a[j + k] -= c * bj
        a = _trim(a)
    return q, a


def _ugcd(a: list, b: list) -> list:
    a, b = _trim(a), _trim(b)
    while b:
        _, r = _udivmod(a, b)
        a, b = b, r
    if not a:
        return []
    lc = Fraction(a[-1])
    return [Fraction(x) / lc for x in a]


def _uderiv(a: list) -> list:
    return [k * a[k] for k in range(1, len(a))]


def _x1_order(coeffs: list) -> int:
    """Multiplicity of the root (1:0), i.e. the power of x1 dividing the form."""
    d = len(coeffs) - 1
    return d - len(_trim(coeffs)) + 1


def binary_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Monic-normalized gcd of two rational binary forms in the same two variables."""
    f._check(g)
    if f.is_zero():
        return g.primitive() if g.terms else g
    if g.is_zero():
        return f.primitive()
    cf, cg = binary_coefficients(f), binary_coefficients(g)
    # dehomogenize at x1 = 1: coefficient list in t = x0
    h = _ugcd(_trim(cf), _trim(cg))
    k = min(_x1_order(cf), _x1_order(cg))
    deg = len(h) - 1 + k
    out = {}
    for j, c in enumerate(h):
        if c:
            out[(j, deg - j)] = c
    return MultiPoly(f.variables, out, QQ).primitive()


def is_squarefree_binary(f: MultiPoly) -> bool:
    """True when the binary form has no repeated projective root.

    The zero form is not squarefree; nonzero constants are.
    """
    if f.is_zero():
        return False
    if f.total_degree() == 0:
        return True
    x0, x1 = f.variables
    g = binary_gcd(f, binary_gcd(f.diff(x0), f.diff(x1)))
    return g.total_degree() == 0


def iter_points_projective(n: int, p: int) -> Iterator[tuple[int, ...]]:
    """Normalized representatives of the points of P^n over GF(p)."""
    from itertools import product
    for lead in range(n + 1):
        for tail in product(range(p), repeat=n - lead):
            yield (0,) * lead + (1,) + tail
