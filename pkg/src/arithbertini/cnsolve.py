"""Constructive combinatorial Nullstellensatz and residue offsets.

``cn_search`` returns the lexicographically first grid point where a
polynomial oracle does not vanish.  Only the first ``deg u + 1`` values of
each grid set matter: the first value ``a_1`` leaving ``u(a_1, ...)`` nonzero
is not a common root of the coefficients of ``u`` in ``v_1``, and there are
at most ``deg u`` of those, then recurse.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import prod
from typing import Callable, Iterator, Sequence

from .exactalg import DomainError, MultiPoly, is_prime

__all__ = [
    "PolyOracle",
    "GridSpec",
    "OffsetVector",
    "OracleContractViolation",
    "BasePointAtResidue",
    "GridTooSmall",
    "cn_search",
    "poschr_offsets",
    "combined_grid_search",
    "brute_force_first_nonzero",
]


class OracleContractViolation(ArithmeticError):
    """The oracle vanished on the whole grid: it is zero or its degree was understated."""


class BasePointAtResidue(ArithmeticError):
    """No offset vector is nonzero at every residue point (retryable at another level)."""


class GridTooSmall(DomainError):
    """Some grid set has at most ``deg u`` elements."""


@dataclass(frozen=True)
class PolyOracle:
    """Black-box exact evaluation of a polynomial of total degree ``<= total_degree``."""

    arity: int
    total_degree: int
    eval: Callable[[Sequence], object]

    @classmethod
    def from_poly(cls, f: MultiPoly) -> "PolyOracle":
        return cls(f.nvars, max(f.total_degree(), 0), f.evaluate)

    def __call__(self, point: Sequence):
        if len(point) != self.arity:
            raise DomainError(f"oracle takes {self.arity} coordinates")
        return self.eval(point)

    def spot_check(self, lines: int = 3, seed: int = 0) -> bool:
        """The ``(d+1)``-th finite difference along random lines must vanish."""
        rng = random.Random(seed)
        d = self.total_degree
        for _ in range(lines):
            a = [rng.randint(-50, 50) for _ in range(self.arity)]
            b = [rng.randint(-50, 50) for _ in range(self.arity)]
            vals = [Fraction(self([x + t * y for x, y in zip(a, b)])) for t in range(d + 2)]
            for _ in range(d + 1):
                vals = [vals[i + 1] - vals[i] for i in range(len(vals) - 1)]
            if vals[0] != 0:
                return False
        return True


@dataclass(frozen=True)
class GridSpec:
    sets: tuple[tuple, ...]

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(tuple(sorted(set(s))) for s in self.sets))

    @classmethod
    def ranges(cls, n: int, size: int) -> "GridSpec":
        return cls(tuple(tuple(range(size)) for _ in range(n)))

    def size(self) -> int:
        return prod(len(s) for s in self.sets)


@dataclass(frozen=True)
class OffsetVector:
    F: int
    offsets: tuple[int, ...]

    def __post_init__(self):
        if self.F < 1 or any(not 0 <= a < self.F for a in self.offsets):
            raise DomainError("offsets must satisfy 0 <= a_j < F")


def brute_force_first_nonzero(u: PolyOracle, grid: GridSpec) -> tuple | None:
    """Reference oracle: full enumeration in lexicographic order."""
    for pt in product(*grid.sets):
        if u(list(pt)) != 0:
            return pt
    return None


def cn_search(u: PolyOracle, grid: GridSpec, exhaustive_limit: int = 64, seed: int = 0,
              probes: int = 3) -> list:
    """First grid point, in lexicographic order, where ``u`` is nonzero.

    Coordinates are fixed left to right.  A subtree with at most
    ``exhaustive_limit`` points is enumerated; larger ones are tested for
    being identically zero by evaluation at random integer points, where a
    nonzero value is conclusive.
    """
    if len(grid.sets) != u.arity:
        raise DomainError("grid dimension does not match the oracle arity")
    d = u.total_degree
    for s in grid.sets:
        if len(s) < d + 1:
            raise GridTooSmall(f"grid set of size {len(s)} for degree {d}")
    sets = [list(s[: d + 1]) for s in grid.sets]
    rng = random.Random(seed)
    n = u.arity

    def sub_nonzero(prefix: list) -> bool:
        rest = sets[len(prefix):]
        if prod(len(s) for s in rest) <= exhaustive_limit:
            return any(u(prefix + list(t)) != 0 for t in product(*rest))
        for _ in range(probes):
            pt = prefix + [rng.randint(-10 ** 6, 10 ** 6) for _ in rest]
            if u(pt) != 0:
                return True
        return False

    prefix: list = []
    while len(prefix) < n:
        for a in sets[len(prefix)]:
            if sub_nonzero(prefix + [a]):
                prefix.append(a)
                break
        else:
            if not prefix:
                raise OracleContractViolation("the oracle vanishes on the whole grid")
            # a random probe missed; settle this level by enumeration
            hit = _exhaustive_from(u, sets, prefix)
            if hit is None:
                raise OracleContractViolation("the oracle vanishes below the chosen prefix")
            return hit
    if u(prefix) == 0:
        raise OracleContractViolation("search ended on a zero of the oracle")
    return prefix


def _exhaustive_from(u, sets, prefix):
    for t in product(*sets[len(prefix):]):
        pt = prefix + list(t)
        if u(pt) != 0:
            return pt
    return None


def _residue_values(sections: Sequence[MultiPoly], coords: Sequence[int], p: int) -> list[int]:
    if not any(c % p for c in coords):
        raise DomainError(f"point {tuple(coords)} is zero modulo {p}")
    return [e.evaluate_mod(coords, p) for e in sections]


def _vectors_by_l1(n: int, F: int) -> Iterator[tuple[int, ...]]:
    """Vectors in ``[0, F)^n`` ordered by coordinate sum, then ascending lex."""

    def comps(total, k):
        if k == 1:
            if total < F:
                yield (total,)
            return
        for first in range(min(total, F - 1) + 1):
            for tail in comps(total - first, k - 1):
                yield (first,) + tail

    for total in range(1, n * (F - 1) + 1):
        yield from comps(total, n)


def poschr_offsets(sections: Sequence[MultiPoly], points: Sequence[tuple[Sequence[int], int]],
                   F: int | None = None, state_cap: int = 10 ** 6) -> OffsetVector:
    """Offsets ``a_j`` in ``[0, F)`` with ``sum_j (a_j + F b_j) e_j(y_i) != 0``
    in the residue field of every ``y_i``, whatever the integers ``b_j``.

    ``points`` are ``(coords, p)`` with integer coordinates read modulo
    ``p``.  Small searches enumerate offsets by coordinate sum; larger ones
    pick a good vector modulo each prime and glue by CRT.
    """
    n = len(sections)
    primes = sorted({p for _, p in points})
    for p in primes:
        if not is_prime(p):
            raise DomainError(f"residue characteristic {p} is not prime")
    if F is None:
        F = prod(primes) if primes else 1
    if any(F % p for p in primes):
        raise DomainError("F must be divisible by every residue characteristic")
    if not points:
        return OffsetVector(F, (0,) * n)
    table = [(p, _residue_values(sections, c, p)) for c, p in points]
    for p, vals in table:
        if not any(vals):
            raise BasePointAtResidue(f"all sections vanish at a point over GF({p})")

    def good(vec) -> bool:
        return all(sum(a * v for a, v in zip(vec, vals)) % p for p, vals in table)

    if F ** n <= state_cap:
        for vec in _vectors_by_l1(n, F):
            if good(vec):
                return OffsetVector(F, vec)
        raise BasePointAtResidue("no offset vector avoids every residue point")

    per_prime = {}
    for p in primes:
        rows = [vals for q, vals in table if q == p]
        per_prime[p] = _good_mod_p(rows, p, n, state_cap)
    # CRT: a_j = c_j mod p for every p, reduced into [0, F)
    offs = []
    for j in range(n):
        a, mod = 0, 1
        for p in primes:
            c = per_prime[p][j]
            t = ((c - a) * pow(mod, -1, p)) % p
            a, mod = a + mod * t, mod * p
        offs.append(a % F)
    vec = tuple(offs)
    if not good(vec):
        raise BasePointAtResidue("CRT-glued offsets failed a residue check")
    return OffsetVector(F, vec)


def _good_mod_p(rows, p, n, state_cap):
    """A vector in ``GF(p)^n`` outside the union of hyperplanes ``rows``."""
    q = len(rows)
    size = min(p, q + 1)

    def u(vec):
        out = 1
        for r in rows:
            out = out * (sum(a * v for a, v in zip(vec, r)) % p) % p
        return out

    if size == q + 1:
        # over GF(p) with p > q the product of q nonzero linear forms
        # cannot vanish on a grid with sides q + 1
        for vec in product(range(size), repeat=n):
            if u(vec):
                return vec
    count = 0
    for vec in product(range(p), repeat=n):
        if u(vec):
            return vec
        count += 1
        if count > state_cap:
            break
    raise BasePointAtResidue(f"no vector over GF({p}) avoids all {q} residue points")


def combined_grid_search(u: PolyOracle, offsets: OffsetVector, b_cap: int,
                         basis: Sequence | None = None, exhaustive_limit: int = 64,
                         seed: int = 0) -> list[int]:
    """Coefficients ``c_j = a_j + F b_j`` with ``0 <= b_j <= b_cap`` and ``u(c) != 0``."""
    if basis is not None and len(basis) != u.arity:
        raise DomainError("basis length does not match the oracle arity")
    if len(offsets.offsets) != u.arity:
        raise DomainError("offset vector length does not match the oracle arity")
    if b_cap < u.total_degree:
        raise GridTooSmall(f"b_cap {b_cap} is below the oracle degree {u.total_degree}")
    F = offsets.F
    upto = min(b_cap, u.total_degree)
    grid = GridSpec(tuple(tuple(a + F * b for b in range(upto + 1)) for a in offsets.offsets))
    return cn_search(u, grid, exhaustive_limit=exhaustive_limit, seed=seed)
