"""Exact integer polynomials in the formal variables M, R, P, Q.

Weights of sign trapezoids and of shifted plane partitions are monomials
M^mu R^r P^p Q^q; generating functions are sums of such monomials with
integer coefficients.  Everything here is exact: coefficients are Python
ints, exponents are nonnegative ints, and polynomials are immutable.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping

__all__ = ["MultiPoly", "binomial", "poly_det", "M", "R", "P", "Q", "ONE", "ZERO"]

VARIABLES = ("M", "R", "P", "Q")

Exponents = tuple[int, int, int, int]


def binomial(n: int, k: int) -> int:
    """C(n, k) for arbitrary integer n, with C(n, k) = 0 for k < 0.

    For n < 0 this is the falling-factorial extension
    n(n-1)...(n-k+1)/k!, so binomial(-1, 0) == 1 and binomial(-1, 1) == -1.
    The determinantal generating function and the closed-form counts need
    exactly these values in a handful of boundary cases; for n >= 0 the
    function agrees with the usual convention (0 when k > n).
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    num = 1
    for t in range(k):
        num *= n - t
    return num // math.factorial(k)


def path_count(dx: int, dy: int) -> int:
    """Number of monotone lattice paths with dx right and dy up steps."""
    if dx < 0 or dy < 0:
        return 0
    return math.comb(dx + dy, dx)


class MultiPoly:
    """Sparse integer polynomial keyed by exponent 4-tuples (eM, eR, eP, eQ)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponents, int] | Iterable[tuple[Exponents, int]] = ()):
        data: dict[Exponents, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coeff in items:
            if coeff == 0:
                continue
            exps = tuple(exps)
            if len(exps) != 4 or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple: {exps!r}")
            data[exps] = data.get(exps, 0) + coeff
        self._terms = {e: c for e, c in data.items() if c != 0}

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls.const(1)

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def monomial(cls, e_m: int, e_r: int, e_p: int, e_q: int, coeff: int = 1) -> "MultiPoly":
        return cls({(e_m, e_r, e_p, e_q): coeff})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        idx = VARIABLES.index(name)
        exps = [0, 0, 0, 0]
        exps[idx] = 1
        return cls({tuple(exps): 1})

    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        return sorted(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "MultiPoly | int") -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.const(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "MultiPoly | int") -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "MultiPoly":
        return MultiPoly.const(other) - self

    def __mul__(self, other: "MultiPoly | int") -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.const(other)
        out: dict[Exponents, int] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3])
                out[e] = out.get(e, 0) + ca * cb
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power")
        out = MultiPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def evaluate(self, m: int = 1, r: int = 1, p: int = 1, q: int = 1) -> int:
        total = 0
        for (em, er, ep, eq), c in self._terms.items():
            total += c * m**em * r**er * p**ep * q**eq
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exps, coeff in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(VARIABLES, exps) if e
            )
            mag = abs(coeff)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            pieces.append(("- " if coeff < 0 else "+ ") + body)
        head = pieces[0] if pieces[0].startswith("- ") else pieces[0][2:]
        return " ".join([head] + pieces[1:])

    def __repr__(self) -> str:
        return f"MultiPoly({self._terms!r})"


M = MultiPoly.variable("M")
R = MultiPoly.variable("R")
P = MultiPoly.variable("P")
Q = MultiPoly.variable("Q")
ONE = MultiPoly.one()
ZERO = MultiPoly.zero()


def poly_det(mat: list[list[MultiPoly]]) -> MultiPoly:
    """Determinant of a square matrix of MultiPoly, computed exactly.

    Laplace expansion along the first remaining row, memoised on the set
    of active columns.  Intended for small matrices (n <= 8).
    """
    n = len(mat)
    for row in mat:
        if len(row) != n:
            raise ValueError("matrix is not square")
    memo: dict[tuple[int, ...], MultiPoly] = {}

    def minor(cols: tuple[int, ...]) -> MultiPoly:
        if not cols:
            return ONE
        if cols in memo:
            return memo[cols]
        r = n - len(cols)
        acc = ZERO
        for s, c in enumerate(cols):
            entry = mat[r][c]
            if not entry:
                continue
            sub = minor(cols[:s] + cols[s + 1:])
            acc = acc + entry * sub if s % 2 == 0 else acc - entry * sub
        memo[cols] = acc
        return acc

    return minor(tuple(range(n)))
