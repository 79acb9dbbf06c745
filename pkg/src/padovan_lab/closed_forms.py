"""Closed-form counts for weighted Padovan graphs and their isomorphic families.

Two coordinate systems are used throughout.  A weighted Padovan graph is
indexed by its word length ``n`` and weight ``k``; the isomorphic word and
partition graphs are indexed by ``p`` (letters ``a``) and ``q`` (letters
``b``).  :class:`FamilyParams` carries both.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator

import numpy as np

from .errors import OutOfRange

CubePolynomial = tuple[int, ...]


def binom(a: int, b: int) -> int:
    """Binomial coefficient that is zero whenever ``b < 0``, ``b > a`` or ``a < 0``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def trim(coeffs) -> CubePolynomial:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(int(c) for c in coeffs)


def format_polynomial(coeffs: CubePolynomial, var: str = "x") -> str:
    """Render ``(6, 6, 1)`` as ``6 + 6x + x^2``."""
    terms = []
    for j, c in enumerate(coeffs):
        if c == 0:
            continue
        if j == 0:
            terms.append(str(c))
            continue
        mono = var if j == 1 else f"{var}^{j}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) if terms else "0"


@lru_cache(maxsize=None)
def padovan_number(n: int) -> int:
    if n < 0:
        raise ValueError(f"Padovan index must be nonnegative, got {n}")
    a, b, c = 1, 0, 0  # P_0, P_1, P_2
    for _ in range(n):
        a, b, c = b, c, a + b
    return a


def weight_range(n: int) -> tuple[int, int]:
    """Smallest and largest possible number of 1s in a Padovan word of length ``n``.

    The pair is returned as is even when ``kmin > kmax`` (``n == 2``); callers
    treat that as an empty family.
    """
    if n < 1:
        raise ValueError(f"word length must be at least 1, got {n}")
    return n // 2, (2 * n - 2) // 3


@dataclass(frozen=True)
class FamilyParams:
    n: int
    k: int
    p: int
    q: int

    @classmethod
    def from_nk(cls, n: int, k: int, strict: bool = True) -> "FamilyParams":
        params = cls(n, k, 2 * n - 3 * k - 2, 2 * k - n + 1)
        if strict and not params.valid:
            kmin, kmax = weight_range(n) if n >= 1 else (0, -1)
            raise OutOfRange(f"k={k} outside weight range [{kmin}, {kmax}] for n={n}")
        return params

    @classmethod
    def from_pq(cls, p: int, q: int) -> "FamilyParams":
        if p < 0 or q < 0:
            raise OutOfRange(f"p and q must be nonnegative, got p={p}, q={q}")
        return cls(2 * p + 3 * q + 1, p + 2 * q, p, q)

    @property
    def valid(self) -> bool:
        return self.n >= 1 and self.p >= 0 and self.q >= 0

    def describe(self) -> str:
        return f"n={self.n} k={self.k} p={self.p} q={self.q}"


def nk_to_pq(n: int, k: int) -> FamilyParams:
    return FamilyParams.from_nk(n, k)


def pq_to_nk(p: int, q: int) -> FamilyParams:
    return FamilyParams.from_pq(p, q)


def valid_params(max_n: int) -> Iterator[FamilyParams]:
    """All admissible (n, k) with ``1 <= n <= max_n``, ordered by n then k."""
    for n in range(1, max_n + 1):
        kmin, kmax = weight_range(n)
        for k in range(kmin, kmax + 1):
            yield FamilyParams.from_nk(n, k)


def pq_grid(max_pq: int) -> Iterator[FamilyParams]:
    for p in range(max_pq + 1):
        for q in range(max_pq + 1):
            yield FamilyParams.from_pq(p, q)


def vertex_count(params: FamilyParams) -> int:
    return binom(params.n - params.k - 1, 2 * params.n - 3 * params.k - 2)


def edge_count(params: FamilyParams) -> int:
    p, q = params.p, params.q
    if p <= 0 or q <= 0:
        return 0
    return q * binom(p + q - 1, p - 1)


def edge_count_nk(n: int, k: int) -> int:
    """Edge count written directly in (n, k), with the two edgeless extremes."""
    if 2 * k == n - 1 or 3 * k == 2 * n - 2:
        return 0
    return (2 * k - n + 1) * binom(n - k - 2, 2 * n - 3 * k - 3)


def degree_count(p: int, q: int, d: int) -> int:
    """Number of vertices of degree ``d`` in A_{p,q}."""
    if d < 0:
        return 0
    if d == 0:
        return 1 if p * q == 0 else 0
    if d % 2:
        h = (d - 1) // 2
        return 2 * binom(p - 1, h) * binom(q - 1, h)
    h = d // 2
    return binom(p - 1, h - 1) * binom(q - 1, h) + binom(p - 1, h) * binom(q - 1, h - 1)


def min_degree(p: int, q: int) -> int:
    return min(1, p * q)


def max_degree(p: int, q: int) -> int:
    if p * q == 0:
        return 0
    return 2 * p - 1 if p == q else 2 * min(p, q)


def degree_distribution(p: int, q: int) -> dict[int, int]:
    out = {}
    for d in range(0, 2 * min(p, q) + 1):
        c = degree_count(p, q, d)
        if c:
            out[d] = c
    return out


def diameter_formula(params: FamilyParams) -> int:
    return params.p * params.q


def cube_polynomial_closed(params: FamilyParams) -> CubePolynomial:
    n, k = params.n, params.k
    q = 2 * k - n + 1
    if not params.valid:
        return ()
    return trim(binom(n - k - j - 1, q) * binom(q, j) for j in range(q + 1))


@lru_cache(maxsize=None)
def _cube_recurrence(p: int, q: int) -> CubePolynomial:
    if p == 0 or q == 0:
        return (1,)
    a = _cube_recurrence(p - 1, q)
    b = _cube_recurrence(p, q - 1)
    c = (0,) + _cube_recurrence(p - 1, q - 1)
    size = max(len(a), len(b), len(c))
    pad = lambda t: t + (0,) * (size - len(t))
    return trim(x + y + z for x, y, z in zip(pad(a), pad(b), pad(c)))


def cube_polynomial_recurrence(params: FamilyParams) -> CubePolynomial:
    if not params.valid:
        return ()
    return _cube_recurrence(params.p, params.q)


def largest_cube(p: int, q: int) -> tuple[int, int]:
    """Dimension and number of the largest induced hypercubes of A_{p,q}."""
    return min(p, q), max(binom(p, q), binom(q, p))


@lru_cache(maxsize=None)
def count_weak_partitions(j: int, k: int, n: int) -> int:
    """Weak partitions of ``n`` into exactly ``k`` parts, each at most ``j``."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    if j == 0 or k == 0:
        return 0
    # either every part is below j, or one part equals j
    return count_weak_partitions(j - 1, k, n) + count_weak_partitions(j, k - 1, n - j)


class TrivariateSeries:
    """Truncated power series in x, y, z with exact integer coefficients.

    ``table[j, n, k]`` is the coefficient of ``x^j y^n z^k``.  Products drop
    every term beyond the bounds of the left operand.
    """

    def __init__(self, X: int, Y: int, Z: int, table: np.ndarray | None = None):
        self.bounds = (X, Y, Z)
        if table is None:
            table = np.zeros((X + 1, Y + 1, Z + 1), dtype=object)
            table[...] = 0
        self.table = table

    @classmethod
    def monomial(cls, X: int, Y: int, Z: int, j: int, n: int, k: int, coeff: int = 1):
        s = cls(X, Y, Z)
        if j <= X and n <= Y and k <= Z:
            s.table[j, n, k] = coeff
        return s

    def __add__(self, other: "TrivariateSeries") -> "TrivariateSeries":
        return TrivariateSeries(*self.bounds, self.table + other.table)

    def __mul__(self, other: "TrivariateSeries") -> "TrivariateSeries":
        X, Y, Z = self.bounds
        out = TrivariateSeries(X, Y, Z)
        # other is sparse in practice (three monomials), so shift-and-add over its support
        for j, n, k in zip(*np.nonzero(other.table)):
            if j > X or n > Y or k > Z:
                continue
            c = other.table[j, n, k]
            out.table[j:, n:, k:] += c * self.table[: X + 1 - j, : Y + 1 - n, : Z + 1 - k]
        return out

    def is_zero(self) -> bool:
        return not np.any(self.table != 0)

    def coefficient(self, j: int, n: int, k: int) -> int:
        X, Y, Z = self.bounds
        if not (0 <= j <= X and 0 <= n <= Y and 0 <= k <= Z):
            raise IndexError(f"({j}, {n}, {k}) outside truncation bounds {self.bounds}")
        return int(self.table[j, n, k])

    def slice_nk(self, n: int, k: int) -> CubePolynomial:
        """The polynomial in x multiplying ``y^n z^k``."""
        return trim(self.table[:, n, k])

    def y_slab(self, n: int) -> np.ndarray:
        return self.table[:, n, :]


def cube_generating_series(X: int, Y: int, Z: int) -> TrivariateSeries:
    """Expand y / (1 - y^2 z (1 + y z (1 + x y^2 z))) up to the given degrees.

    The denominator's correction term is y^2 z + y^3 z^2 + x y^5 z^3; the
    series is y times the sum of its powers, which terminates under
    truncation because every term raises the y-degree.
    """
    g = (
        TrivariateSeries.monomial(X, Y, Z, 0, 2, 1)
        + TrivariateSeries.monomial(X, Y, Z, 0, 3, 2)
        + TrivariateSeries.monomial(X, Y, Z, 1, 5, 3)
    )
    term = TrivariateSeries.monomial(X, Y, Z, 0, 1, 0)
    total = TrivariateSeries(X, Y, Z)
    while not term.is_zero():
        total = total + term
        term = term * g
    return total
