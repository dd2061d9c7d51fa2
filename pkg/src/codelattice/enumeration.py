"""Complete short-vector enumeration with exact rational arithmetic.

A Fincke-Pohst style recursion over an exact Cholesky decomposition of the
Gram matrix lists every lattice vector of squared norm <= B, one vector per
+-pair.  All interval endpoints are derived by exact integer square-root
comparisons, so completeness never depends on floating-point rounding.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import NamedTuple

from .lattices import IntegralLattice

__all__ = [
    "EnumerationCap",
    "NotPositiveDefinite",
    "ShortVector",
    "ShortVectorList",
    "short_vectors",
    "lattice_minimum",
]


class EnumerationCap(RuntimeError):
    """The enumeration produced more vectors than the configured cap."""

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"enumeration cap exceeded: {count} vectors > cap {cap}")


class NotPositiveDefinite(ValueError):
    pass


class ShortVector(NamedTuple):
    coords: tuple[int, ...]
    norm: int


class ShortVectorList(NamedTuple):
    bound: int
    vectors: list[ShortVector]


def _cholesky(gram) -> list[list[Fraction]]:
    """q[i][i] and q[i][j] of the standard quadratic-form decomposition."""
    n = len(gram)
    q = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        s = Fraction(gram[i][i])
        for k in range(i):
            s -= q[k][k] * q[k][i] * q[k][i]
        if s <= 0:
            raise NotPositiveDefinite("Gram matrix is not positive definite")
        q[i][i] = s
        for j in range(i + 1, n):
            t = Fraction(gram[i][j])
            for k in range(i):
                t -= q[k][k] * q[k][i] * q[k][j]
            q[i][j] = t / s
    return q


def _floor_sqrt_add_div(s2: int, c: int, d: int) -> int:
    """floor((sqrt(s2) + c) / d) for integers s2 >= 0, d > 0, exactly."""
    x = (isqrt(s2) + c) // d
    t = d * (x + 1) - c
    if t <= 0 or t * t <= s2:
        x += 1
    return x


def _coeff_range(budget: Fraction, qii: Fraction, offset: Fraction):
    """Integers x with qii * (x + offset)**2 <= budget, as (lo, hi)."""
    if budget < 0:
        return 0, -1
    s = budget / qii
    a, b = s.numerator, s.denominator
    u, v = offset.numerator, offset.denominator
    s2 = a * b * v * v
    d = b * v
    hi = _floor_sqrt_add_div(s2, -u * b, d)
    lo = -_floor_sqrt_add_div(s2, u * b, d)
    return lo, hi


def short_vectors(
    lattice: IntegralLattice, bound: int, cap: int = 10_000_000
) -> ShortVectorList:
    """All vectors with 0 < norm <= bound, one representative per +-pair.

    Representatives have a positive first nonzero coordinate and are sorted
    by (norm, coordinates).  Every emitted norm is re-verified by an
    integer dot product of the ambient coordinates.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    n = lattice.n
    q = _cholesky(lattice.gram)
    basis = lattice.basis
    out: list[ShortVector] = []
    x = [0] * n
    budget = Fraction(bound)

    def emit():
        v = [0] * n
        for i in range(n):
            xi = x[i]
            if xi:
                row = basis[i]
                for j in range(n):
                    v[j] += xi * row[j]
        norm = sum(e * e for e in v)
        assert 0 < norm <= bound
        for e in v:
            if e:
                if e < 0:
                    v = [-c for c in v]
                break
        out.append(ShortVector(tuple(v), norm))
        if len(out) > cap:
            raise EnumerationCap(len(out), cap)

    def rec(i: int, remaining: Fraction, zero_above: bool):
        offset = Fraction(0)
        for j in range(i + 1, n):
            if x[j]:
                offset += q[i][j] * x[j]
        lo, hi = _coeff_range(remaining, q[i][i], offset)
        if zero_above and lo < 0:
            lo = 0
        for xi in range(lo, hi + 1):
            x[i] = xi
            if i == 0:
                if not (zero_above and xi == 0):
                    emit()
            else:
                t = offset + xi
                rec(i - 1, remaining - q[i][i] * t * t, zero_above and xi == 0)
        x[i] = 0

    rec(n - 1, budget, True)
    out.sort(key=lambda sv: (sv.norm, sv.coords))
    return ShortVectorList(bound, out)


def lattice_minimum(lattice: IntegralLattice) -> tuple[int, tuple[int, ...]]:
    """Minimal nonzero squared norm with a witness vector.

    The minimum of the Gram diagonal is an upper bound achieved by a basis
    vector, so one complete enumeration below it suffices.
    """
    start = min(lattice.gram[i][i] for i in range(lattice.n))
    found = short_vectors(lattice, start)
    best = found.vectors[0]
    return best.norm, best.coords
