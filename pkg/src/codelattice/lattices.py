"""Integral lattices: HNF bases, Gram matrices, Construction A, sublattices.

Everything stays over the integers.  Bases are kept in row-style Hermite
normal form (upper triangular, positive pivots, entries above each pivot
reduced into [0, pivot)), which is a canonical form: two descriptions of
the same lattice produce identical bases, Gram matrices and documents.
Scaled variants such as a lattice divided by sqrt(q) are never
materialised; all statements about them are rephrased on the integral
lattice with exact exponent bookkeeping.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .exact import Radical

__all__ = [
    "RankDeficient",
    "NotInLattice",
    "xgcd",
    "gram_matrix",
    "det_int",
    "hnf",
    "inverse_times",
    "IntegralLattice",
    "construction_a",
    "is_even",
    "Sublattice",
    "sublattice_from_rows",
    "gamma_ratio",
    "lattice_document",
    "dump_lattice",
]


class RankDeficient(ValueError):
    """Row span has lower rank than the operation requires."""

    def __init__(self, rank: int, needed: int):
        self.rank = rank
        self.needed = needed
        super().__init__(f"rank {rank} < required rank {needed}")


class NotInLattice(ValueError):
    """A vector claimed as a lattice member is not one."""


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def gram_matrix(rows) -> list[list[int]]:
    return [[sum(a * b for a, b in zip(u, v)) for v in rows] for u in rows]


def det_int(m) -> int:
    """Exact determinant of an integer matrix (fraction-free Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


def hnf(rows) -> tuple[list[list[int]], int]:
    """Row-style Hermite normal form of the span of integer rows.

    Returns (nonzero rows of the HNF, rank).  Pure integer row reduction:
    pivots are produced by extended-gcd row operations (unimodular), made
    positive, and entries above each pivot are reduced into [0, pivot).
    """
    work = [list(map(int, r)) for r in rows]
    if not work:
        return [], 0
    n = len(work[0])
    if any(len(r) != n for r in work):
        raise ValueError("ragged matrix")
    pivot = 0
    for col in range(n):
        if pivot == len(work):
            break
        row = next((i for i in range(pivot, len(work)) if work[i][col]), None)
        if row is None:
            continue
        work[pivot], work[row] = work[row], work[pivot]
        for i in range(pivot + 1, len(work)):
            b = work[i][col]
            if b == 0:
                continue
            a = work[pivot][col]
            g, x, y = xgcd(a, b)
            p, r = work[pivot], work[i]
            work[pivot] = [x * pa + y * ra for pa, ra in zip(p, r)]
            work[i] = [(a // g) * ra - (b // g) * pa for pa, ra in zip(p, r)]
        if work[pivot][col] < 0:
            work[pivot] = [-e for e in work[pivot]]
        d = work[pivot][col]
        for i in range(pivot):
            q = work[i][col] // d
            if q:
                work[i] = [e - q * pe for e, pe in zip(work[i], work[pivot])]
        pivot += 1
    return work[:pivot], pivot


def inverse_times(mat, scalar: int) -> list[list[int]]:
    """scalar * mat^{-1} as an integer matrix (error if not integral)."""
    n = len(mat)
    aug = [
        [Fraction(mat[i][j]) for j in range(n)]
        + [Fraction(scalar if j == i else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col]), None)
        if piv is None:
            raise RankDeficient(col, n)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [e * inv for e in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [e - f * p for e, p in zip(aug[i], aug[col])]
    out = []
    for i in range(n):
        row = []
        for j in range(n, 2 * n):
            v = aug[i][j]
            if v.denominator != 1:
                raise ValueError("inverse times scalar is not integral")
            row.append(v.numerator)
        out.append(row)
    return out


class IntegralLattice:
    """Full-rank integral lattice with a canonical HNF basis.

    Immutable after construction; all methods are pure.
    """

    __slots__ = ("n", "basis", "gram", "det_gram")

    def __init__(self, basis):
        self.basis = tuple(tuple(map(int, row)) for row in basis)
        self.n = len(self.basis)
        self.gram = tuple(tuple(r) for r in gram_matrix(self.basis))
        d = 1
        for i in range(self.n):
            d *= self.basis[i][i]
        self.det_gram = d * d

    @classmethod
    def from_rows(cls, rows) -> "IntegralLattice":
        """Lattice spanned by integer rows; raises RankDeficient if the
        span does not have full rank in its ambient dimension."""
        rows = list(rows)
        if not rows:
            raise ValueError("no rows")
        n = len(rows[0])
        h, rank = hnf(rows)
        if rank < n:
            raise RankDeficient(rank, n)
        return cls(h)

    def coefficients_of(self, v) -> list[int] | None:
        """Integer coordinates of v in the basis, or None if not a member."""
        v = list(map(int, v))
        if len(v) != self.n:
            return None
        coeffs = []
        for i in range(self.n):
            d = self.basis[i][i]
            if v[i] % d:
                return None
            c = v[i] // d
            coeffs.append(c)
            if c:
                v = [e - c * be for e, be in zip(v, self.basis[i])]
        if any(v):
            return None
        return coeffs

    def __contains__(self, v) -> bool:
        return self.coefficients_of(v) is not None

    def scaled(self, s: int) -> "IntegralLattice":
        return IntegralLattice.from_rows(
            [[s * e for e in row] for row in self.basis]
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, IntegralLattice) and self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self) -> str:
        return f"IntegralLattice(n={self.n}, det_gram={self.det_gram})"


def construction_a(code) -> IntegralLattice:
    """Lattice of integer vectors reducing mod q to a codeword of `code`.

    Built as the row span of the lifted generators stacked over q*I_n;
    always full rank.  The code cardinality is recovered from the basis:
    |C| = q**n / prod(diagonal).
    """
    n, q = code.n, code.q
    rows = [list(g) for g in code.generators]
    rows += [[q if j == i else 0 for j in range(n)] for i in range(n)]
    return IntegralLattice.from_rows(rows)


def is_even(lattice: IntegralLattice) -> bool:
    """True iff every vector norm is even.

    Checking the Gram diagonal suffices: x G x^T has the parity of
    sum(x_i^2 g_ii) because the off-diagonal terms come in pairs.
    """
    return all(lattice.gram[i][i] % 2 == 0 for i in range(lattice.n))


class Sublattice:
    """Rank-l sublattice given by explicit member rows of an ambient lattice."""

    __slots__ = ("ambient", "rows", "gram_l", "det_l", "l")

    def __init__(self, ambient: IntegralLattice, rows, gram_l, det_l: int):
        self.ambient = ambient
        self.rows = tuple(tuple(map(int, r)) for r in rows)
        self.gram_l = tuple(tuple(r) for r in gram_l)
        self.det_l = det_l
        self.l = len(self.rows)

    def __repr__(self) -> str:
        return f"Sublattice(l={self.l}, det_l={self.det_l})"


def sublattice_from_rows(lattice: IntegralLattice, rows) -> Sublattice:
    """Certified sublattice: verifies membership of each row and full rank."""
    rows = [list(map(int, r)) for r in rows]
    for r in rows:
        if lattice.coefficients_of(r) is None:
            raise NotInLattice(f"row {r} is not a lattice member")
    g = gram_matrix(rows)
    d = det_int(g)
    if d <= 0:
        raise RankDeficient(len(rows) - 1, len(rows))
    return Sublattice(lattice, rows, g, d)


def gamma_ratio(lattice: IntegralLattice, sub: Sublattice) -> Radical:
    """det(sublattice) / det(lattice)**(l/n) as an exact radical."""
    if sub.ambient is not lattice and sub.ambient != lattice:
        raise ValueError("sublattice does not belong to this lattice")
    n, l = lattice.n, sub.l
    return Radical(Fraction(sub.det_l ** n, lattice.det_gram ** l), n)


def lattice_document(lattice: IntegralLattice) -> dict:
    """Canonical exportable description of the lattice."""
    return {
        "n": lattice.n,
        "basis": [list(r) for r in lattice.basis],
        "gram": [list(r) for r in lattice.gram],
        "det_gram": lattice.det_gram,
    }


def dump_lattice(lattice: IntegralLattice) -> str:
    """Canonical text form; byte-comparable after normalisation."""
    return json.dumps(lattice_document(lattice), sort_keys=True, indent=2) + "\n"
