"""Exact Gaussian-rational scalars, monomial matrices, and dense linear algebra.

Scalars are a + b*i with a, b rational; equality is exact.  Monomial matrices
(one nonzero entry per row, entries scalars) are stored in a compact form so
products cost O(n) rather than O(n^3); the dense representation is only used
for small solves (commutants, invariant bilinear forms, determinants).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple


@dataclass(frozen=True)
class GQ:
    """A Gaussian rational re + im*i."""

    re: Fraction
    im: Fraction

    def __add__(self, other: "GQ") -> "GQ":
        return GQ(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GQ") -> "GQ":
        return GQ(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GQ":
        return GQ(-self.re, -self.im)

    def __mul__(self, other: "GQ") -> "GQ":
        return GQ(self.re * other.re - self.im * other.im,
                  self.re * other.im + self.im * other.re)

    def __truediv__(self, other: "GQ") -> "GQ":
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GQ((self.re * other.re + self.im * other.im) / n,
                  (self.im * other.re - self.re * other.im) / n)

    def conj(self) -> "GQ":
        return GQ(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __repr__(self) -> str:
        return f"GQ({self.re}, {self.im})"


def gq(re=0, im=0) -> GQ:
    return GQ(Fraction(re), Fraction(im))


ZERO = gq(0)
ONE = gq(1)
I = gq(0, 1)
MINUS_ONE = gq(-1)


Dense = Tuple[Tuple[GQ, ...], ...]


@dataclass(frozen=True)
class MonoMat:
    """Monomial matrix: row r has its unique nonzero entry val[r] at column col[r]."""

    n: int
    col: Tuple[int, ...]
    val: Tuple[GQ, ...]

    @staticmethod
    def identity(n: int) -> "MonoMat":
        return MonoMat(n, tuple(range(n)), (ONE,) * n)

    def __mul__(self, other: "MonoMat") -> "MonoMat":
        cols = tuple(other.col[c] for c in self.col)
        vals = tuple(v * other.val[c] for v, c in zip(self.val, self.col))
        return MonoMat(self.n, cols, vals)

    def __neg__(self) -> "MonoMat":
        return MonoMat(self.n, self.col, tuple(-v for v in self.val))

    def scale(self, s: GQ) -> "MonoMat":
        return MonoMat(self.n, self.col, tuple(s * v for v in self.val))

    def trace(self) -> GQ:
        acc = ZERO
        for r, c in enumerate(self.col):
            if r == c:
                acc = acc + self.val[r]
        return acc

    def transpose(self) -> "MonoMat":
        cols = [0] * self.n
        vals: List[GQ] = [ZERO] * self.n
        for r, c in enumerate(self.col):
            cols[c] = r
            vals[c] = self.val[r]
        return MonoMat(self.n, tuple(cols), tuple(vals))

    def scalar_value(self) -> Optional[GQ]:
        """The scalar s when the matrix equals s * identity, else None."""
        if any(c != r for r, c in enumerate(self.col)):
            return None
        s = self.val[0]
        return s if all(v == s for v in self.val) else None

    def entries(self) -> Iterable[Tuple[int, int, GQ]]:
        for r, c in enumerate(self.col):
            yield r, c, self.val[r]

    def to_dense(self) -> Dense:
        rows = []
        for r in range(self.n):
            row = [ZERO] * self.n
            row[self.col[r]] = self.val[r]
            rows.append(tuple(row))
        return tuple(rows)


def dense_identity(n: int) -> Dense:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def dense_mul(a: Dense, b: Dense) -> Dense:
    n, m = len(a), len(b[0])
    k = len(b)
    return tuple(tuple(sum((a[i][t] * b[t][j] for t in range(k)), ZERO)
                       for j in range(m)) for i in range(n))


def dense_sub(a: Dense, b: Dense) -> Dense:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def dense_neg(a: Dense) -> Dense:
    return tuple(tuple(-x for x in row) for row in a)


def dense_scale(a: Dense, s: GQ) -> Dense:
    return tuple(tuple(s * x for x in row) for row in a)


def dense_transpose(a: Dense) -> Dense:
    return tuple(zip(*a))


def dense_trace(a: Dense) -> GQ:
    acc = ZERO
    for i, row in enumerate(a):
        acc = acc + row[i]
    return acc


def dense_det(a: Dense) -> GQ:
    n = len(a)
    work = [list(row) for row in a]
    det = ONE
    for col in range(n):
        pivot = next((r for r in range(col, n) if not work[r][col].is_zero()), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        det = det * work[col][col]
        inv = ONE / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for r in range(col + 1, n):
            f = work[r][col]
            if not f.is_zero():
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return det


class _SparseEchelon:
    """Incremental sparse row reduction over the Gaussian rationals."""

    def __init__(self) -> None:
        self.pivots: Dict[int, Dict[int, GQ]] = {}

    def insert(self, row: Dict[int, GQ]) -> bool:
        """Reduce a row against the pivots; returns True when rank grew."""
        row = dict(row)
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                inv = ONE / row[lead]
                self.pivots[lead] = {c: v * inv for c, v in row.items()}
                return True
            factor = row[lead]
            for c, v in piv.items():
                cur = row.get(c, ZERO) - factor * v
                if cur.is_zero():
                    row.pop(c, None)
                else:
                    row[c] = cur
        return False

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def nullspace(self, ncols: int) -> List[Dict[int, GQ]]:
        """Basis of the solution space of (rows) x = 0."""
        free = [c for c in range(ncols) if c not in self.pivots]
        basis = []
        # fully reduce pivot rows against each other for clean back-substitution
        reduced: Dict[int, Dict[int, GQ]] = {}
        for lead in sorted(self.pivots, reverse=True):
            row = dict(self.pivots[lead])
            for other_lead, other in reduced.items():
                f = row.pop(other_lead, ZERO)
                if not f.is_zero():
                    for c, v in other.items():
                        cur = row.get(c, ZERO) - f * v
                        if cur.is_zero():
                            row.pop(c, None)
                        else:
                            row[c] = cur
            reduced[lead] = row
        for f_col in free:
            vec: Dict[int, GQ] = {f_col: ONE}
            for lead, row in reduced.items():
                coeff = row.get(f_col, ZERO)
                if not coeff.is_zero():
                    vec[lead] = -coeff
            basis.append(vec)
        return basis


def sparse_nullspace(rows: Iterable[Dict[int, GQ]], ncols: int) -> List[Dict[int, GQ]]:
    ech = _SparseEchelon()
    for row in rows:
        ech.insert(row)
    return ech.nullspace(ncols)


def sparse_rank(rows: Iterable[Dict[int, GQ]]) -> int:
    ech = _SparseEchelon()
    for row in rows:
        ech.insert(row)
    return ech.rank
