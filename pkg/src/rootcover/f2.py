"""Bit-packed linear algebra over F2.

Vectors are ints used as bitmasks, matrices are tuples of row bitmasks.  The
module houses strictly alternating pairings together with their quadratic
refinements, Arf invariants, refinement counting, and the kernel/image
dimensions of an order-2 action (the ``1 + w`` computation over F2).

Everything is immutable and exact; dimensions are capped at 16 so that
exhaustive loops over all vectors or all refinements stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

MAX_DIM = 16


class F2Error(ValueError):
    """Raised on dimension mismatches, degenerate pairings, bad involutions."""


def parity(x: int) -> int:
    return x.bit_count() & 1


@dataclass(frozen=True)
class BitVec:
    """A vector in F2^dim, stored as the low ``dim`` bits of ``bits``."""

    dim: int
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.dim <= MAX_DIM:
            raise F2Error(f"dimension {self.dim} outside [0, {MAX_DIM}]")
        if self.bits >> self.dim:
            raise F2Error("set bits beyond the declared dimension")

    @classmethod
    def from_coords(cls, coords: Sequence[int]) -> "BitVec":
        bits = 0
        for i, c in enumerate(coords):
            if c & 1:
                bits |= 1 << i
        return cls(len(coords), bits)

    def coords(self) -> Tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.dim))


@dataclass(frozen=True)
class BitMatrix:
    """A matrix over F2; ``data[i]`` is the bitmask of row i."""

    rows: int
    cols: int
    data: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.data) != self.rows:
            raise F2Error("row count mismatch")
        for r in self.data:
            if r >> self.cols:
                raise F2Error("set bits beyond the column count")

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_int_rows(cls, rows: Sequence[Sequence[int]]) -> "BitMatrix":
        """Reduce an integer matrix mod 2."""
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        data = []
        for row in rows:
            bits = 0
            for j, entry in enumerate(row):
                if entry & 1:
                    bits |= 1 << j
            data.append(bits)
        return cls(n_rows, n_cols, tuple(data))

    def mul_vec(self, v: int) -> int:
        """Matrix times column vector (vector as bitmask of coordinates)."""
        out = 0
        for i, row in enumerate(self.data):
            if parity(row & v):
                out |= 1 << i
        return out

    def mul(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise F2Error("shape mismatch in product")
        other_t = other.transpose()
        data = []
        for row in self.data:
            bits = 0
            for j, col in enumerate(other_t.data):
                if parity(row & col):
                    bits |= 1 << j
            data.append(bits)
        return BitMatrix(self.rows, other.cols, tuple(data))

    def add(self, other: "BitMatrix") -> "BitMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise F2Error("shape mismatch in sum")
        return BitMatrix(self.rows, self.cols,
                         tuple(a ^ b for a, b in zip(self.data, other.data)))

    def transpose(self) -> "BitMatrix":
        data = []
        for j in range(self.cols):
            bits = 0
            for i, row in enumerate(self.data):
                if (row >> j) & 1:
                    bits |= 1 << i
            data.append(bits)
        return BitMatrix(self.cols, self.rows, tuple(data))

    def rank(self) -> int:
        return f2_rank(self.data, self.cols)

    def is_symmetric_zero_diagonal(self) -> bool:
        if self.rows != self.cols:
            return False
        t = self.transpose()
        return t.data == self.data and all(
            not (row >> i) & 1 for i, row in enumerate(self.data))


def f2_rank(rows: Sequence[int], ncols: int) -> int:
    """Rank over F2 via Gaussian elimination on row bitmasks."""
    work = list(rows)
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and (work[r] >> col) & 1:
                work[r] ^= work[rank]
        rank += 1
        if rank == len(work):
            break
    return rank


def f2_kernel(rows: Sequence[int], ncols: int) -> List[int]:
    """Basis of {x : row . x = 0 for every row}, as bitmasks."""
    work = list(rows)
    pivots = []  # (row index in echelon order, pivot column)
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and (work[r] >> col) & 1:
                work[r] ^= work[rank]
        pivots.append(col)
        rank += 1
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = 1 << free
        for r, col in enumerate(pivots):
            if (work[r] >> free) & 1:
                vec |= 1 << col
        basis.append(vec)
    return basis


@dataclass(frozen=True)
class F2QuadraticSpace:
    """An F2 space with a strictly alternating pairing and a quadratic refinement.

    The refinement is stored by its values on the standard basis only; all
    other values are reconstructed through the polarization identity
    q(v + w) = q(v) + q(w) + <v, w>.
    """

    dim: int
    gram: BitMatrix
    qbasis: BitVec

    def __post_init__(self) -> None:
        if not 0 <= self.dim <= MAX_DIM:
            raise F2Error(f"dimension {self.dim} outside [0, {MAX_DIM}]")
        if self.gram.rows != self.dim or self.gram.cols != self.dim:
            raise F2Error("gram shape mismatch")
        if self.qbasis.dim != self.dim:
            raise F2Error("qbasis dimension mismatch")
        if not self.gram.is_symmetric_zero_diagonal():
            raise F2Error("pairing must be symmetric with zero diagonal")

    def pairing(self, u: int, v: int) -> int:
        acc = 0
        t = u
        while t:
            i = (t & -t).bit_length() - 1
            t &= t - 1
            acc ^= parity(self.gram.data[i] & v)
        return acc

    def q(self, v: int) -> int:
        """q(v) = sum_i q_i v_i + sum_{i<j} gram_ij v_i v_j."""
        acc = parity(self.qbasis.bits & v)
        t = v
        while t:
            i = (t & -t).bit_length() - 1
            t &= t - 1
            above = ~((2 << i) - 1)
            acc ^= parity(self.gram.data[i] & v & above)
        return acc

    def radical(self) -> List[int]:
        return f2_kernel(self.gram.data, self.dim)

    def is_nondegenerate(self) -> bool:
        return self.gram.rank() == self.dim

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "gram": [[(row >> j) & 1 for j in range(self.dim)]
                     for row in self.gram.data],
            "qbasis": list(self.qbasis.coords()),
        }


def standard_symplectic_space(g: int, qbits: int = 0) -> F2QuadraticSpace:
    """The 2g-dim space with hyperbolic pairs (e_{2k}, e_{2k+1})."""
    dim = 2 * g
    rows = []
    for i in range(dim):
        rows.append(1 << (i ^ 1))
    return F2QuadraticSpace(dim, BitMatrix(dim, dim, tuple(rows)),
                            BitVec(dim, qbits))


def eval_q(space: F2QuadraticSpace, v: BitVec) -> int:
    """Evaluate the quadratic refinement at v."""
    if v.dim != space.dim:
        raise F2Error("dimension mismatch")
    return space.q(v.bits)


def symplectic_decomposition(space: F2QuadraticSpace) -> Tuple[List[Tuple[int, int]], List[int]]:
    """Greedy hyperbolic-pair peeling.

    Returns (pairs, radical): a list of hyperbolic pairs (v, w) with
    <v, w> = 1 and a basis of the radical, jointly a basis of the space.
    """
    remaining = [1 << i for i in range(space.dim)]
    pairs: List[Tuple[int, int]] = []
    radical: List[int] = []
    while remaining:
        v = remaining.pop(0)
        partner = None
        for idx, u in enumerate(remaining):
            if space.pairing(v, u):
                partner = idx
                break
        if partner is None:
            radical.append(v)
            continue
        w = remaining.pop(partner)
        reduced = []
        for u in remaining:
            if space.pairing(u, w):
                u ^= v
            if space.pairing(u, v):
                u ^= w
            reduced.append(u)
        remaining = reduced
        pairs.append((v, w))
    return pairs, radical


def arf(space: F2QuadraticSpace) -> int:
    """Arf invariant sum q(e_i) q(eps_i) over a computed symplectic basis."""
    if space.dim % 2:
        raise F2Error("odd dimension")
    pairs, radical = symplectic_decomposition(space)
    if radical:
        raise F2Error("degenerate pairing")
    a = 0
    for v, w in pairs:
        a ^= space.q(v) & space.q(w)
    return a


def count_refinements_by_arf(g: int) -> Tuple[int, int]:
    """Brute-force all 2^(2g) refinements of the standard symplectic space.

    Returns (count with Arf 0, count with Arf 1).  The Arf invariant of each
    refinement is read off directly from its basis values on the standard
    hyperbolic pairs, independent of the generic ``arf`` routine.
    """
    if not 1 <= g <= 4:
        raise F2Error("g outside [1, 4] (combinatorial explosion guard)")
    even_mask = sum(1 << (2 * k) for k in range(g))
    count0 = count1 = 0
    for qb in range(1 << (2 * g)):
        a = parity(qb & (qb >> 1) & even_mask)
        if a:
            count1 += 1
        else:
            count0 += 1
    return count0, count1


def translate_refinement(space: F2QuadraticSpace, v: BitVec) -> F2QuadraticSpace:
    """Replace q by (v + q)(w) = q(w) + <v, w>; the pairing is unchanged."""
    if v.dim != space.dim:
        raise F2Error("dimension mismatch")
    new_bits = 0
    for i in range(space.dim):
        qi = (space.qbasis.bits >> i) & 1
        qi ^= parity(space.gram.data[i] & v.bits)
        if qi:
            new_bits |= 1 << i
    return F2QuadraticSpace(space.dim, space.gram, BitVec(space.dim, new_bits))


def h1_z2_dims(w: BitMatrix) -> Tuple[int, int, int]:
    """For an involution w mod 2, dimensions attached to N = 1 + w.

    Returns (dim ker N, rank N, dim ker N - rank N).  Since N^2 = 0 for an
    involution, the image of N sits inside its kernel and the last entry is
    the dimension of ker/im.
    """
    if w.rows != w.cols:
        raise F2Error("matrix not square")
    n = w.rows
    if w.mul(w).data != BitMatrix.identity(n).data:
        raise F2Error("not an involution mod 2")
    big_n = w.add(BitMatrix.identity(n))
    r = big_n.rank()
    k = n - r
    return k, r, k - r
