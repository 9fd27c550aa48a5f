"""Positive-definite integral lattices and their root combinatorics.

Covers exact root enumeration (recursive coordinate bounding off an LDL^T
decomposition, rationals only), discriminant groups, breadth-first Weyl group
closure over root permutations, conjugacy classification of Weyl involutions,
the rank-8 blow-up lattice of a degree-2 surface with its 56 exceptional
classes, and reduction mod 2 to a quadratic F2 space.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from .f2 import BitMatrix, BitVec, F2QuadraticSpace, f2_kernel, f2_rank
from . import intmat
from .intmat import IntMatrix

Coords = Tuple[int, ...]


class LatticeError(ValueError):
    pass


def cartan_gram(name: str) -> IntMatrix:
    """Gram matrix of a simply laced root lattice in a simple-root basis.

    Supported names: A<n> (n >= 1), D<n> (n >= 3), E6, E7, E8.
    """
    kind, rank = name[0].upper(), int(name[1:])
    edges: List[Tuple[int, int]] = []
    if kind == "A" and rank >= 1:
        edges = [(i, i + 1) for i in range(rank - 1)]
    elif kind == "D" and rank >= 3:
        edges = [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
    elif kind == "E" and rank in (6, 7, 8):
        chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
        edges = [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
        edges.append((1, 3))
    else:
        raise LatticeError(f"unsupported lattice type {name!r}")
    gram = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        gram[i][i] = 2
    for i, j in edges:
        gram[i][j] = gram[j][i] = -1
    return tuple(tuple(row) for row in gram)


@dataclass(frozen=True)
class IntLattice:
    """A finite free Z-module with an integer symmetric bilinear form."""

    gram: IntMatrix

    def __post_init__(self) -> None:
        n = len(self.gram)
        for row in self.gram:
            if len(row) != n:
                raise LatticeError("gram matrix must be square")
        if intmat.transpose(self.gram) != self.gram:
            raise LatticeError("gram matrix must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def inner(self, x: Sequence[int], y: Sequence[int]) -> int:
        return sum(xi * sum(g * yj for g, yj in zip(row, y))
                   for xi, row in zip(x, self.gram))

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def is_positive_definite(self) -> bool:
        return intmat.is_positive_definite(self.gram)


def short_vectors(gram: IntMatrix, target: int) -> List[Coords]:
    """All integer vectors of norm exactly ``target``, by exact recursive bounding."""
    n = len(gram)
    d, u = intmat.ldlt(gram)
    out: List[Coords] = []
    x = [0] * n

    def descend(i: int, budget: Fraction) -> None:
        if i < 0:
            if budget == 0:
                out.append(tuple(x))
            return
        s = sum((u[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        k0 = math.floor(-s)
        k = k0
        while d[i] * (k + s) ** 2 <= budget:
            x[i] = k
            descend(i - 1, budget - d[i] * (k + s) ** 2)
            k -= 1
        k = k0 + 1
        while d[i] * (k + s) ** 2 <= budget:
            x[i] = k
            descend(i - 1, budget - d[i] * (k + s) ** 2)
            k += 1
        x[i] = 0

    descend(n - 1, Fraction(target))
    return out


@dataclass(frozen=True)
class RootDatum:
    """A root lattice presented in a simple-root basis with its enumerated roots.

    ``roots`` are coordinate vectors with respect to the simple roots, in the
    canonical order (height, then lexicographic).  ``simple`` holds the root
    indices of the simple roots themselves (the standard basis vectors).
    """

    lattice: IntLattice
    roots: Tuple[Coords, ...]
    simple: Tuple[int, ...]

    def __post_init__(self) -> None:
        g = self.lattice
        for c in self.roots:
            if g.inner(c, c) != 2:
                raise LatticeError("listed root of norm != 2")
        index = {c: i for i, c in enumerate(self.roots)}
        for c in self.roots:
            if tuple(-x for x in c) not in index:
                raise LatticeError("roots not closed under negation")
        for k, ri in enumerate(self.simple):
            expected = tuple(1 if j == k else 0 for j in range(g.rank))
            if self.roots[ri] != expected:
                raise LatticeError("simple roots must be the standard basis vectors")

    @property
    def rank(self) -> int:
        return self.lattice.rank

    @cached_property
    def index(self) -> Dict[Coords, int]:
        return {c: i for i, c in enumerate(self.roots)}

    @cached_property
    def negation(self) -> Tuple[int, ...]:
        return tuple(self.index[tuple(-x for x in c)] for c in self.roots)

    @cached_property
    def positive(self) -> Tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.roots) if sum(c) > 0)

    def inner(self, x: Sequence[int], y: Sequence[int]) -> int:
        return self.lattice.inner(x, y)

    def pairing_table(self) -> List[List[int]]:
        g = self.lattice.gram
        half = [[sum(gr * y for gr, y in zip(row, c)) for row in g] for c in self.roots]
        return [[sum(a * b for a, b in zip(self.roots[i], half[j]))
                 for j in range(len(self.roots))] for i in range(len(self.roots))]

    def reflect(self, coords: Coords, root_index: int) -> Coords:
        gamma = self.roots[root_index]
        c = self.inner(coords, gamma)
        return tuple(x - c * g for x, g in zip(coords, gamma))

    def reflection_perm(self, root_index: int) -> bytes:
        return bytes(self.index[self.reflect(c, root_index)] for c in self.roots)

    @cached_property
    def type_name(self) -> str:
        n, m = self.rank, len(self.roots)
        if (n, m) == (6, 72):
            return "E6"
        if (n, m) == (7, 126):
            return "E7"
        if (n, m) == (8, 240):
            return "E8"
        if m == n * (n + 1):
            return f"A{n}"
        if m == 2 * n * (n - 1):
            return f"D{n}"
        return f"rank{n}-roots{m}"

    def root_class_bits(self, root_index: int) -> int:
        bits = 0
        for j, c in enumerate(self.roots[root_index]):
            if c & 1:
                bits |= 1 << j
        return bits

    def to_json_dict(self) -> dict:
        return {
            "type": self.type_name,
            "rank": self.rank,
            "gram": [list(row) for row in self.lattice.gram],
            "roots": [list(c) for c in self.roots],
            "simple": list(self.simple),
        }


def enumerate_roots(lattice: IntLattice) -> RootDatum:
    """Enumerate all norm-2 vectors, select simple roots, canonicalize.

    Raises when the lattice is not an even positive-definite lattice generated
    by its roots.
    """
    if not lattice.is_even():
        raise LatticeError("lattice is not even")
    if not lattice.is_positive_definite():
        raise LatticeError("lattice is not positive definite")
    raw = short_vectors(lattice.gram, 2)
    n = lattice.rank
    if intmat.row_lattice_index(raw, n) != 1:
        raise LatticeError("roots do not generate the lattice")

    positives = [c for c in raw if c > tuple([0] * n)]
    pos_set = set(positives)
    simple: List[Coords] = []
    for c in positives:
        if not any(tuple(a - b for a, b in zip(c, q)) in pos_set for q in positives):
            simple.append(c)
    if len(simple) != n:
        raise LatticeError("failed to extract a simple system")
    simple.sort()

    s_inv = intmat.rational_inverse(simple)
    new_roots = []
    for c in raw:
        coords = []
        for j in range(n):
            val = sum(Fraction(c[i]) * s_inv[i][j] for i in range(n))
            if val.denominator != 1:
                raise LatticeError("root has non-integral simple coordinates")
            coords.append(int(val))
        new_roots.append(tuple(coords))
    new_gram = tuple(tuple(lattice.inner(a, b) for b in simple) for a in simple)
    order = sorted(range(len(new_roots)),
                   key=lambda i: (sum(new_roots[i]), new_roots[i]))
    ordered = tuple(new_roots[i] for i in order)
    idx = {c: i for i, c in enumerate(ordered)}
    simple_indices = tuple(idx[tuple(1 if j == k else 0 for j in range(n))]
                           for k in range(n))
    return RootDatum(IntLattice(new_gram), ordered, simple_indices)


def root_datum(name: str) -> RootDatum:
    return enumerate_roots(IntLattice(cartan_gram(name)))


def discriminant_group(lattice: IntLattice) -> List[int]:
    """Invariant factors of the discriminant group (Smith form of the gram matrix)."""
    if intmat.bareiss_det(lattice.gram) == 0:
        raise LatticeError("gram matrix is singular")
    return intmat.smith_invariant_factors(lattice.gram)


def _translate_table(perm: bytes, size: int) -> bytes:
    return perm + bytes(range(size, 256))


class WeylGroup:
    """The full reflection group, elements stored as permutations of the roots."""

    def __init__(self, datum: RootDatum, perms: List[bytes]):
        self.datum = datum
        self.perms = perms
        self.position = {p: i for i, p in enumerate(perms)}

    def __len__(self) -> int:
        return len(self.perms)

    def matrix(self, perm: bytes) -> IntMatrix:
        images = [self.datum.roots[perm[si]] for si in self.datum.simple]
        n = self.datum.rank
        return tuple(tuple(images[j][i] for j in range(n)) for i in range(n))

    def trace(self, perm: bytes) -> int:
        return sum(self.datum.roots[perm[si]][j]
                   for j, si in enumerate(self.datum.simple))

    def involutions(self) -> List[bytes]:
        size = len(self.datum.roots)
        ident = bytes(range(size))
        out = []
        for p in self.perms:
            if p != ident and p.translate(_translate_table(p, size)) == ident:
                out.append(p)
        return out

    def verify_gram_preservation(self) -> bool:
        """Check w^T gram w = gram for every element, via the root pairing table."""
        table = self.datum.pairing_table()
        simple = self.datum.simple
        n = self.datum.rank
        for p in self.perms:
            img = [p[si] for si in simple]
            for i in range(n):
                for j in range(i, n):
                    if table[img[i]][img[j]] != table[simple[i]][simple[j]]:
                        return False
        return True

    def stabilizer_size(self, root_index: int) -> int:
        return sum(1 for p in self.perms if p[root_index] == root_index)


def weyl_enumerate(datum: RootDatum, cap: Optional[int] = None) -> WeylGroup:
    """Breadth-first closure of the simple reflections acting on the roots."""
    if cap is None and datum.rank > 6:
        raise LatticeError("rank > 6 requires an explicit cap")
    size = len(datum.roots)
    gens = [_translate_table(datum.reflection_perm(si), size)
            for si in datum.simple]
    ident = bytes(range(size))
    seen = {ident}
    order: List[bytes] = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = p.translate(g)
                if q not in seen:
                    seen.add(q)
                    order.append(q)
                    nxt.append(q)
                    if cap is not None and len(seen) > cap:
                        raise LatticeError("cap exceeded during Weyl closure")
        frontier = nxt
    return WeylGroup(datum, order)


INVOLUTION_LABELS_E6 = {6: "1", 4: "s1", 2: "s1s2", 0: "s1s2s3", -2: "tau"}


@dataclass(frozen=True)
class WeylInvolutionClass:
    label: str
    representative: IntMatrix
    trace: int
    mod2_rank: int
    size: int
    members: Tuple[bytes, ...]

    def __post_init__(self) -> None:
        n = len(self.representative)
        if intmat.matmul(self.representative, self.representative) != intmat.identity(n):
            raise LatticeError("representative does not square to the identity")


def mod2_rank_one_plus(matrix: IntMatrix) -> int:
    n = len(matrix)
    rows = []
    for i in range(n):
        bits = 0
        for j in range(n):
            entry = matrix[i][j] + (1 if i == j else 0)
            if entry & 1:
                bits |= 1 << j
        rows.append(bits)
    return f2_rank(rows, n)


def _conjugacy_orbit(weyl: WeylGroup, start: bytes) -> set:
    size = len(weyl.datum.roots)
    gens = [weyl.datum.reflection_perm(si) for si in weyl.datum.simple]
    gen_tables = [_translate_table(g, size) for g in gens]
    orbit = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for p in frontier:
            pt = _translate_table(p, size)
            for g, gt in zip(gens, gen_tables):
                q = g.translate(pt).translate(_translate_table(g, size))
                if q not in orbit:
                    orbit.add(q)
                    nxt.append(q)
        frontier = nxt
    return orbit


def classify_involutions(datum: RootDatum,
                         weyl: Optional[WeylGroup] = None) -> List[WeylInvolutionClass]:
    """Partition the involutions of W (plus the identity) into conjugacy classes.

    Only implemented for type E6, where the classes are labelled by their
    integer invariants and cross-checked against explicit constructions.
    """
    if datum.type_name != "E6":
        raise LatticeError("involution classification is implemented for E6 only")
    if weyl is None:
        weyl = weyl_enumerate(datum)
    size = len(datum.roots)
    ident = bytes(range(size))
    groups: Dict[Tuple[int, int], List[bytes]] = {}
    for p in weyl.involutions():
        m = weyl.matrix(p)
        key = (weyl.trace(p), mod2_rank_one_plus(m))
        groups.setdefault(key, []).append(p)
    if len(groups) != 4:
        raise LatticeError(f"expected 4 invariant groups of involutions, got {len(groups)}")
    classes = [WeylInvolutionClass("1", intmat.identity(datum.rank),
                                   datum.rank, 0, 1, (ident,))]
    for (tr, r2), members in sorted(groups.items(), reverse=True):
        label = INVOLUTION_LABELS_E6.get(tr)
        if label is None or label == "1":
            raise LatticeError(f"unexpected involution trace {tr}")
        orbit = _conjugacy_orbit(weyl, members[0])
        if orbit != set(members):
            raise LatticeError("invariant group is not a single conjugacy class")
        classes.append(WeylInvolutionClass(label, weyl.matrix(members[0]),
                                           tr, r2, len(members), tuple(members)))
    return classes


def orthogonal_root_quadruples(datum: RootDatum, limit: int) -> List[Tuple[int, ...]]:
    """Up to ``limit`` quadruples of pairwise orthogonal roots spanning a D4 subsystem."""
    table = datum.pairing_table()
    pos = datum.positive
    found: List[Tuple[int, ...]] = []
    for quad in itertools.combinations(pos, 4):
        if any(table[a][b] != 0 for a, b in itertools.combinations(quad, 2)):
            continue
        span_count = 0
        for i, c in enumerate(datum.roots):
            coeffs = [Fraction(table[i][q], 2) for q in quad]
            recon = [sum(co * Fraction(datum.roots[q][t]) for co, q in zip(coeffs, quad))
                     for t in range(datum.rank)]
            if all(r == x for r, x in zip(recon, c)):
                span_count += 1
        if span_count == 24:
            found.append(quad)
            if len(found) >= limit:
                break
    return found


def tau_involution(datum: RootDatum, quad: Sequence[int]) -> bytes:
    """Product of the four orthogonal reflections: -1 on the quadruple's span, +1 across."""
    size = len(datum.roots)
    perm = bytes(range(size))
    for q in quad:
        perm = perm.translate(_translate_table(datum.reflection_perm(q), size))
    return perm


def mod2_space(datum: RootDatum) -> "Mod2Space":
    """Reduction of the lattice mod 2: pairing, refinement from half-norms, radical."""
    n = datum.rank
    gram = datum.lattice.gram
    rows = []
    qbits = 0
    for i in range(n):
        bits = 0
        for j in range(n):
            if gram[i][j] & 1:
                bits |= 1 << j
        rows.append(bits)
        if (gram[i][i] // 2) & 1:
            qbits |= 1 << i
    space = F2QuadraticSpace(n, BitMatrix(n, n, tuple(rows)), BitVec(n, qbits))
    radical = tuple(f2_kernel(rows, n))
    return Mod2Space(space, radical, n - len(radical))


@dataclass(frozen=True)
class Mod2Space:
    space: F2QuadraticSpace
    radical: Tuple[int, ...]
    nv_dim: int


# ---------------------------------------------------------------------------
# The rank-8 blow-up lattice of a degree-2 surface


@dataclass(frozen=True)
class DelPezzoPicard:
    """Z^{1,7} with basis (h, e1..e7) and canonical class -3h + e1 + ... + e7."""

    gram: IntMatrix
    canonical: Coords

    @staticmethod
    def standard() -> "DelPezzoPicard":
        gram = tuple(tuple((1 if i == j == 0 else -1 if i == j else 0)
                           for j in range(8)) for i in range(8))
        return DelPezzoPicard(gram, (-3, 1, 1, 1, 1, 1, 1, 1))

    def __post_init__(self) -> None:
        if self.inner(self.canonical, self.canonical) != 2:
            raise LatticeError("canonical class must have self-intersection 2")

    def inner(self, x: Sequence[int], y: Sequence[int]) -> int:
        return x[0] * y[0] - sum(a * b for a, b in zip(x[1:], y[1:]))

    def is_line_class(self, d: Sequence[int]) -> bool:
        return self.inner(d, d) == -1 and self.inner(d, self.canonical) == -1


def lines(pic: Optional[DelPezzoPicard] = None) -> Tuple[Coords, ...]:
    """All classes with D^2 = D.K = -1, by bounded enumeration.

    Cauchy-Schwarz on (sum b_i)^2 <= 7 sum b_i^2 confines the h-coefficient
    to {0, 1, 2, 3}.
    """
    pic = pic or DelPezzoPicard.standard()
    out: List[Coords] = []
    for a in range(0, 4):
        square_sum = a * a + 1
        coeff_sum = 1 - 3 * a
        partial: List[int] = []

        def fill(i: int, rem_sq: int, rem_sum: int) -> None:
            if i == 7:
                if rem_sq == 0 and rem_sum == 0:
                    out.append((a, *partial))
                return
            slots = 7 - i
            bound = math.isqrt(rem_sq)
            for b in range(-bound, bound + 1):
                left = rem_sq - b * b
                if abs(rem_sum - b) > (slots - 1) * math.isqrt(left):
                    continue
                partial.append(b)
                fill(i + 1, left, rem_sum - b)
                partial.pop()

        fill(0, square_sum, coeff_sum)
    out = [d for d in out if pic.is_line_class(d)]
    return tuple(sorted(out))


def lines_meeting(e: Sequence[int], pic: Optional[DelPezzoPicard] = None) -> Tuple[Coords, ...]:
    """Line classes D with D.e = 1 and D.f = 0, where f = -K - e."""
    pic = pic or DelPezzoPicard.standard()
    if not pic.is_line_class(e):
        raise LatticeError("e is not a line class")
    f = tuple(-k - x for k, x in zip(pic.canonical, e))
    return tuple(d for d in lines(pic)
                 if pic.inner(d, e) == 1 and pic.inner(d, f) == 0)


def _sublattice_datum(pic: DelPezzoPicard, orthogonal_to: Sequence[Coords],
                      expected_rank: int) -> RootDatum:
    rows = [tuple(sum(pic.gram[i][j] * v[i] for i in range(8)) for j in range(8))
            for v in orthogonal_to]
    basis = intmat.integer_kernel(rows, 8)
    if len(basis) != expected_rank:
        raise LatticeError("unexpected orthogonal complement rank")
    gram = tuple(tuple(-pic.inner(a, b) for b in basis) for a in basis)
    return enumerate_roots(IntLattice(gram))


def delpezzo_k_perp(pic: Optional[DelPezzoPicard] = None) -> RootDatum:
    """The orthogonal complement of the canonical class, sign-flipped to positive."""
    pic = pic or DelPezzoPicard.standard()
    datum = _sublattice_datum(pic, [pic.canonical], 7)
    if datum.type_name != "E7":
        raise LatticeError(f"K-perp is not E7 (got {datum.type_name})")
    return datum


def bitangent_complement(e: Sequence[int],
                         pic: Optional[DelPezzoPicard] = None) -> RootDatum:
    """The complement of a line class pair {e, -K-e} inside K-perp."""
    pic = pic or DelPezzoPicard.standard()
    if not pic.is_line_class(e):
        raise LatticeError("e is not a line class")
    f = tuple(-k - x for k, x in zip(pic.canonical, e))
    if pic.inner(e, f) != 2:
        raise LatticeError("line pair does not meet doubly")
    datum = _sublattice_datum(pic, [tuple(e), f], 6)
    if datum.type_name != "E6":
        raise LatticeError(f"complement is not E6 (got {datum.type_name})")
    return datum


def gram_permutation_equivalent(a: IntMatrix, b: IntMatrix) -> bool:
    """Whether two gram matrices agree after permuting the basis (rank <= 8)."""
    n = len(a)
    if len(b) != n:
        return False
    for perm in itertools.permutations(range(n)):
        if all(a[perm[i]][perm[j]] == b[i][j] for i in range(n) for j in range(n)):
            return True
    return False
