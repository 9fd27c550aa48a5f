"""Integral Lie algebras from root data and double covers.

The algebra has basis h_1..h_r (the coweight basis dual to the simple roots)
together with one generator X_gamma per root, taken relative to canonical
lifts (+1, gamma mod 2).  Structure constants come from four rules: the
Cartan part is abelian, [h, X_gamma] = <h, gamma> X_gamma, root sums pick up
the cocycle sign, and opposite roots bracket to minus the coroot.  The
involution negates the Cartan part and swaps X_gamma with X_{-gamma} up to a
sign read off from cover inverses; its fixed subalgebra is spanned by
Z_gamma = X_gamma + X_{-gamma} over the positive roots.

Nothing here is trusted by construction: Jacobi, the automorphism property,
and the representation homomorphism all have exhaustive checkers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import intmat
from .extension import Cocycle
from .f2 import parity
from .gaussian import GQ, MonoMat, ZERO, gq, sparse_nullspace, sparse_rank
from .heisrep import HeisRep
from .lattice import RootDatum

Entry = Tuple[int, int]          # (basis index, integer coefficient)
Table = Dict[Tuple[int, int], Tuple[Entry, ...]]


class LieError(ValueError):
    pass


class IntegralLieAlgebra:
    """Sparse integer structure constants over a fixed basis."""

    def __init__(self, datum: RootDatum, cocycle: Cocycle, table: Table):
        self.datum = datum
        self.cocycle = cocycle
        self.n_cartan = datum.rank
        self.dim = datum.rank + len(datum.roots)
        self.table = table
        self.labels = tuple(f"h{i + 1}" for i in range(datum.rank)) + tuple(
            "x[" + ",".join(map(str, c)) + "]" for c in datum.roots)

    def root_index(self, i: int) -> int:
        """Root-list position of basis index i (Cartan indices are invalid)."""
        return i - self.n_cartan

    def basis_of_root(self, root_index: int) -> int:
        return self.n_cartan + root_index

    def bracket_basis(self, i: int, j: int) -> Tuple[Entry, ...]:
        if i == j:
            return ()
        if i < j:
            return self.table.get((i, j), ())
        return tuple((k, -c) for k, c in self.table.get((j, i), ()))

    def bracket(self, x: Dict[int, int], y: Dict[int, int]) -> Dict[int, int]:
        acc: Dict[int, int] = {}
        for i, ci in x.items():
            for j, cj in y.items():
                for k, c in self.bracket_basis(i, j):
                    val = acc.get(k, 0) + ci * cj * c
                    if val:
                        acc[k] = val
                    else:
                        acc.pop(k, None)
        return acc

    def weight(self, i: int) -> Tuple[int, ...]:
        if i < self.n_cartan:
            return (0,) * self.n_cartan
        return self.datum.roots[i - self.n_cartan]

    def to_json_dict(self) -> dict:
        brackets = []
        for (i, j) in sorted(self.table):
            brackets.append([i, j, [[k, c] for k, c in self.table[(i, j)]]])
        return {
            "type": self.datum.type_name,
            "dim": self.dim,
            "basis": list(self.labels),
            "brackets": brackets,
        }


def build_lie(datum: RootDatum, cocycle: Cocycle) -> IntegralLieAlgebra:
    """Assemble the bracket table; raises on lattice/cover mismatch."""
    n = datum.rank
    if cocycle.dim != n:
        raise LieError("cover dimension does not match the lattice rank")
    gram = datum.lattice.gram
    for i in range(n):
        for j in range(n):
            expected = gram[i][j] & 1 if i != j else 0
            if cocycle.pairing(1 << i, 1 << j) != expected:
                raise LieError("cover pairing does not reduce the lattice form")
        if cocycle.q(1 << i) != (gram[i][i] // 2) & 1:
            raise LieError("cover squares do not reduce the lattice norms")

    roots = datum.roots
    index = datum.index
    nc = n
    table: Table = {}

    for i in range(n):
        for ri, gamma in enumerate(roots):
            if gamma[i]:
                table[(i, nc + ri)] = ((nc + ri, gamma[i]),)

    bits = [datum.root_class_bits(ri) for ri in range(len(roots))]
    for ri in range(len(roots)):
        gi = roots[ri]
        for rj in range(ri + 1, len(roots)):
            gj = roots[rj]
            total = tuple(a + b for a, b in zip(gi, gj))
            if all(t == 0 for t in total):
                sign = -1 if cocycle.beta(bits[ri], bits[rj]) else 1
                coroot = tuple(sum(g * c for g, c in zip(row, gi)) for row in gram)
                entries = tuple((k, sign * c) for k, c in enumerate(coroot) if c)
                table[(nc + ri, nc + rj)] = entries
            elif total in index:
                sign = -1 if cocycle.beta(bits[ri], bits[rj]) else 1
                table[(nc + ri, nc + rj)] = ((nc + index[total], sign),)
    return IntegralLieAlgebra(datum, cocycle, table)


@dataclass
class JacobiReport:
    dim: int
    checked_unordered: int
    covered_ordered: int
    failures: List[Tuple[int, int, int]] = field(default_factory=list)
    sampled: bool = False
    seed: Optional[int] = None

    @property
    def ok(self) -> bool:
        return not self.failures


def _jacobi_fails(table: Table, i: int, j: int, k: int) -> bool:
    get = table.get
    acc: Dict[int, int] = {}
    for (a, b, c3, sgn) in ((i, j, k, 1), (j, k, i, 1), (i, k, j, -1)):
        ent = get((a, b))
        if not ent:
            continue
        for m, c in ent:
            if m == c3:
                continue
            if m < c3:
                inner = get((m, c3))
                s = sgn * c
            else:
                inner = get((c3, m))
                s = -sgn * c
            if inner:
                for t, c2 in inner:
                    val = acc.get(t, 0) + s * c2
                    if val:
                        acc[t] = val
                    else:
                        acc.pop(t, None)
    return bool(acc)


def _jacobi_scan(table: Table, n: int, i_lo: int, i_hi: int):
    checked = 0
    failures = []
    for i in range(i_lo, i_hi):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if _jacobi_fails(table, i, j, k):
                    failures.append((i, j, k))
                checked += 1
    return checked, failures


_POOL_STATE: dict = {}


def _pool_init(table: Table, n: int) -> None:
    _POOL_STATE["table"] = table
    _POOL_STATE["n"] = n


def _pool_scan(bounds: Tuple[int, int]):
    return _jacobi_scan(_POOL_STATE["table"], _POOL_STATE["n"], *bounds)


def verify_jacobi(L: IntegralLieAlgebra, sample: Optional[int] = None,
                  seed: Optional[int] = None, workers: int = 1) -> JacobiReport:
    """Check [[a,b],c] + [[b,c],a] + [[c,a],b] = 0 on basis triples.

    Exhaustive over unordered triples i < j < k by default; repeated indices
    and permutations carry no extra content because the evaluator is
    antisymmetric by construction, so this covers all dim^3 ordered triples.
    With ``sample`` set, checks that many pseudo-random triples instead.
    The exhaustive scan may be partitioned across ``workers`` processes; the
    report is deterministic either way.
    """
    n = L.dim
    report = JacobiReport(dim=n, checked_unordered=0, covered_ordered=n ** 3)
    if sample is None:
        if workers > 1:
            import multiprocessing
            bounds = []
            step = max(1, n // (4 * workers))
            lo = 0
            while lo < n:
                bounds.append((lo, min(n, lo + step)))
                lo += step
            ctx = multiprocessing.get_context("fork")
            with ctx.Pool(workers, initializer=_pool_init,
                          initargs=(L.table, n)) as pool:
                for checked, failures in pool.map(_pool_scan, bounds):
                    report.checked_unordered += checked
                    report.failures.extend(failures)
            report.failures.sort()
        else:
            checked, failures = _jacobi_scan(L.table, n, 0, n)
            report.checked_unordered = checked
            report.failures = failures
    else:
        rng = random.Random(seed)
        report.sampled = True
        report.seed = seed
        report.covered_ordered = 0
        for _ in range(sample):
            i, j, k = sorted(rng.sample(range(n), 3))
            if _jacobi_fails(L.table, i, j, k):
                report.failures.append((i, j, k))
            report.checked_unordered += 1
    return report


def assert_weight_graded(L: IntegralLieAlgebra) -> None:
    """Structural check that every bracket entry lands at the summed weight."""
    for (i, j), entries in L.table.items():
        wi, wj = L.weight(i), L.weight(j)
        target = tuple(a + b for a, b in zip(wi, wj))
        for k, _ in entries:
            if L.weight(k) != target:
                raise LieError("bracket table is not weight graded")


@dataclass(frozen=True)
class KillingForm:
    matrix: Tuple[Tuple[int, ...], ...]
    determinant: int

    @property
    def nondegenerate(self) -> bool:
        return self.determinant != 0


def killing_form(L: IntegralLieAlgebra) -> KillingForm:
    """K(a, b) = tr(ad a . ad b), exploiting the weight grading for zeros.

    The determinant is taken blockwise: the Cartan block times the product of
    the 2x2 antidiagonal blocks over the root pairs (the zero pattern is
    forced by the verified grading).
    """
    assert_weight_graded(L)
    n = L.dim

    def pair_trace(a: int, b: int) -> int:
        total = 0
        for k in range(n):
            for m, c in L.bracket_basis(b, k):
                for t, c2 in L.bracket_basis(a, m):
                    if t == k:
                        total += c * c2
        return total

    mat = [[0] * n for _ in range(n)]
    nc = L.n_cartan
    for i in range(nc):
        for j in range(i, nc):
            mat[i][j] = mat[j][i] = pair_trace(i, j)
    det = intmat.bareiss_det(tuple(tuple(mat[i][j] for j in range(nc))
                                   for i in range(nc)))
    for ri in range(len(L.datum.roots)):
        rj = L.datum.negation[ri]
        if rj < ri:
            continue
        val = pair_trace(nc + ri, nc + rj)
        mat[nc + ri][nc + rj] = mat[nc + rj][nc + ri] = val
        det *= -val * val
    matrix = tuple(tuple(row) for row in mat)
    return KillingForm(matrix, det)


def killing_cartan_ratio(L: IntegralLieAlgebra, killing: KillingForm) -> Fraction:
    """Constant c with K|_Cartan = c * (coweight-basis dual pairing)."""
    dual = intmat.rational_inverse(L.datum.lattice.gram)
    nc = L.n_cartan
    ratio: Optional[Fraction] = None
    for i in range(nc):
        for j in range(nc):
            k_val = Fraction(killing.matrix[i][j])
            d_val = dual[i][j]
            if d_val == 0:
                if k_val != 0:
                    raise LieError("Cartan Killing block is not proportional to the dual form")
                continue
            r = k_val / d_val
            if ratio is None:
                ratio = r
            elif ratio != r:
                raise LieError("Cartan Killing block is not proportional to the dual form")
    if ratio is None:
        raise LieError("degenerate dual pairing")
    return ratio


@dataclass(frozen=True)
class Involution:
    """Signed basis map: h -> -h on the Cartan part, X_gamma -> s * X_{-gamma}."""

    n_cartan: int
    root_map: Tuple[Tuple[int, int], ...]  # root index -> (image root index, sign)

    def apply_basis(self, L: IntegralLieAlgebra, i: int) -> Tuple[int, int]:
        if i < self.n_cartan:
            return i, -1
        target, sign = self.root_map[i - self.n_cartan]
        return self.n_cartan + target, sign

    def apply(self, L: IntegralLieAlgebra, x: Dict[int, int]) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for i, c in x.items():
            j, s = self.apply_basis(L, i)
            out[j] = out.get(j, 0) + s * c
        return {k: v for k, v in out.items() if v}

    def trace(self) -> int:
        tr = -self.n_cartan
        for ri, (target, sign) in enumerate(self.root_map):
            if target == ri:
                tr += sign
        return tr


def build_theta(L: IntegralLieAlgebra) -> Involution:
    """The stable involution; verified to be an automorphism with trace -rank."""
    datum = L.datum
    coc = L.cocycle
    root_map = []
    for ri in range(len(datum.roots)):
        neg = datum.negation[ri]
        sign = 1 if coc.q(datum.root_class_bits(ri)) else -1
        root_map.append((neg, sign))
    theta = Involution(L.n_cartan, tuple(root_map))

    for i in range(L.dim):
        j, s = theta.apply_basis(L, i)
        j2, s2 = theta.apply_basis(L, j)
        if j2 != i or s * s2 != 1:
            raise LieError("involution does not square to the identity")
    if theta.trace() != -L.n_cartan:
        raise LieError("involution trace is not -rank")
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            lhs = theta.apply(L, dict(L.bracket_basis(i, j)))
            ti, si = theta.apply_basis(L, i)
            tj, sj = theta.apply_basis(L, j)
            rhs = {k: si * sj * c for k, c in L.bracket_basis(ti, tj)}
            if lhs != {k: v for k, v in rhs.items() if v}:
                raise LieError(f"involution fails the automorphism check at ({i}, {j})")
    return theta


class FixedSubalgebra:
    """Span of Z_gamma = X_gamma + theta(X_gamma) over the positive roots."""

    def __init__(self, L: IntegralLieAlgebra, theta: Involution):
        self.L = L
        self.theta = theta
        self.pos = L.datum.positive
        self.dim = len(self.pos)
        self.labels = tuple("z[" + ",".join(map(str, L.datum.roots[ri])) + "]"
                            for ri in self.pos)
        self._pos_index = {ri: i for i, ri in enumerate(self.pos)}
        self.table: Dict[Tuple[int, int], Tuple[Entry, ...]] = {}
        self._build()

    def ambient(self, i: int) -> Dict[int, int]:
        ri = self.pos[i]
        vec = {self.L.basis_of_root(ri): 1}
        img = self.theta.apply(self.L, vec)
        for k, v in img.items():
            vec[k] = vec.get(k, 0) + v
        return vec

    def _build(self) -> None:
        L = self.L
        nc = L.n_cartan
        neg = L.datum.negation
        for i in range(self.dim):
            zi = self.ambient(i)
            for j in range(i + 1, self.dim):
                res = L.bracket(zi, self.ambient(j))
                entries: Dict[int, int] = {}
                for k, c in res.items():
                    if k < nc:
                        raise LieError("fixed-subalgebra bracket has a Cartan component")
                    ri = k - nc
                    if ri in self._pos_index:
                        other = L.basis_of_root(neg[ri])
                        if res.get(other, 0) != c:
                            raise LieError("fixed-subalgebra bracket is not theta-symmetric")
                        entries[self._pos_index[ri]] = c
                if entries:
                    self.table[(i, j)] = tuple(sorted(entries.items()))

    def bracket_basis(self, i: int, j: int) -> Tuple[Entry, ...]:
        if i == j:
            return ()
        if i < j:
            return self.table.get((i, j), ())
        return tuple((k, -c) for k, c in self.table.get((j, i), ()))

    def killing(self) -> KillingForm:
        n = self.dim

        def pair_trace(a: int, b: int) -> int:
            total = 0
            for k in range(n):
                for m, c in self.bracket_basis(b, k):
                    for t, c2 in self.bracket_basis(a, m):
                        if t == k:
                            total += c * c2
            return total

        mat = tuple(tuple(pair_trace(i, j) for j in range(n)) for i in range(n))
        return KillingForm(mat, intmat.bareiss_det(mat))


def fixed_subalgebra(L: IntegralLieAlgebra, theta: Involution) -> FixedSubalgebra:
    return FixedSubalgebra(L, theta)


def theta_eigenspace_dims(L: IntegralLieAlgebra, theta: Involution) -> Tuple[int, int]:
    """(dim of +1 eigenspace, dim of -1 eigenspace)."""
    plus = 0
    pairs_seen = set()
    for ri, (target, sign) in enumerate(theta.root_map):
        if target == ri:
            plus += 1 if sign == 1 else 0
        else:
            key = (min(ri, target), max(ri, target))
            if key not in pairs_seen:
                pairs_seen.add(key)
                plus += 1
    return plus, L.dim - plus


class RMap:
    """The induced action of the fixed subalgebra on the cover representation."""

    def __init__(self, fixed: FixedSubalgebra, rep: HeisRep):
        if rep.cocycle != fixed.L.cocycle:
            raise LieError("representation was built from a different cover")
        self.fixed = fixed
        self.rep = rep
        half = gq(Fraction(1, 2))
        datum = fixed.L.datum
        self.mats: Tuple[MonoMat, ...] = tuple(
            rep.rho_bits(datum.root_class_bits(ri)).scale(half) for ri in fixed.pos)

    def matrix(self, i: int) -> MonoMat:
        return self.mats[i]

    def of_vector(self, vec: Dict[int, int]) -> Dict[Tuple[int, int], GQ]:
        acc: Dict[Tuple[int, int], GQ] = {}
        for i, c in vec.items():
            coeff = gq(c)
            for r, col, val in self.mats[i].entries():
                key = (r, col)
                cur = acc.get(key, ZERO) + coeff * val
                if cur.is_zero():
                    acc.pop(key, None)
                else:
                    acc[key] = cur
        return acc


def build_R(fixed: FixedSubalgebra, rep: HeisRep) -> RMap:
    return RMap(fixed, rep)


@dataclass
class RReport:
    dim: int
    pairs_checked: int
    failures: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_R(rmap: RMap) -> RReport:
    """Check R([a, b]) = [R(a), R(b)] for every pair of fixed-basis elements."""
    fixed = rmap.fixed
    n = fixed.dim
    report = RReport(dim=n, pairs_checked=0)
    for i in range(n):
        mi = rmap.mats[i]
        for j in range(i + 1, n):
            mj = rmap.mats[j]
            lhs = rmap.of_vector(dict(fixed.bracket_basis(i, j)))
            rhs: Dict[Tuple[int, int], GQ] = {}
            for r, c, val in (mi * mj).entries():
                key = (r, c)
                cur = rhs.get(key, ZERO) + val
                if cur.is_zero():
                    rhs.pop(key, None)
                else:
                    rhs[key] = cur
            for r, c, val in (mj * mi).entries():
                key = (r, c)
                cur = rhs.get(key, ZERO) - val
                if cur.is_zero():
                    rhs.pop(key, None)
                else:
                    rhs[key] = cur
            if lhs != rhs:
                report.failures.append((i, j))
            report.pairs_checked += 1
    return report


@dataclass(frozen=True)
class IdentificationRecord:
    family: str            # "sl" or "sp"
    w_dim: int
    fixed_dim: int
    image_rank: Optional[int] = None
    invariant_antisymmetric_dim: Optional[int] = None
    invariant_symmetric_dim: Optional[int] = None
    form: Optional[Tuple[Tuple[GQ, ...], ...]] = None
    form_determinant: Optional[GQ] = None


def invariant_form_space(mats: Sequence[MonoMat], sym: int) -> List[Dict[int, GQ]]:
    """Solve R^T B + B R = 0 over forms with B^T = sym * B.

    Unknowns are the upper-triangle entries (strict for sym = -1); returns a
    basis of the solution space as dicts over unknown indices.
    """
    n = mats[0].n
    unknowns: Dict[Tuple[int, int], int] = {}
    for a in range(n):
        start = a if sym == 1 else a + 1
        for b in range(start, n):
            unknowns[(a, b)] = len(unknowns)

    def coeff_of(a: int, b: int) -> Optional[Tuple[int, int]]:
        if a == b and sym == -1:
            return None
        return ((a, b), 1) if (a, b) in unknowns else ((b, a), sym)

    rows: List[Dict[int, GQ]] = []
    for m in mats:
        colinv = [0] * n
        for r, c in enumerate(m.col):
            colinv[c] = r
        for a in range(n):
            for b in range(n):
                row: Dict[int, GQ] = {}
                k0 = colinv[a]
                ref = coeff_of(k0, b)
                if ref is not None:
                    (key, s) = ref
                    idx = unknowns[key]
                    cur = row.get(idx, ZERO) + m.val[k0] * gq(s)
                    if cur.is_zero():
                        row.pop(idx, None)
                    else:
                        row[idx] = cur
                k1 = colinv[b]
                ref = coeff_of(a, k1)
                if ref is not None:
                    (key, s) = ref
                    idx = unknowns[key]
                    cur = row.get(idx, ZERO) + m.val[k1] * gq(s)
                    if cur.is_zero():
                        row.pop(idx, None)
                    else:
                        row[idx] = cur
                if row:
                    rows.append(row)
    sols = sparse_nullspace(rows, len(unknowns))
    return sols


def form_from_solution(sol: Dict[int, GQ], n: int, sym: int) -> Tuple[Tuple[GQ, ...], ...]:
    unknowns: List[Tuple[int, int]] = []
    for a in range(n):
        start = a if sym == 1 else a + 1
        for b in range(start, n):
            unknowns.append((a, b))
    mat = [[ZERO] * n for _ in range(n)]
    for idx, val in sol.items():
        a, b = unknowns[idx]
        mat[a][b] = mat[a][b] + val
        if a != b:
            mat[b][a] = mat[b][a] + (val if sym == 1 else -val)
    return tuple(tuple(row) for row in mat)


def identify_fixed(fixed: FixedSubalgebra, rmap: RMap) -> IdentificationRecord:
    """Certify the type of the fixed subalgebra through its representation.

    When dim g = (dim W)^2 - 1: R is injective onto the trace-zero matrices.
    When dim g = dim W (dim W + 1) / 2: the invariant bilinear forms are a
    single line spanned by a nondegenerate antisymmetric form.
    """
    from .gaussian import dense_det

    n = rmap.rep.dim_w
    d = fixed.dim
    if d == n * n - 1:
        rows = []
        for m in rmap.mats:
            if not m.trace().is_zero():
                raise LieError("image matrix is not trace free")
            rows.append({r * n + c: v for r, c, v in m.entries()})
        rank = sparse_rank(rows)
        if rank != d:
            raise LieError(f"representation has a kernel (rank {rank} < {d})")
        return IdentificationRecord("sl", n, d, image_rank=rank)
    if d == n * (n + 1) // 2:
        anti = invariant_form_space(rmap.mats, sym=-1)
        symm = invariant_form_space(rmap.mats, sym=1)
        if len(anti) != 1 or len(symm) != 0:
            raise LieError(
                f"invariant form dimensions ({len(anti)}, {len(symm)}) do not certify sp")
        form = form_from_solution(anti[0], n, sym=-1)
        det = dense_det(form)
        if det.is_zero():
            raise LieError("invariant antisymmetric form is degenerate")
        return IdentificationRecord("sp", n, d,
                                    invariant_antisymmetric_dim=1,
                                    invariant_symmetric_dim=0,
                                    form=form, form_determinant=det)
    raise LieError(f"no certification route for dim g = {d}, dim W = {n}")


@dataclass
class AdjointCharacterReport:
    functional: int
    pairs_checked: int
    failures: List[Tuple[int, int]] = field(default_factory=list)
    fixes_cartan: bool = True
    commutes_with_theta: bool = True

    @property
    def ok(self) -> bool:
        return not self.failures and self.fixes_cartan and self.commutes_with_theta


def character_adjoint_check(L: IntegralLieAlgebra, f: int,
                            theta: Optional[Involution] = None) -> AdjointCharacterReport:
    """The map X_gamma -> (-1)^{f(gamma)} X_gamma, identity on the Cartan part.

    Verified to be an automorphism fixing the Cartan subalgebra pointwise and
    commuting with the involution: the adjoint action of the 2-torsion point
    dual to f.
    """
    n = L.dim
    nc = L.n_cartan
    signs = [1] * n
    for ri in range(len(L.datum.roots)):
        if parity(f & L.datum.root_class_bits(ri)):
            signs[nc + ri] = -1
    report = AdjointCharacterReport(functional=f, pairs_checked=0)
    for i in range(n):
        for j in range(i + 1, n):
            ent = L.bracket_basis(i, j)
            lhs = {k: signs[k] * c for k, c in ent}
            rhs = {k: signs[i] * signs[j] * c for k, c in ent}
            if lhs != rhs:
                report.failures.append((i, j))
            report.pairs_checked += 1
    if theta is not None:
        for i in range(n):
            j, s = theta.apply_basis(L, i)
            if signs[i] != signs[j]:
                report.commutes_with_theta = False
                break
    return report


def ad_nilpotency_degree(L: IntegralLieAlgebra, root_index: int, power: int = 4) -> bool:
    """Whether (ad X_gamma)^power kills every basis element."""
    xg = {L.basis_of_root(root_index): 1}
    for i in range(L.dim):
        vec = {i: 1}
        for _ in range(power):
            vec = L.bracket(xg, vec)
            if not vec:
                break
        if vec:
            return False
    return True


def recover_roots_from_ad(L: IntegralLieAlgebra) -> bool:
    """Simultaneous Cartan ad-eigenvalues on the X part recover the root set."""
    recovered = set()
    for ri in range(len(L.datum.roots)):
        xi = L.basis_of_root(ri)
        eig = []
        for i in range(L.n_cartan):
            res = L.bracket({i: 1}, {xi: 1})
            eig.append(res.get(xi, 0))
            if set(res) - {xi}:
                return False
        recovered.add(tuple(eig))
    return recovered == set(L.datum.roots)
