"""Monomial Gaussian-rational representations of the double cover.

The representation sends -1 to -identity and acts on a space of dimension
2^g, where 2g is the dimension of the nondegenerate quotient of V.  It is
assembled from a symplectic basis in Arf normal form: generalized Pauli
tensor factors on each hyperbolic pair, with the single q = 1 pair (when the
Arf invariant is 1) carrying the only i-twisted factors, and radical
generators acting by an exact scalar whose square is (-1)^q.

Correctness is not argued from the construction: the full multiplication
table is verified pair by pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .extension import Cocycle, ExtElement
from .f2 import F2QuadraticSpace, parity, symplectic_decomposition
from .gaussian import GQ, I, MINUS_ONE, ONE, ZERO, MonoMat, sparse_nullspace


class RepError(ValueError):
    pass


def arf_normal_pairs(space: F2QuadraticSpace) -> Tuple[List[Tuple[int, int]], List[int]]:
    """Symplectic basis with all q = 1 weight on the last hyperbolic pair.

    Mixed pairs are cleared with u -> u + w; two q = (1,1) pairs at a time are
    re-split into q = (0,0) pairs by exhaustive search inside their span
    (possible because the Arf invariant of that 4-dimensional piece is 0).
    """
    pairs, radical = symplectic_decomposition(space)
    q = space.q
    fixed: List[Tuple[int, int]] = []
    twists: List[Tuple[int, int]] = []
    for u, w in pairs:
        if q(u) and not q(w):
            u ^= w
        elif q(w) and not q(u):
            w ^= u
        if q(u) and q(w):
            twists.append((u, w))
        else:
            if q(u) or q(w):
                raise RepError("pair normalization failed")
            fixed.append((u, w))
    while len(twists) >= 2:
        a, b = twists.pop()
        c, d = twists.pop()
        span = [x1 ^ x2 ^ x3 ^ x4
                for x1 in (0, a) for x2 in (0, b) for x3 in (0, c) for x4 in (0, d)]
        split = None
        for v1 in span:
            if v1 == 0 or q(v1):
                continue
            for w1 in span:
                if space.pairing(v1, w1) != 1:
                    continue
                if q(w1):
                    w1 ^= v1
                comp = [x for x in span
                        if x and space.pairing(x, v1) == 0 and space.pairing(x, w1) == 0]
                v2 = next((x for x in comp if not q(x)), None)
                if v2 is None:
                    continue
                w2 = next((x for x in comp if space.pairing(v2, x) == 1), None)
                if w2 is None:
                    continue
                if q(w2):
                    w2 ^= v2
                if not q(w2):
                    split = [(v1, w1), (v2, w2)]
                    break
            if split:
                break
        if split is None:
            raise RepError("could not re-split a pair of twisted planes")
        fixed.extend(split)
    fixed.extend(twists)
    return fixed, radical


def _pauli_x(g: int, k: int) -> MonoMat:
    n = 1 << g
    bit = 1 << k
    return MonoMat(n, tuple(r ^ bit for r in range(n)), (ONE,) * n)


def _pauli_z(g: int, k: int) -> MonoMat:
    n = 1 << g
    bit = 1 << k
    return MonoMat(n, tuple(range(n)),
                   tuple(MINUS_ONE if r & bit else ONE for r in range(n)))


def _pauli_xz(g: int, k: int) -> MonoMat:
    n = 1 << g
    bit = 1 << k
    return MonoMat(n, tuple(r ^ bit for r in range(n)),
                   tuple(ONE if r & bit else MINUS_ONE for r in range(n)))


def _pauli_iz(g: int, k: int) -> MonoMat:
    n = 1 << g
    bit = 1 << k
    return MonoMat(n, tuple(range(n)),
                   tuple(-I if r & bit else I for r in range(n)))


def _scalar(g: int, s: GQ) -> MonoMat:
    n = 1 << g
    return MonoMat(n, tuple(range(n)), (s,) * n)


@dataclass(frozen=True)
class HeisRep:
    """Assignment v -> monomial matrix M_v with rho(sign, v) = sign * M_v."""

    cocycle: Cocycle
    dim_w: int
    mats: Tuple[MonoMat, ...]
    pairs: Tuple[Tuple[int, int], ...]
    radical: Tuple[int, ...]
    radical_scalars: Tuple[GQ, ...]

    def rho(self, x: ExtElement) -> MonoMat:
        m = self.mats[x.v]
        return m if x.sign == 1 else -m

    def rho_bits(self, v: int) -> MonoMat:
        return self.mats[v]

    def to_json_dict(self) -> dict:
        return {
            "dim_w": self.dim_w,
            "mats": [
                [[r, c, str(val.re), str(val.im)] for r, c, val in m.entries()]
                for m in self.mats
            ],
        }


def build_heisrep(cocycle: Cocycle,
                  radical: Optional[Sequence[int]] = None) -> HeisRep:
    """Build the representation and verify its full multiplication table."""
    space = cocycle.to_space()
    pairs, rad = arf_normal_pairs(space)
    if radical is not None and sorted(radical) != sorted(rad):
        span = set()
        for combo in itertools.product((0, 1), repeat=len(rad)):
            v = 0
            for c, r in zip(combo, rad):
                if c:
                    v ^= r
            span.add(v)
        if any(r not in span for r in radical) or len(radical) != len(rad):
            raise RepError("supplied radical does not match the pairing radical")
    g = len(pairs)
    n = cocycle.dim
    dim_w = 1 << g

    adapted: List[int] = []
    gens: List[MonoMat] = []
    for k, (u, w) in enumerate(pairs):
        if space.q(u):
            if k != g - 1:
                raise RepError("twist pair is not in the last slot")
            gens.append(_pauli_xz(g, k))
            gens.append(_pauli_iz(g, k))
        else:
            gens.append(_pauli_x(g, k))
            gens.append(_pauli_z(g, k))
        adapted.extend((u, w))
    scalars = []
    for r in rad:
        zeta = I if space.q(r) else ONE
        scalars.append(zeta)
        gens.append(_scalar(g, zeta))
        adapted.append(r)

    # coordinates of the standard basis in the adapted basis
    coords_of_e: List[int] = []
    for j in range(n):
        target = 1 << j
        coeffs = _solve_f2(adapted, target, n)
        coords_of_e.append(coeffs)

    basis_mats: List[MonoMat] = []
    for j in range(n):
        m = MonoMat.identity(dim_w)
        c = coords_of_e[j]
        for idx in range(len(adapted)):
            if (c >> idx) & 1:
                m = m * gens[idx]
        basis_mats.append(m)

    mats: List[MonoMat] = [MonoMat.identity(dim_w)] * (1 << n)
    for v in range(1, 1 << n):
        j = (v & -v).bit_length() - 1
        rest = v & (v - 1)
        m = basis_mats[j] * mats[rest]
        if parity(cocycle.rows[j] & rest):
            m = -m
        mats[v] = m

    # record the scalar by which each canonical radical lift actually acts
    acting_scalars = []
    for r in rad:
        s = mats[r].scalar_value()
        if s is None or not ((s * s == MINUS_ONE) if space.q(r) else (s * s == ONE)):
            raise RepError("no consistent scalar for a radical generator")
        acting_scalars.append(s)
    rep = HeisRep(cocycle, dim_w, tuple(mats), tuple(pairs), tuple(rad),
                  tuple(acting_scalars))
    report = verify_rep(rep, commutant=False)
    if not report.ok:
        raise RepError(f"representation failed verification: {report.failures[:3]}")
    return rep


def _solve_f2(basis: Sequence[int], target: int, n: int) -> int:
    """Express target as an F2 combination of basis vectors; coefficient bitmask."""
    rows = [(b, 1 << i) for i, b in enumerate(basis)]
    work = list(rows)
    vec, coeff = target, 0
    for col in range(n):
        piv = next((idx for idx, (b, _) in enumerate(work) if (b >> col) & 1), None)
        if piv is None:
            continue
        pb, pc = work.pop(piv)
        if (vec >> col) & 1:
            vec ^= pb
            coeff ^= pc
        work = [(b ^ pb, c ^ pc) if (b >> col) & 1 else (b, c) for b, c in work]
    if vec:
        raise RepError("vector outside the span of the adapted basis")
    return coeff


@dataclass
class RepReport:
    dim_w: int
    pairs_checked: int
    failures: List[tuple] = field(default_factory=list)
    rho_minus_one_is_minus_id: bool = False
    commutant_dim: Optional[int] = None
    root_square_failures: List[int] = field(default_factory=list)
    images_faithful: bool = False

    @property
    def ok(self) -> bool:
        # faithfulness is reported, not required: radical generators with
        # q = 0 act by +-1 and necessarily collide with the center's image
        return (not self.failures and self.rho_minus_one_is_minus_id
                and not self.root_square_failures
                and self.commutant_dim in (None, 1))


def verify_rep(rep: HeisRep, root_classes: Optional[Sequence[int]] = None,
               commutant: bool = True) -> RepReport:
    """Exhaustively check rho(x) rho(y) = rho(xy) over all |cover|^2 pairs.

    Also checks rho(-1) = -id, faithfulness of (sign, v) -> sign * M_v,
    squares of root-class lifts, and (optionally) that the commutant of the
    image is exactly the scalars.
    """
    coc = rep.cocycle
    n = coc.dim
    mats = rep.mats
    report = RepReport(dim_w=rep.dim_w, pairs_checked=0)

    minus_id = -MonoMat.identity(rep.dim_w)
    report.rho_minus_one_is_minus_id = (-mats[0]) == minus_id

    size = 1 << n
    cols = [m.col for m in mats]
    vals = [m.val for m in mats]
    negvals = [tuple(-x for x in v) for v in vals]
    nw = rep.dim_w
    rng = range(nw)
    for u in range(size):
        cu, vu = cols[u], vals[u]
        for v in range(size):
            cv, vv = cols[v], vals[v]
            prod_col = tuple(cv[c] for c in cu)
            prod_val = tuple(vu[r] * vv[cu[r]] for r in rng)
            neg_prod_val = tuple(-x for x in prod_val)
            t = u ^ v
            col_ok = prod_col == cols[t]
            s0 = -1 if coc.beta(u, v) else 1
            for su, sv in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                lhs = prod_val if su * sv == 1 else neg_prod_val
                rhs = vals[t] if su * sv * s0 == 1 else negvals[t]
                if not col_ok or lhs != rhs:
                    report.failures.append(((su, u), (sv, v)))
                report.pairs_checked += 1

    seen: Dict[Tuple, Tuple[int, int]] = {}
    faithful = True
    for v in range(1 << n):
        for s in (1, -1):
            m = mats[v] if s == 1 else -mats[v]
            key = (m.col, m.val)
            if key in seen:
                faithful = False
            seen[key] = (s, v)
    report.images_faithful = faithful

    if root_classes is not None:
        for v in root_classes:
            if mats[v] * mats[v] != minus_id:
                report.root_square_failures.append(v)

    if commutant:
        report.commutant_dim = commutant_dimension(rep)
    return report


def commutant_dimension(rep: HeisRep) -> int:
    """Dimension of {B : B M = M B for all image matrices}, solved exactly."""
    n = rep.dim_w
    gens = [rep.mats[1 << j] for j in range(rep.cocycle.dim)]
    rows: List[Dict[int, GQ]] = []
    for m in gens:
        colinv = [0] * n
        for r, c in enumerate(m.col):
            colinv[c] = r
        for r in range(n):
            for c in range(n):
                row: Dict[int, GQ] = {}
                k0 = colinv[c]
                row[r * n + k0] = row.get(r * n + k0, ZERO) + m.val[k0]
                key = m.col[r] * n + c
                row[key] = row.get(key, ZERO) - m.val[r]
                row = {k: v for k, v in row.items() if not v.is_zero()}
                if row:
                    rows.append(row)
    return len(sparse_nullspace(rows, n * n))
