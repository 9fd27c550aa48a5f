"""Matrix-level checks for the converse construction.

The abstract double cover is recovered inside the simply connected fixed
group; at representation level this reduces to concrete matrix identities:
the 3x3 orthogonal image of a 2x2 projective transformation, its Lie-algebra
derivative, order-4 lifts of the torus 2-torsion (squares equal to minus the
identity), the sign commutation rule between root lifts, and the
intertwining identity 2 R(Z_gamma) = rho of the canonical lift.  Everything
runs in exact Gaussian-rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .gaussian import (GQ, Dense, I, MINUS_ONE, MonoMat, ONE, ZERO, dense_identity,
                       dense_mul, dense_neg, dense_sub, dense_transpose, gq)
from .heisrep import HeisRep
from .lattice import RootDatum
from .liealg import RMap


class GroupLiftError(ValueError):
    pass


def _two() -> GQ:
    return gq(2)


def pgl2_to_so3(m: Dense) -> Dense:
    """The 3x3 orthogonal matrix attached to an invertible 2x2 matrix.

    Scale invariant in the input; the output is exactly orthogonal with
    determinant 1.  Raises on singular input.
    """
    (a, b), (c, d) = m[0], m[1]
    det = a * d - b * c
    if det.is_zero():
        raise GroupLiftError("singular input")
    half = gq(Fraction(1, 2))
    rows = (
        (a * d + b * c, I * (a * c + b * d), b * d - a * c),
        (-(I * (a * b + c * d)), (a * a + b * b + c * c + d * d) * half,
         I * (a * a - b * b + c * c - d * d) * half),
        (-(a * b - c * d), I * (c * c + d * d - a * a - b * b) * half,
         (a * a - b * b - c * c + d * d) * half),
    )
    inv = ONE / det
    return tuple(tuple(inv * x for x in row) for row in rows)


def sl2_to_so3_derivative(m: Dense) -> Dense:
    """Derivative of the 2x2 -> 3x3 map on trace-zero matrices; antisymmetric output."""
    (a, b), (c, d) = m[0], m[1]
    if not (a + d).is_zero():
        raise GroupLiftError("input has nonzero trace")
    two_i = I * _two()
    return (
        (ZERO, I * (b + c), b - c),
        (-(I * (b + c)), ZERO, two_i * a),
        (c - b, -(two_i * a), ZERO),
    )


def is_special_orthogonal(m: Dense) -> bool:
    mt = dense_transpose(m)
    if dense_mul(mt, m) != dense_identity(3):
        return False
    (a, b, c), (d, e, f), (g, h, i) = m
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    return det == ONE


def is_antisymmetric(m: Dense) -> bool:
    return dense_transpose(m) == dense_neg(m)


def dense_bracket(x: Dense, y: Dense) -> Dense:
    return dense_sub(dense_mul(x, y), dense_mul(y, x))


@dataclass(frozen=True)
class PhiCertificate:
    """rho of a canonical root lift, with its order-4 and intertwining evidence."""

    root_index: int
    matrix: MonoMat
    square_is_minus_id: bool
    equals_two_r: Optional[bool]

    @property
    def ok(self) -> bool:
        return self.square_is_minus_id and self.equals_two_r in (None, True)

    def to_json_dict(self) -> dict:
        d = {"root": self.root_index, "ok": self.ok,
             "order4": self.square_is_minus_id,
             "intertwined": self.equals_two_r}
        if not self.ok:
            d["matrix"] = [[r, c, str(v.re), str(v.im)]
                           for r, c, v in self.matrix.entries()]
        return d


def phi_of_root(datum: RootDatum, rep: HeisRep, root_index: int,
                rmap: Optional[RMap] = None) -> PhiCertificate:
    """Certify that the lift of a coroot 2-torsion point has order 4.

    Returns rho of the canonical lift together with the checks that its
    square is minus the identity and (when the induced action is supplied)
    that it equals twice the corresponding fixed-subalgebra image.
    """
    bits = datum.root_class_bits(root_index)
    m = rep.rho_bits(bits)
    minus_id = MonoMat.identity(rep.dim_w).scale(MINUS_ONE)
    square_ok = (m * m) == minus_id
    equals = None
    if rmap is not None:
        pos = rmap.fixed.pos
        ri = root_index if root_index in pos else datum.negation[root_index]
        idx = list(pos).index(ri)
        equals = rmap.mats[idx].scale(_two()) == m
    return PhiCertificate(root_index, m, square_ok, equals)


@dataclass
class CommReport:
    pairs_checked: int
    failures: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {"ok": self.ok, "pairs_checked": self.pairs_checked,
                "failures": [list(f) for f in self.failures]}


def verify_comm_relation(rep: HeisRep, datum: RootDatum,
                         all_pairs: bool = False) -> CommReport:
    """Check rho(c(g)) rho(c(d)) = (-1)^<g, d> rho(c(d)) rho(c(g)).

    Over the simple-root pairs by default, or over every pair of roots.
    """
    indices = list(range(len(datum.roots))) if all_pairs else list(datum.simple)
    report = CommReport(pairs_checked=0)
    mats = [rep.rho_bits(datum.root_class_bits(ri)) for ri in indices]
    for i in range(len(indices)):
        for j in range(i + 1, len(indices)):
            lhs = mats[i] * mats[j]
            rhs = mats[j] * mats[i]
            pairing = datum.inner(datum.roots[indices[i]], datum.roots[indices[j]])
            if pairing % 2:
                rhs = -rhs
            if lhs != rhs:
                report.failures.append((indices[i], indices[j]))
            report.pairs_checked += 1
    return report


def anticommutation_model_holds() -> bool:
    """The 2x2 identity underlying the sign rule: the two standard lifts anticommute."""
    x = ((ZERO, -I), (-I, ZERO))
    z = ((-I, ZERO), (ZERO, I))
    return dense_mul(x, z) == dense_neg(dense_mul(z, x))


def cover_isomorphic_to_image(rep: HeisRep) -> bool:
    """The map (sign, v) -> sign * M_v is injective, so the matrix group
    generated by the root-lift images together with -id realizes the cover."""
    seen = set()
    for v in range(1 << rep.cocycle.dim):
        m = rep.rho_bits(v)
        for s in (1, -1):
            key = (m.col, m.val if s == 1 else tuple(-x for x in m.val))
            if key in seen:
                return False
            seen.add(key)
    return True
