"""The real 2-descent orbit table over the type E6 datum.

Each involution class of the Weyl group determines: g = 3 - rank((1 + w) mod
2), the group size 2^g, the orbit count 2^(g-1) (2^g + 1), and the number of
invariant odd refinements of the mod-2 space (the real bitangent count).  The
curve topology columns n(C) and a(C) are carried metadata, not computed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from .f2 import BitVec, F2QuadraticSpace, arf, parity, \
    standard_symplectic_space
from .intmat import IntMatrix, matmul, identity
from .lattice import (RootDatum, WeylGroup, WeylInvolutionClass,
                      classify_involutions, mod2_rank_one_plus, mod2_space)


class RealTableError(ValueError):
    pass


CARRIED_TOPOLOGY: Dict[str, Tuple[int, int]] = {
    "1": (4, 0),
    "s1": (3, 1),
    "s1s2": (2, 1),
    "s1s2s3": (1, 1),
    "tau": (2, 0),
}

EXPECTED_COLUMNS: Dict[str, Tuple[int, int, int]] = {
    # label: (real bitangents, #J(R)/2J(R), orbit count)
    "1": (28, 8, 36),
    "s1": (16, 4, 10),
    "s1s2": (8, 2, 3),
    "s1s2s3": (4, 1, 1),
    "tau": (4, 2, 3),
}


@dataclass(frozen=True)
class TableRow:
    label: str
    n_c: int
    a_c: int
    real_bitangents: int
    j_mod_2j_size: int
    orbit_count: int
    g: int
    mod2_rank: int

    def __post_init__(self) -> None:
        if self.orbit_count != orbit_count_from_size(self.j_mod_2j_size):
            raise RealTableError("orbit count inconsistent with group size")

    def to_json_dict(self) -> dict:
        return {
            "class": self.label,
            "n": self.n_c,
            "a": self.a_c,
            "real_bitangents": self.real_bitangents,
            "j_mod_2j": self.j_mod_2j_size,
            "orbits": self.orbit_count,
        }


def orbit_count_from_size(size: int) -> int:
    return size * (size + 1) // 2


def invariant_odd_refinements(space: F2QuadraticSpace,
                              w_mod2_rows: Sequence[int]) -> int:
    """Count refinements q' with q' o w = q' and Arf(q') = 1.

    Every refinement of the fixed pairing is q0 + f for a functional f; the
    base q0 (from the lattice) is itself w-invariant, which is asserted.
    """
    n = space.dim
    for v in range(1 << n):
        wv = 0
        for i, row in enumerate(w_mod2_rows):
            if parity(row & v):
                wv |= 1 << i
        if space.q(wv) != space.q(v):
            raise RealTableError("base refinement is not invariant under w")
    count = 0
    for f in range(1 << n):
        invariant = True
        for i in range(n):
            wv = 0
            for k, row in enumerate(w_mod2_rows):
                if parity(row & (1 << i)):
                    wv |= 1 << k
            if parity(f & wv) != (f >> i) & 1:
                invariant = False
                break
        if not invariant:
            continue
        shifted = F2QuadraticSpace(n, space.gram,
                                   BitVec(n, space.qbasis.bits ^ f))
        if arf(shifted) == 1:
            count += 1
    return count


def _mod2_rows(matrix: IntMatrix) -> Tuple[int, ...]:
    rows = []
    for row in matrix:
        bits = 0
        for j, x in enumerate(row):
            if x & 1:
                bits |= 1 << j
        rows.append(bits)
    return tuple(rows)


def row_for_involution(w: IntMatrix, datum: RootDatum,
                       label: Optional[str] = None) -> TableRow:
    """Compute a table row from an involution given as an integer matrix."""
    if datum.type_name != "E6":
        raise RealTableError("the table is defined over the E6 datum")
    n = datum.rank
    if matmul(w, w) != identity(n):
        raise RealTableError("matrix is not an involution")
    r = mod2_rank_one_plus(w)
    g = 3 - r
    if g < 0:
        raise RealTableError("mod-2 rank exceeds 3")
    size = 1 << g
    space = mod2_space(datum).space
    bitangents = invariant_odd_refinements(space, _mod2_rows(w))
    lbl = label if label is not None else f"rank{r}"
    n_c, a_c = CARRIED_TOPOLOGY.get(lbl, (0, 0))
    return TableRow(lbl, n_c, a_c, bitangents, size,
                    orbit_count_from_size(size), g, r)


def emit_table(datum: RootDatum,
               classes: Optional[Sequence[WeylInvolutionClass]] = None,
               weyl: Optional[WeylGroup] = None) -> Tuple[TableRow, ...]:
    """Classify the involutions and compute all five rows, asserting the
    expected column values exactly."""
    if classes is None:
        classes = classify_involutions(datum, weyl)
    rows = []
    for cls in classes:
        row = row_for_involution(cls.representative, datum, label=cls.label)
        expected = EXPECTED_COLUMNS[cls.label]
        got = (row.real_bitangents, row.j_mod_2j_size, row.orbit_count)
        if got != expected:
            raise RealTableError(
                f"row {cls.label}: computed {got}, expected {expected}")
        rows.append(row)
    return tuple(rows)


def class_constancy_check(datum: RootDatum, cls: WeylInvolutionClass,
                          weyl: WeylGroup, samples: int = 10,
                          seed: int = 0) -> bool:
    """Row values agree across random members of a conjugacy class."""
    rng = random.Random(seed)
    base = row_for_involution(cls.representative, datum, label=cls.label)
    members = list(cls.members)
    for _ in range(min(samples, len(members))):
        perm = members[rng.randrange(len(members))]
        row = row_for_involution(weyl.matrix(perm), datum, label=cls.label)
        if (row.real_bitangents, row.j_mod_2j_size, row.orbit_count) != \
                (base.real_bitangents, base.j_mod_2j_size, base.orbit_count):
            return False
    return True


def orbit_count_crosscheck(g: int) -> int:
    """Count q^{-1}(0) on a 2g-dimensional Arf-0 space by brute force."""
    if not 0 <= g <= 3:
        raise RealTableError("g outside [0, 3]")
    if g == 0:
        return 1
    space = standard_symplectic_space(g, qbits=0)
    count = sum(1 for v in range(1 << (2 * g)) if space.q(v) == 0)
    if count != orbit_count_from_size(1 << g):
        raise RealTableError("zero count disagrees with the closed formula")
    return count
