from fractions import Fraction

import pytest

from rootcover import lattice
from rootcover.extension import build_extension
from rootcover.liealg import (LieError, ad_nilpotency_degree, build_lie,
                              character_adjoint_check, identify_fixed,
                              killing_cartan_ratio, killing_form,
                              recover_roots_from_ad, theta_eigenspace_dims,
                              verify_R, verify_jacobi)


def _lie(name):
    datum = lattice.root_datum(name)
    coc = build_extension(lattice.mod2_space(datum).space)
    return build_lie(datum, coc)


def test_dimensions():
    assert _lie("A2").dim == 8
    assert _lie("A3").dim == 15
    assert _lie("D4").dim == 28
    assert _lie("E6").dim == 78
    assert _lie("E7").dim == 133


def test_cartan_rules(a2_stack):
    L = a2_stack.lie
    # [h, h'] = 0
    assert L.bracket_basis(0, 1) == ()
    # [h_i, X_gamma] = gamma_i X_gamma
    for ri, coords in enumerate(L.datum.roots):
        xi = L.basis_of_root(ri)
        for i in range(L.n_cartan):
            res = dict(L.bracket_basis(i, xi))
            expected = {xi: coords[i]} if coords[i] else {}
            assert res == expected


def test_opposite_roots_bracket_to_minus_coroot(e6_stack):
    L = e6_stack.lie
    datum = L.datum
    gram = datum.lattice.gram
    for ri in range(len(datum.roots)):
        rj = datum.negation[ri]
        if rj < ri:
            continue
        res = dict(L.bracket_basis(L.basis_of_root(ri), L.basis_of_root(rj)))
        coroot = tuple(sum(g * c for g, c in zip(row, datum.roots[ri]))
                       for row in gram)
        expected = {k: -c for k, c in enumerate(coroot) if c}
        assert res == expected


def test_structure_constants_are_small(e7_stack):
    # root-sum brackets carry only cocycle signs; opposite-root brackets carry
    # pairings against simple roots; the Cartan action carries the root
    # coordinates themselves, bounded by the largest highest-root coefficient
    L = e7_stack.lie
    nc = L.n_cartan
    max_coord = max(abs(x) for c in L.datum.roots for x in c)
    assert max_coord == 4
    for (i, j), entries in L.table.items():
        values = {c for _, c in entries}
        if i < nc:
            assert values <= set(range(-max_coord, max_coord + 1)) - {0}
        elif any(k < nc for k, _ in entries):
            assert values <= {-2, -1, 1, 2}
        else:
            assert values <= {-1, 1}


def test_jacobi_small_types_exhaustive():
    for name in ("A2", "A3", "D4"):
        report = verify_jacobi(_lie(name))
        assert report.ok
        n = report.dim
        assert report.covered_ordered == n ** 3
        assert report.checked_unordered == n * (n - 1) * (n - 2) // 6


def test_jacobi_sampled_mode(e6_stack):
    report = verify_jacobi(e6_stack.lie, sample=5000, seed=7)
    assert report.ok and report.sampled and report.seed == 7
    assert report.checked_unordered == 5000


def test_jacobi_worker_partition_is_deterministic(e6_stack):
    serial = verify_jacobi(e6_stack.lie)
    parallel = verify_jacobi(e6_stack.lie, workers=2)
    assert parallel.ok
    assert parallel.checked_unordered == serial.checked_unordered
    assert parallel.failures == serial.failures == []


def test_cover_lattice_mismatch_is_rejected():
    datum = lattice.root_datum("A2")
    other = build_extension(lattice.mod2_space(lattice.root_datum("A3")).space)
    with pytest.raises(LieError):
        build_lie(datum, other)


def test_theta_traces_and_action(a2_stack, e6_stack, e7_stack):
    assert a2_stack.theta.trace() == -2
    assert e6_stack.theta.trace() == -6
    assert e7_stack.theta.trace() == -7
    # canonical lifts give X_gamma -> X_{-gamma} with sign +1
    L = e6_stack.lie
    for ri in range(len(L.datum.roots)):
        j, s = e6_stack.theta.apply_basis(L, L.basis_of_root(ri))
        assert j == L.basis_of_root(L.datum.negation[ri])
        assert s == 1


def test_theta_eigenspace_dimensions(e6_stack, e7_stack):
    assert theta_eigenspace_dims(e6_stack.lie, e6_stack.theta) == (36, 42)
    assert theta_eigenspace_dims(e7_stack.lie, e7_stack.theta) == (63, 70)


def test_fixed_subalgebra_dimensions(a2_stack, e6_stack, e7_stack):
    assert a2_stack.fixed.dim == 3
    assert e6_stack.fixed.dim == 36
    assert e7_stack.fixed.dim == 63


def test_killing_forms_nondegenerate_with_known_ratio(e7_stack):
    expected_ratio = {"A2": 6, "A3": 8, "D4": 12, "E6": 24}
    for name, ratio in expected_ratio.items():
        L = _lie(name)
        kf = killing_form(L)
        assert kf.nondegenerate
        assert killing_cartan_ratio(L, kf) == Fraction(ratio)
    kf7 = killing_form(e7_stack.lie)
    assert kf7.nondegenerate
    assert killing_cartan_ratio(e7_stack.lie, kf7) == Fraction(36)


def test_killing_grading_block(e6_stack):
    kf = killing_form(e6_stack.lie)
    L = e6_stack.lie
    nc = L.n_cartan
    for ri in range(len(L.datum.roots)):
        for i in range(nc):
            assert kf.matrix[i][nc + ri] == 0
        rj = L.datum.negation[ri]
        for rk in range(len(L.datum.roots)):
            if rk != rj:
                assert kf.matrix[nc + ri][nc + rk] == 0


def test_fixed_killing_nondegenerate(e6_stack, e7_stack):
    assert e6_stack.fixed.killing().nondegenerate
    assert e7_stack.fixed.killing().nondegenerate


def test_r_homomorphism_small(a2_stack):
    report = verify_R(a2_stack.rmap)
    assert report.ok
    assert report.pairs_checked == 3


def test_r_scaling_identity(e6_stack):
    # (2 R(Z_gamma))^2 = -identity, forced by the order-4 lifts
    from rootcover.gaussian import MonoMat, gq
    rmap = e6_stack.rmap
    minus_id = MonoMat.identity(rmap.rep.dim_w).scale(gq(-1))
    for m in rmap.mats:
        doubled = m.scale(gq(2))
        assert doubled * doubled == minus_id
        assert m.trace().is_zero()


def test_identify_fixed_requires_known_shape(a2_stack):
    # dim g = 3 with dim W = 2: the trace-zero route applies (sl2)
    rec = identify_fixed(a2_stack.fixed, a2_stack.rmap)
    assert rec.family == "sl" and rec.w_dim == 2 and rec.fixed_dim == 3


def test_identify_fixed_exceptional(e6_stack, e7_stack):
    rec7 = identify_fixed(e7_stack.fixed, e7_stack.rmap)
    assert rec7.family == "sl" and rec7.image_rank == 63
    rec6 = identify_fixed(e6_stack.fixed, e6_stack.rmap)
    assert rec6.family == "sp"
    assert rec6.invariant_antisymmetric_dim == 1
    assert rec6.invariant_symmetric_dim == 0
    assert not rec6.form_determinant.is_zero()
    form = rec6.form
    n = len(form)
    for i in range(n):
        for j in range(n):
            assert form[i][j] == -form[j][i]


def test_character_adjoint_action(e6_stack):
    L = e6_stack.lie
    ident = character_adjoint_check(L, 0, e6_stack.theta)
    assert ident.ok
    for f in (0b1, 0b101010, 0b111111):
        report = character_adjoint_check(L, f, e6_stack.theta)
        assert report.ok
        assert report.pairs_checked == L.dim * (L.dim - 1) // 2


def test_ad_nilpotency(e6_stack):
    L = e6_stack.lie
    for ri in (0, 5, 33):
        assert ad_nilpotency_degree(L, ri, power=4)


def test_root_recovery_from_cartan_action(e6_stack):
    assert recover_roots_from_ad(e6_stack.lie)


def test_json_export_deterministic(a2_stack):
    import json
    a = json.dumps(a2_stack.lie.to_json_dict(), sort_keys=True)
    b = json.dumps(a2_stack.lie.to_json_dict(), sort_keys=True)
    assert a == b
    d = a2_stack.lie.to_json_dict()
    assert d["dim"] == 8 and d["type"] == "A2" and len(d["basis"]) == 8
