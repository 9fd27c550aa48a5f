import random

import pytest

from rootcover.gaussian import ONE, ZERO, dense_identity, dense_mul, gq
from rootcover.grouplift import (GroupLiftError, anticommutation_model_holds,
                                 cover_isomorphic_to_image, dense_bracket,
                                 is_antisymmetric, is_special_orthogonal,
                                 pgl2_to_so3, phi_of_root,
                                 sl2_to_so3_derivative, verify_comm_relation)


def _mat2(a, b, c, d):
    return ((gq(a), gq(b)), (gq(c), gq(d)))


def test_identity_maps_to_identity():
    assert pgl2_to_so3(_mat2(1, 0, 0, 1)) == dense_identity(3)


def test_quarter_turn_maps_to_diagonal_flip():
    got = pgl2_to_so3(_mat2(0, 1, -1, 0))
    expected = ((-ONE, ZERO, ZERO), (ZERO, ONE, ZERO), (ZERO, ZERO, -ONE))
    assert got == expected


def test_rejects_singular_input():
    with pytest.raises(GroupLiftError):
        pgl2_to_so3(_mat2(1, 2, 2, 4))


def test_output_is_special_orthogonal_and_scale_invariant():
    rng = random.Random(3)
    for _ in range(25):
        m = _mat2(*(rng.randint(-5, 5) for _ in range(4)))
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        if det.is_zero():
            continue
        img = pgl2_to_so3(m)
        assert is_special_orthogonal(img)
        scaled = tuple(tuple(gq(3) * x for x in row) for row in m)
        assert pgl2_to_so3(scaled) == img


def test_homomorphism_on_random_pairs():
    rng = random.Random(5)
    checked = 0
    while checked < 100:
        m1 = _mat2(*(rng.randint(-5, 5) for _ in range(4)))
        m2 = _mat2(*(rng.randint(-5, 5) for _ in range(4)))
        d1 = m1[0][0] * m1[1][1] - m1[0][1] * m1[1][0]
        d2 = m2[0][0] * m2[1][1] - m2[0][1] * m2[1][0]
        if d1.is_zero() or d2.is_zero():
            continue
        assert pgl2_to_so3(dense_mul(m1, m2)) == \
            dense_mul(pgl2_to_so3(m1), pgl2_to_so3(m2))
        checked += 1


def test_derivative_zero_and_diagonal():
    zero = _mat2(0, 0, 0, 0)
    assert sl2_to_so3_derivative(zero) == ((ZERO,) * 3,) * 3
    got = sl2_to_so3_derivative(_mat2(1, 0, 0, -1))
    two_i = gq(0, 2)
    assert got == ((ZERO, ZERO, ZERO), (ZERO, ZERO, two_i),
                   (ZERO, -two_i, ZERO))
    assert is_antisymmetric(got)


def test_derivative_rejects_nonzero_trace():
    with pytest.raises(GroupLiftError):
        sl2_to_so3_derivative(_mat2(1, 0, 0, 1))


def test_derivative_respects_brackets():
    rng = random.Random(9)
    checked = 0
    while checked < 50:
        a = rng.randint(-4, 4)
        b = rng.randint(-4, 4)
        c = rng.randint(-4, 4)
        x = _mat2(a, b, c, -a)
        a2, b2, c2 = (rng.randint(-4, 4) for _ in range(3))
        y = _mat2(a2, b2, c2, -a2)
        lhs = sl2_to_so3_derivative(dense_bracket(x, y))
        rhs = dense_bracket(sl2_to_so3_derivative(x), sl2_to_so3_derivative(y))
        assert lhs == rhs
        checked += 1


def test_anticommutation_model():
    assert anticommutation_model_holds()


def test_order_four_certificates(e6_stack, e7_stack):
    for stack in (e6_stack, e7_stack):
        for i in range(len(stack.datum.roots)):
            cert = phi_of_root(stack.datum, stack.rep, i, stack.rmap)
            assert cert.ok
            assert cert.square_is_minus_id
            assert cert.equals_two_r


def test_comm_relation_simple_and_all(e6_stack):
    simple = verify_comm_relation(e6_stack.rep, e6_stack.datum)
    assert simple.ok and simple.pairs_checked == 15
    every = verify_comm_relation(e6_stack.rep, e6_stack.datum, all_pairs=True)
    assert every.ok and every.pairs_checked == 72 * 71 // 2


def test_orthogonal_pairs_commute(e6_stack):
    datum = e6_stack.datum
    rep = e6_stack.rep
    table = datum.pairing_table()
    found = 0
    for i in range(len(datum.roots)):
        for j in range(i + 1, len(datum.roots)):
            if table[i][j] == 0:
                mi = rep.rho_bits(datum.root_class_bits(i))
                mj = rep.rho_bits(datum.root_class_bits(j))
                assert mi * mj == mj * mi
                found += 1
                if found >= 40:
                    return


def test_adjacent_simple_pairs_anticommute(e6_stack):
    datum = e6_stack.datum
    rep = e6_stack.rep
    table = datum.pairing_table()
    for a in datum.simple:
        for b in datum.simple:
            if table[a][b] == -1:
                ma = rep.rho_bits(datum.root_class_bits(a))
                mb = rep.rho_bits(datum.root_class_bits(b))
                assert ma * mb == -(mb * ma)


def test_cover_realized_faithfully_in_matrices(e6_stack, e7_stack):
    assert cover_isomorphic_to_image(e6_stack.rep)
    assert cover_isomorphic_to_image(e7_stack.rep)
