import random

import numpy as np
import pytest

from splitoct import group as gp
from splitoct import octonion as oc
from splitoct import suite
from splitoct.invariants import generic_octonion
from splitoct.scalars import GF, QQ, PolynomialRing


def rand_oct(field, rng):
    return oc.from_coords(field, [field(rng.randrange(field.p))
                                  for _ in range(8)])


def random_sl3(field, rng):
    """Random product of transvections, so the determinant is one."""
    ts = gp.sl3_transvections(field)
    m = [[field.one if i == j else field.zero for j in range(3)] for i in range(3)]
    from splitoct import linalg
    for _ in range(rng.randint(2, 6)):
        m = linalg.matmul(m, rng.choice(ts))
    return m


def test_from_sl3_identity():
    ident = [[QQ(1), QQ(0), QQ(0)], [QQ(0), QQ(1), QQ(0)], [QQ(0), QQ(0), QQ(1)]]
    assert gp.from_sl3(QQ, ident) == gp.identity_element(QQ)


def test_from_sl3_rejects_nonunimodular():
    with pytest.raises(ValueError):
        gp.from_sl3(QQ, [[QQ(2), QQ(0), QQ(0)],
                         [QQ(0), QQ(1), QQ(0)], [QQ(0), QQ(0), QQ(1)]])


def test_from_sl3_fixes_diagonal_idempotents():
    rng = random.Random(4)
    field = GF(5)
    for _ in range(20):
        g = gp.from_sl3(field, random_sl3(field, rng))
        assert g(oc.unit_e(field, 1)) == oc.unit_e(field, 1)
        assert g(oc.unit_e(field, 2)) == oc.unit_e(field, 2)
        assert gp.is_automorphism(g)


def test_signed_permutation_realizes_remark_image():
    assert suite.check_signed_permutation_image()


def test_delta_generators():
    z = QQ.zero
    assert gp.delta1(QQ, (z, z, z)) == gp.identity_element(QQ)
    rng = random.Random(9)
    field = GF(5)
    for _ in range(20):
        uvec = tuple(field(rng.randrange(5)) for _ in range(3))
        assert gp.is_automorphism(gp.delta1(field, uvec))
        assert gp.is_automorphism(gp.delta2(field, uvec))
    d2 = gp.delta2(field, (field(1), field(2), field(3)))
    for b in oc.basis(field):
        assert d2(b).trace() == b.trace()


def test_delta_generators_symbolic_parameters():
    ring = PolynomialRing(QQ)
    params = (ring.var(9, 2), ring.var(9, 3), ring.var(9, 4))
    assert gp.is_automorphism(gp.delta1(ring, params))
    assert gp.is_automorphism(gp.delta2(ring, params))


def test_delta1_char2_shift_image():
    assert suite.check_shift_image_char2()


def test_hbar():
    h = gp.hbar(QQ)
    assert h(oc.unit_e(QQ, 1)) == oc.unit_e(QQ, 2)
    assert h(oc.unit_u(QQ, 1)) == -oc.unit_v(QQ, 1)
    assert h.compose(h) == gp.identity_element(QQ)
    assert gp.is_automorphism(h)


def test_theta():
    field = GF(5)
    for t in (field(1), field(2), field(3)):
        assert gp.theta(field, (0, 0, 0), t) == gp.identity_element(field)
    t = field(2)
    th = gp.theta(field, (1, -1, 0), t)
    assert th(oc.unit_u(field, 1)) == oc.unit_u(field, 1).scale(t)
    assert th(oc.unit_v(field, 1)) == oc.unit_v(field, 1).scale(field.inv(t))
    assert gp.is_automorphism(th)
    with pytest.raises(ValueError):
        gp.theta(field, (1, -1, 0), field.zero)
    with pytest.raises(ValueError):
        gp.theta(field, (1, 1, 0), t)


def test_apply_basics():
    field = GF(5)
    rng = random.Random(14)
    a = rand_oct(field, rng)
    assert gp.identity_element(field)(a) == a
    with pytest.raises(ValueError):
        gp.identity_element(field)(oc.identity(QQ))


def test_action_preserves_trace_norm_conj():
    field = GF(5)
    rng = random.Random(15)
    gens = ([gp.from_sl3(field, random_sl3(field, rng)) for _ in range(4)]
            + [gp.hbar(field),
               gp.delta1(field, (field(1), field(0), field(3))),
               gp.delta2(field, (field(0), field(2), field(1))),
               gp.theta(field, (1, -1, 0), field(2))])
    for _ in range(500):
        g = rng.choice(gens).compose(rng.choice(gens))
        a = rand_oct(field, rng)
        ga = g(a)
        assert ga.trace() == a.trace()
        assert ga.norm() == a.norm()
        assert g(a.conj()) == ga.conj()
        if a.is_traceless():
            assert ga.is_traceless()


def test_action_is_multiplicative():
    field = GF(5)
    rng = random.Random(16)
    for _ in range(100):
        g = gp.from_sl3(field, random_sl3(field, rng))
        a, b = rand_oct(field, rng), rand_oct(field, rng)
        assert g(a * b) == g(a) * g(b)


def test_generator_inverses():
    field = GF(5)
    rng = random.Random(17)
    ident = gp.identity_element(field)
    gens = [gp.from_sl3(field, random_sl3(field, rng)), gp.hbar(field),
            gp.delta1(field, (field(2), field(1), field(0))),
            gp.theta(field, (2, -1, -1), field(3))]
    for g in gens:
        assert g.compose(g.inverse()) == ident
        assert g.inverse().compose(g) == ident


def test_coordinate_action_formula():
    assert suite.check_coordinate_action()


def test_coordinate_action_fixes_invariants():
    g = gp.delta1(QQ, (QQ(1), QQ(0), QQ(2)))
    ring = PolynomialRing(QQ)
    z1 = generic_octonion(ring, 1)
    for f in (z1.trace(), z1.norm()):
        assert gp.coordinate_action(g, f) == f


def test_all_gf2_generator_parameters_exhaustively():
    field = GF(2)
    gens = gp._generator_elements(field)
    assert len(gens) == 12
    for g in gens:
        assert gp.is_automorphism(g)
        for b in oc.basis(field):
            assert g(b).trace() == b.trace()
            assert g(b).norm() == b.norm()


def test_enumeration_order_and_checks(g2f2_array):
    mats, words = g2f2_array
    assert mats.shape == (12096, 8, 8)
    assert gp.group_order_formula(2) == 12096
    assert gp.automorphism_mask(mats, 2).all()
    assert words[0] == ()
    assert all(len(w) >= 1 for w in words[1:])


def test_enumeration_deterministic(g2f2_array):
    mats, _ = g2f2_array
    gp._enum_cache.clear()
    mats2, _ = gp.enumerate_group_array(2)
    assert np.array_equal(mats, mats2)


def test_enumeration_inverse_closed_sample(g2f2_array):
    mats, _ = g2f2_array
    keys = {m.tobytes() for m in mats}
    rng = random.Random(18)
    for idx in rng.sample(range(len(mats)), 300):
        inv = gp.inverse_mod_q(mats[idx], 2)
        assert inv is not None and inv.tobytes() in keys


def test_enumerated_elements_are_exact(g2f2_elements):
    field = GF(2)
    rng = random.Random(19)
    for g in rng.sample(g2f2_elements, 30):
        assert gp.is_automorphism(g)
        a = rand_oct(field, rng)
        assert g(a).trace() == a.trace()


def test_enumeration_refuses_large_q():
    with pytest.raises(ValueError):
        gp.enumerate_group_array(5)
