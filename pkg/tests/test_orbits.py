import random

import pytest

from splitoct import group as gp
from splitoct import linalg
from splitoct import octonion as oc
from splitoct import orbits as ob
from splitoct.invariants import enumerate_set, eval_descriptor
from splitoct.scalars import GF, QQ, PolynomialRing


def rand_oct(field, rng):
    return oc.from_coords(field, [field(rng.randrange(field.p))
                                  for _ in range(8)])


def test_rank_examples():
    assert ob.rank(oc.basis(QQ)) == 8
    f5 = GF(5)
    u1 = oc.unit_u(f5, 1)
    assert ob.rank((u1, u1.scale(f5(2)))) == 1
    assert ob.rank((oc.unit_u(QQ, 1), oc.unit_v(QQ, 2), oc.unit_v(QQ, 3))) == 3


def test_algebra_closure_examples():
    e1, e2 = oc.unit_e(QQ, 1), oc.unit_e(QQ, 2)
    u1 = oc.unit_u(QQ, 1)
    cl = ob.algebra_closure((e1, e2 + u1))
    assert len(cl) == 3
    span = [list(a.basis_coords()) for a in cl]
    for member in (e1, e2, u1):
        assert linalg.in_span(span, list(member.basis_coords()), QQ) is not None
    assert ob.algebra_closure((oc.identity(QQ),)) == [oc.identity(QQ)]
    cl3 = ob.algebra_closure((u1, oc.unit_v(QQ, 2), oc.unit_v(QQ, 3)))
    assert len(cl3) == 3


def test_gl_right_action_identity_and_errors():
    f5 = GF(5)
    rng = random.Random(61)
    tup = tuple(rand_oct(f5, rng) for _ in range(3))
    ident = [[f5.one if i == j else f5.zero for j in range(3)] for i in range(3)]
    assert ob.gl_right_action(tup, ident) == tup
    singular = [[f5.one, f5.one, f5.zero], [f5.one, f5.one, f5.zero],
                [f5.zero, f5.zero, f5.one]]
    with pytest.raises(ValueError):
        ob.gl_right_action(tup, singular)


def _random_invertible(field, n, rng):
    while True:
        m = [[field(rng.randrange(field.p)) for _ in range(n)] for _ in range(n)]
        if linalg.rank(m, field) == n:
            return m


def test_gl_action_commutes_with_group(g2f2_elements):
    field = GF(2)
    rng = random.Random(67)
    for _ in range(200):
        g = rng.choice(g2f2_elements)
        tup = tuple(rand_oct(field, rng) for _ in range(3))
        a = _random_invertible(field, 3, rng)
        left = gp.apply_tuple(g, ob.gl_right_action(tup, a))
        right = ob.gl_right_action(gp.apply_tuple(g, tup), a)
        assert left == right


def test_gl_action_preserves_nonseparation(g2f2_elements):
    # the separated-or-not verdict is stable under a simultaneous right action
    field = GF(2)
    rng = random.Random(71)
    for _ in range(100):
        g = rng.choice(g2f2_elements)
        tup = tuple(rand_oct(field, rng) for _ in range(2))
        other = gp.apply_tuple(g, tup) if rng.random() < 0.5 else \
            tuple(rand_oct(field, rng) for _ in range(2))
        a = _random_invertible(field, 2, rng)
        before = ob.separate(tup, other, "S", 4).separated
        after = ob.separate(ob.gl_right_action(tup, a),
                            ob.gl_right_action(other, a), "S", 4).separated
        assert before == after


def test_separation_pair_rank2():
    z = oc.zero(QQ)
    r = ob.separate((z, z), (oc.unit_u(QQ, 1), oc.unit_v(QQ, 1)), "S0", 2)
    assert r.separated and r.witness.name() == "tr(1,2)"
    assert r.values == (0, 1)


def test_separation_pair_rank3():
    z = oc.zero(QQ)
    vs = tuple(oc.unit_v(QQ, i) for i in (1, 2, 3))
    assert not ob.separate((z, z, z), vs, "S0", 2).separated
    r = ob.separate((z, z, z), vs, "S0", 3)
    assert r.separated and r.witness.name() == "tr(1,2,3)"


def test_separation_pair_degree4():
    u1, u2 = oc.unit_u(QQ, 1), oc.unit_u(QQ, 2)
    v1, v2 = oc.unit_v(QQ, 1), oc.unit_v(QQ, 2)
    c = oc.unit_e(QQ, 1) + u2 - v2 - oc.unit_e(QQ, 2)
    a4 = (u1, v1, c, u2)
    b4 = (u1, v1, c, -v2)
    assert not ob.separate(a4, b4, "S0", 3).separated
    r = ob.separate(a4, b4, "S0", 4)
    assert r.separated and r.witness.name() == "tr(1,2,3,4)"
    assert r.values == (0, -1)


def test_separate_validations():
    with pytest.raises(ValueError):
        ob.separate((oc.zero(QQ),), (oc.zero(QQ), oc.zero(QQ)))
    with pytest.raises(ValueError):
        ob.separate((oc.zero(QQ),), (oc.zero(GF(2)),))


def test_limit_examples():
    u1 = oc.unit_u(QQ, 1)
    r = ob.limit((1, -1, 0), (u1,))
    assert r.exists and r.value == (oc.zero(QQ),)
    r2 = ob.limit((1, -1, 0), (oc.identity(QQ), u1))
    assert r2.exists and r2.value == (oc.identity(QQ), oc.zero(QQ))
    assert not ob.limit((1, -1, 0), (oc.unit_v(QQ, 1),)).exists
    with pytest.raises(ValueError):
        ob.limit((1, 1, 0), (u1,))


def test_nonclosedness_table_values():
    expected = {
        "(u1)": (oc.zero(QQ),),
        "(1,u1)": (oc.identity(QQ), oc.zero(QQ)),
        "(u1,v2)": (oc.zero(QQ), oc.zero(QQ)),
        "(e1,u1)": (oc.unit_e(QQ, 1), oc.zero(QQ)),
        "(e1,v1)": (oc.unit_e(QQ, 1), oc.zero(QQ)),
        "(1,u1,v2)": (oc.identity(QQ), oc.zero(QQ), oc.zero(QQ)),
        "(e1,e2,u1)": (oc.unit_e(QQ, 1), oc.unit_e(QQ, 2), oc.zero(QQ)),
        "(e1,u1,v2)": (oc.unit_e(QQ, 1), oc.zero(QQ), oc.zero(QQ)),
        "(u1,v2,v3)": (oc.zero(QQ), oc.zero(QQ), oc.unit_v(QQ, 3)),
    }
    rows = ob.nonclosedness_witnesses(QQ)
    assert len(rows) == 9
    for name, _tup, _lam, res, before, after in rows:
        assert res.exists
        assert res.value == expected[name]
        assert after < before


def test_limit_agrees_with_curve_constant_term():
    # the invariant values along the curve are polynomial in t with
    # constant term the value at the limit, for each of the nine tuples
    field = GF(2)
    ring = PolynomialRing(field)
    t = ring.var(1, 1)
    for _name, tup, lam, _res, _b, _a in ob.nonclosedness_witnesses(field):
        curve = ob.theta_curve(lam, tup, t)
        lim = ob.limit(lam, tup).value
        for desc in enumerate_set("S", len(tup), 8):
            poly = eval_descriptor(desc, curve)
            const = poly.terms.get((), field.zero)
            assert const == eval_descriptor(desc, lim)


def test_theta_curve_matches_group_action():
    # at any invertible parameter value the curve is the diagonal action
    f5 = GF(5)
    lam = (1, -1, 0)
    tup = (oc.unit_u(f5, 1), oc.unit_e(f5, 1) + oc.unit_v(f5, 2))
    for tval in (f5(1), f5(2), f5(3), f5(4)):
        th = gp.theta(f5, lam, tval)
        assert ob.theta_curve(lam, tup, tval) == gp.apply_tuple(th, tup)


def test_gram_matrix():
    f2 = GF(2)
    g = ob.gram_matrix(oc.basis(f2))
    assert linalg.rank(g, f2) == 8
    assert linalg.det(ob.gram_matrix(oc.basis(QQ)), QQ) == -1
    z = oc.zero(QQ)
    assert ob.gram_matrix((z, z)) == [[0, 0], [0, 0]]
    rng = random.Random(79)
    tup = tuple(rand_oct(GF(5), rng) for _ in range(4))
    m = ob.gram_matrix(tup)
    for i in range(4):
        for j in range(4):
            assert m[i][j] == m[j][i]


def test_encode_tuple_gf2():
    f2 = GF(2)
    assert ob.encode_tuple_gf2((oc.unit_e(f2, 1),)) == (1,)
    assert ob.encode_tuple_gf2((oc.unit_e(f2, 2),)) == (128,)
    assert ob.encode_tuple_gf2((oc.unit_u(f2, 1),)) == (2,)


def test_oracle_examples(g2f2_array):
    f2 = GF(2)
    e1, e2 = oc.unit_e(f2, 1), oc.unit_e(f2, 2)
    found, witness = ob.orbit_equal_oracle((e1,), (e2,))
    assert found and witness(e1) == e2
    assert gp.hbar(f2)(e1) == e2  # the closed form witness
    found2, w2 = ob.orbit_equal_oracle((e1,), (oc.identity(f2),))
    assert not found2 and w2 is None
    with pytest.raises(ValueError):
        ob.orbit_equal_oracle((oc.unit_e(QQ, 1),), (oc.unit_e(QQ, 2),))


def test_oracle_consistent_with_separation(g2f2_elements):
    field = GF(2)
    rng = random.Random(83)
    for _ in range(25):
        tup = tuple(rand_oct(field, rng) for _ in range(2))
        g = rng.choice(g2f2_elements)
        gtup = gp.apply_tuple(g, tup)
        found, _ = ob.orbit_equal_oracle(tup, gtup)
        assert found
        assert not ob.separate(tup, gtup, "S", 8).separated


def test_fingerprint_examples():
    f2 = GF(2)
    f_one = ob.subalgebra_fingerprint((oc.identity(f2),))
    f_e1 = ob.subalgebra_fingerprint((oc.unit_e(f2, 1),))
    assert f_one != f_e1
    assert f_one.norms == (f2.one,) and f_e1.norms == (f2.zero,)
    # u1 + v1 squares to the unit, outside its own span
    with pytest.raises(ValueError):
        ob.subalgebra_fingerprint((oc.unit_u(f2, 1) + oc.unit_v(f2, 1),))


def _subalgebra_bases(field):
    e1, e2 = oc.unit_e(field, 1), oc.unit_e(field, 2)
    u1 = oc.unit_u(field, 1)
    v1, v2, v3 = (oc.unit_v(field, i) for i in (1, 2, 3))
    one = oc.identity(field)
    return {
        1: [(one,), (u1,), (e1,)],
        2: [(one, u1), (u1, v2), (e1, u1), (e1, v1), (e1, e2)],
        3: [(one, u1, v2), (e1, e2, u1), (e1, u1, v2), (u1, v2, v3)],
    }


def test_low_dimensional_bases_close_and_differ(g2f2_array):
    field = GF(2)
    for dim, bases in _subalgebra_bases(field).items():
        prints = []
        for basis_tup in bases:
            fp = ob.subalgebra_fingerprint(basis_tup)
            assert fp.dimension == dim
            prints.append(fp)
        # pairwise inequivalent over GF(2), as basis tuples
        for i in range(len(bases)):
            for j in range(i + 1, len(bases)):
                found, _ = ob.orbit_equal_oracle(bases[i], bases[j])
                assert not found


def test_fingerprint_invariant_under_group(g2f2_elements):
    field = GF(2)
    rng = random.Random(89)
    for _dim, bases in _subalgebra_bases(field).items():
        for basis_tup in bases:
            fp = ob.subalgebra_fingerprint(basis_tup)
            for _ in range(5):
                g = rng.choice(g2f2_elements)
                assert ob.subalgebra_fingerprint(gp.apply_tuple(g, basis_tup)) == fp


def test_closed_d2_class_has_no_rank_dropping_limit():
    e1, e2 = oc.unit_e(QQ, 1), oc.unit_e(QQ, 2)
    for lam in ((1, -1, 0), (-1, 1, 0), (0, 1, -1), (2, -1, -1)):
        r = ob.limit(lam, (e1, e2))
        assert r.exists and r.value == (e1, e2)


def test_rebuild_automorphism(g2f2_elements):
    field = GF(2)
    rng = random.Random(97)
    basis = oc.basis(field)
    for _ in range(20):
        g = rng.choice(g2f2_elements)
        image = gp.apply_tuple(g, basis)
        f = ob.rebuild_automorphism(basis, image)
        assert f.rows == g.rows
        assert gp.is_automorphism(f)
