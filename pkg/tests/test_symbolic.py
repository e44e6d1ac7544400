import pytest

from splitoct import invariants as inv
from splitoct import symbolic as sy
from splitoct.scalars import GF, QQ, PolynomialRing, coefficients_in_z_half


def test_identity_names_cover_eleven():
    assert len(sy.IDENTITY_NAMES) == 11


@pytest.mark.parametrize("name", sy.IDENTITY_NAMES)
def test_identities_over_rationals(name):
    assert sy.verify_identity(name, QQ)


@pytest.mark.parametrize("base", [GF(2), GF(5)])
def test_identities_reexpanded_mod_p(base):
    for r in sy.verify_all_identities(base):
        assert r.ok, r


def test_unknown_identity_rejected():
    with pytest.raises(ValueError):
        sy.verify_identity("no-such-identity")


def test_skew_symmetrization_closed_form():
    assert sy.verify_skew_symmetrization()


def test_skew_symmetrization_coefficients_in_z_half():
    poly = sy.skew_symmetrized_trace_polynomial()
    assert coefficients_in_z_half(poly)
    assert not poly.is_zero()


def test_generic_octonions():
    ring = PolynomialRing(QQ)
    z = sy.generic_octonion(ring, 2)
    assert z.coords() == tuple(ring.var(2, j) for j in range(1, 9))
    x = sy.generic_traceless_octonion(ring, 1)
    assert x.trace().is_zero()


def _s4_lower_generators(ring):
    return [(d.name(), inv.descriptor_polynomial(d, ring))
            for d in inv.enumerate_set("S", 4, 3)]


def test_top_trace_not_decomposable():
    ring = PolynomialRing(QQ)
    target = inv.descriptor_polynomial(inv.Descriptor("tr", (1, 2, 3, 4)), ring)
    ok, cert = sy.decomposability_check(target, _s4_lower_generators(ring), QQ)
    assert not ok and cert is None


def test_matrix_pair_trace_not_decomposable():
    ring = PolynomialRing(QQ)
    target = inv.matrix_descriptor_polynomial(inv.MatrixDescriptor("tr", (1, 2)),
                                              ring)
    gens = [(d.name(), inv.matrix_descriptor_polynomial(d, ring))
            for d in inv.matrix_invariants(2) if d.degree == 1]
    ok, _ = sy.decomposability_check(target, gens, QQ)
    assert not ok


def test_square_trace_certificate():
    ring = PolynomialRing(QQ)
    z1 = sy.generic_octonion(ring, 1)
    target = (z1 * z1).trace()
    gens = [("tr(1)", z1.trace()), ("n(1)", z1.norm())]
    ok, cert = sy.decomposability_check(target, gens, QQ)
    assert ok
    assert cert == {("tr(1)", "tr(1)"): 1, ("n(1)",): -2}


def test_certificate_reevaluates_to_target():
    ring = PolynomialRing(QQ)
    target = inv.descriptor_polynomial(inv.Descriptor("tr", (1, 2)), ring)
    sq = target * target
    gens = [("tr(1,2)", target)]
    ok, cert = sy.decomposability_check(sq, gens, QQ)
    assert ok
    total = ring.zero
    by_name = dict(gens)
    for labels, coeff in cert.items():
        prod = ring.one
        for lbl in labels:
            prod = prod * by_name[lbl]
        total = total + ring.constant(QQ(coeff)) * prod
    assert total == sq


def test_decomposability_over_prime_field():
    base = GF(5)
    ring = PolynomialRing(base)
    z1 = sy.generic_octonion(ring, 1)
    target = (z1 * z1).trace()
    gens = [("tr(1)", z1.trace()), ("n(1)", z1.norm())]
    ok, cert = sy.decomposability_check(target, gens, base)
    assert ok
    assert cert[("n(1)",)] == base(-2)


def test_inhomogeneous_generator_rejected():
    ring = PolynomialRing(QQ)
    bad = ring.var(1, 1) + ring.var(1, 1) * ring.var(1, 2)
    with pytest.raises(ValueError):
        sy.decomposability_check(ring.var(1, 1), [("bad", bad)], QQ)
