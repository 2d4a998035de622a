from fractions import Fraction

import pytest

from tcslat import g2alg


def e(i, n=7):
    return [1 if k == i - 1 else 0 for k in range(n)]


def test_model_form_coefficients():
    phi = g2alg.phi0()
    assert phi[(0, 1, 2)] == 1
    assert phi[(1, 4, 6)] == -1  # the (2,5,7) term
    assert phi[(0, 3, 4)] == 1
    assert len(phi.coeffs) == 7
    psi = g2alg.psi0()
    assert psi[(3, 4, 5, 6)] == 1
    assert psi[(0, 1, 3, 6)] == -1
    assert len(psi.coeffs) == 7


def test_cross_examples():
    assert list(g2alg.cross(e(1), e(2))) == [0, 0, 1, 0, 0, 0, 0]
    assert list(g2alg.cross(e(2), e(5))) == [0, 0, 0, 0, 0, 0, -1]
    assert list(g2alg.cross(e(1), e(1))) == [0] * 7


def test_cross_is_bilinear_alternating_orthogonal():
    import random

    rng = random.Random(2)
    g = g2alg.identity_metric()
    for _ in range(20):
        u = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(7)]
        v = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(7)]
        w = g2alg.cross(u, v)
        assert g.pair(w, u) == 0
        assert g.pair(w, v) == 0
        neg = g2alg.cross(v, u)
        assert all(a == -b for a, b in zip(w, neg))


def test_chi_examples():
    assert list(g2alg.chi(e(5), e(6), e(7))) == [0, 0, 0, 2, 0, 0, 0]
    assert list(g2alg.chi(e(1), e(2), e(3))) == [0] * 7
    assert list(g2alg.chi(e(1), e(1), e(2))) == [0] * 7


def test_metric_from_phi0_is_identity():
    res = g2alg.metric_from_3form(g2alg.phi0())
    assert isinstance(res, g2alg.MetricFromForm)
    assert res.exact
    assert res.vol == 1
    assert res.positive
    ident = g2alg.identity_metric()
    assert all(
        res.g.matrix[i][j] == ident.matrix[i][j] for i in range(7) for j in range(7)
    )


def test_metric_scaling_law():
    res = g2alg.metric_from_3form(8 * g2alg.phi0())
    assert res.exact
    assert res.vol == 128  # 8^(7/3)
    for i in range(7):
        assert res.g.matrix[i][i] == 4
    # general rational scaling c^3: g = c^2 id
    res27 = g2alg.metric_from_3form(27 * g2alg.phi0())
    assert res27.exact
    assert all(res27.g.matrix[i][i] == 9 for i in range(7))


def test_metric_from_flipped_form_has_split_signature():
    phi = g2alg.phi0()
    flipped = g2alg.Form(3, 7)
    for idx, c in phi.coeffs.items():
        flipped.coeffs[idx] = -c if idx == (1, 3, 5) else c  # negate the dx246 term
    res = g2alg.metric_from_3form(flipped)
    assert not isinstance(res, g2alg.DegenerateForm)
    assert res.g.signature() == (3, 4)
    assert not res.positive


def test_metric_degenerate_form():
    f = g2alg.form_from_terms(3, 7, [(1, "123")])
    assert isinstance(g2alg.metric_from_3form(f), g2alg.DegenerateForm)


def test_inexact_ninth_root_is_tainted():
    res = g2alg.metric_from_3form(2 * g2alg.phi0())
    assert not res.exact
    assert isinstance(res.vol, float)


def test_associative_planes():
    assert g2alg.is_associative(e(1), e(2), e(3))
    assert not g2alg.is_associative(e(1), e(4), e(6))
    assert g2alg.is_coassociative(e(4), e(5), e(6), e(7))
    with pytest.raises(ValueError):
        g2alg.is_associative(e(1), e(1), e(2))


def test_associative_iff_chi_vanishes():
    # on the calibrated plane chi vanishes on every triple of basis vectors
    for triple, expect in ((('1', '2', '3'), True), (('1', '4', '6'), False)):
        u, v, w = (e(int(t)) for t in triple)
        vanish = all(x == 0 for x in g2alg.chi(u, v, w))
        assert vanish == expect


def test_special_lagrangian():
    plane = [e(2), e(4), e(6)]
    assert g2alg.is_special_lagrangian(plane)
    assert g2alg.is_associative(*plane)
    # a complex line plus a real direction: omega restricts nontrivially
    assert not g2alg.is_special_lagrangian([e(2), e(3), e(4)])


def test_special_lagrangian_rotated_phase():
    # rotating by a rational point on the circle: phase (3/5, 4/5)
    c, s = Fraction(3, 5), Fraction(4, 5)
    # rotate the z1 = x2 + i x3 coordinate plane by the phase inside the plane
    v1 = [0, c, s, 0, 0, 0, 0]
    plane = [v1, e(4), e(6)]
    # the rotation multiplies Omega's restriction by e^{i theta}: compensate
    assert g2alg.is_special_lagrangian(plane, phase=(c, -s))
    assert not g2alg.is_special_lagrangian(plane)


def test_su3_structure_standard():
    s = g2alg.su3_from_unit_vector(g2alg.phi0(), e(1))
    omega, re_om, im_om = g2alg.standard_su3_forms()
    assert s.omega == omega
    assert s.re_omega == re_om
    assert s.im_omega == im_om


def test_su3_structure_other_unit_vector():
    s = g2alg.su3_from_unit_vector(g2alg.phi0(), e(2))
    assert not s.omega.is_zero()
    with pytest.raises(ValueError):
        g2alg.su3_from_unit_vector(g2alg.phi0(), [2, 0, 0, 0, 0, 0, 0])


def test_identity_suite():
    report = g2alg.verify_identity_suite(samples=25, seed=4)
    assert report["triples_checked"] == 343 + 25
    assert report["hk_square"] == 2


def test_identity_suite_detects_corruption():
    phi = g2alg.phi0()
    bad = g2alg.Form(3, 7)
    for idx, c in phi.coeffs.items():
        bad.coeffs[idx] = -c if idx == (0, 1, 2) else c

    g = g2alg.identity_metric()
    psi = g2alg.psi0()
    # witness triple mixing the corrupted term with an intact one
    u = e(1)
    v = [0, 1, 0, 1, 0, 0, 0]
    w = [0, 0, 1, 0, 1, 0, 0]
    ch = g2alg.chi(u, v, w, psi, g)
    good = phi.evaluate(u, v, w) ** 2 + Fraction(1, 4) * g.pair(ch, ch)
    assert good == g2alg.gram_determinant([u, v, w], g)
    lhs = bad.evaluate(u, v, w) ** 2 + Fraction(1, 4) * g.pair(ch, ch)
    assert lhs != g2alg.gram_determinant([u, v, w], g)


def test_wedge_and_contract_consistency():
    phi = g2alg.phi0()
    psi = g2alg.psi0()
    # phi ^ psi is 7 vol for the model pair
    assert phi.wedge(psi).top_coefficient() == 7
