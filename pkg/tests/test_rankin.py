"""Normalized torus-sum series: components, local factors, functional
equation mechanics, and the rank-one zeta endpoints."""

from __future__ import annotations

from fractions import Fraction

import pytest

from paramodular.characters import schur
from paramodular.rankin import (
    EpsilonData,
    EvaluationMode,
    SymbolicMode,
    XiResult,
    default_trunc,
    epsilon_poly,
    fe_check,
    hecke_act,
    kernel_check,
    p_phi_pi,
    p_wedge2,
    psi_component,
    psi_series,
    specialize_last,
    unit_series,
    xi,
    zeta_series,
)
from paramodular.rings import SymLaurent, TruncSeries, VLaurent, evaluate
from paramodular.whittaker import (
    WhittakerData,
    eta_data,
    spherical_so_data,
    theta_data,
    theta_prime_data,
)

ONE = VLaurent.one()
Q = VLaurent.q_power(1)
BETA2 = (Fraction(2), Fraction(3, 2))


def delta(lam, n=2):
    return WhittakerData(n, {tuple(lam): ONE})


def test_symbolic_mode_helpers():
    sym = SymbolicMode(2)
    assert sym.one() == SymLaurent.one(2)
    assert sym.x_monomial((1, 0)) == SymLaurent.variable(2, 0)
    assert sym.schur((1, 1)) == SymLaurent.monomial(2, (1, 1))
    assert sym.from_vlaurent(Q) == SymLaurent.constant(2, Q)


def test_evaluation_mode_helpers():
    ev = EvaluationMode(2, (Fraction(2), Fraction(3)), Fraction(1, 2))
    assert ev.x_monomial((1, 2)) == 18
    assert ev.from_vlaurent(Q) == Fraction(1, 4)
    assert ev.schur((2, 1)) == evaluate(
        schur((2, 1), 2), (Fraction(2), Fraction(3)), Fraction(1, 2)
    )
    zero_point = EvaluationMode(1, (Fraction(0),), Fraction(2))
    assert zero_point.x_monomial((2,)) == 0
    with pytest.raises(ZeroDivisionError):
        zero_point.x_monomial((-1,))
    with pytest.raises(ValueError):
        EvaluationMode(1, (Fraction(1),), Fraction(0))
    with pytest.raises(ValueError):
        EvaluationMode(2, (Fraction(1),), Fraction(2))


def test_psi_component_point_masses():
    sym2 = SymbolicMode(2)
    sym1 = SymbolicMode(1)
    d10 = delta((1, 0))
    # weight exponent: GL modulus 1, plus trace * (2n - r - 1) = 1
    assert psi_component(d10, 2, 2, 1, sym2) == SymLaurent(
        2, {(1, 0): VLaurent.v_power(2), (0, 1): VLaurent.v_power(2)}
    )
    assert psi_component(d10, 2, 2, 0, sym2) == SymLaurent.zero(2)
    assert psi_component(d10, 2, 2, -1, sym2) == SymLaurent.zero(2)
    # r = 1 slice keeps (1,0) with weight 0 + 1*(4 - 1 - 1) = 2
    assert psi_component(d10, 2, 1, 1, sym1) == SymLaurent.monomial(
        1, (1,), VLaurent.v_power(2)
    )
    d11 = delta((1, 1))
    # nonzero tail entry: invisible on the r = 1 slice
    assert psi_component(d11, 2, 1, 2, sym1) == SymLaurent.zero(1)
    assert psi_component(d11, 2, 2, 2, sym2) == SymLaurent.monomial(
        2, (1, 1), VLaurent.v_power(2)
    )


def test_psi_component_validation():
    with pytest.raises(ValueError):
        psi_component(delta((1, 0)), 2, 3, 1, SymbolicMode(3))
    with pytest.raises(ValueError):
        psi_component(delta((1, 0)), 2, 2, 1, SymbolicMode(1))
    with pytest.raises(ValueError):
        psi_component(delta((1,), n=1), 2, 1, 1, SymbolicMode(1))


def test_psi_components_are_homogeneous():
    d = spherical_so_data(BETA2, 2, 4)
    sym = SymbolicMode(2)
    for ell in range(5):
        c = psi_component(d, 2, 2, ell, sym)
        assert c.is_homogeneous(ell), ell


def test_psi_series_collects_components():
    d = spherical_so_data(BETA2, 2, 3)
    sym = SymbolicMode(2)
    s = psi_series(d, 2, 2, 3, sym)
    assert s.trunc == 3
    for ell in range(4):
        assert s.get(ell) == psi_component(d, 2, 2, ell, sym)


def test_p_phi_pi_rank_one_expansion():
    p = p_phi_pi((Fraction(2),), 1, 1, SymbolicMode(1))
    assert p.trunc is None
    assert p.support_max() == 2
    assert p.get(0) == SymLaurent.one(1)
    assert p.get(1) == SymLaurent.monomial(1, (1,), VLaurent({-1: Fraction(-5, 2)}))
    assert p.get(2) == SymLaurent.monomial(1, (2,), VLaurent.v_power(-2))


def test_p_phi_pi_degree_and_validation():
    p = p_phi_pi(BETA2, 2, 2, SymbolicMode(2))
    assert p.support_max() == 8  # 2 * n * r
    assert p.get(0) == SymLaurent.one(2)
    with pytest.raises(ValueError):
        p_phi_pi((Fraction(2),), 2, 2, SymbolicMode(2))
    with pytest.raises(ValueError):
        p_phi_pi((Fraction(2), Fraction(0)), 2, 2, SymbolicMode(2))
    with pytest.raises(ValueError):
        p_phi_pi(BETA2, 2, 2, SymbolicMode(1))


def test_p_wedge2_small_ranks():
    assert p_wedge2(1, SymbolicMode(1)).coeffs == {0: SymLaurent.one(1)}
    p2 = p_wedge2(2, SymbolicMode(2))
    assert p2.coeffs == {
        0: SymLaurent.one(2),
        2: SymLaurent.monomial(2, (1, 1), -VLaurent.v_power(-2)),
    }
    p3 = p_wedge2(3, SymbolicMode(3))
    assert p3.support_max() == 6
    assert p3.get(6) == SymLaurent.monomial(3, (2, 2, 2), -VLaurent.v_power(-6))


def test_default_trunc_formula():
    d = delta((2, 1))
    assert default_trunc(d, 2, 2, 4) == 3 + 8 + 2 + 4
    assert default_trunc(WhittakerData(2), 2, 1, 2) == 0 + 4 + 0 + 2


def test_unramified_rank_one_series_is_one():
    beta = (Fraction(7, 3),)
    d = spherical_so_data(beta, 1, 10)
    res = xi(d, 1, 1, beta=beta, trunc=10)
    assert res.poly == SymLaurent.one(1)
    assert res.stabilized
    assert res.detected_degree == 0
    ev = EvaluationMode(1, (Fraction(5, 7),), Fraction(3, 2))
    res_ev = xi(d, 1, 1, beta=beta, mode=ev, trunc=10)
    assert res_ev.poly == Fraction(1)
    assert res_ev.stabilized


def test_unramified_rank_two_series_is_one():
    d = spherical_so_data(BETA2, 2, 10)
    res = xi(d, 2, 2, beta=BETA2, trunc=10)
    assert res.poly == SymLaurent.one(2)
    assert res.stabilized
    assert res.detected_degree == 0


def test_raised_data_normalized_series():
    d = spherical_so_data(BETA2, 2, 12)
    res_t = xi(theta_data(d), 2, 2, beta=BETA2, trunc=10, level=1)
    e1 = SymLaurent(2, {(1, 0): Q, (0, 1): Q})
    assert res_t.poly == e1
    assert res_t.stabilized and res_t.detected_degree == 1 and res_t.m == 1
    res_tp = xi(theta_prime_data(d), 2, 2, beta=BETA2, trunc=10, level=1)
    assert res_tp.poly == SymLaurent(2, {(0, 0): Q, (1, 1): Q})
    assert res_tp.detected_degree == 2
    res_e = xi(eta_data(d), 2, 2, beta=BETA2, trunc=10, level=2)
    assert res_e.poly == SymLaurent.monomial(2, (1, 1), Q)
    assert res_e.detected_degree == 2


def test_xi_without_numerator_never_stabilizes():
    res = xi(delta((0, 0)), 2, 2, trunc=8, window=4)
    assert not res.stabilized
    assert res.detected_degree == 8
    expected = SymLaurent.zero(2)
    for k in range(5):
        expected = expected + SymLaurent.monomial(2, (k, k), VLaurent.v_power(-2 * k))
    assert res.poly == expected


def test_xi_argument_validation():
    with pytest.raises(ValueError):
        xi(delta((0, 0)), 2, 2, trunc=8, window=1)
    with pytest.raises(ValueError):
        xi(delta((0, 0)), 2, 2, trunc=2, window=4)


def test_epsilon_poly_monomials():
    same_level = epsilon_poly(EpsilonData(2, -1), 2, 3)
    assert same_level.coeffs == {0: SymLaurent.constant(3, Fraction(-1))}
    below = epsilon_poly(EpsilonData(0, 1), 1, 2)
    assert below.nmin == -2
    assert below.coeffs == {-2: SymLaurent.monomial(2, (-1, -1))}
    odd_sign = epsilon_poly(EpsilonData(1, -1), 1, 1)
    assert odd_sign.coeffs == {0: SymLaurent.constant(1, Fraction(-1))}


def mk_result(poly, r, n=2):
    return XiResult(n, r, 0, poly, 0, True, unit_series(SymbolicMode(r)))


def test_fe_check_manual_cases():
    x = SymLaurent.variable(1, 0)
    assert not fe_check(mk_result(x, 1), mk_result(x, 1), EpsilonData(0, 1), 0)
    # conductor 0 at level 2 supplies the compensating X^{-2}
    assert fe_check(mk_result(x, 1), mk_result(x, 1), EpsilonData(0, 1), 2)
    minus_one = SymLaurent.constant(1, Fraction(-1))
    assert fe_check(
        mk_result(SymLaurent.one(1), 1), mk_result(minus_one, 1), EpsilonData(0, -1), 0
    )
    with pytest.raises(ValueError):
        fe_check(mk_result(x, 1), mk_result(SymLaurent.one(2), 2), EpsilonData(0, 1), 0)
    with pytest.raises(ValueError):
        fe_check(
            mk_result(Fraction(1), 1), mk_result(Fraction(1), 1), EpsilonData(0, 1), 0
        )


def test_fe_check_spherical_rank_one():
    beta = (Fraction(3, 2),)
    d = spherical_so_data(beta, 1, 8)
    res = xi(d, 1, 1, beta=beta, trunc=8)
    assert fe_check(res, res, EpsilonData(0, 1), 0)


def test_specialize_last_towers_down():
    d = spherical_so_data(BETA2, 2, 10)
    res22 = xi(d, 2, 2, beta=BETA2, trunc=10)
    dropped = specialize_last(res22)
    assert dropped.r == 1
    assert dropped.poly == SymLaurent.one(1)
    assert dropped.stabilized
    res21 = xi(d, 2, 1, beta=BETA2, trunc=10, mode=SymbolicMode(1))
    assert dropped.series.coefficients_equal(res21.series, 10)
    ev = EvaluationMode(2, (Fraction(1), Fraction(2)), Fraction(2))
    res_ev = xi(d, 2, 2, beta=BETA2, mode=ev, trunc=8)
    with pytest.raises(ValueError):
        specialize_last(res_ev)


def test_specialize_last_kills_positive_last_exponents():
    poly = SymLaurent(2, {(1, 0): Q, (1, 1): ONE})
    series = TruncSeries({1: poly}, 6, SymLaurent.zero(2))
    res = XiResult(2, 2, 0, poly, 1, True, series)
    dropped = specialize_last(res)
    assert dropped.poly == SymLaurent.monomial(1, (1,), Q)
    assert dropped.series.get(1) == SymLaurent.monomial(1, (1,), Q)


def test_hecke_act_multiplies_by_satake_image():
    d = spherical_so_data(BETA2, 2, 8)
    res = xi(d, 2, 2, beta=BETA2, trunc=8)
    table = SymLaurent(2, {(1, 0): Q, (0, 1): Q, (-1, 0): Q, (0, -1): Q})
    acted = hecke_act(res, table)
    assert acted.poly == table
    assert hecke_act(res, SymLaurent.one(2)).poly == res.poly
    with pytest.raises(ValueError):
        hecke_act(res, SymLaurent(2, {(1, 0): Q, (0, 1): Q}))
    res_r1 = xi(d, 2, 1, beta=BETA2, trunc=8)
    with pytest.raises(ValueError):
        hecke_act(res_r1, SymLaurent.one(1))


def test_zeta_series_spherical_matches_geometric_oracle():
    beta = Fraction(2)
    d = spherical_so_data((beta,), 1, 8)
    z = zeta_series(d, 1, 8)
    factor = lambda b: TruncSeries(
        {0: ONE, 1: VLaurent({-1: -b})}, None, VLaurent.zero()
    )
    oracle = (factor(beta) * factor(1 / beta)).invert(8, ONE)
    assert z.coefficients_equal(oracle, 8)


def test_zeta_endpoints_hold_for_arbitrary_data():
    d = WhittakerData(
        2,
        {
            (0, 0): ONE,
            (1, 0): Q,
            (2, 1): ONE + Q,
            (1, 1): VLaurent.v_power(-1),
            (3, 0): VLaurent({1: Fraction(2, 3)}),
        },
    )
    t = 6
    z = zeta_series(d, 2, t)
    z_theta = zeta_series(theta_data(d), 2, t)
    z_theta_prime = zeta_series(theta_prime_data(d), 2, t)
    assert z_theta.get(0) == VLaurent.zero()
    for ell in range(1, t + 1):
        assert z_theta.get(ell) == Q * z.get(ell - 1), ell
    for ell in range(t + 1):
        assert z_theta_prime.get(ell) == Q * z.get(ell), ell
    assert zeta_series(eta_data(d), 2, t).is_zero()


def test_kernel_check_samples():
    assert kernel_check(WhittakerData(2), 2, 1)
    assert kernel_check(delta((1, 1)), 2, 1)
    assert kernel_check(delta((1, 0)), 2, 1)
    assert kernel_check(delta((2, 2, 1), n=3), 3, 2)
    mixed = WhittakerData(2, {(1, 0): ONE, (1, 1): Q})
    assert kernel_check(mixed, 2, 1)


def test_xi_result_to_json_both_modes():
    d = spherical_so_data((Fraction(2),), 1, 6)
    res = xi(d, 1, 1, beta=(Fraction(2),), trunc=6)
    blob = res.to_json()
    assert isinstance(blob["poly"], list)
    assert blob["stabilized"] is True
    assert blob["n"] == 1 and blob["r"] == 1 and blob["m"] == 0
    ev = EvaluationMode(1, (Fraction(3),), Fraction(2))
    res_ev = xi(d, 1, 1, beta=(Fraction(2),), mode=ev, trunc=6)
    assert res_ev.to_json()["poly"] == "1/1"
