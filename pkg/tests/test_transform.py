import numpy as np
import pytest
from numpy.testing import assert_allclose

from conftest import draw_states
from zeipel.elements import EARTH, DelaunayState, delaunay_momenta
from zeipel.errors import DomainError, MapError
from zeipel.symplectic import block_identities, symplectic_residual
from zeipel.transform import CanonicalMap, first_order_displacement, momentum_scale

J2 = EARTH.j2


def wrap(d):
    return (np.asarray(d) + np.pi) % (2.0 * np.pi) - np.pi


def offset(cm, mean):
    osc = cm.mean_to_osculating(mean)
    return np.concatenate([osc.momenta - mean.momenta, wrap(osc.angles - mean.angles)])


def test_zero_j2_is_identity(rng):
    cm = CanonicalMap(EARTH, j2=0.0)
    st = draw_states(rng, 1)[0]
    assert cm.mean_to_osculating(st) is st
    assert cm.osculating_to_mean(st) is st


def test_guard_rejects_large_j2():
    with pytest.raises(DomainError):
        CanonicalMap(EARTH, j2=0.02)


def test_round_trips(rng):
    cm = CanonicalMap(EARTH)
    for st in draw_states(rng, 10):
        osc = cm.mean_to_osculating(st)
        back = cm.osculating_to_mean(osc)
        assert_allclose(back.momenta, st.momenta, rtol=1e-9)
        assert np.abs(wrap(back.angles - st.angles)).max() < 1e-9

        mean = cm.osculating_to_mean(st)
        fwd = cm.mean_to_osculating(mean)
        assert_allclose(fwd.momenta, st.momenta, rtol=1e-9)
        assert np.abs(wrap(fwd.angles - st.angles)).max() < 1e-9


def test_offsets_scale_linearly(rng):
    # halving J2 halves the osc - mean offset to within 5%
    cm1 = CanonicalMap(EARTH, j2=J2)
    cm2 = CanonicalMap(EARTH, j2=J2 / 2.0)
    for st in draw_states(rng, 5):
        d1 = offset(cm1, st)
        d2 = offset(cm2, st)
        scale = np.abs(d1).max()
        mask = np.abs(d1) > 1e-10 * scale
        ratio = d1[mask] / d2[mask]
        assert np.all(np.abs(ratio - 2.0) < 0.1)


def test_first_order_consistency(rng):
    # after removing the generator's linear prediction the remainder is
    # quadratic in J2: quartering under halving, ratio in [3.5, 4.5]
    st = draw_states(rng, 1, e_lo=0.05, e_hi=0.15)[0]
    res = {}
    for j2 in (J2, J2 / 2.0):
        cm = CanonicalMap(EARTH, j2=j2, order=1)
        res[j2] = offset(cm, st) - first_order_displacement(st, EARTH, j2)
    scale = np.abs(res[J2]).max()
    mask = np.abs(res[J2]) > 1e-7 * scale
    ratio = res[J2][mask] / res[J2 / 2.0][mask]
    assert np.all((ratio > 3.5) & (ratio < 4.5))


def test_newton_iteration_budget(rng):
    for j2 in (2e-3, -2e-3, J2):
        cm = CanonicalMap(EARTH, j2=j2)
        for st in draw_states(rng, 8):
            _, info = cm.mean_to_osculating(st, return_info=True)
            assert info["iterations"] <= 6
            _, info = cm.osculating_to_mean(st, return_info=True)
            assert info["iterations"] <= 6


def test_map_jacobian_identity_at_zero_j2(rng):
    cm = CanonicalMap(EARTH, j2=0.0)
    st = draw_states(rng, 1)[0]
    M = cm.map_jacobian(st)
    assert_allclose(M, np.eye(6), atol=1e-9)


def test_map_jacobian_is_symplectic(rng):
    cm = CanonicalMap(EARTH)
    for st in draw_states(rng, 5):
        M = cm.map_jacobian(st, scaled=True)
        assert symplectic_residual(M) < 1e-6
        assert np.linalg.det(M) == pytest.approx(1.0, abs=1e-6)
        ids = block_identities(M)
        assert max(ids.values()) < 1e-6


def test_forward_inverse_jacobians_compose(rng):
    cm = CanonicalMap(EARTH)
    st = draw_states(rng, 3)[0]
    osc = cm.mean_to_osculating(st)
    Mf = cm.map_jacobian(st, scaled=True)
    Mi = cm.map_jacobian(osc, "osculating_to_mean", scaled=True)
    assert np.abs(Mf @ Mi - np.eye(6)).max() < 1e-6


def test_scaled_and_physical_jacobians_are_conjugate(rng):
    cm = CanonicalMap(EARTH)
    st = draw_states(rng, 1)[0]
    s = momentum_scale(EARTH)
    T = np.diag([1.0 / s] * 3 + [1.0] * 3)
    Ms = cm.map_jacobian(st, scaled=True)
    Mp = cm.map_jacobian(st, scaled=False)
    assert_allclose(T @ Mp @ np.linalg.inv(T), Ms, rtol=0, atol=1e-12 * np.abs(Ms).max())


def test_transform_force_trivia(rng):
    st = draw_states(rng, 1)[0]
    cm0 = CanonicalMap(EARTH, j2=0.0)
    f = rng.normal(size=6)
    assert_allclose(cm0.transform_force(f, st), f, atol=1e-9 * np.abs(f).max())
    cm = CanonicalMap(EARTH)
    assert_allclose(cm.transform_force(np.zeros(6), st), np.zeros(6), atol=0)
    with pytest.raises(DomainError):
        cm.transform_force(np.zeros(4), st)


def test_transform_force_two_routes(rng):
    # atol floor: differencing O(L) momenta at h = 1e-6 leaves ~5e-6 absolute
    # noise on the physical-units blocks, independent of the force size
    cm = CanonicalMap(EARTH)
    for st in draw_states(rng, 4):
        f = rng.normal(size=6)
        via_blocks = cm.transform_force(f, st)
        via_inverse = np.linalg.inv(cm.map_jacobian(st)) @ f
        assert_allclose(via_blocks, via_inverse, rtol=1e-6, atol=1e-5)


def test_unknown_direction_rejected(rng):
    cm = CanonicalMap(EARTH)
    st = draw_states(rng, 1)[0]
    with pytest.raises(DomainError):
        cm.map_jacobian(st, direction="sideways")


def test_order_one_and_two_differ_quadratically(rng):
    st = draw_states(rng, 1, e_lo=0.05, e_hi=0.15)[0]
    d = {}
    for j2 in (J2, J2 / 2.0):
        o1 = CanonicalMap(EARTH, j2=j2, order=1).mean_to_osculating(st)
        o2 = CanonicalMap(EARTH, j2=j2, order=2).mean_to_osculating(st)
        d[j2] = np.concatenate([o1.momenta - o2.momenta, wrap(o1.angles - o2.angles)])
    big = np.abs(d[J2]).max()
    assert big > 0.0
    mask = np.abs(d[J2]) > 1e-6 * big
    ratio = d[J2][mask] / d[J2 / 2.0][mask]
    assert np.all((ratio > 3.0) & (ratio < 5.0))


def test_near_circular_exit_is_map_error():
    L = float(np.sqrt(EARTH.mu * 7000.0))
    e = 1e-7
    G = L * np.sqrt(1.0 - e * e)
    st = DelaunayState(L, G, G * np.cos(0.5), 0.3, 1.1, 2.0)
    cm = CanonicalMap(EARTH)
    with pytest.raises(MapError):
        cm.osculating_to_mean(st)


def test_displacement_prediction_matches_map(rng):
    # the analytic offset agrees with the nonlinear map to O(J2^2)
    st = draw_states(rng, 1, e_lo=0.05, e_hi=0.15)[0]
    cm = CanonicalMap(EARTH, order=1)
    d_map = offset(cm, st)
    d_lin = first_order_displacement(st, EARTH, J2)
    scale = np.abs(d_lin).max()
    assert np.abs(d_map - d_lin).max() < 50.0 * J2 * scale
