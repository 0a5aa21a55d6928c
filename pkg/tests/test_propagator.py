import numpy as np
import pytest
from numpy.testing import assert_allclose

from conftest import draw_states
from zeipel.elements import (
    EARTH,
    DelaunayState,
    KeplerianElements,
    PhysicalModel,
    delaunay_momenta,
    kep_to_cartesian,
    kep_to_delaunay,
    normalize_angle,
)
from zeipel.errors import DomainError, UsageError
from zeipel.propagator import (
    Ephemeris,
    compare,
    mean_history,
    mean_rates,
    propagate_analytic,
    propagate_mean,
    propagate_oracle,
)
from zeipel.vonzeipel import MeanHamiltonian

TWO_PI = 2.0 * np.pi


def kepler_period(a, model):
    return TWO_PI * np.sqrt(a**3 / model.mu)


def wrap(d):
    return (np.asarray(d) + np.pi) % TWO_PI - np.pi


def test_rates_kepler_limit():
    P = delaunay_momenta(7000.0, 0.05, 0.8, EARTH)
    r = mean_rates(P, EARTH, j2=0.0)
    n = EARTH.mu**2 / P[0] ** 3
    assert r.dl == pytest.approx(n, rel=1e-15)
    assert r.dg == 0.0
    assert r.dh == 0.0


def test_rates_match_secular_formulas():
    # standard J2 secular drifts in (argp, raan, mean anomaly)
    a, e, inc = 7000.0, 0.01, 0.5
    L, G, H = delaunay_momenta(a, e, inc, EARTH)
    r = mean_rates((L, G, H), EARTH, order=1)
    n = np.sqrt(EARTH.mu / a**3)
    p = a * (1.0 - e * e)
    eta = np.sqrt(1.0 - e * e)
    j2 = EARTH.j2
    k = j2 * (EARTH.R / p) ** 2
    assert r.dg == pytest.approx(0.75 * n * k * (5.0 * np.cos(inc) ** 2 - 1.0), rel=1e-12)
    assert r.dh == pytest.approx(-1.5 * n * k * np.cos(inc), rel=1e-12)
    assert r.dl == pytest.approx(
        n * (1.0 + 0.75 * k * (3.0 * np.cos(inc) ** 2 - 1.0) * eta), rel=1e-12
    )


def test_rates_node_drift_antisymmetric_in_inclination():
    a, e = 7200.0, 0.1
    for inc in (0.4, 1.0, 1.4):
        r_pro = mean_rates(delaunay_momenta(a, e, inc, EARTH), EARTH)
        r_ret = mean_rates(delaunay_momenta(a, e, np.pi - inc, EARTH), EARTH)
        assert r_pro.dh == pytest.approx(-r_ret.dh, rel=1e-12)
        assert r_pro.dg == pytest.approx(r_ret.dg, rel=1e-12)


def test_rates_match_gradient_finite_difference():
    L, G, H = delaunay_momenta(7000.0, 0.08, 0.9, EARTH)
    K = MeanHamiltonian(EARTH, order=2)
    j2 = EARTH.j2
    r = mean_rates((L, G, H), EARTH).as_array

    def richardson(fun, x, h):
        d1 = (fun(x + h) - fun(x - h)) / (2 * h)
        d2 = (fun(x + h / 2) - fun(x - h / 2)) / h
        return (4.0 * d2 - d1) / 3.0

    fd = -np.array(
        [
            richardson(lambda x: K.value(x, G, H, j2), L, 1e-3 * L),
            richardson(lambda x: K.value(L, x, H, j2), G, 1e-3 * G),
            richardson(lambda x: K.value(L, G, x, j2), H, 1e-3 * abs(H)),
        ]
    )
    assert_allclose(r, fd, rtol=0, atol=1e-9 * np.abs(r).max())


def test_propagate_mean_identity_and_additivity(rng):
    st = draw_states(rng, 1)[0]
    same = propagate_mean(st, 0.0, EARTH)
    assert same.momenta.tolist() == st.momenta.tolist()
    assert same.angles.tolist() == st.angles.tolist()

    t1, t2 = 830.0, 2741.0
    one = propagate_mean(st, t1 + t2, EARTH)
    two = propagate_mean(propagate_mean(st, t1, EARTH), t2, EARTH)
    assert one.momenta.tolist() == two.momenta.tolist()
    assert np.abs(wrap(one.angles - two.angles)).max() < 1e-12


def test_propagate_mean_period_return(rng):
    st = draw_states(rng, 1)[0]
    n = EARTH.mu**2 / st.L**3
    T = TWO_PI / n
    out = propagate_mean(st, T, EARTH, j2=0.0)
    assert abs(wrap(out.l - st.l)) < 1e-12
    assert out.g == st.g and out.h == st.h


def test_analytic_zero_j2_matches_kepler():
    el0 = KeplerianElements(a=7100.0, e=0.05, i=0.6, raan=0.3, argp=1.2, mean_anom=0.1)
    T = kepler_period(el0.a, EARTH)
    times = np.linspace(0.0, 2.0 * T, 41)
    eph = propagate_analytic(el0, times, EARTH, j2=0.0)
    n = np.sqrt(EARTH.mu / el0.a**3)
    for t, el, cs in zip(times, eph.kep, eph.cart):
        two_body = KeplerianElements(
            a=el0.a,
            e=el0.e,
            i=el0.i,
            raan=el0.raan,
            argp=el0.argp,
            mean_anom=el0.mean_anom + n * t,
        )
        ref = kep_to_cartesian(two_body, EARTH)
        assert np.linalg.norm(cs.r - ref.r) < 1e-10 * np.linalg.norm(ref.r)
        assert el.a == pytest.approx(el0.a, rel=1e-12)


def test_analytic_ephemeris_is_consistent():
    el0 = KeplerianElements(a=7000.0, e=0.01, i=0.5, raan=0.3, argp=1.1, mean_anom=0.2)
    times = np.linspace(0.0, 3000.0, 11)
    eph = propagate_analytic(el0, times, EARTH)
    assert len(eph) == 11
    assert eph.validate(EARTH)
    # starting sample reproduces the input osculating state
    assert eph.kep[0].a == pytest.approx(el0.a, rel=1e-9)
    assert eph.kep[0].e == pytest.approx(el0.e, rel=1e-9)
    assert abs(wrap(eph.kep[0].mean_anom - el0.mean_anom)) < 1e-9


def test_oracle_closed_orbit_return():
    el0 = KeplerianElements(a=7100.0, e=0.05, i=0.6, raan=0.3, argp=1.2, mean_anom=0.1)
    model = PhysicalModel(mu=EARTH.mu, R=EARTH.R)  # no zonal field
    cs0 = kep_to_cartesian(el0, model)
    T = kepler_period(el0.a, model)
    eph = propagate_oracle(cs0, np.linspace(0.0, T, 7), model)
    r0, r1 = eph.positions()[0], eph.positions()[-1]
    assert np.linalg.norm(r1 - r0) < 1e-9 * np.linalg.norm(r0)
    v0, v1 = eph.velocities()[0], eph.velocities()[-1]
    assert np.linalg.norm(v1 - v0) < 1e-9 * np.linalg.norm(v0)


def test_oracle_conserves_energy_and_hz():
    el0 = KeplerianElements(a=7000.0, e=0.01, i=0.5, raan=0.3, argp=1.1, mean_anom=0.2)
    cs0 = kep_to_cartesian(el0, EARTH)
    T = kepler_period(el0.a, EARTH)
    eph = propagate_oracle(cs0, np.linspace(0.0, 2.0 * T, 81), EARTH)
    en = eph.extras["energy"]
    hz = eph.extras["hz"]
    assert np.ptp(en) < 1e-11 * abs(en[0])
    assert np.ptp(hz) < 1e-11 * abs(hz[0])


def test_order_two_beats_order_one():
    el0 = KeplerianElements(a=7000.0, e=0.01, i=0.5, raan=0.3, argp=1.1, mean_anom=0.2)
    cs0 = kep_to_cartesian(el0, EARTH)
    T = kepler_period(el0.a, EARTH)
    times = np.linspace(0.0, 2.0 * T, 41)
    oracle = propagate_oracle(cs0, times, EARTH)
    err1 = compare(propagate_analytic(el0, times, EARTH, order=1), oracle).max_pos_err
    err2 = compare(propagate_analytic(el0, times, EARTH, order=2), oracle).max_pos_err
    assert err2 < err1


def test_mean_history_is_flatter_than_osculating():
    el0 = KeplerianElements(a=7000.0, e=0.01, i=0.5, raan=0.3, argp=1.1, mean_anom=0.2)
    cs0 = kep_to_cartesian(el0, EARTH)
    T = kepler_period(el0.a, EARTH)
    eph = propagate_oracle(cs0, np.linspace(0.0, 2.0 * T, 81), EARTH)
    osc_ptp = np.ptp(eph.momenta(), axis=0)
    mean_ptp = np.ptp(mean_history(eph, EARTH), axis=0)
    # oscillations removed to truncation order: at least 10x flatter
    assert np.all(mean_ptp[:2] < 0.1 * osc_ptp[:2])
    # H is exactly conserved by the field, both histories sit at round-off
    assert osc_ptp[2] < 1e-9 * eph.momenta()[0, 2]


def test_compare_identical_and_swapped():
    el0 = KeplerianElements(a=7000.0, e=0.02, i=0.7, raan=0.2, argp=0.9, mean_anom=0.4)
    times = np.linspace(0.0, 4000.0, 9)
    a = propagate_analytic(el0, times, EARTH)
    rep = compare(a, a)
    assert rep.max_pos_err == 0.0
    assert all(np.all(v == 0.0) for v in rep.element_err.values())

    b = propagate_analytic(el0, times, EARTH, order=1)
    ab, ba = compare(a, b), compare(b, a)
    assert ab.max_pos_err == ba.max_pos_err
    assert_allclose(ab.momenta_err, -ba.momenta_err, atol=0)


def test_compare_rejects_grid_mismatch():
    el0 = KeplerianElements(a=7000.0, e=0.02, i=0.7, raan=0.2, argp=0.9, mean_anom=0.4)
    a = propagate_analytic(el0, np.linspace(0.0, 100.0, 5), EARTH)
    b = propagate_analytic(el0, np.linspace(0.0, 110.0, 5), EARTH)
    with pytest.raises(UsageError):
        compare(a, b)


def test_ephemeris_grid_validation():
    el = KeplerianElements(a=7000.0, e=0.02, i=0.7, raan=0.2, argp=0.9, mean_anom=0.4)
    cs = kep_to_cartesian(el, EARTH)
    dl = kep_to_delaunay(el, EARTH)
    with pytest.raises(DomainError):
        Ephemeris(np.array([0.0, 1.0, 1.0]), (el,) * 3, (cs,) * 3, (dl,) * 3)
    with pytest.raises(DomainError):
        Ephemeris(np.array([0.0, 1.0]), (el,), (cs,), (dl,))
    with pytest.raises(DomainError):
        Ephemeris(np.zeros((2, 2)), (el,) * 2, (cs,) * 2, (dl,) * 2)
