"""Mean-element propagation and the independent Cartesian oracle.

The analytic route is osculating -> mean -> linear flow -> osculating.
The oracle integrates Newtonian motion in the zonal field directly in
Cartesian coordinates, sharing nothing with the analytic route beyond
the element conversions, so the two can check each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp

from .elements import (
    CartesianState,
    DelaunayState,
    KeplerianElements,
    PhysicalModel,
    cartesian_to_kep,
    delaunay_to_kep,
    kep_to_cartesian,
    kep_to_delaunay,
    normalize_angle,
)
from .errors import DomainError, IntegrationError, UsageError
from .hamiltonian import polar_angular_momentum, specific_energy, zonal_accel
from .transform import CanonicalMap
from .vonzeipel import MeanHamiltonian


@dataclass(frozen=True)
class MeanRates:
    """Constant angle rates of the mean flow [rad/s]; momenta rates vanish."""

    dl: float
    dg: float
    dh: float

    @property
    def as_array(self):
        return np.array([self.dl, self.dg, self.dh])


def mean_rates(P, model: PhysicalModel, order=2, j2=None) -> MeanRates:
    """Angle rates -dK/dP.  The sign is anchored by the Kepler limit:
    J2 = 0 gives dl/dt = mu^2/L^3 = n > 0."""
    L, G, H = float(P[0]), float(P[1]), float(P[2])
    if j2 is None:
        j2 = model.j2
    grad = MeanHamiltonian(model, order).gradient(L, G, H, j2)
    return MeanRates(*(-grad))


def propagate_mean(mean0: DelaunayState, t, model: PhysicalModel, order=2, j2=None) -> DelaunayState:
    """Trivial flow of the mean Hamiltonian: fixed momenta, linear angles."""
    rates = mean_rates(mean0.momenta, model, order, j2)
    return DelaunayState(
        mean0.L,
        mean0.G,
        mean0.H,
        mean0.l + rates.dl * t,
        mean0.g + rates.dg * t,
        mean0.h + rates.dh * t,
    )


@dataclass(frozen=True)
class Ephemeris:
    """Time-ordered samples in all three element representations."""

    t: np.ndarray
    kep: tuple
    cart: tuple
    delaunay: tuple
    extras: dict = field(default_factory=dict)

    def __post_init__(self):
        t = np.asarray(self.t, dtype=float)
        if t.ndim != 1 or len(t) == 0:
            raise DomainError("time grid must be a nonempty 1-d array")
        if len(t) > 1 and not np.all(np.diff(t) > 0):
            raise DomainError("time grid must be strictly increasing")
        if not (len(self.kep) == len(self.cart) == len(self.delaunay) == len(t)):
            raise DomainError("sample lists must share the grid length")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "kep", tuple(self.kep))
        object.__setattr__(self, "cart", tuple(self.cart))
        object.__setattr__(self, "delaunay", tuple(self.delaunay))

    def __len__(self):
        return len(self.t)

    def positions(self):
        return np.array([cs.r for cs in self.cart])

    def velocities(self):
        return np.array([cs.v for cs in self.cart])

    def momenta(self):
        return np.array([st.momenta for st in self.delaunay])

    def validate(self, model: PhysicalModel, tol=1e-9):
        """Cross-representation consistency; raises on violation."""
        for el, cs, st in zip(self.kep, self.cart, self.delaunay):
            ref = kep_to_cartesian(el, model)
            scale = max(1.0, float(np.linalg.norm(ref.r)))
            if np.linalg.norm(ref.r - cs.r) > tol * scale:
                raise DomainError("Cartesian positions inconsistent with elements")
            if np.linalg.norm(ref.v - cs.v) > tol * max(1.0, float(np.linalg.norm(ref.v))):
                raise DomainError("Cartesian velocities inconsistent with elements")
            dl = kep_to_delaunay(el, model)
            dm = np.abs(dl.momenta - st.momenta).max()
            da = np.abs((dl.angles - st.angles + np.pi) % (2 * np.pi) - np.pi).max()
            if dm > tol * max(1.0, st.L) or da > tol:
                raise DomainError("Delaunay samples inconsistent with elements")
        return True


def _ephemeris_from_kep(t, kep_list, model, extras=None):
    cart = [kep_to_cartesian(el, model) for el in kep_list]
    dela = [kep_to_delaunay(el, model) for el in kep_list]
    return Ephemeris(np.asarray(t, dtype=float), kep_list, cart, dela, extras or {})


def propagate_analytic(osc0: KeplerianElements, times, model: PhysicalModel, order=2, j2=None) -> Ephemeris:
    """Full analytic pipeline at the given theory order."""
    times = np.asarray(times, dtype=float)
    if j2 is None:
        j2 = model.j2
    cmap = CanonicalMap(model, j2=j2, order=order)
    mean0 = cmap.osculating_to_mean(kep_to_delaunay(osc0, model))
    rates = mean_rates(mean0.momenta, model, order, j2)
    t0 = times[0]
    kep_list = []
    for t in times:
        dt = t - t0
        mean_t = DelaunayState(
            mean0.L,
            mean0.G,
            mean0.H,
            mean0.l + rates.dl * dt,
            mean0.g + rates.dg * dt,
            mean0.h + rates.dh * dt,
        )
        osc_t = cmap.mean_to_osculating(mean_t)
        kep_list.append(delaunay_to_kep(osc_t, model))
    return _ephemeris_from_kep(times, kep_list, model)


def propagate_oracle(cart0: CartesianState, times, model: PhysicalModel, nmax=None) -> Ephemeris:
    """Adaptive high-order integration of the exact zonal-field equations."""
    times = np.asarray(times, dtype=float)
    y0 = np.concatenate([cart0.r, cart0.v])

    def rhs(_, y):
        return np.concatenate([y[3:], zonal_accel(y[:3], model, nmax)])

    sol = solve_ivp(
        rhs,
        (times[0], times[-1]),
        y0,
        method="DOP853",
        t_eval=times,
        rtol=1e-12,
        atol=1e-12,
    )
    if not sol.success:
        raise IntegrationError(f"oracle integration failed: {sol.message}")
    kep_list = []
    cart_list = []
    energy = np.empty(len(times))
    hz = np.empty(len(times))
    for k in range(len(times)):
        cs = CartesianState(sol.y[:3, k].copy(), sol.y[3:, k].copy())
        cart_list.append(cs)
        kep_list.append(cartesian_to_kep(cs, model))
        energy[k] = specific_energy(cs, model, nmax)
        hz[k] = polar_angular_momentum(cs)
    dela = [kep_to_delaunay(el, model) for el in kep_list]
    return Ephemeris(times, kep_list, cart_list, dela, {"energy": energy, "hz": hz})


@dataclass(frozen=True)
class CompareReport:
    """Pointwise differences between two ephemerides on one grid."""

    t: np.ndarray
    pos_err: np.ndarray
    max_pos_err: float
    rms_pos_err: float
    element_err: dict
    momenta_err: np.ndarray
    momenta_ptp: np.ndarray


def compare(eph_a: Ephemeris, eph_b: Ephemeris) -> CompareReport:
    if len(eph_a.t) != len(eph_b.t) or not np.allclose(eph_a.t, eph_b.t, rtol=0, atol=0):
        raise UsageError("ephemerides must share the time grid exactly")
    dr = eph_a.positions() - eph_b.positions()
    pos_err = np.linalg.norm(dr, axis=1)
    elem = {}
    for name in ("a", "e", "i"):
        va = np.array([getattr(el, name) for el in eph_a.kep])
        vb = np.array([getattr(el, name) for el in eph_b.kep])
        elem[name] = va - vb
    for name in ("raan", "argp", "mean_anom"):
        va = np.array([getattr(el, name) for el in eph_a.kep])
        vb = np.array([getattr(el, name) for el in eph_b.kep])
        elem[name] = (va - vb + np.pi) % (2.0 * np.pi) - np.pi
    dmom = eph_a.momenta() - eph_b.momenta()
    return CompareReport(
        t=eph_a.t,
        pos_err=pos_err,
        max_pos_err=float(pos_err.max()),
        rms_pos_err=float(np.sqrt(np.mean(pos_err**2))),
        element_err=elem,
        momenta_err=dmom,
        momenta_ptp=np.ptp(dmom, axis=0),
    )


def mean_history(eph: Ephemeris, model: PhysicalModel, order=2, j2=None):
    """Mean momenta time series obtained by inverting the map along an
    osculating trajectory; flat up to the truncation order."""
    if j2 is None:
        j2 = model.j2
    cmap = CanonicalMap(model, j2=j2, order=order)
    out = np.empty((len(eph), 3))
    for k, st in enumerate(eph.delaunay):
        out[k] = cmap.osculating_to_mean(st).momenta
    return out
