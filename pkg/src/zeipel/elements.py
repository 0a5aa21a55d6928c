"""Orbital element sets and conversions.

Representations: Keplerian elements, Delaunay action-angle variables,
Cartesian position/velocity.  Units are km, s, rad throughout.  Angles are
normalized to [0, 2*pi) when a state object is constructed; free functions
keep whatever branch the caller supplies so that derivatives stay smooth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SolverError

TWO_PI = 2.0 * math.pi

# Delaunay angle conversions reject near-circular / near-equatorial states
# where the pericenter or node angle is numerically undefined.
ECC_MIN = 1e-8
SIN_INC_MIN = 1e-8


def normalize_angle(x):
    """Reduce an angle (scalar or array) to [0, 2*pi)."""
    return np.asarray(x, dtype=float) - TWO_PI * np.floor(np.asarray(x, dtype=float) / TWO_PI)


@dataclass(frozen=True)
class PhysicalModel:
    """Central-body constants: mu [km^3/s^2], equatorial radius R [km],
    zonal coefficients (J2, J3, ...) starting at degree 2."""

    mu: float
    R: float
    zonal: tuple = ()

    def __post_init__(self):
        if not self.mu > 0:
            raise DomainError("mu must be positive")
        if not self.R > 0:
            raise DomainError("R must be positive")
        object.__setattr__(self, "zonal", tuple(float(j) for j in self.zonal))
        if any(abs(j) >= 1.0 for j in self.zonal):
            raise DomainError("zonal coefficients must satisfy |Jn| < 1")

    @property
    def j2(self):
        return self.zonal[0] if self.zonal else 0.0

    def with_j2(self, j2):
        """Copy of the model with the degree-2 coefficient replaced."""
        rest = self.zonal[1:] if len(self.zonal) > 1 else ()
        return PhysicalModel(self.mu, self.R, (float(j2),) + rest)


#: Standard Earth constants used as defaults by the CLI and test profiles.
EARTH = PhysicalModel(mu=398600.4418, R=6378.137, zonal=(1.08262668e-3,))


@dataclass(frozen=True)
class KeplerianElements:
    """Osculating Keplerian set (a, e, i, raan, argp, mean_anom)."""

    a: float
    e: float
    i: float
    raan: float
    argp: float
    mean_anom: float

    def __post_init__(self):
        if not self.a > 0:
            raise DomainError("semi-major axis must be positive")
        if not (0.0 <= self.e < 1.0):
            raise DomainError("eccentricity must lie in [0, 1)")
        if not (0.0 <= self.i <= math.pi):
            raise DomainError("inclination must lie in [0, pi]")
        for name in ("raan", "argp", "mean_anom"):
            object.__setattr__(self, name, float(normalize_angle(getattr(self, name))))


@dataclass(frozen=True)
class DelaunayState:
    """Delaunay variables: momenta L, G, H [km^2/s], angles l, g, h [rad]."""

    L: float
    G: float
    H: float
    l: float
    g: float
    h: float

    def __post_init__(self):
        # Tiny slack absorbs round-off from conversions near e = 0.
        slack = 1e-12 * self.L
        if not self.L > 0:
            raise DomainError("L must be positive")
        if not (0.0 < self.G <= self.L + slack):
            raise DomainError("G must satisfy 0 < G <= L")
        if abs(self.H) > self.G + slack:
            raise DomainError("|H| must not exceed G")
        for name in ("l", "g", "h"):
            object.__setattr__(self, name, float(normalize_angle(getattr(self, name))))

    @property
    def momenta(self):
        return np.array([self.L, self.G, self.H])

    @property
    def angles(self):
        return np.array([self.l, self.g, self.h])


@dataclass(frozen=True)
class CartesianState:
    """Inertial position r [km] and velocity v [km/s]."""

    r: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        r = np.array(self.r, dtype=float)
        v = np.array(self.v, dtype=float)
        if r.shape != (3,) or v.shape != (3,):
            raise DomainError("r and v must be 3-vectors")
        if not np.linalg.norm(r) > 0:
            raise DomainError("|r| must be positive")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "v", v)


def kepler_solve(mean_anom, e, tol=1e-14, maxiter=50):
    """Solve E - e*sin(E) = M for the eccentric anomaly.

    Newton iteration seeded at M + e*sin(M), with a bisection fallback on
    the bracket [Mr - e, Mr + e] for any element that fails to converge.
    The result stays on the same 2*pi branch as the input.
    """
    if np.any(np.asarray(e) < 0) or np.any(np.asarray(e) >= 1):
        raise DomainError("eccentricity must lie in [0, 1)")
    M = np.asarray(mean_anom, dtype=float)
    scalar = M.ndim == 0
    M = np.atleast_1d(M)
    e_arr = np.broadcast_to(np.asarray(e, dtype=float), M.shape)

    branch = TWO_PI * np.round(M / TWO_PI)
    Mr = M - branch

    E = Mr + e_arr * np.sin(Mr)
    converged = np.zeros(M.shape, dtype=bool)
    for _ in range(maxiter):
        f = E - e_arr * np.sin(E) - Mr
        converged = np.abs(f) <= tol
        if converged.all():
            break
        step = f / (1.0 - e_arr * np.cos(E))
        # Clamp runaway Newton steps; bisection cleans up any stragglers.
        step = np.clip(step, -1.0, 1.0)
        E = np.where(converged, E, E - step)

    if not converged.all():
        bad = ~converged
        lo = Mr[bad] - e_arr[bad]
        hi = Mr[bad] + e_arr[bad]
        Eb = 0.5 * (lo + hi)
        for _ in range(200):
            fb = Eb - e_arr[bad] * np.sin(Eb) - Mr[bad]
            take_lo = fb > 0
            hi = np.where(take_lo, Eb, hi)
            lo = np.where(take_lo, lo, Eb)
            Eb = 0.5 * (lo + hi)
        E[bad] = Eb
        resid = np.abs(E - e_arr * np.sin(E) - Mr)
        if resid.max() > 1e-13:
            raise SolverError(f"Kepler solver stalled, worst residual {resid.max():.3e}")

    E = E + branch
    return float(E[0]) if scalar else E.reshape(np.shape(mean_anom))


def true_from_eccentric(E, e):
    """True anomaly from eccentric anomaly, branch preserving."""
    E = np.asarray(E, dtype=float)
    beta = e / (1.0 + np.sqrt(1.0 - np.asarray(e) ** 2))
    return E + 2.0 * np.arctan2(beta * np.sin(E), 1.0 - beta * np.cos(E))


def eccentric_from_true(nu, e):
    """Eccentric anomaly from true anomaly, branch preserving."""
    nu = np.asarray(nu, dtype=float)
    beta = e / (1.0 + np.sqrt(1.0 - np.asarray(e) ** 2))
    return nu - 2.0 * np.arctan2(beta * np.sin(nu), 1.0 + beta * np.cos(nu))


def mean_from_eccentric(E, e):
    E = np.asarray(E, dtype=float)
    return E - e * np.sin(E)


def eccentric_from_mean(mean_anom, e):
    return kepler_solve(mean_anom, e)


def true_from_mean(mean_anom, e):
    return true_from_eccentric(kepler_solve(mean_anom, e), e)


def mean_from_true(nu, e):
    return mean_from_eccentric(eccentric_from_true(nu, e), e)


def a_over_r(nu, e):
    """Ratio a/r as a function of true anomaly."""
    return (1.0 + e * np.cos(nu)) / (1.0 - e * e)


def dnu_dl(nu, e):
    """d(nu)/d(l) = sqrt(1-e^2) * (a/r)^2 at fixed momenta."""
    return np.sqrt(1.0 - e * e) * a_over_r(nu, e) ** 2


def delaunay_momenta(a, e, i, model):
    """Delaunay momenta (L, G, H) from a, e, i.  No angle guards."""
    if not a > 0 or not (0.0 <= e < 1.0):
        raise DomainError("need a > 0 and 0 <= e < 1")
    L = math.sqrt(model.mu * a)
    G = L * math.sqrt(1.0 - e * e)
    H = G * math.cos(i)
    return L, G, H


def kep_to_delaunay(el: KeplerianElements, model: PhysicalModel) -> DelaunayState:
    """Keplerian to Delaunay.  Rejects e or sin(i) below the guard
    thresholds, where g or h is undefined."""
    if el.e < ECC_MIN:
        raise DomainError(f"e = {el.e:.3e} below {ECC_MIN}, pericenter angle undefined")
    if math.sin(el.i) < SIN_INC_MIN:
        raise DomainError(f"sin(i) = {math.sin(el.i):.3e} below {SIN_INC_MIN}, node undefined")
    L, G, H = delaunay_momenta(el.a, el.e, el.i, model)
    return DelaunayState(L=L, G=G, H=H, l=el.mean_anom, g=el.argp, h=el.raan)


def delaunay_to_kep(st: DelaunayState, model: PhysicalModel) -> KeplerianElements:
    """Delaunay to Keplerian, with the same degeneracy guards."""
    a = st.L * st.L / model.mu
    ratio = min(st.G / st.L, 1.0)
    e = math.sqrt(max(0.0, 1.0 - ratio * ratio))
    i = math.acos(min(1.0, max(-1.0, st.H / st.G)))
    if e < ECC_MIN:
        raise DomainError(f"e = {e:.3e} below {ECC_MIN}, pericenter angle undefined")
    if math.sin(i) < SIN_INC_MIN:
        raise DomainError(f"sin(i) = {math.sin(i):.3e} below {SIN_INC_MIN}, node undefined")
    return KeplerianElements(a=a, e=e, i=i, raan=st.h, argp=st.g, mean_anom=st.l)


def kep_to_cartesian(el: KeplerianElements, model: PhysicalModel) -> CartesianState:
    """Keplerian to inertial Cartesian state."""
    nu = float(true_from_mean(el.mean_anom, el.e))
    p = el.a * (1.0 - el.e * el.e)
    r_mag = p / (1.0 + el.e * math.cos(nu))
    r_pf = np.array([r_mag * math.cos(nu), r_mag * math.sin(nu), 0.0])
    vs = math.sqrt(model.mu / p)
    v_pf = np.array([-vs * math.sin(nu), vs * (el.e + math.cos(nu)), 0.0])

    co, so = math.cos(el.raan), math.sin(el.raan)
    ci, si = math.cos(el.i), math.sin(el.i)
    cw, sw = math.cos(el.argp), math.sin(el.argp)
    # R3(-raan) R1(-i) R3(-argp), perifocal to inertial.
    rot = np.array([
        [co * cw - so * sw * ci, -co * sw - so * cw * ci, so * si],
        [so * cw + co * sw * ci, -so * sw + co * cw * ci, -co * si],
        [sw * si, cw * si, ci],
    ])
    return CartesianState(r=rot @ r_pf, v=rot @ v_pf)


def cartesian_to_kep(cs: CartesianState, model: PhysicalModel) -> KeplerianElements:
    """Inertial Cartesian to osculating Keplerian elements."""
    r = cs.r
    v = cs.v
    r_mag = np.linalg.norm(r)
    v_mag = np.linalg.norm(v)
    h_vec = np.cross(r, v)
    h_mag = np.linalg.norm(h_vec)
    if h_mag <= 1e-12 * r_mag * v_mag:
        raise DomainError("rectilinear orbit, angular momentum too small")

    inv_a = 2.0 / r_mag - v_mag * v_mag / model.mu
    if inv_a <= 0:
        raise DomainError("state is not elliptical")
    a = 1.0 / inv_a

    e_vec = ((v_mag * v_mag - model.mu / r_mag) * r - np.dot(r, v) * v) / model.mu
    e = np.linalg.norm(e_vec)
    if e >= 1.0:
        raise DomainError("state is not elliptical")
    if e < ECC_MIN:
        raise DomainError(f"e = {e:.3e} below {ECC_MIN}, pericenter angle undefined")

    h_hat = h_vec / h_mag
    i = math.acos(min(1.0, max(-1.0, h_hat[2])))
    if math.sin(i) < SIN_INC_MIN:
        raise DomainError(f"sin(i) = {math.sin(i):.3e} below {SIN_INC_MIN}, node undefined")

    n_vec = np.array([-h_vec[1], h_vec[0], 0.0])
    n_mag = np.linalg.norm(n_vec)
    raan = math.atan2(n_vec[1], n_vec[0])
    argp = math.atan2(np.dot(np.cross(n_vec, e_vec), h_hat) / n_mag, np.dot(n_vec, e_vec) / n_mag)
    nu = math.atan2(np.dot(np.cross(e_vec, r), h_hat) / e, np.dot(e_vec, r) / e)
    mean_anom = float(mean_from_true(nu, e))
    return KeplerianElements(a=a, e=e, i=i, raan=raan, argp=argp, mean_anom=mean_anom)
