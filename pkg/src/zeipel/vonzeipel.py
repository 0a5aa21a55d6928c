"""Canonical averaging engine.

Secular/periodic operators on the angle torus, the first-order solution
(new Hamiltonian term k1, generator s1 and its partials, both closed-form
and via the generic characteristic-line integral), and the second-order
solution (k2 closed form and quadrature, spectral tables for s2).

Conventions.  The generating series is S = P.q + J2*S1 + J2^2*S2 in mixed
variables (new momenta P, old angles q); the first-order PDE is
w1 * dS1/dl + per(H1) = 0 with w1 = dh0/dL.  Series coefficients never
include powers of J2; callers scale by the physical value.
"""

from __future__ import annotations

import functools
import math

import numpy as np

from . import _secondorder
from .elements import a_over_r, true_from_mean
from .errors import DegenerateFrequencyError, DomainError
from .hamiltonian import (
    d2h0_dL2,
    dh0_dL,
    dh1_true,
    eccentricity_from_momenta,
    h1_secular,
    h1_true,
)

TWO_PI = 2.0 * math.pi


class AveragingOperator:
    """Equal-weight trapezoid average over the N-angle torus.

    Exact to round-off for trigonometric polynomials with harmonics below
    nodes/2 per angle, which is what every use in this package feeds it.
    """

    def __init__(self, nodes=256):
        if nodes < 4:
            raise DomainError("need at least 4 quadrature nodes")
        self.nodes = nodes

    def grid(self, nangles):
        axes = [TWO_PI * np.arange(self.nodes) / self.nodes for _ in range(nangles)]
        return np.meshgrid(*axes, indexing="ij")

    def secular(self, f, nangles):
        """Average of f over the torus; f must accept nangles mesh arrays."""
        return float(np.mean(f(*self.grid(nangles))))

    def periodic(self, f, q):
        """Zero-mean remainder of f evaluated at angle tuple q."""
        q = np.asarray(q, dtype=float)
        return float(f(*q)) - self.secular(f, len(q))


def mean_anomaly_average(f_of_nu, e, nodes=256):
    """Average over the mean anomaly computed on a true-anomaly grid.

    Uses dl = (1/eta) * (r/a)^2 dnu, exact for trigonometric integrands.
    """
    nu = TWO_PI * np.arange(nodes) / nodes
    rho = a_over_r(nu, e)
    eta = math.sqrt(1.0 - e * e)
    return float(np.mean(f_of_nu(nu) / rho**2)) / eta


def torus_average_weighted(f_of_nu_g, e, nodes_nu=256, nodes_g=64):
    """Average over (l, g) of a field given at (nu, g), dnu-weighted in l."""
    nu = TWO_PI * np.arange(nodes_nu) / nodes_nu
    g = TWO_PI * np.arange(nodes_g) / nodes_g
    NU, GG = np.meshgrid(nu, g, indexing="ij")
    rho = a_over_r(NU, e)
    eta = math.sqrt(1.0 - e * e)
    return float(np.mean(f_of_nu_g(NU, GG) / rho**2)) / eta


# ---------------------------------------------------------------------------
# First order.


def k1(L, G, H, model):
    """First-order mean Hamiltonian term; equals the secular part of h1."""
    return h1_secular(L, G, H, model)


def dk1(L, G, H, model):
    """Gradient of k1 with respect to (L, G, H)."""
    f = model.mu**4 * model.R**2 / 4.0
    dL = -3.0 * f * (3.0 * H * H - G * G) / (L**4 * G**5)
    dG = f * (3.0 * G * G - 15.0 * H * H) / (L**3 * G**6)
    dH = 6.0 * f * H / (L**3 * G**5)
    return np.array([dL, dG, dH])


def _check_ecc(e):
    if np.any(np.asarray(e) < 1e-10):
        raise DomainError("momentum partials need e > 0 (Delaunay chart degenerates)")


def s1_true(L, G, H, nu, l, g, model):
    """Closed-form first-order generator, angles supplied as (nu, l, g)."""
    e = eccentricity_from_momenta(L, G)
    A = l - nu - e * np.sin(nu)
    B = 1.5 * np.sin(2 * g + 2 * nu) + 1.5 * e * np.sin(2 * g + nu) + 0.5 * e * np.sin(2 * g + 3 * nu)
    f = model.mu**2 * model.R**2 / (4.0 * G**5)
    return f * ((G * G - 3.0 * H * H) * A + (G * G - H * H) * B)


def s1(L, G, H, l, g, model):
    e = eccentricity_from_momenta(L, G)
    nu = true_from_mean(l, e)
    return s1_true(L, G, H, nu, l, g, model)


def ds1_dl_true(L, G, H, nu, g, model):
    """d s1/dl in closed form, evaluated at true anomaly nu."""
    e = eccentricity_from_momenta(L, G)
    eta = np.sqrt(1.0 - e * e)
    rho = a_over_r(nu, e)
    trig = 3.0 * np.cos(2 * g + 2 * nu) + 1.5 * e * np.cos(2 * g + nu) + 1.5 * e * np.cos(2 * g + 3 * nu)
    f = model.mu**2 * model.R**2 / (4.0 * G**5)
    return f * ((G * G - 3.0 * H * H) * (1.0 - eta**3 * rho**3) + (G * G - H * H) * eta * rho * rho * trig)


def ds1_dl(L, G, H, l, g, model):
    e = eccentricity_from_momenta(L, G)
    nu = true_from_mean(l, e)
    return ds1_dl_true(L, G, H, nu, g, model)


def ds1_dg_true(L, G, H, nu, g, model):
    e = eccentricity_from_momenta(L, G)
    trig = 3.0 * np.cos(2 * g + 2 * nu) + 3.0 * e * np.cos(2 * g + nu) + e * np.cos(2 * g + 3 * nu)
    f = model.mu**2 * model.R**2 / (4.0 * G**5)
    return f * (G * G - H * H) * trig


def ds1_dg(L, G, H, l, g, model):
    e = eccentricity_from_momenta(L, G)
    nu = true_from_mean(l, e)
    return ds1_dg_true(L, G, H, nu, g, model)


def ds1_dP(L, G, H, l, g, model):
    """(d s1/dL, d s1/dG, d s1/dH) at fixed (l, g), analytic chain rule."""
    e = eccentricity_from_momenta(L, G)
    _check_ecc(e)
    nu = true_from_mean(l, e)
    sn, cs = np.sin(nu), np.cos(nu)
    one = 1.0 - e * e

    A = l - nu - e * sn
    B = 1.5 * np.sin(2 * g + 2 * nu) + 1.5 * e * np.sin(2 * g + nu) + 0.5 * e * np.sin(2 * g + 3 * nu)

    nu_e = (2.0 + e * cs) * sn / one
    A_e = -(1.0 + e * cs) * nu_e - sn
    B_e = (
        3.0 * np.cos(2 * g + 2 * nu) * nu_e
        + 1.5 * np.sin(2 * g + nu) + 1.5 * e * np.cos(2 * g + nu) * nu_e
        + 0.5 * np.sin(2 * g + 3 * nu) + 1.5 * e * np.cos(2 * g + 3 * nu) * nu_e
    )

    c1 = (G * G - 3.0 * H * H) / G**5
    c2 = (G * G - H * H) / G**5
    c1_G = (15.0 * H * H - 3.0 * G * G) / G**6
    c2_G = (5.0 * H * H - 3.0 * G * G) / G**6
    e_L = G * G / (e * L**3)
    e_G = -G / (e * L * L)

    f = model.mu**2 * model.R**2 / 4.0
    dL = f * (c1 * A_e + c2 * B_e) * e_L
    dG = f * ((c1_G * A + c2_G * B) + (c1 * A_e + c2 * B_e) * e_G)
    dH = f * (-6.0 * H * A - 2.0 * H * B) / G**5
    return np.array([dL, dG, dH])


def solve_homological(w, f_per, q, nodes=129):
    """Generic solution of w . dS/dq = -f_per along the characteristic line.

    S(q) = -(1/|w|) * integral_0^{what.q} f_per(q - (what.q - t) what) dt,
    with what = w/|w|.  f_per must have zero torus average and accept a
    stacked (N, M) array of angle columns, returning M values.
    """
    w = np.asarray(w, dtype=float)
    q = np.asarray(q, dtype=float)
    norm = np.linalg.norm(w)
    if norm < 1e-12:
        raise DegenerateFrequencyError(f"|w| = {norm:.3e} below threshold")
    what = w / norm
    T = float(what @ q)
    if T == 0.0:
        return 0.0
    t, wt = np.polynomial.legendre.leggauss(nodes)
    t = 0.5 * T * (t + 1.0)
    wt = wt * 0.5 * T
    pts = q[:, None] - (T - t)[None, :] * what[:, None]
    return -float(wt @ np.asarray(f_per(pts), dtype=float)) / norm


# ---------------------------------------------------------------------------
# Second order.


def hbar_parts(d2h0, s1l_val, s1g_val, h1L_val, h1G_val):
    """Quadratic cross term from its ingredients."""
    return 0.5 * d2h0 * s1l_val**2 + h1L_val * s1l_val + h1G_val * s1g_val


def hbar_true(L, G, H, nu, g, model):
    """Compositional second-order source term at true anomaly nu."""
    s1l_val = ds1_dl_true(L, G, H, nu, g, model)
    s1g_val = ds1_dg_true(L, G, H, nu, g, model)
    h1L_val, h1G_val = dh1_true(L, G, H, nu, g, model)
    return hbar_parts(d2h0_dL2(L, model), s1l_val, s1g_val, h1L_val, h1G_val)


def hbar(L, G, H, l, g, model):
    e = eccentricity_from_momenta(L, G)
    _check_ecc(e)
    nu = true_from_mean(l, e)
    return hbar_true(L, G, H, nu, g, model)


def hbar_closed_true(L, G, H, nu, g, model):
    """Closed-form route: generated cosine table in (nu, g)."""
    e = eccentricity_from_momenta(L, G)
    _check_ecc(e)
    eta = math.sqrt(1.0 - float(e) ** 2)
    table = _secondorder.hbar_cos_table(float(e), eta, L, G, H)
    nu = np.asarray(nu, dtype=float)
    g = np.asarray(g, dtype=float)
    out = np.zeros(np.broadcast(nu, g).shape)
    for (k, m), a in table.items():
        out = out + a * np.cos(k * nu + m * g)
    return model.mu**6 * model.R**4 * out


def hbar_closed(L, G, H, l, g, model):
    e = eccentricity_from_momenta(L, G)
    nu = true_from_mean(l, e)
    return hbar_closed_true(L, G, H, nu, g, model)


def hbar_constant_bracket(L, G, H, model):
    """Coefficient of (a/r)^0 in the closed-form expansion of the cross term:
    3 mu^6 R^4 (G^2 - 3H^2)^2 / (32 G^10 L^4)."""
    return 3.0 * model.mu**6 * model.R**4 * (G * G - 3.0 * H * H) ** 2 / (32.0 * G**10 * L**4)


# k2 = mu^6 R^4 / 128 * sum c * G^(i-11) H^j L^(k-5) over the monomials below.
_K2_MONOMIALS = (
    (15.0, 6, 0, 0),
    (12.0, 5, 0, 1),
    (-54.0, 4, 2, 0),
    (-15.0, 4, 0, 2),
    (-72.0, 3, 2, 1),
    (15.0, 2, 4, 0),
    (30.0, 2, 2, 2),
    (108.0, 1, 4, 1),
    (105.0, 0, 4, 2),
)


def k2(L, G, H, model):
    """Second-order mean Hamiltonian term, closed form.

    Derived symbolically as the (l, g) average of the compositional cross
    term (scripts/derive_second_order.py asserts the polynomial); verified
    against dnu-weighted quadrature in the tests.
    """
    acc = 0.0
    for c, ig, jh, kl in _K2_MONOMIALS:
        acc += c * G ** (ig - 11) * H**jh * L ** (kl - 5)
    return model.mu**6 * model.R**4 * acc / 128.0


def dk2(L, G, H, model):
    """Gradient of k2 with respect to (L, G, H)."""
    dL = dG = dH = 0.0
    for c, ig, jh, kl in _K2_MONOMIALS:
        dG += c * (ig - 11) * G ** (ig - 12) * H**jh * L ** (kl - 5)
        dL += c * (kl - 5) * G ** (ig - 11) * H**jh * L ** (kl - 6)
        if jh:
            dH += c * jh * G ** (ig - 11) * H ** (jh - 1) * L ** (kl - 5)
    f = model.mu**6 * model.R**4 / 128.0
    return np.array([f * dL, f * dG, f * dH])


def k2_quadrature(L, G, H, model, nodes_nu=128, nodes_g=64):
    """(l, g) average of the compositional cross term, dnu-weighted."""
    e = eccentricity_from_momenta(L, G)
    _check_ecc(e)
    return torus_average_weighted(
        lambda NU, GG: hbar_true(L, G, H, NU, GG, model), float(e), nodes_nu, nodes_g
    )


def long_period_coefficient(L, G, H, model):
    """Closed-form coefficient c2 of the long-period remainder c2*cos(2g),
    the l-average of the periodic part of the cross term."""
    return model.mu**6 * model.R**4 * _secondorder.long_period_cos2(L, G, H)


class SecondOrderTables:
    """Spectral solution tables for the second-order generator.

    Built from samples of a source field f(l, g) on a uniform torus grid.
    The defining equation is w1 * dS2/dl + f - <f> = 0 at fixed g.  Writing
    f - <f> = f_osc(l, g) + ramp(g), where f_osc has zero l-mean at every g
    and ramp(g) = <f>_l(g) - <f>, the full solution is

        S2_full = -(A(l, g) + ramp(g) * l) / w1,

    with A the zero-mean l-antiderivative of f_osc.  Only the periodic part
    -A/w1 is single-valued on the torus; the canonical map uses that part,
    while pde_dl() keeps the ramp so the defining equation is satisfied
    exactly.  value() has zero l-mean by construction.
    """

    def __init__(self, field, w1, nl=128, ng=32):
        if abs(w1) < 1e-12:
            raise DegenerateFrequencyError("w1 too small for the l-antiderivative")
        self.w1 = float(w1)
        self.nl = nl
        self.ng = ng
        lg = TWO_PI * np.arange(nl) / nl
        gg = TWO_PI * np.arange(ng) / ng
        LL, GGm = np.meshgrid(lg, gg, indexing="ij")
        F = np.asarray(field(LL, GGm), dtype=float)
        if F.shape != (nl, ng):
            raise DomainError("field must evaluate on the (nl, ng) grid")
        C = np.fft.fft2(F) / (nl * ng)
        kl = np.fft.fftfreq(nl, d=1.0 / nl).astype(int)
        kg = np.fft.fftfreq(ng, d=1.0 / ng).astype(int)
        # Zero the Nyquist rows; spectra here decay far below them.
        C[nl // 2, :] = 0.0
        C[:, ng // 2] = 0.0
        self.mean = float(C[0, 0].real)
        self.kl = kl
        self.kg = kg
        self._ramp_row = C[0, :].copy()
        self._ramp_row[0] = 0.0
        self._osc = C.copy()
        self._osc[0, :] = 0.0
        with np.errstate(divide="ignore", invalid="ignore"):
            self._anti = np.where(kl[:, None] != 0, self._osc / (1j * kl[:, None]), 0.0)

    def _synth(self, coeff, l, g):
        l = np.asarray(l, dtype=float)
        g = np.asarray(g, dtype=float)
        shape = np.broadcast(l, g).shape
        lf = np.broadcast_to(l, shape).ravel()
        gf = np.broadcast_to(g, shape).ravel()
        el = np.exp(1j * np.outer(self.kl, lf))
        eg = np.exp(1j * np.outer(self.kg, gf))
        vals = np.einsum("km,kp,mp->p", coeff, el, eg).real
        return vals.reshape(shape) if shape else float(vals[0])

    def value(self, l, g):
        """Periodic part of S2, zero l-mean; the map's generator term."""
        return -self._synth(self._anti, l, g) / self.w1

    def dl(self, l, g):
        """d/dl of the periodic part."""
        return -self._synth(self._osc, l, g) / self.w1

    def dg(self, l, g):
        """d/dg of the periodic part."""
        return -self._synth(self._anti * (1j * self.kg)[None, :], l, g) / self.w1

    def ramp(self, g):
        """Long-period remainder of the source field at g (zero g-mean)."""
        g = np.asarray(g, dtype=float)
        shape = g.shape
        gf = np.atleast_1d(g).ravel()
        eg = np.exp(1j * np.outer(self.kg, gf))
        vals = (self._ramp_row @ eg).real
        return vals.reshape(shape) if shape else float(vals[0])

    def pde_dl(self, l, g):
        """d S2/dl of the full (ramped) solution; satisfies the defining
        equation with the complete zero-mean source."""
        return self.dl(l, g) - self.ramp(g) / self.w1


@functools.lru_cache(maxsize=128)
def second_order_tables(L, G, H, model, nl=128, ng=32):
    """Cached satellite-problem tables: source field is the compositional
    cross term, frequency is dh0/dL."""
    e = eccentricity_from_momenta(L, G)
    _check_ecc(e)

    def field(LL, GGm):
        nu = true_from_mean(LL, float(e))
        return hbar_true(L, G, H, nu, GGm, model)

    return SecondOrderTables(field, dh0_dL(L, model), nl=nl, ng=ng)


def s2(L, G, H, l, g, model):
    """Periodic (torus single-valued, zero l-mean) part of the second-order
    generator."""
    return second_order_tables(L, G, H, model).value(l, g)


def ds2_dl(L, G, H, l, g, model):
    return second_order_tables(L, G, H, model).dl(l, g)


def ds2_dg(L, G, H, l, g, model):
    return second_order_tables(L, G, H, model).dg(l, g)


def ds2_dl_solution(L, G, H, l, g, model):
    """d S2/dl including the long-period ramp; the exact PDE solution."""
    return second_order_tables(L, G, H, model).pde_dl(l, g)


class MeanHamiltonian:
    """K(P) = h0 + J2 k1 (+ J2^2 k2) and its momentum gradient."""

    def __init__(self, model, order=2):
        if order not in (1, 2):
            raise DomainError("order must be 1 or 2")
        self.model = model
        self.order = order

    def value(self, L, G, H, j2):
        mu = self.model.mu
        out = mu * mu / (2.0 * L * L) + j2 * k1(L, G, H, self.model)
        if self.order == 2:
            out += j2 * j2 * k2(L, G, H, self.model)
        return out

    def gradient(self, L, G, H, j2):
        grad = np.array([dh0_dL(L, self.model), 0.0, 0.0]) + j2 * dk1(L, G, H, self.model)
        if self.order == 2:
            grad = grad + j2 * j2 * dk2(L, G, H, self.model)
        return grad
