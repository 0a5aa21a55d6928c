"""Mean <-> osculating canonical map.

The mixed-variable generator S(P, q) = P.q + J2*S1(P, q) + J2^2*S2(P, q)
defines the map implicitly through p = dS/dq, Q = dS/dP.  The forward
direction solves for the osculating angles q given (P, Q); the inverse
solves for the mean momenta P given (p, q).  Both are damped-free Newton
iterations with a frozen first-order Jacobian.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import vonzeipel as vz
from .elements import DelaunayState, PhysicalModel, normalize_angle
from .errors import DomainError, MapError

FD_REL = 1e-6
J2_GUARD = 0.01


def momentum_scale(model: PhysicalModel) -> float:
    """sqrt(mu R): Delaunay momenta in these units are O(1) for low orbits."""
    return math.sqrt(model.mu * model.R)


def _wedge_step(h, P, k):
    """Cap a momentum step so L >= G stays true at the probe points."""
    room = 0.25 * (P[0] - P[1])
    if k in (0, 1) and room > 0.0:
        h = min(h, room)
    return max(h, 1e-300)


def _wrap_diff(y1, y0):
    d = y1 - y0
    d[3:] = (d[3:] + np.pi) % (2.0 * np.pi) - np.pi
    return d


@dataclass(frozen=True)
class GeneratingSeries:
    """Gradients of the non-trivial part of S, i.e. S - P.q."""

    model: PhysicalModel
    order: int = 2

    def __post_init__(self):
        if self.order not in (1, 2):
            raise DomainError("order must be 1 or 2")

    def grad_q(self, P, q, j2):
        """(dS/dl, dS/dg, dS/dh) minus the P.q part.  dS/dh = 0 throughout:
        the field is axisymmetric."""
        L, G, H = P
        l, g = q[0], q[1]
        out = j2 * np.array([
            vz.ds1_dl(L, G, H, l, g, self.model),
            vz.ds1_dg(L, G, H, l, g, self.model),
            0.0,
        ])
        if self.order == 2:
            tab = vz.second_order_tables(L, G, H, self.model)
            out += j2 * j2 * np.array([tab.dl(l, g), tab.dg(l, g), 0.0])
        return out

    def grad_P(self, P, q, j2):
        """(dS/dL, dS/dG, dS/dH) minus the P.q part.  The S2 term is a
        central difference over rebuilt coefficient tables."""
        L, G, H = P
        l, g = q[0], q[1]
        out = j2 * vz.ds1_dP(L, G, H, l, g, self.model)
        if self.order == 2:
            fd = np.zeros(3)
            for k in range(3):
                h = _wedge_step(FD_REL * max(1.0, abs(P[k])), P, k)
                hi = P.copy()
                lo = P.copy()
                hi[k] += h
                lo[k] -= h
                up = vz.second_order_tables(hi[0], hi[1], hi[2], self.model).value(l, g)
                dn = vz.second_order_tables(lo[0], lo[1], lo[2], self.model).value(l, g)
                fd[k] = (up - dn) / (2.0 * h)
            out += j2 * j2 * fd
        return out


class CanonicalMap:
    """Osculating (p, q) <-> mean (P, Q) Delaunay map at a fixed J2."""

    def __init__(self, model: PhysicalModel, j2=None, order=2, tol=1e-12, maxiter=25):
        self.model = model
        self.j2 = model.j2 if j2 is None else float(j2)
        if abs(self.j2) >= J2_GUARD:
            raise DomainError(f"|J2| = {abs(self.j2):.3e} exceeds the {J2_GUARD} guard")
        self.series = GeneratingSeries(model, order)
        self.order = order
        self.tol = float(tol)
        self.maxiter = int(maxiter)

    # -- Newton drivers -----------------------------------------------------

    def _solve(self, residual, jac_at, x0, scale):
        x = x0.copy()
        polish = False
        for its in range(1, self.maxiter + 1):
            F = residual(x)
            if not np.all(np.isfinite(F)):
                raise MapError("residual became non-finite")
            x = x + np.linalg.solve(jac_at(x), -F)
            if polish:
                return x, its
            step = np.abs(F / scale).max()
            if step <= self.tol:
                polish = True  # one extra pass sharpens the FD-Jacobian limit
        raise MapError(
            f"no convergence in {self.maxiter} iterations, scaled step {step:.3e}"
        )

    def _jac_angles(self, P, q):
        """I + J2 * d(dS1/dP)/d(l,g), frozen quasi-Newton matrix."""
        L, G, H = P
        jac = np.eye(3)
        for col, h in ((0, FD_REL), (1, FD_REL)):
            qp, qm = q.copy(), q.copy()
            qp[col] += h
            qm[col] -= h
            dcol = (
                vz.ds1_dP(L, G, H, qp[0], qp[1], self.model)
                - vz.ds1_dP(L, G, H, qm[0], qm[1], self.model)
            ) / (2.0 * h)
            jac[:, col] += self.j2 * dcol
        return jac

    def _jac_momenta(self, P, q):
        """I + J2 * d(dS1/dq)/dP, frozen quasi-Newton matrix."""
        l, g = q[0], q[1]
        jac = np.eye(3)
        for col in range(3):
            h = _wedge_step(FD_REL * max(1.0, abs(P[col])), P, col)
            hi, lo = P.copy(), P.copy()
            hi[col] += h
            lo[col] -= h
            up = np.array([
                vz.ds1_dl(hi[0], hi[1], hi[2], l, g, self.model),
                vz.ds1_dg(hi[0], hi[1], hi[2], l, g, self.model),
                0.0,
            ])
            dn = np.array([
                vz.ds1_dl(lo[0], lo[1], lo[2], l, g, self.model),
                vz.ds1_dg(lo[0], lo[1], lo[2], l, g, self.model),
                0.0,
            ])
            jac[:, col] += self.j2 * (up - dn) / (2.0 * h)
        return jac

    # -- the map ------------------------------------------------------------

    def mean_to_osculating(self, mean: DelaunayState, return_info=False):
        P = mean.momenta
        Q = mean.angles
        if self.j2 == 0.0:
            return (mean, {"iterations": 0}) if return_info else mean
        try:
            q, its = self._solve(
                lambda qq: qq + self.series.grad_P(P, qq, self.j2) - Q,
                lambda qq: self._jac_angles(P, qq),
                Q,
                np.ones(3),
            )
            p = P + self.series.grad_q(P, q, self.j2)
            osc = DelaunayState(p[0], p[1], p[2], q[0], q[1], q[2])
        except DomainError as exc:
            raise MapError(f"map left the admissible domain: {exc}") from exc
        if return_info:
            return osc, {"iterations": its}
        return osc

    def osculating_to_mean(self, osc: DelaunayState, return_info=False):
        p = osc.momenta
        q = osc.angles
        if self.j2 == 0.0:
            return (osc, {"iterations": 0}) if return_info else osc
        scale = np.maximum(1.0, np.abs(p))
        try:
            P, its = self._solve(
                lambda PP: PP + self.series.grad_q(PP, q, self.j2) - p,
                lambda PP: self._jac_momenta(PP, q),
                p,
                scale,
            )
            Q = q + self.series.grad_P(P, q, self.j2)
            mean = DelaunayState(P[0], P[1], P[2], Q[0], Q[1], Q[2])
        except DomainError as exc:
            raise MapError(f"map left the admissible domain: {exc}") from exc
        if return_info:
            return mean, {"iterations": its}
        return mean

    # -- derived linear objects ----------------------------------------------

    def _apply(self, x, direction):
        st = DelaunayState(x[0], x[1], x[2], x[3], x[4], x[5])
        if direction == "mean_to_osculating":
            out = self.mean_to_osculating(st)
        elif direction == "osculating_to_mean":
            out = self.osculating_to_mean(st)
        else:
            raise DomainError(f"unknown direction {direction!r}")
        return np.concatenate([out.momenta, out.angles])

    def map_jacobian(self, at: DelaunayState, direction="mean_to_osculating", scaled=False):
        """Central finite-difference Jacobian with one Richardson pass.

        Differencing runs in momentum units of sqrt(mu R) so that all six
        variables are O(1); `scaled=True` returns that well-conditioned
        matrix (itself symplectic, since the unit change has block-diagonal
        Jacobian T with T J T^t proportional to J), `scaled=False` converts
        back to km^2/s momenta.
        """
        s = momentum_scale(self.model)
        x0 = np.concatenate([at.momenta / s, at.angles])

        def f(xs):
            x = xs.copy()
            x[:3] *= s
            y = self._apply(x, direction)
            y[:3] /= s
            return y

        def table(h_fracs):
            M = np.empty((6, 6))
            for k in range(6):
                h = h_fracs[k]
                xp, xm = x0.copy(), x0.copy()
                xp[k] += h
                xm[k] -= h
                M[:, k] = _wrap_diff(f(xp), f(xm)) / (2.0 * h)
            return M

        steps = FD_REL * np.maximum(1.0, np.abs(x0))
        room = 0.25 * (at.L - at.G) / s  # keeps momentum probes inside G <= L
        if room > 0.0:
            steps[0] = min(steps[0], room)
            steps[1] = min(steps[1], room)
        coarse = table(steps)
        fine = table(steps / 2.0)
        M = (4.0 * fine - coarse) / 3.0
        if scaled:
            return M
        out = M.copy()
        out[:3, 3:] *= s
        out[3:, :3] /= s
        return out

    def transform_force(self, f, mean: DelaunayState):
        """Push a generalized force 6-vector (f1 on momenta, f2 on angles)
        at the osculating point to the mean chart:
        F1 = D^t f1 - B^t f2, F2 = -C^t f1 + A^t f2 with [A B; C D] the
        mean->osculating Jacobian."""
        f = np.asarray(f, dtype=float)
        if f.shape != (6,):
            raise DomainError("force must be a 6-vector")
        M = self.map_jacobian(mean, "mean_to_osculating")
        A, B, C, D = M[:3, :3], M[:3, 3:], M[3:, :3], M[3:, 3:]
        f1, f2 = f[:3], f[3:]
        return np.concatenate([D.T @ f1 - B.T @ f2, -C.T @ f1 + A.T @ f2])


def first_order_displacement(mean: DelaunayState, model: PhysicalModel, j2):
    """Leading-order osc minus mean offset predicted by the generator:
    (J2 dS1/dq, -J2 dS1/dP) at the mean point."""
    L, G, H = mean.momenta
    l, g = mean.l, mean.g
    dq = np.array([
        vz.ds1_dl(L, G, H, l, g, model),
        vz.ds1_dg(L, G, H, l, g, model),
        0.0,
    ])
    dP = vz.ds1_dP(L, G, H, l, g, model)
    return np.concatenate([j2 * dq, -j2 * dP])
