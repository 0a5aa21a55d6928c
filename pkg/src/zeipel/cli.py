"""Batch front end: propagate / compare / verify / elements.

Configuration is a single JSON document; every field has a default and the
merged result can be inspected with --print-config.  Exit codes: 0 ok,
1 verification failure, 2 usage or config error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from . import symplectic as symp
from . import vonzeipel as vz
from .elements import (
    CartesianState,
    DelaunayState,
    EARTH,
    KeplerianElements,
    PhysicalModel,
    cartesian_to_kep,
    delaunay_to_kep,
    kep_to_cartesian,
    kep_to_delaunay,
    kepler_solve,
    true_from_mean,
)
from .errors import DomainError, UsageError, ZeipelError
from .hamiltonian import dh0_dL, h1_periodic_true, h1_true
from .propagator import compare, mean_history, propagate_analytic, propagate_oracle
from .transform import CanonicalMap

CSV_HEADER = "t,a,e,i,raan,argp,M,x,y,z,vx,vy,vz,L,G,H,l,g,h"


@dataclass(frozen=True)
class RunConfig:
    mu: float = EARTH.mu
    R: float = EARTH.R
    zonal: tuple = EARTH.zonal
    a: float = 7000.0
    e: float = 0.01
    i: float = 0.5
    raan: float = 0.3
    argp: float = 1.1
    mean_anom: float = 0.2
    t0: float = 0.0
    t1: float = 58285.0
    count: int = 401
    step: float | None = None
    order: int = 2
    oracle_nmax: int | None = None
    out_dir: str = "out"
    seed: int = 20260818
    tolerance_scale: float = 1.0

    def validate(self):
        if not self.t1 > self.t0:
            raise UsageError("grid requires t1 > t0")
        if self.step is not None and not self.step > 0:
            raise UsageError("grid step must be positive")
        if self.step is None and self.count < 2:
            raise UsageError("grid count must be at least 2")
        if self.order not in (1, 2):
            raise UsageError("order must be 1 or 2")
        return self

    @property
    def model(self):
        return PhysicalModel(self.mu, self.R, tuple(self.zonal))

    @property
    def elements(self):
        return KeplerianElements(self.a, self.e, self.i, self.raan, self.argp, self.mean_anom)

    @property
    def times(self):
        if self.step is not None:
            n = int(np.floor((self.t1 - self.t0) / self.step)) + 1
            return self.t0 + self.step * np.arange(n)
        return np.linspace(self.t0, self.t1, self.count)

    def as_document(self):
        doc = {
            "model": {"mu": self.mu, "R": self.R, "zonal": list(self.zonal)},
            "elements": {
                "a": self.a, "e": self.e, "i": self.i,
                "raan": self.raan, "argp": self.argp, "mean_anom": self.mean_anom,
            },
            "grid": {"t0": self.t0, "t1": self.t1, "count": self.count, "step": self.step},
            "run": {
                "order": self.order, "oracle_nmax": self.oracle_nmax,
                "out_dir": self.out_dir, "seed": self.seed,
            },
            "verify": {"tolerance_scale": self.tolerance_scale},
        }
        return doc


_SECTION_FIELDS = {
    "model": ("mu", "R", "zonal"),
    "elements": ("a", "e", "i", "raan", "argp", "mean_anom"),
    "grid": ("t0", "t1", "count", "step"),
    "run": ("order", "oracle_nmax", "out_dir", "seed"),
    "verify": ("tolerance_scale",),
}


def load_config(path=None) -> RunConfig:
    cfg = RunConfig()
    if path is None:
        return cfg
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise UsageError("config document must be a JSON object")
    updates = {}
    for section, payload in doc.items():
        if section not in _SECTION_FIELDS:
            raise UsageError(f"unknown config section {section!r}")
        if not isinstance(payload, dict):
            raise UsageError(f"config section {section!r} must be an object")
        for key, value in payload.items():
            if key not in _SECTION_FIELDS[section]:
                raise UsageError(f"unknown config key {section}.{key}")
            updates[key] = tuple(value) if key == "zonal" else value
    return replace(cfg, **updates)


def _fmt(x):
    return "%.17g" % float(x)


def write_ephemeris_csv(path, eph):
    lines = [CSV_HEADER]
    for k in range(len(eph)):
        el, cs, st = eph.kep[k], eph.cart[k], eph.delaunay[k]
        row = [
            eph.t[k],
            el.a, el.e, el.i, el.raan, el.argp, el.mean_anom,
            cs.r[0], cs.r[1], cs.r[2], cs.v[0], cs.v[1], cs.v[2],
            st.L, st.G, st.H, st.l, st.g, st.h,
        ]
        lines.append(",".join(_fmt(x) for x in row))
    Path(path).write_text("\n".join(lines) + "\n")


# -- commands ----------------------------------------------------------------


def cmd_propagate(cfg: RunConfig, oracle: bool, stdout):
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    model = cfg.model
    eph_a = propagate_analytic(cfg.elements, cfg.times, model, order=cfg.order)
    write_ephemeris_csv(out / "analytic.csv", eph_a)
    stdout.write(f"analytic ephemeris: {out / 'analytic.csv'} ({len(eph_a)} rows)\n")
    if oracle:
        cart0 = kep_to_cartesian(cfg.elements, model)
        eph_o = propagate_oracle(cart0, cfg.times, model, cfg.oracle_nmax)
        write_ephemeris_csv(out / "oracle.csv", eph_o)
        stdout.write(f"oracle ephemeris: {out / 'oracle.csv'} ({len(eph_o)} rows)\n")
    return 0


def cmd_compare(cfg: RunConfig, oracle: bool, stdout):
    if not oracle:
        raise UsageError("compare requires --oracle (nothing to compare against)")
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    model = cfg.model
    times = cfg.times
    lines = []

    eph_a = propagate_analytic(cfg.elements, times, model, order=cfg.order)
    eph_o = propagate_oracle(kep_to_cartesian(cfg.elements, model), times, model, cfg.oracle_nmax)
    rep = compare(eph_a, eph_o)
    lines.append(f"# analytic(order={cfg.order}) vs oracle, J2={_fmt(model.j2)}")
    lines.append(f"max_pos_err_km {_fmt(rep.max_pos_err)}")
    lines.append(f"rms_pos_err_km {_fmt(rep.rms_pos_err)}")

    lines.append("# halving table: J2 max_pos_err_km ptp_L ptp_G ptp_H")
    errs = []
    ptps = []
    for factor in (1.0, 0.5, 0.25):
        m = model.with_j2(model.j2 * factor)
        ea = propagate_analytic(cfg.elements, times, m, order=cfg.order)
        eo = propagate_oracle(kep_to_cartesian(cfg.elements, m), times, m, cfg.oracle_nmax)
        r = compare(ea, eo)
        ptp = np.ptp(mean_history(eo, m, order=cfg.order), axis=0)
        errs.append(r.max_pos_err)
        ptps.append(ptp)
        lines.append(" ".join(_fmt(x) for x in (m.j2, r.max_pos_err, *ptp)))
    lines.append("# successive ratios: position then momenta ptp")
    for k in (0, 1):
        ratio_pos = errs[k] / errs[k + 1]
        ratio_mom = ptps[k] / ptps[k + 1]
        lines.append(" ".join(_fmt(x) for x in (ratio_pos, *ratio_mom)))

    text = "\n".join(lines) + "\n"
    (out / "compare.txt").write_text(text)
    stdout.write(text)
    return 0


def _verify_checks(cfg: RunConfig):
    """Yield (name, measured, tolerance) triples for the verification suite."""
    model = cfg.model
    rng = np.random.default_rng(cfg.seed)
    scale = cfg.tolerance_scale

    def momenta_draw():
        a = rng.uniform(6800.0, 9500.0)
        e = rng.uniform(0.01, 0.4)
        inc = rng.uniform(0.1, 3.0)
        L = np.sqrt(model.mu * a)
        G = L * np.sqrt(1.0 - e * e)
        return L, G, G * np.cos(inc)

    # Kepler residual across the admissible band.
    worst = 0.0
    for e in np.linspace(0.0, 0.9, 10):
        M = rng.uniform(0.0, 2.0 * np.pi, size=64)
        E = kepler_solve(M, e)
        worst = max(worst, float(np.abs(E - e * np.sin(E) - M).max()))
    yield "kepler-residual", worst, 1e-13 * scale

    # Operator algebra on random trigonometric polynomials.
    op = vz.AveragingOperator()
    worst = 0.0
    for _ in range(20):
        coef = rng.normal(size=4)
        ka, kb = rng.integers(1, 4, size=2)

        def f(x, y, c=coef, ka=ka, kb=kb):
            return c[0] + c[1] * np.cos(ka * x) + c[2] * np.sin(kb * y) + c[3] * np.cos(x + y)

        sec = op.secular(f, 2)
        worst = max(worst, abs(sec - coef[0]))
        worst = max(worst, abs(op.secular(lambda x, y: f(x, y) - sec, 2)))
        q = rng.uniform(0.0, 2.0 * np.pi, size=2)
        pval = op.periodic(f, q)
        worst = max(worst, abs(op.periodic(lambda x, y: f(x, y) - sec, q) - pval))
        worst = max(worst, abs(op.secular(lambda x, y: sec + 0.0 * x, 2) - sec))
    yield "operator-algebra", worst, 1e-12 * scale

    # First-order average against the dnu-weighted quadrature.
    worst = 0.0
    for _ in range(20):
        L, G, H = momenta_draw()
        e = np.sqrt(max(0.0, 1.0 - (G / L) ** 2))
        qavg = vz.torus_average_weighted(
            lambda nu, g: h1_true(L, G, H, nu, g, model), e
        )
        closed = vz.k1(L, G, H, model)
        worst = max(worst, abs(qavg - closed) / abs(closed))
    yield "k1-vs-quadrature", worst, 1e-10 * scale

    # First-order generator equation on an angle grid.
    worst = 0.0
    lg = np.linspace(0.0, 2.0 * np.pi, 16, endpoint=False)
    ll, gg = np.meshgrid(lg, lg, indexing="ij")
    for _ in range(5):
        L, G, H = momenta_draw()
        w1 = dh0_dL(L, model)
        nu = true_from_mean(ll, np.sqrt(max(0.0, 1.0 - (G / L) ** 2)))
        res = w1 * vz.ds1_dl_true(L, G, H, nu, gg, model) + h1_periodic_true(
            L, G, H, nu, gg, model
        )
        ref = np.abs(h1_periodic_true(L, G, H, nu, gg, model)).max()
        worst = max(worst, float(np.abs(res).max()) / max(1.0, ref))
    yield "s1-pde-residual", worst, 1e-9 * scale

    # Second-order generator equation, spectral solution with its ramp.
    worst = 0.0
    for _ in range(3):
        L, G, H = momenta_draw()
        tab = vz.second_order_tables(L, G, H, model)
        pts_l = rng.uniform(0.0, 2.0 * np.pi, size=16)
        pts_g = rng.uniform(0.0, 2.0 * np.pi, size=16)
        field = np.array([vz.hbar(L, G, H, l, g, model) for l, g in zip(pts_l, pts_g)])
        per = field - tab.mean
        res = tab.w1 * tab.pde_dl(pts_l, pts_g) + per
        worst = max(worst, float(np.abs(res).max()) / max(1.0, float(np.abs(per).max())))
    yield "s2-pde-residual", worst, 1e-7 * scale

    # Second-order secular term, closed form against quadrature.
    worst = 0.0
    for _ in range(5):
        L, G, H = momenta_draw()
        closed = vz.k2(L, G, H, model)
        quad = vz.k2_quadrature(L, G, H, model)
        worst = max(worst, abs(closed - quad) / abs(closed))
    yield "k2-two-routes", worst, 1e-8 * scale

    # Quadratic cross term, compositional against the cosine-table form.
    worst = 0.0
    for _ in range(5):
        L, G, H = momenta_draw()
        for _ in range(4):
            l, g = rng.uniform(0.0, 2.0 * np.pi, size=2)
            a_val = vz.hbar(L, G, H, l, g, model)
            b_val = vz.hbar_closed(L, G, H, l, g, model)
            worst = max(worst, abs(a_val - b_val) / max(1.0, abs(a_val)))
    yield "hbar-two-routes", worst, 1e-8 * scale

    # Map round trip and symplecticity on the configured orbit family.
    cmap = CanonicalMap(model, order=cfg.order)
    worst_rt = 0.0
    for _ in range(5):
        L, G, H = momenta_draw()
        st = DelaunayState(L, G, H, *rng.uniform(0.0, 2.0 * np.pi, size=3))
        osc = cmap.mean_to_osculating(st)
        back = cmap.osculating_to_mean(osc)
        d = np.concatenate([
            back.momenta - st.momenta,
            (back.angles - st.angles + np.pi) % (2.0 * np.pi) - np.pi,
        ])
        worst_rt = max(worst_rt, float(np.abs(d).max()))
    yield "map-roundtrip", worst_rt, 1e-9 * scale

    worst = 0.0
    for _ in range(2):
        L, G, H = momenta_draw()
        st = DelaunayState(L, G, H, *rng.uniform(0.0, 2.0 * np.pi, size=3))
        M = cmap.map_jacobian(st, "mean_to_osculating", scaled=True)
        worst = max(worst, symp.symplectic_residual(M))
    yield "map-jacobian-symplectic", worst, 1e-6 * scale

    worst = 0.0
    for _ in range(20):
        M = symp.random_symplectic(rng)
        worst = max(worst, max(symp.block_identities(M).values()))
        worst = max(worst, float(np.abs(M @ symp.symplectic_inverse(M) - np.eye(6)).max()))
    yield "block-identities", worst, 1e-8 * scale

    # J2 = 0 collapses the map to the identity, bit for bit.
    st = DelaunayState(*momenta_draw(), *rng.uniform(0.0, 2.0 * np.pi, size=3))
    ident = CanonicalMap(model, j2=0.0).mean_to_osculating(st)
    worst = float(
        np.abs(np.concatenate([ident.momenta - st.momenta, ident.angles - st.angles])).max()
    )
    yield "map-identity-at-zero", worst, 0.0


def cmd_verify(cfg: RunConfig, stdout):
    failures = []
    for name, measured, tol in _verify_checks(cfg):
        ok = measured <= tol
        stdout.write(f"{'PASS' if ok else 'FAIL'} {name}: {measured:.3e} (tol {tol:.3e})\n")
        if not ok:
            failures.append(name)
    if failures:
        stdout.write(f"verification failed: {', '.join(failures)}\n")
        return 1
    stdout.write("verification passed\n")
    return 0


_STATE_KEYS = {
    "kep": ("a", "e", "i", "raan", "argp", "mean_anom"),
    "delaunay": ("L", "G", "H", "l", "g", "h"),
    "cartesian": ("r", "v"),
}


def _state_from_json(direction, doc):
    kind = direction.split("_")[0]
    keys = _STATE_KEYS[kind]
    missing = [k for k in keys if k not in doc]
    if missing:
        raise UsageError(f"state for {direction} missing keys: {', '.join(missing)}")
    if kind == "kep":
        return KeplerianElements(**{k: doc[k] for k in keys})
    if kind == "delaunay":
        return DelaunayState(**{k: doc[k] for k in keys})
    return CartesianState(np.asarray(doc["r"], dtype=float), np.asarray(doc["v"], dtype=float))


def cmd_elements(cfg: RunConfig, direction, state_json, stdout):
    conv = {
        "kep_to_delaunay": kep_to_delaunay,
        "delaunay_to_kep": delaunay_to_kep,
        "kep_to_cartesian": kep_to_cartesian,
        "cartesian_to_kep": cartesian_to_kep,
    }
    if direction not in conv:
        raise UsageError(f"unknown direction {direction!r}")
    if state_json is not None:
        try:
            doc = json.loads(state_json)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--state is not valid JSON: {exc}") from exc
        state = _state_from_json(direction, doc)
    elif direction.startswith("kep_"):
        state = cfg.elements
    else:
        raise UsageError(f"direction {direction} requires --state")
    out = conv[direction](state, cfg.model)
    if isinstance(out, KeplerianElements):
        doc = {k: getattr(out, k) for k in _STATE_KEYS["kep"]}
    elif isinstance(out, DelaunayState):
        doc = {k: getattr(out, k) for k in _STATE_KEYS["delaunay"]}
    else:
        doc = {"r": list(out.r), "v": list(out.v)}
    stdout.write(json.dumps(doc) + "\n")
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="zeipel", description=__doc__)
    p.add_argument("command", choices=["propagate", "compare", "verify", "elements"])
    p.add_argument("--config", help="JSON config path; defaults apply when omitted")
    p.add_argument("--order", type=int, choices=[1, 2], help="theory order override")
    p.add_argument("--oracle", action="store_true", help="also run the numerical oracle")
    p.add_argument("--out", help="output directory override")
    p.add_argument("--seed", type=int, help="random seed override")
    p.add_argument("--print-config", action="store_true", help="dump merged config and exit")
    p.add_argument("--direction", help="elements: conversion name, e.g. kep_to_delaunay")
    p.add_argument("--state", help="elements: input state as a JSON object")
    return p


def main(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        cfg = load_config(args.config)
        if args.order is not None:
            cfg = replace(cfg, order=args.order)
        if args.out is not None:
            cfg = replace(cfg, out_dir=args.out)
        if args.seed is not None:
            cfg = replace(cfg, seed=args.seed)
        cfg.validate()
        if args.print_config:
            stdout.write(json.dumps(cfg.as_document(), indent=2, sort_keys=True) + "\n")
            return 0
        if args.command == "propagate":
            return cmd_propagate(cfg, args.oracle, stdout)
        if args.command == "compare":
            return cmd_compare(cfg, args.oracle, stdout)
        if args.command == "verify":
            return cmd_verify(cfg, stdout)
        return cmd_elements(cfg, args.direction, args.state, stdout)
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ZeipelError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
