"""Regenerate src/zeipel/_secondorder.py.

Symbolic derivation of the closed-form pieces of the second-order averaging
step.  Everything is done with exact Fourier algebra on the unit torus:
expressions are Laurent polynomials in z = exp(i*nu) and w = exp(i*g) with
rational-function coefficients in (e, eta, L, G, H), where eta^2 = 1 - e^2.

Derived objects, all scaled so the caller multiplies by mu^6 R^4:
  1. the full cosine table of the quadratic cross term
         hb = (3/2 L^4) (dS1/dl)^2 + dH1/dL * dS1/dl + dH1/dG * dS1/dg
     as sum a[(k,m)] cos(k*nu + m*g),
  2. the l-averaged long-period remainder m(g) = <hb>_l - <hb>_{l,g}
     = c2 cos(2g) + c4 cos(4g),
  3. the secular average <hb>_{l,g}, asserted equal to the hand-written
     polynomial used by zeipel.vonzeipel.k2.

The l-average uses dl = (1/eta) (r/a)^2 dnu, i.e. <f>_l is the plain nu
average of f * rho^-2 / eta, which is exact term by term because every
rho power in hb is >= 2 except the constant.

Run from the repository root:  python scripts/derive_second_order.py
Output is deterministic for a fixed sympy version; cosmetic differences may
appear across sympy releases.
"""

import pathlib
from collections import defaultdict

import sympy as sp

e, eta, L, G, H = sp.symbols("e eta L G H", positive=True)
z, w = sp.symbols("z w")
I = sp.I

OUT_PATH = pathlib.Path(__file__).resolve().parents[1] / "src" / "zeipel" / "_secondorder.py"

cn = (z + 1 / z) / 2
sn = (z - 1 / z) / (2 * I)


def C(k):
    return (w**2 * z**k + w**-2 * z**-k) / 2


def S(k):
    return (w**2 * z**k - w**-2 * z**-k) / (2 * I)


# Building blocks, each as a list of (coefficient, rho_power) pairs.  The
# mu^4 R^2 (first order) and mu^2 R^2 (generator) prefactors are left out
# and restored as a single mu^6 R^4 factor by the runtime wrapper.
D1 = 3 * H**2 - G**2
D2 = 3 * (G**2 - H**2)
pref = 1 / (4 * G**5)
nu_e = (2 + e * cn) * sn / eta**2
rho_e = (cn + 2 * e + e**2 * cn) / eta**4
rho_nu = -e * sn / eta**2
e_L = G**2 / (e * L**3)
e_G = -G / (e * L**2)

# dS1/dl: constant + eta^3 rho^3 + trig * eta rho^2 pieces.
s1l_const = pref * (G**2 - 3 * H**2)
s1l_poly = [
    (-pref * (G**2 - 3 * H**2) * eta**3, 3),
    (pref * (G**2 - H**2) * (3 * C(2) + sp.Rational(3, 2) * e * C(1) + sp.Rational(3, 2) * e * C(3)) * eta, 2),
]
s1l_full = s1l_poly + [(s1l_const, 0)]

# dS1/dg.
s1g = pref * (G**2 - H**2) * (3 * C(2) + 3 * e * C(1) + e * C(3))

# dH1/dL and dH1/dG at fixed (l, g), chain rule through e(L,G) and nu(l,e).
q = sp.Rational(1, 4)
h1L = [
    (q * (-6) * (D1 + D2 * C(2)) / (L**7 * G**2), 3),
    (q * 3 * (rho_e + rho_nu * nu_e) * e_L * (D1 + D2 * C(2)) / (L**6 * G**2), 2),
    (q * D2 * (-2) * S(2) * nu_e * e_L / (L**6 * G**2), 3),
]
h1G = [
    (q * (-2) * (D1 + D2 * C(2)) / (L**6 * G**3), 3),
    (q * 3 * (rho_e + rho_nu * nu_e) * e_G * (D1 + D2 * C(2)) / (L**6 * G**2), 2),
    (q * (-2 * G + 6 * G * C(2) + D2 * (-2) * S(2) * nu_e * e_G) / (L**6 * G**2), 3),
]


def mul(A, B):
    return [(ca * cb, pa + pb) for ca, pa in A for cb, pb in B]


half_d2h0 = sp.Rational(3, 2) / L**4
terms = []
terms += [(half_d2h0 * c, p) for c, p in mul(s1l_poly, s1l_poly)]
terms += [(2 * half_d2h0 * s1l_const * c, p) for c, p in s1l_poly]
terms += mul(h1L, s1l_full)
terms += [(c * s1g, p) for c, p in h1G]
const_term = half_d2h0 * s1l_const**2  # the lone rho^0 piece

rho_z = {1: e / 2, 0: sp.Integer(1), -1: e / 2}  # rho * eta^2 as a z-Laurent dict


def conv(A, B):
    out = defaultdict(lambda: sp.Integer(0))
    for ka, ca in A.items():
        for kb, cb in B.items():
            out[ka + kb] += ca * cb
    return out


def rho_power(p):
    d = {0: sp.Integer(1)}
    for _ in range(p):
        d = conv(d, rho_z)
    return {k: c / eta ** (2 * p) for k, c in d.items()}


def laurent_dict(expr):
    """Collect {(kz, kw): coeff} of an expanded expression."""
    d = defaultdict(lambda: sp.Integer(0))
    for term in sp.Add.make_args(sp.expand(expr)):
        pd = term.as_powers_dict()
        kz = int(pd.get(z, 0))
        kw = int(pd.get(w, 0))
        d[(kz, kw)] += term / (z**kz * w**kw)
    return d


def fold_to_cosine(d):
    """Turn a conjugate-symmetric Laurent dict into {(k, m): cos coefficient}
    with canonical k > 0, or k = 0 and m >= 0.  Asserts sine parts vanish."""
    out = {}
    for (kz, km), c in d.items():
        if (kz, km) == (0, 0):
            coeff = sp.cancel(sp.together(c))
            if coeff != 0:
                out[(0, 0)] = coeff
            continue
        if kz < 0 or (kz == 0 and km < 0):
            continue
        cc = d.get((-kz, -km), sp.Integer(0))
        sin_part = sp.expand(c - cc)
        assert sin_part == 0, f"sine term survives at {(kz, km)}"
        coeff = sp.cancel(sp.together(sp.expand(c + cc)))
        if coeff != 0:
            out[(kz, km)] = coeff
    return out


print("building full Fourier table of the cross term ...")
flat = defaultdict(lambda: sp.Integer(0))
flat[(0, 0)] += const_term
for c, p in terms:
    rp = rho_power(p)
    for (kz, kw), cc in laurent_dict(c).items():
        for kr, cr in rp.items():
            flat[(kz + kr, kw)] += cc * cr
hbar_table = fold_to_cosine(flat)
print(f"  {len(hbar_table)} cosine entries, "
      f"k up to {max(k for k, _ in hbar_table)}, m in {sorted({m for _, m in hbar_table})}")

print("averaging over l (dnu-weighted) ...")
avg = defaultdict(lambda: sp.Integer(0))
for c, p in terms:
    rp = rho_power(p - 2)  # rho^p * rho^-2 from the measure
    for (kz, kw), cc in laurent_dict(c).items():
        cr = rp.get(-kz)
        if cr is not None:
            avg[kw] += cc * cr / eta
avg[0] += const_term  # <rho^0 * rho^-2>_nu / eta = 1 exactly

# Secular part: eliminate (e, eta) via eta^2 = 1 - e^2, eta = G/L.
k2_expr = sp.expand(avg[0])
k2_expr = sp.expand(k2_expr.subs(e**2, 1 - eta**2)).subs(eta, G / L)
k2_expr = sp.cancel(sp.together(k2_expr))
K2_HAND = (
    15 * G**6 + 12 * G**5 * L - 54 * G**4 * H**2 - 15 * G**4 * L**2
    - 72 * G**3 * H**2 * L + 15 * G**2 * H**4 + 30 * G**2 * H**2 * L**2
    + 108 * G * H**4 * L + 105 * H**4 * L**2
) / (128 * G**11 * L**5)
assert sp.cancel(k2_expr - K2_HAND) == 0, "secular average disagrees with the hand polynomial"
print("  secular average matches the hand-written k2 polynomial")

def on_manifold(expr):
    """Eliminate (e, eta) via eta^2 = 1 - e^2 and eta = G/L.  Valid only for
    expressions even in e; asserted below."""
    expr = sp.expand(expr)
    expr = sp.expand(expr.subs(e**2, 1 - eta**2))
    assert e not in expr.free_symbols, "odd powers of e survive"
    return sp.cancel(sp.together(sp.expand(expr.subs(eta, G / L))))


lp = {}
for m in (2, 4):
    c = avg.get(m, sp.Integer(0))
    cc = avg.get(-m, sp.Integer(0))
    sin_part = sp.expand(c - cc)
    assert sin_part == 0, f"sine term in the long-period remainder at m={m}"
    lp[m] = on_manifold(c + cc)
assert lp[4] == 0, "cos(4g) harmonic expected to cancel on eta = G/L"
assert lp[2] != 0
print("  long-period remainder reduces to a single cos(2g) harmonic")
assert all(sp.expand(avg.get(m, 0)) == 0 for m in avg if abs(m) not in (0, 2, 4))

# Spot check: the folded table must reproduce a direct float evaluation.
print("numeric spot check ...")
import math


def direct_eval(ev, ee, GG, HH, LL, nu, g):
    rho = (1 + ee * math.cos(nu)) / (1 - ee * ee)
    et = math.sqrt(1 - ee * ee)
    c2g = math.cos(2 * g + 2 * nu)
    s2g = math.sin(2 * g + 2 * nu)
    d1 = 3 * HH * HH - GG * GG
    d2 = 3 * (GG * GG - HH * HH)
    pr = 1 / (4 * GG**5)
    s1l = pr * ((GG**2 - 3 * HH**2) * (1 - et**3 * rho**3)
                + (GG**2 - HH**2) * et * rho**2 * (3 * c2g
                + 1.5 * ee * math.cos(2 * g + nu) + 1.5 * ee * math.cos(2 * g + 3 * nu)))
    s1gv = pr * (GG**2 - HH**2) * (3 * c2g + 3 * ee * math.cos(2 * g + nu) + ee * math.cos(2 * g + 3 * nu))
    nue = (2 + ee * math.cos(nu)) * math.sin(nu) / (1 - ee * ee)
    rhoe = (math.cos(nu) + 2 * ee + ee * ee * math.cos(nu)) / (1 - ee * ee) ** 2
    rhonu = -ee * math.sin(nu) / (1 - ee * ee)
    drho = rhoe + rhonu * nue
    eL = GG * GG / (ee * LL**3)
    eG = -GG / (ee * LL * LL)
    F = rho**3 * (d1 + d2 * c2g)
    dF = 3 * rho * rho * drho * (d1 + d2 * c2g) + rho**3 * d2 * (-2 * s2g) * nue
    hh1L = 0.25 * (-6 * F / (LL**7 * GG * GG) + dF * eL / (LL**6 * GG * GG))
    hh1G = 0.25 * (-2 * F / (LL**6 * GG**3)
                   + (dF * eG + rho**3 * (-2 * GG + 6 * GG * c2g)) / (LL**6 * GG * GG))
    return 1.5 / LL**4 * s1l * s1l + hh1L * s1l + hh1G * s1gv


for ee, GG, HH, LL, nuv, gv in [(0.2, 0.9, 0.4, 0.9 / math.sqrt(1 - 0.04), 0.7, 1.1),
                                (0.35, 1.3, -0.5, 1.3 / math.sqrt(1 - 0.1225), 2.9, 0.3)]:
    et = math.sqrt(1 - ee * ee)
    subs = {e: ee, eta: et, G: GG, H: HH, L: LL}
    table_val = sum(float(cf.subs(subs)) * math.cos(k * nuv + m * gv)
                    for (k, m), cf in hbar_table.items())
    ref = direct_eval(None, ee, GG, HH, LL, nuv, gv)
    rel = abs(table_val - ref) / abs(ref)
    assert rel < 1e-10, f"table mismatch {rel:.3e}"
print("  table agrees with direct evaluation")

print("emitting", OUT_PATH)
keys = sorted(hbar_table)
subs_list, reduced = sp.cse([hbar_table[k] for k in keys], symbols=sp.numbered_symbols("x"))

lines = [
    '"""Auto-generated by scripts/derive_second_order.py.  Do not edit."""',
    "",
    "",
    "def hbar_cos_table(e, eta, L, G, H):",
    '    """Coefficients a[(k, m)] of sum a*cos(k*nu + m*g) for the quadratic',
    '    cross term of the second averaging step, before the mu^6 R^4 factor."""',
]
for sym, sub in subs_list:
    lines.append(f"    {sym} = {sp.pycode(sub)}")
lines.append("    return {")
for key, expr in zip(keys, reduced):
    lines.append(f"        {key}: {sp.pycode(expr)},")
lines.append("    }")
lines += [
    "",
    "",
    "def long_period_cos2(L, G, H):",
    '    """Coefficient c2 of the l-averaged zero-mean remainder c2*cos(2g),',
    '    before the mu^6 R^4 factor.  The cos(4g) harmonic cancels identically',
    '    on eta = G/L; that is asserted during generation."""',
    f"    return {sp.pycode(lp[2])}",
    "",
]

OUT_PATH.write_text("\n".join(lines))
print("done")
