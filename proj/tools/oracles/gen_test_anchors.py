#!/usr/bin/env python3
"""Independent reference values for the C++ test suites.

Everything here is computed with mpmath at 50 digits, straight from the
defining formulas, with no involvement of the C++ library.  The printed
values are frozen into the test sources; rerun this script to regenerate.
"""

import mpmath as mp

mp.mp.dps = 30

# Constants (CODATA 2018) -- must match include/atomchip/constants.hpp.
mu0 = mp.mpf("1.25663706212e-6")
hbar = mp.mpf("1.054571817e-34")
kB = mp.mpf("1.380649e-23")
c = mp.mpf("299792458.0")
eps0 = mp.mpf("8.8541878128e-12")
muB = mp.mpf("9.2740100783e-24")
pi = mp.pi

# Rb87 |2,2>
mass = mp.mpf("1.44316e-25")
gF = mp.mpf("0.5")
mF = 2
muA = gF * mF * muB
a_sc = mp.mpf("5.2e-9")


def p17(x):
    return mp.nstr(mp.mpf(x), 17, strip_zeros=False)


print("== lattice amplitude anchor ==")
# V0 = muA mu0 I k^2 dy K1(k z);  I = 1 mA, lambda = 1 um, dy = 50 nm, z = 1 um
I = mp.mpf("1e-3")
lam = mp.mpf("1e-6")
k = 2 * pi / lam
dy = mp.mpf("50e-9")
z = mp.mpf("1e-6")
V0 = muA * mu0 * I * k ** 2 * dy * mp.besselk(1, k * z)
print("K1(2pi)      =", p17(mp.besselk(1, 2 * pi)))
print("V0 [J]       =", p17(V0))
print("V0 [uK]      =", p17(V0 / kB * mp.mpf("1e6")))
print("omega [rad/s]=", p17(mp.sqrt(V0 * k ** 2 / mass)))

print()
print("== Thomas-Fermi chemical potential ==")
# omega = 2 pi (100, 100, 10) Hz, N = 1000
wx = 2 * pi * 100
wy = 2 * pi * 100
wz = 2 * pi * 10
N = 1000
wbar = (wx * wy * wz) ** (mp.mpf(1) / 3)
abar = mp.sqrt(hbar / (mass * wbar))
mu = hbar * wbar / 2 * (15 * N * a_sc / abar) ** (mp.mpf("0.4"))
print("wbar [rad/s] =", p17(wbar))
print("abar [m]     =", p17(abar))
print("mu [J]       =", p17(mu))
print("Rx [m]       =", p17(mp.sqrt(2 * mu / mass) / wx))
print("Rz [m]       =", p17(mp.sqrt(2 * mu / mass) / wz))
print("meanVz2      =", p17(hbar * wz / (2 * mass) + mp.mpf(2) / 7 * mu / mass))

print()
print("== Lorentzian barrier WKB actions (z = 0.5 um, E = kB * 1 uK, B0 = 0) ==")
zb = mp.mpf("0.5e-6")
E = kB * mp.mpf("1e-6")


def lorentz_action(I, z_, E_):
    # x = xt cos(theta) removes the inverse-square-root turning-point edge.
    peak = muA * mu0 * I / (2 * pi * z_)
    if peak <= E_:
        return mp.mpf(0)
    xt = z_ * mp.sqrt(peak / E_ - 1)

    def f(theta):
        x = xt * mp.cos(theta)
        V = peak * z_ ** 2 / (z_ ** 2 + x ** 2)
        return mp.sqrt(max(2 * mass * (V - E_), mp.mpf(0))) * xt * mp.sin(theta)

    return 2 / hbar * 2 * mp.quad(f, [0, pi / 2])


def action(I):
    return lorentz_action(I, zb, E)


def bisect(f, lo, hi, iters=64):
    flo = f(lo)
    for _ in range(iters):
        mid = (lo + hi) / 2
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


Istar = E * 2 * pi * zb / (muA * mu0)  # barrier top exactly at E
print("I* (peak = E) =", p17(Istar))
for targetS in [2, 5, 10, 20]:
    Isol = bisect(lambda I: action(I) - targetS, Istar * mp.mpf("1.0001"),
                  Istar * 100)
    print(f"S = {targetS:2d}:  I = {p17(Isol)}  (action check {p17(action(Isol))})")

# A couple of fixed round currents for regression pinning of the action itself.
for I in [mp.mpf("8e-6"), mp.mpf("2e-5")]:
    print(f"I = {p17(I)}: action = {p17(action(I))}")

print()
print("== current sensitivity anchors (B0 = 0) ==")


def sensitivity(z_, E_):
    istar = E_ * 2 * pi * z_ / (muA * mu0)
    lo = istar * mp.mpf("1.0001")
    hi = istar * 100
    Ifrom = bisect(lambda I: lorentz_action(I, z_, E_) - mp.log(1000), lo, hi)
    Ito = bisect(lambda I: lorentz_action(I, z_, E_) - mp.log(10), lo, hi)
    return (Ifrom - Ito) / Ifrom


E1 = kB * mp.mpf("1e-6")
for zum in ["0.5", "1", "2", "5", "10"]:
    z_ = mp.mpf(zum) * mp.mpf("1e-6")
    print(f"z = {zum} um: dI/I = {p17(sensitivity(z_, E1))}")

print()
print("== skin depth ==")
sigmaAu = 1 / mp.mpf("2.21e-8")
om = 2 * pi * mp.mpf("1e6")
print("gold, 1 MHz [m] =", p17(mp.sqrt(2 / (sigmaAu * mu0 * om))))

print()
print("== half-space geometry factors (distance d) ==")
# X_ij for a coincident point a distance d above a conducting half-space has
# the closed forms (pi/8d)(1, 1, 2).  Spherical-coordinate reduction: with
# the atom at the origin and the half-space z' <= -d,
#   X_ii = 1/2 int (x'_i)^2 / r^6 dV
# and int over the region splits into polar-angle integrals that mpmath does
# directly (1-D after the radial integral int_{d/cos}^inf r^-2 dr = cos/d).
d = mp.mpf(1)


def xcomp(i):
    # polar axis toward the half space; mu = cos(polar angle), r >= d/mu
    def f(mu, phi):
        n = (mp.sqrt(1 - mu ** 2) * mp.cos(phi),
             mp.sqrt(1 - mu ** 2) * mp.sin(phi),
             mu)
        return n[i] ** 2 * mu / d

    return mp.quad(lambda mu: mp.quad(lambda phi: f(mu, phi), [0, 2 * pi]),
                   [0, 1]) / 2


for name, i in [("Xxx", 0), ("Xyy", 1), ("Xzz", 2)]:
    v = xcomp(i)
    print(f"{name}(d=1) = {p17(v)}   pi/8 = {p17(pi / 8)}  pi/4 = {p17(pi / 4)}")

print()
print("== cylinder strength function ==")
for x in ["0.4", "0.01", "0.1", "0.2"]:
    xv = mp.mpf(x)
    lin = mp.mpf("0.53") * xv + mp.mpf("0.22")
    log = -2 / (3 * mp.log(xv))
    print(f"a/R = {x}: linear = {p17(lin)}  log-form = {p17(log)}")

print()
print("== K1 asymptotic ratio check (corrugation height decay) ==")
kz1 = mp.mpf(4)
ratio_scale = mp.mpf("1.15")
exact = mp.besselk(1, kz1 * ratio_scale) / mp.besselk(1, kz1)
asym = mp.e ** (-kz1 * (ratio_scale - 1))
print("K1(4.6)/K1(4) =", p17(exact), " e^{-0.6} =", p17(asym),
      " rel dev =", p17(abs(exact - asym) / exact))
