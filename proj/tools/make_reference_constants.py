#!/usr/bin/env python3
"""Regenerate the 30-digit reference constants used by the certificate tests.

Evaluates every closed-form certificate quantity for the canonical tank
(g=9.81, mu=0.1, sigma=0.073, L=1, m=0.5, H_max=1, delta=1, omega=1, q=1)
with 50-digit arithmetic, independently of the C++ implementation.

Usage: python3 tools/make_reference_constants.py
Prints a C++ header fragment; the checked-in copy lives at
tests/reference_constants.hpp.
"""

import mpmath as mp

mp.mp.dps = 50

g = mp.mpf("9.81")
mu = mp.mpf("0.1")
sigma = mp.mpf("0.073")
L = mp.mpf(1)
m = mp.mpf("0.5")
H_max = mp.mpf(1)
delta = mp.mpf(1)
omega = mp.mpf(1)
q = mp.mpf(1)

h_star = m / L


def G(h):
    if h <= 0:
        return -mp.mpf(4) / 3 * h_star * mp.sqrt(h_star) + h
    a = (mp.mpf(2) / 3) * h * mp.sqrt(h) - 2 * h_star * mp.sqrt(h) \
        + (mp.mpf(4) / 3) * h_star * mp.sqrt(h_star)
    return mp.sign(h - h_star) * a


def G_inv(y):
    if y == 0:
        return h_star
    floor = -mp.mpf(4) / 3 * h_star * mp.sqrt(h_star)
    if y <= floor:
        return y - floor
    lo, hi = (h_star, 2 * h_star) if y > 0 else (mp.mpf(0), h_star)
    while G(hi) < y:
        hi *= 2
    return mp.findroot(lambda h: G(h) - y, (lo, hi), solver="anderson")


c = 1 / (mu * mp.sqrt(delta * g))

theta1 = mp.mpf(4) / 3 * mu * h_star * mp.sqrt(delta * g * h_star)
theta2 = mu**2 * h_star * delta / (2 * L * (1 + delta))
theta3 = sigma * (delta + 1) * (mp.sqrt(h_star**2 + L**2) - L)

gamma1 = mp.sqrt(H_max / h_star) - 2 * mp.sqrt(h_star) / (mp.sqrt(H_max) + mp.sqrt(h_star))
gamma2 = 3 * mu * mp.sqrt(delta) * (H_max - h_star) / (4 * m * (1 + delta) * mp.sqrt(g * h_star))
gamma3 = 3 * sigma * (delta + 1) * (mp.sqrt(L**2 + (H_max - h_star) ** 2) - L) \
    / (2 * mu * mp.sqrt(delta * g * h_star) * (H_max - h_star))
delta1 = 3 * mu * mp.sqrt(delta) / (4 * L * mp.sqrt(g * h_star) * (1 + delta))
delta2 = 3 * sigma * (delta + 1) * mp.sqrt(h_star) \
    / (2 * mu * mp.sqrt(delta * g) * (mp.sqrt(h_star**2 + L**2) + L))

zeta1 = max(gamma1, gamma2, gamma3)
zeta2 = h_star / (H_max - h_star) * max(mp.mpf(2), delta1, delta2)
R = (2 * mu * mp.sqrt(delta * g * h_star) / 3) * (H_max - h_star) * min(zeta1, zeta2)


def N1(s):
    return h_star - mp.sqrt(2 * m * (1 + delta) * s / (delta * mu**2))


def N2(s):
    return h_star - mp.sqrt((s / (sigma * (delta + 1)) + L) ** 2 - L**2)


def Q1(s):
    return max(G_inv(-c * s), N1(s), N2(s))


def Q2(s):
    return min(G_inv(c * s), -N1(s) + 2 * h_star, -N2(s) + 2 * h_star)


def theta(r):
    q1 = Q1(r)
    num = omega * g * mu * delta * mp.pi**2 * q1
    den = g * mu * delta * mp.pi**2 * q1 \
        + 2 * omega * L * (m * g * L * H_max * (delta + 1) ** 2
                           + 2 * mu**2 * delta * mp.pi**2 * q1)
    return num / den


r_half = R / 2
theta_half = theta(r_half)
k = q * theta_half / 2

kappa1 = (delta + 1) * (g * L**2 + 2 * sigma)
kappa2 = L**2 * (delta + 2) / mp.pi**2
kappa3 = q * max(mp.mpf(1), k**2)
Lambda_half = mp.mpf(1) / 2 * max(kappa1 + 2 * mu**2 / Q1(r_half),
                                  kappa2 * Q2(r_half) / Q1(r_half), kappa3)

beta_half = min(3 * mu * g / 4,
                mu * delta * (2 * H_max - Q2(r_half)) / (2 * H_max),
                q * k**3,
                q * (q * theta_half - k),
                mu * sigma)

g2_half = max((delta + 2) * H_max / 2, (delta + 1) * g / 2,
              mu**2 / Q1(r_half) + sigma * (delta + 1),
              3 * q * k**2 / 2, q)

lambda_V = beta_half / Lambda_half
lambda_norm = beta_half / (2 * Lambda_half)

rows = [
    ("kGZero", G(mp.mpf(0)), "G(0)"),
    ("kGFourHStar", G(4 * h_star), "G(4 h*)"),
    ("kC", c, "c = 1/(mu sqrt(delta g))"),
    ("kTheta1", theta1, "positivity threshold branch 1"),
    ("kTheta2", theta2, "positivity threshold branch 2"),
    ("kTheta3", theta3, "positivity threshold branch 3"),
    ("kSpillRadius", R, "R"),
    ("kQ1AtHalfR", Q1(r_half), "Q1(R/2)"),
    ("kQ2AtHalfR", Q2(r_half), "Q2(R/2)"),
    ("kThetaAtHalfR", theta_half, "theta(R/2)"),
    ("kAutoK", k, "k = q theta(R/2)/2"),
    ("kLambdaAtHalfR", Lambda_half, "Lambda(R/2)"),
    ("kBetaAtHalfR", beta_half, "beta(R/2) with the auto k"),
    ("kG2AtHalfR", g2_half, "G2(R/2) with the auto k"),
    ("kLambdaV", lambda_V, "beta/Lambda at R/2"),
    ("kLambdaNorm", lambda_norm, "beta/(2 Lambda) at R/2"),
]

print("// Generated by tools/make_reference_constants.py (mpmath, 50 digits).")
print("// Canonical tank: g=9.81 mu=0.1 sigma=0.073 L=1 m=0.5 H_max=1")
print("//                 delta=1 omega=1 q=1 k=q*theta(R/2)/2.")
print("#pragma once")
print()
print("namespace slosh::testing {")
print()
for name, value, note in rows:
    print(f"// {note}")
    print(f"inline constexpr double {name} = {mp.nstr(value, 30)};")
print()
print("}  // namespace slosh::testing")
