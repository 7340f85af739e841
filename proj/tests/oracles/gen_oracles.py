"""Regenerates tests/unit/oracle_values.hpp from mpmath at 40 digits.

    python3 tests/oracles/gen_oracles.py > tests/unit/oracle_values.hpp
"""
import mpmath as mp

mp.mp.dps = 40
I = mp.mpc(0, 1)


def c(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (mp.nstr(z.real, 20, min_fixed=-mp.inf, max_fixed=mp.inf),
                         mp.nstr(z.imag, 20, min_fixed=-mp.inf, max_fixed=mp.inf))


def r(x):
    return mp.nstr(mp.mpf(x), 20)


# s(x) in the elliptic case: theta_1(rx, p) / (r theta_1'(0, p)), p = e^{-ra}
def s_elliptic(x, rr, a, order):
    p = mp.exp(-rr * a)
    return rr ** order * mp.jtheta(1, rr * x, p, order) / (rr * mp.jtheta(1, 0, p, 1))


# f(z;q) = 1/(qz; q^2)_inf for |q|<1, (z/q; q^-2)_inf for |q|>1
def qprod(z, q):
    if abs(q) < 1:
        return 1 / mp.qp(q * z, q * q)
    Q = 1 / q
    return mp.qp(Q * z, Q * Q)


def g1_rational(x, alpha):
    return mp.gamma(mp.mpf(1) / 2 + x / (I * alpha))


def g1_trig(x, alpha, rr):
    if mp.re(alpha) < 0:
        return 1 / g1_trig(x, -alpha, rr)
    q = mp.exp(-rr * alpha)
    return mp.exp(-rr * x * x / (2 * alpha)) * qprod(mp.exp(2 * I * rr * x), q)


def g1_elliptic(x, alpha, rr, a):
    if mp.re(alpha) < 0:
        return 1 / g1_elliptic(x, -alpha, rr, a)
    q = mp.exp(-rr * alpha)
    p = mp.exp(-rr * a)
    w = mp.exp(2 * I * rr * x)
    v = mp.exp(-rr * x * x / (2 * alpha))
    l = 1
    while True:
        t = qprod(p ** (2 * l - 2) * w, q) / qprod(p ** (2 * l) / w, q)
        v *= t
        if abs(t - 1) < mp.mpf(10) ** -35:
            return v
        l += 1


def gr_hyperbolic(a, alpha, x):
    def integrand(y):
        return mp.sin(2 * x * y) / (2 * mp.sinh(a * y) * mp.sinh(alpha * y)) - x / (a * alpha * y)
    val = mp.quad(lambda y: integrand(y) / y, [0, 0.5, 2, 8, mp.inf])
    return mp.exp(I * val)


def gamma_main_rational(u, alpha):
    if mp.re(alpha) > 0:
        return g1_rational(u, alpha)
    return g1_rational(-u, -alpha)


print("#pragma once\n")
print("// Generated by tests/oracles/gen_oracles.py (mpmath, 40 digits).\n")
print("#include <complex>\n")
print("namespace oracle {\n")
print("using C = std::complex<double>;\n")

print("struct SPoint { double r, a; C x; int order; C value; };")
print("inline const SPoint kEllipticS[] = {")
for rr, a, x in [(1, 1.2, mp.mpc(0.3, 0.1)), (1, 1.2, mp.mpc(0.7, -0.05)),
                 (1.3, 0.9, mp.mpc(1.1, 0.2)), (0.8, 1.7, mp.mpc(-0.4, 0.35))]:
    for order in range(4):
        print("    {%s, %s, %s, %d, %s}," % (r(rr), r(a), c(x), order,
                                          c(s_elliptic(x, mp.mpf(rr), mp.mpf(a), order))))
print("};\n")

print("struct QPoint { C z, q, value; };")
print("inline const QPoint kQProd[] = {")
for z, q in [(0.3, 0.5), (mp.mpc(0.2, 0.1), mp.mpc(0.4, 0.2)), (0.9, 0.6),
             (mp.mpc(1.5, 0.5), 0.3), (0.3, 2.0), (mp.mpc(0.5, 0.5), mp.mpc(1.5, 0.5)),
             (mp.mpc(-2.0, 1.0), mp.mpc(0.7, -0.1))]:
    z, q = mp.mpc(z), mp.mpc(q)
    print("    {%s, %s, %s}," % (c(z), c(q), c(qprod(z, q))))
print("};\n")

print("struct GammaPoint { C z, value; };")
print("inline const GammaPoint kEulerGamma[] = {")
for z in [mp.mpc(0.3, 2), mp.mpc(-1.7, 0.4), mp.mpc(5.5, -3), mp.mpc(0.01, -0.02)]:
    print("    {%s, %s}," % (c(z), c(mp.gamma(z))))
print("};\n")

print("struct G1Point { double r, a; C x, alpha, value; };")
print("inline const G1Point kG1Rational[] = {")
for x, al in [(mp.mpc(0.4, 0.1), mp.mpc(0.7, 0.05)), (mp.mpc(-1.2, 0.3), mp.mpc(-0.6, 0))]:
    print("    {1, 1, %s, %s, %s}," % (c(x), c(al), c(g1_rational(x, al))))
print("};")
print("inline const G1Point kG1Trig[] = {")
for rr, x, al in [(1, mp.mpc(0.3, 0.1), mp.mpc(0.7, 0)), (1.3, mp.mpc(-0.5, 0.2), mp.mpc(0.4, -0.1)),
                  (1, mp.mpc(0.2, -0.15), mp.mpc(-0.9, 0.05)), (0.7, mp.mpc(1.4, 0.05), mp.mpc(0.15, 0))]:
    print("    {%s, 1, %s, %s, %s}," % (r(rr), c(x), c(al), c(g1_trig(x, al, mp.mpf(rr)))))
print("};")
print("inline const G1Point kG1Elliptic[] = {")
for rr, a, x, al in [(1, 1.2, mp.mpc(0.3, 0.1), mp.mpc(0.5, 0)), (1, 1.5, mp.mpc(-0.6, 0.2), mp.mpc(0.8, 0.1)),
                     (1.2, 1.0, mp.mpc(0.1, -0.1), mp.mpc(-0.7, 0))]:
    print("    {%s, %s, %s, %s, %s}," % (r(rr), r(a), c(x), c(al),
                                      c(g1_elliptic(x, al, mp.mpf(rr), mp.mpf(a)))))
print("};")
print("// G_R(a, alpha; x) inside its strip.")
print("inline const G1Point kGRHyperbolic[] = {")
for a, x, al in [(1.5, mp.mpc(0.3, 0.2), mp.mpc(0.8, 0)), (1.0, mp.mpc(-0.7, -0.3), mp.mpc(0.5, 0.1)),
                 (2.0, mp.mpc(1.3, 0.6), mp.mpc(1.2, 0))]:
    print("    {1, %s, %s, %s, %s}," % (r(a), c(x), c(al), c(gr_hyperbolic(mp.mpf(a), al, x))))
print("};\n")

# Rational wave-function pieces, g = 2, beta = 0.3, m0 = 1.
g, b = mp.mpf(2), mp.mpf("0.3")


def phi_same(x, m):
    al = b / m
    G = lambda u: gamma_main_rational(u, al)
    return mp.sqrt(G(x + I * g * b * m - I * b / (2 * m)) * G(x + I * b / (2 * m)) /
                   (G(x - I * g * b * m + I * b / (2 * m)) * G(x - I * b / (2 * m))))


def phi_neg(x, m):
    al = b / m
    G = lambda u: gamma_main_rational(u, al)
    return G(x - I * g * b * m / 2) / G(x + I * g * b * m / 2)


print("struct WavePoint { C x; C value; };")
print("// phi(x; m, m) and phi(x; m, -m), rational, g = 2, beta = 0.3, m = +1 then -1.")
print("inline const WavePoint kPhiSamePlus = {%s, %s};" % (c(mp.mpc(0.8, 0.1)), c(phi_same(mp.mpc(0.8, 0.1), 1))))
print("inline const WavePoint kPhiSameMinus = {%s, %s};" % (c(mp.mpc(0.8, 0.1)), c(phi_same(mp.mpc(0.8, 0.1), -1))))
print("inline const WavePoint kPhiNegPlus = {%s, %s};" % (c(mp.mpc(-0.6, 0.05)), c(phi_neg(mp.mpc(-0.6, 0.05), 1))))
print("// Psi_2 pair factor at x1 - x2 and F_{1,1} at x - y, rational, g = 2, beta = 0.3.")
x = mp.mpc(1.1, -0.08)
print("inline const WavePoint kPsi2 = {%s, %s};" % (c(x), c(phi_same(x, 1))))
G = lambda u: gamma_main_rational(u, b)
x = mp.mpc(0.45, 0.12)
print("inline const WavePoint kF11 = {%s, %s};" % (c(x), c(G(x - I * g * b / 2) / G(x + I * g * b / 2))))
print("\n}  // namespace oracle")
