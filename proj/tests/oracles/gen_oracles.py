#!/usr/bin/env python3
"""Regenerates tests/unit/oracle_values.hpp from mpmath.

Every value is computed at 40 digits, by direct series or direct numerical
integration, never through the library's own closed forms.
    python3 tests/oracles/gen_oracles.py > tests/unit/oracle_values.hpp
"""
from mpmath import mp, mpf, mpc, loggamma, gamma, hyp2f1, hyp3f2, jacobi, rf, quad, exp, tanh, inf, pi, factorial

mp.dps = 40


def num(v):
    return mp.nstr(v, 20, strip_zeros=False, min_fixed=-3, max_fixed=3)


def cnum(v):
    v = mpc(v)
    return "{%s, %s}" % (num(v.real), num(v.imag))


out = []


def emit(line=""):
    out.append(line)


# log Gamma at complex points: log|Gamma| and Gamma itself.
lg_points = [mpc(0.5, 0), mpc(3.7, 0), mpc(0.1, 0), mpc(-2.5, 0), mpc(1, 1), mpc(0.3, -7.5),
             mpc(-3.2, 4.1), mpc(12.5, 19), mpc(0.01, 0.02), mpc(-0.7, -25), mpc(40, 3), mpc(2.2, 60)]
emit("struct LogGammaCase { Complex z; double log_modulus; Complex value; };")
emit("inline const LogGammaCase kLogGamma[] = {")
for z in lg_points:
    emit("    {%s, %s, %s}," % (cnum(z), num(loggamma(z).real), cnum(gamma(z))))
emit("};")
emit()

# Terminating 3F2 at unit and non-unit argument, straight from the series.
def series(a, b, z, n):
    s, t = mpf(0), mpf(1)
    for k in range(n + 1):
        s += t
        t *= z / (k + 1)
        for x in a:
            t *= x + k
        for x in b:
            t /= x + k
    return s

h_cases = [
    ((-3, 2.5, 1.25), (3.5, 0.75), 1),
    ((-5, 0.3, 7.2), (1.9, 2.6), 1),
    ((-4, mpc(1.5, 0.7), 2.0), (3.0, 1.1), 1),
    ((-2, 1.0, 1.0), (2.0, 2.0), mpc(0.5, -1.5)),
    # strongly alternating: |value| is ~1e-7 of the term sum
    ((-6, 34.6412766, 16.92486), (23.2134, 22.3813), 1),
]
emit("struct Hyp3F2Case { Complex a1, a2, a3, b1, b2, z, value; };")
emit("inline const Hyp3F2Case kHyp3F2[] = {")
for a, b, z in h_cases:
    v = series([mpc(x) for x in a], [mpc(x) for x in b], mpc(z), -a[0])
    emit("    {%s}," % ", ".join(cnum(x) for x in list(a) + list(b) + [z, v]))
emit("};")
emit()

# Jacobi polynomials (mpmath's hypergeometric definition).
j_cases = [(0, 0.5, 0.5, 0.3), (2, 1, 1, 0), (3, -0.5, 1.5, 0.9), (7, 2.3, -0.8, -0.95), (10, 0.1, 3.0, 0.2),
           (12, -0.9, -0.9, 0.999), (5, 4.0, 0.5, -1.0)]
emit("struct JacobiCase { unsigned n; double alpha, beta, x, value; };")
emit("inline const JacobiCase kJacobi[] = {")
for n, a, b, x in j_cases:
    emit("    {%d, %s, %s, %s, %s}," % (n, num(a), num(b), num(x), num(jacobi(n, a, b, x))))
emit("};")
emit()

# Continuous Hahn p_n(x; a,b,c,d) = i^n (a+c)_n (a+d)_n / n! 3F2(-n, n+a+b+c+d-1, a+ix; a+c, a+d; 1).
def hahn(n, a, b, c, d, x):
    a, b, c, d = (mpc(v) for v in (a, b, c, d))
    x = mpc(x)
    pref = mpc(0, 1) ** n * rf(a + c, n) * rf(a + d, n) / factorial(n)
    return pref * series([-n, n + a + b + c + d - 1, a + 1j * x], [a + c, a + d], 1, n)

hahn_cases = [(0, 0.5, 0.5, 0.5, 0.5, 0.3), (1, 0.5, 0.5, 0.5, 0.5, -2), (3, 1.2, 0.7, 1.5, 0.9, 0.4),
              (4, 0.8, 1.3, 0.6, 2.1, mpc(0.25, -0.6))]
emit("struct HahnCase { unsigned n; double a, b, c, d; Complex x, value; };")
emit("inline const HahnCase kHahn[] = {")
for n, a, b, c, d, x in hahn_cases:
    emit("    {%d, %s, %s, %s, %s, %s, %s}," % (n, num(a), num(b), num(c), num(d), cnum(x), cnum(hahn(n, a, b, c, d, x))))
emit("};")
emit()

# Simplex basis on T^r in the library convention (0-based axis k):
# prod_k w_k^{n_k} P_{n_k}^{(A_k, alpha_k)}(2 x_k / w_k - 1), A_k = 2|n^{k+2}| + |alpha^{k+2}| + r - k - 1.
def simplex_p(n, al, x):
    r = len(n)
    v, w = mpf(1), mpf(1)
    for k in range(r):
        A = 2 * sum(n[k + 1:]) + sum(al[k + 1:]) + r - k - 1
        v *= w ** n[k] * jacobi(n[k], A, al[k], 2 * x[k] / w - 1)
        w -= x[k]
    return v

def simplex_weight(al, x):
    v = (1 - sum(x)) ** al[-1]
    for k, xv in enumerate(x):
        v *= xv ** al[k]
    return v

hn_cases = [((0,), (0, 0)), ((2,), (0.5, 1.5)), ((0, 0), (0, 0, 0)), ((1, 2), (0.3, 1.2, -0.4)), ((2, 0), (1.0, -0.5, 0.7))]
emit("struct HNormCase { std::vector<unsigned> n; std::vector<double> alpha; double value; };")
emit("inline const HNormCase kHNorm[] = {")
for n, al in hn_cases:
    al = [mpf(v) for v in al]
    if len(n) == 1:
        v = quad(lambda t: simplex_weight(al, [t]) * simplex_p(n, al, [t]) ** 2, [0, 1])
    else:
        # collapsed coordinates x = (s, (1-s) u); the weight is kept factored so
        # that negative exponents never see a rounded-to-zero base
        def f(s, u):
            w = s ** al[0] * (1 - s) ** (al[1] + al[2] + 1) * u ** al[1] * (1 - u) ** al[2]
            return w * simplex_p(n, al, [s, (1 - s) * u]) ** 2
        v = quad(f, [0, 1], [0, 1])
    emit("    {{%s}, {%s}, %s}," % (", ".join(str(v) for v in n), ", ".join(num(v) for v in al), num(v)))
emit("};")
emit()

# Fourier transform of g_1(x) = (1+tanh x)^{a1} (1-tanh x)^{a2} P_n^{(alpha2, alpha1)}(tanh x)
# (the r = 1 simplex basis at y = (1+tanh x)/2), by quadrature on the line.
ft_cases = [(0, (1, 1), (0, 0), 0), (0, (1, 1), (0, 0), 2), (2, (1.5, 0.7), (0.3, 1.2), 3),
            (1, (0.8, 1.9), (-0.4, 0.6), -1), (3, (1.2, 1.4), (1.5, -0.3), 0.5)]
emit("struct FtCase { unsigned n; double a1, a2, alpha1, alpha2, xi; Complex value; };")
emit("inline const FtCase kFourier1[] = {")
for n, a, al, xi in ft_cases:
    a1, a2 = (mpf(v) for v in a)
    al = [mpf(v) for v in al]
    f = lambda x: exp(-1j * xi * x) * (1 + tanh(x)) ** a1 * (1 - tanh(x)) ** a2 * simplex_p((n,), al, [(1 + tanh(x)) / 2])
    v = quad(f, [-inf, -5, -1, 0, 1, 5, inf])
    emit("    {%d, %s, %s, %s, %s, %s, %s}," % (n, num(a1), num(a2), num(al[0]), num(al[1]), num(xi), cnum(v)))
emit("};")
emit()

# r = 1 orthogonality integral of W_1 S_n(ix; a, b) S_m(-ix; b, a) by quadrature.
def s1(n, x, a, b):
    return series([-n, n + a[0] + a[1] + b[0] + b[1] - 1, a[1] + x / 2], [a[1] + b[1], a[0] + a[1]], 1, n)

def w1(x, a, b):
    return gamma(a[0] - 1j * x / 2) * gamma(a[1] + 1j * x / 2) * gamma(b[0] + 1j * x / 2) * gamma(b[1] - 1j * x / 2)

so_cases = [(0, 0, (0.5, 0.5), (0.5, 0.5)), (1, 1, (0.8, 1.3), (1.1, 0.9)), (2, 1, (0.7, 1.2), (1.4, 0.6)),
            (2, 2, (1.1, 0.6), (0.9, 1.3))]
emit("struct SOrthCase { unsigned n, m; double a1, a2, b1, b2; Complex value; };")
emit("inline const SOrthCase kSOrth1[] = {")
for n, m, a, b in so_cases:
    a = [mpf(v) for v in a]
    b = [mpf(v) for v in b]
    f = lambda x: w1(x, a, b) * s1(n, 1j * x, a, b) * s1(m, -1j * x, b, a)
    v = quad(f, [-inf, -20, -5, 0, 5, 20, inf])
    emit("    {%d, %d, %s, %s, %s, %s, %s}," % (n, m, num(a[0]), num(a[1]), num(b[0]), num(b[1]), cnum(v)))
emit("};")
emit()

# _2S values from the product of 3F2 factors.
def s_r(n, x, a, b):
    v = mpc(1)
    for j in range(len(n)):
        N, A1, Aj, B1, Bj = sum(n[j + 1:]), sum(a[j + 1:]), sum(a[j:]), sum(b[j + 1:]), sum(b[j:])
        v *= rf(A1 + x[j] / 2, N) * series([-n[j], n[j] + 2 * N + Aj + Bj - 1, N + A1 + x[j] / 2], [2 * N + A1 + B1, N + Aj], 1, n[j])
    return v

sr_cases = [((2, 1), (0.8, 1.3, 0.6), (1.1, 0.9, 1.4), (mpc(0.4, 0.2), mpc(-1.1, 0.3))),
            ((1, 2, 1), (1.2, 0.7, 1.5, 0.9), (0.6, 1.8, 1.1, 2.0), (mpc(1.5, 0), mpc(-0.3, 0), mpc(0.8, -0.4)))]
emit("struct SValueCase { std::vector<unsigned> n; std::vector<double> a, b; std::vector<Complex> x; Complex value; };")
emit("inline const SValueCase kSValues[] = {")
for n, a, b, x in sr_cases:
    a = [mpf(v) for v in a]
    b = [mpf(v) for v in b]
    emit("    {{%s}, {%s}, {%s}, {%s}, %s}," % (", ".join(str(v) for v in n), ", ".join(num(v) for v in a),
                                               ", ".join(num(v) for v in b), ", ".join(cnum(v) for v in x), cnum(s_r(n, x, a, b))))
emit("};")

print("// Generated by tests/oracles/gen_oracles.py (mpmath, 40 digits). Do not edit.")
print("#ifndef SIMPLEXFT_TESTS_ORACLE_VALUES_HPP")
print("#define SIMPLEXFT_TESTS_ORACLE_VALUES_HPP")
print()
print("#include <vector>")
print()
print('#include "simplexft/numerics.hpp"')
print()
print("namespace simplexft::oracle {")
print()
print("\n".join(out))
print()
print("} // namespace simplexft::oracle")
print()
print("#endif // SIMPLEXFT_TESTS_ORACLE_VALUES_HPP")
