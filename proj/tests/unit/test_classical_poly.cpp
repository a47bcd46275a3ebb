#include <cmath>
#include <iomanip>

#include <gtest/gtest.h>

#include "oracle_values.hpp"
#include "simplexft/classical_poly.hpp"
#include "simplexft/errors.hpp"
#include "simplexft/hypergeom.hpp"
#include "simplexft/quadrature.hpp"
#include "simplexft/rng.hpp"
#include "test_support.hpp"

namespace simplexft {
namespace {

using testing::near_rel;

TEST(Jacobi, MatchesOracle) {
  for (const auto& c : oracle::kJacobi) {
    const double v = jacobi_eval({c.n, c.alpha, c.beta}, c.x);
    EXPECT_NEAR(v, c.value, 1e-13 * std::max(1.0, std::abs(c.value))) << c.n << " " << c.alpha << " " << c.beta;
  }
}

TEST(Jacobi, ExampleValue) { EXPECT_DOUBLE_EQ(jacobi_eval({2, 1.0, 1.0}, 0.0), -0.75); }

TEST(Jacobi, MatchesHypergeometricForm) {
  // P_n(x) = (a+1)_n / n! 2F1(-n, n+a+b+1; a+1; (1-x)/2). Only x >= 0: near
  // x = -1 the reference sum itself cancels.
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = static_cast<unsigned>(rng.integer(0, 15));
    const double a = rng.uniform(-0.9, 4.0);
    const double b = rng.uniform(-0.9, 4.0);
    const double x = rng.uniform(0.0, 1.0);
    double fact = 1.0;
    for (unsigned k = 2; k <= n; ++k) {
      fact *= k;
    }
    const Complex f = eval_terminating({{-static_cast<double>(n), n + a + b + 1.0}, {a + 1.0}, (1.0 - x) / 2.0});
    const double expected = pochhammer(a + 1.0, n) / fact * f.real();
    EXPECT_NEAR(jacobi_eval({n, a, b}, x), expected, 1e-11 * std::max(1.0, std::abs(expected)))
        << std::setprecision(17) << n << " " << a << " " << b << " " << x;
  }
}

TEST(Jacobi, ReflectionSymmetry) {
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned n = static_cast<unsigned>(rng.integer(0, 10));
    const double a = rng.uniform(-0.9, 3.0);
    const double b = rng.uniform(-0.9, 3.0);
    const double x = rng.uniform(-1.0, 1.0);
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    const double lhs = jacobi_eval({n, a, b}, -x);
    EXPECT_NEAR(lhs, sign * jacobi_eval({n, b, a}, x), 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST(Jacobi, ComplexArgumentAgreesOnRealAxis) {
  const Complex v = jacobi_eval(JacobiParams{5, 0.7, 1.9}, Complex(0.35, 0.0));
  EXPECT_NEAR(v.real(), jacobi_eval(JacobiParams{5, 0.7, 1.9}, 0.35), 1e-14);
  EXPECT_EQ(v.imag(), 0.0);
}

TEST(Jacobi, ShiftedAndHomogeneousForms) {
  const JacobiParams p{4, 1.3, 0.6};
  EXPECT_NEAR(jacobi_shifted_eval(p, 0.2).real(), jacobi_eval(p, -0.6), 1e-14);
  // w^n P(2y/w - 1)
  const double y = 0.15;
  const double w = 0.4;
  EXPECT_NEAR(jacobi_homogeneous(p, y, w), std::pow(w, 4) * jacobi_eval(p, 2.0 * y / w - 1.0), 1e-14);
  // finite at w = 0 where only the top coefficient survives: (2y)^n k_n
  const double at_zero = jacobi_homogeneous(p, 0.5, 0.0);
  const double lead = pochhammer(p.n + p.alpha + p.beta + 1.0, p.n) / 24.0 / 16.0; // k_n = (n+a+b+1)_n / (n! 2^n)
  EXPECT_NEAR(at_zero, lead, 1e-13);
}

TEST(Jacobi, DerivativeMatchesFiniteDifference) {
  const JacobiParams p{6, 0.4, 2.2};
  for (double x : {-0.8, -0.1, 0.5, 0.93}) {
    const double h = 1e-5;
    const double fd = (jacobi_eval(p, x + h) - jacobi_eval(p, x - h)) / (2.0 * h);
    EXPECT_NEAR(jacobi_derivative(p, x), fd, 1e-7 * std::max(1.0, std::abs(fd)));
  }
}

TEST(Jacobi, NormMatchesQuadrature) {
  for (unsigned n : {0u, 1u, 4u, 9u}) {
    const JacobiParams p{n, 0.8, -0.35};
    const QuadratureRule rule = gauss_jacobi(n + 2, p.alpha, p.beta);
    double q = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double v = jacobi_eval(p, rule.node(i));
      q += rule.weights[i] * v * v;
    }
    EXPECT_NEAR(jacobi_norm(p), q, 1e-13 * q) << n;
  }
  EXPECT_THROW(jacobi_norm({2, -1.0, 0.0}), ParameterRangeError);
}

TEST(Hahn, MatchesOracle) {
  for (const auto& c : oracle::kHahn) {
    const Complex v = hahn_eval({c.n, c.a, c.b, c.c, c.d}, c.x);
    EXPECT_TRUE(near_rel(v, c.value, 1e-12)) << c.n;
  }
}

TEST(Hahn, ExampleValue) {
  const Complex v = hahn_eval({0, 0.5, 0.5, 0.5, 0.5}, 0.3);
  EXPECT_EQ(v, Complex(1.0, 0.0));
}

TEST(Hahn, RealForConjugateParameters) {
  // Real x with c = conj(a), d = conj(b) gives a real polynomial.
  const Complex a(0.7, 0.3);
  const Complex b(1.1, -0.4);
  for (unsigned n = 0; n < 6; ++n) {
    const Complex v = hahn_eval({n, a, b, std::conj(a), std::conj(b)}, 0.45);
    EXPECT_NEAR(v.imag(), 0.0, 1e-12 * std::max(1.0, std::abs(v))) << n;
  }
}

} // namespace
} // namespace simplexft
