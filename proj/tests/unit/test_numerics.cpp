#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "oracle_values.hpp"
#include "simplexft/errors.hpp"
#include "simplexft/numerics.hpp"
#include "test_support.hpp"

namespace simplexft {
namespace {

using testing::near_rel;
using testing::near_strict;

TEST(LogGamma, MatchesOracle) {
  for (const auto& c : oracle::kLogGamma) {
    const LogGammaValue v = log_gamma(c.z);
    EXPECT_NEAR(v.log_modulus, c.log_modulus, 1e-13 * std::max(1.0, std::abs(c.log_modulus))) << c.z;
    EXPECT_TRUE(near_strict(v.value(), c.value, 2e-13 * std::max(1.0, std::abs(c.z)))) << c.z;
  }
}

TEST(LogGamma, PhaseIsContinuousOnPositiveAxis) {
  EXPECT_DOUBLE_EQ(log_gamma(Complex(3.5, 0.0)).phase, 0.0);
  EXPECT_NEAR(log_gamma(Complex(-0.5, 0.0)).value().real(), -2.0 * std::sqrt(kPi), 1e-14);
}

TEST(LogGamma, ThrowsOnPoles) {
  EXPECT_THROW(log_gamma(Complex(0.0, 0.0)), PoleError);
  EXPECT_THROW(log_gamma(Complex(-3.0, 0.0)), PoleError);
  EXPECT_THROW(gamma(Complex(-7.0, 0.0)), Error);
  EXPECT_NO_THROW(log_gamma(Complex(-3.0, 1e-9)));
}

TEST(Gamma, IntegerValues) {
  double fact = 1.0;
  for (int n = 1; n <= 20; ++n) {
    EXPECT_TRUE(near_strict(gamma(Complex(n, 0.0)), fact, 1e-14)) << n;
    fact *= n;
  }
}

TEST(Gamma, RecurrenceAndReflection) {
  const Complex zs[] = {{0.3, 0.0}, {2.7, -1.2}, {-1.4, 0.8}, {0.5, 9.0}, {7.1, 3.3}};
  for (Complex z : zs) {
    EXPECT_TRUE(near_strict(gamma(z + 1.0), z * gamma(z), 1e-12)) << z;
    const Complex reflected = gamma(z) * gamma(1.0 - z) * std::sin(kPi * z);
    EXPECT_TRUE(near_rel(reflected, kPi, 1e-12)) << z;
  }
}

TEST(Beta, SymmetricAndMatchesGammaRatio) {
  EXPECT_TRUE(near_strict(beta(2.0, 3.0), 1.0 / 12.0, 1e-14));
  EXPECT_TRUE(near_strict(beta(Complex(0.7, 0.4), 1.3), beta(1.3, Complex(0.7, 0.4)), 1e-14));
  EXPECT_TRUE(near_strict(beta(0.5, 0.5), kPi, 1e-14));
  EXPECT_FALSE(beta_is_continuation(0.5, 1.0));
  EXPECT_TRUE(beta_is_continuation(-0.5, 1.0));
  EXPECT_TRUE(beta_is_continuation(Complex(0.5, 0.0), Complex(0.0, 2.0)));
}

TEST(Pochhammer, Basics) {
  EXPECT_DOUBLE_EQ(pochhammer(3.0, 0), 1.0);
  EXPECT_DOUBLE_EQ(pochhammer(1.0, 5), 120.0);
  EXPECT_DOUBLE_EQ(pochhammer(-3.0, 4), 0.0);
  EXPECT_TRUE(near_strict(pochhammer(Complex(0.5, 1.0), 3), gamma(Complex(3.5, 1.0)) / gamma(Complex(0.5, 1.0)), 1e-13));
}

TEST(IPow, Cycle) {
  EXPECT_EQ(i_pow(0), Complex(1.0, 0.0));
  EXPECT_EQ(i_pow(1), Complex(0.0, 1.0));
  EXPECT_EQ(i_pow(6), Complex(-1.0, 0.0));
  EXPECT_EQ(i_pow(-1), Complex(0.0, -1.0));
}

TEST(NonPositiveInteger, Detection) {
  EXPECT_TRUE(is_nonpositive_integer(0.0));
  EXPECT_TRUE(is_nonpositive_integer(-4.0 + 1e-12));
  EXPECT_FALSE(is_nonpositive_integer(1.0));
  EXPECT_FALSE(is_nonpositive_integer(-0.5));
  EXPECT_FALSE(is_nonpositive_integer(Complex(-2.0, 0.1)));
}

TEST(TanhLogs, StableInTails) {
  EXPECT_NEAR(log1p_tanh(0.3), std::log1p(std::tanh(0.3)), 1e-15);
  EXPECT_NEAR(log1m_tanh(0.3), std::log1p(-std::tanh(0.3)), 1e-15);
  // 1 - tanh(40) underflows in double; the log does not.
  EXPECT_NEAR(log1m_tanh(40.0), std::log(2.0) - 80.0, 1e-12);
  EXPECT_NEAR(log1p_tanh(-400.0), std::log(2.0) - 800.0, 1e-10);
  EXPECT_TRUE(std::isfinite(softplus(1e4)));
  EXPECT_DOUBLE_EQ(softplus(-1e4), 0.0);
}

} // namespace
} // namespace simplexft
