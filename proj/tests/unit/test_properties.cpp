// Randomised property checks with hand-rolled generators over the public API.
#include <array>
#include <cmath>

#include <gtest/gtest.h>

#include "simplexft/classical_poly.hpp"
#include "simplexft/fourier.hpp"
#include "simplexft/hypergeom.hpp"
#include "simplexft/numerics.hpp"
#include "simplexft/quadrature.hpp"
#include "simplexft/rng.hpp"
#include "simplexft/sfamily.hpp"
#include "simplexft/simplex_poly.hpp"
#include "test_support.hpp"

namespace simplexft {
namespace {

using testing::near_rel;
using testing::near_strict;

constexpr int kCases = 200;

Complex gen_complex(Rng& rng, double lo, double hi, double im) {
  return {rng.uniform(lo, hi), rng.uniform(-im, im)};
}

MultiIndex gen_index(Rng& rng, std::size_t r, int max_entry) {
  std::vector<unsigned> n(r);
  for (auto& e : n) e = static_cast<unsigned>(rng.integer(0, max_entry));
  return MultiIndex(n);
}

ParamVector gen_params(Rng& rng, std::size_t count, double lo, double hi) {
  std::vector<double> v(count);
  for (auto& e : v) e = rng.uniform(lo, hi);
  return ParamVector(v);
}

// A point strictly inside T^r.
std::vector<double> gen_simplex_point(Rng& rng, std::size_t r) {
  std::vector<double> e(r + 1);
  double total = 0.0;
  for (auto& v : e) {
    v = -std::log(1.0 - rng.unit() * 0.999);
    total += v;
  }
  std::vector<double> x(r);
  for (std::size_t k = 0; k < r; ++k) x[k] = e[k] / total;
  return x;
}

TEST(Property, GammaDuplication) {
  // Gamma(z) Gamma(z + 1/2) = 2^{1-2z} sqrt(pi) Gamma(2z)
  Rng rng(1001);
  for (int i = 0; i < kCases; ++i) {
    const Complex z = gen_complex(rng, 0.1, 12.0, 8.0);
    const Complex lhs = gamma(z) * gamma(z + 0.5);
    const Complex rhs = std::pow(Complex(2.0, 0.0), 1.0 - 2.0 * z) * std::sqrt(kPi) * gamma(2.0 * z);
    EXPECT_TRUE(near_strict(lhs, rhs, 1e-11)) << z;
  }
}

TEST(Property, LogGammaConjugateSymmetry) {
  Rng rng(1002);
  for (int i = 0; i < kCases; ++i) {
    const Complex z = gen_complex(rng, -6.0, 20.0, 30.0);
    if (is_nonpositive_integer(z, 1e-6)) continue;
    const LogGammaValue a = log_gamma(z);
    const LogGammaValue b = log_gamma(std::conj(z));
    EXPECT_NEAR(a.log_modulus, b.log_modulus, 1e-12 * std::max(1.0, std::abs(a.log_modulus))) << z;
  }
}

TEST(Property, JacobiThreeTermRecurrence) {
  // 2(n+1)(n+a+b+1)(2n+a+b) P_{n+1} = (2n+a+b+1)[(2n+a+b+2)(2n+a+b) x + a^2 - b^2] P_n
  //                                   - 2(n+a)(n+b)(2n+a+b+2) P_{n-1}
  Rng rng(1003);
  for (int i = 0; i < kCases; ++i) {
    const unsigned n = static_cast<unsigned>(rng.integer(1, 20));
    const double a = rng.uniform(-0.9, 5.0);
    const double b = rng.uniform(-0.9, 5.0);
    const double x = rng.uniform(-1.0, 1.0);
    const double s = 2.0 * n + a + b;
    const double lhs = 2.0 * (n + 1) * (n + a + b + 1.0) * s * jacobi_eval({n + 1, a, b}, x);
    const double rhs = (s + 1.0) * ((s + 2.0) * s * x + a * a - b * b) * jacobi_eval({n, a, b}, x) -
                       2.0 * (n + a) * (n + b) * (s + 2.0) * jacobi_eval({n - 1, a, b}, x);
    EXPECT_NEAR(lhs, rhs, 1e-10 * std::max({1.0, std::abs(lhs), std::abs(rhs)}));
  }
}

TEST(Property, HahnIsPolynomialOfDegreeN) {
  // The (n+1)-th finite difference in x of a degree-n polynomial vanishes.
  Rng rng(1004);
  for (int i = 0; i < 50; ++i) {
    const unsigned n = static_cast<unsigned>(rng.integer(0, 5));
    const HahnParams p{n, gen_complex(rng, 0.3, 2.0, 0.5), gen_complex(rng, 0.3, 2.0, 0.5),
                       gen_complex(rng, 0.3, 2.0, 0.5), gen_complex(rng, 0.3, 2.0, 0.5)};
    const double x0 = rng.uniform(-1.0, 1.0);
    Complex diff = 0.0;
    double scale = 0.0;
    double binom = 1.0;
    for (unsigned k = 0; k <= n + 1; ++k) {
      const Complex v = hahn_eval(p, x0 + 0.5 * k);
      diff += ((n + 1 - k) % 2 == 0 ? 1.0 : -1.0) * binom * v;
      scale += binom * std::abs(v);
      binom = binom * (n + 1 - k) / (k + 1.0);
    }
    EXPECT_LE(std::abs(diff), 1e-11 * std::max(1.0, scale)) << n;
  }
}

TEST(Property, SimplexPolyEigenfunction) {
  Rng rng(1005);
  for (int i = 0; i < 60; ++i) {
    const std::size_t r = static_cast<std::size_t>(rng.integer(1, 3));
    const MultiIndex n = gen_index(rng, r, 3);
    const AlphaVector alpha = gen_params(rng, r + 1, -0.5, 2.0);
    auto x = gen_simplex_point(rng, r);
    // keep the stencil inside the simplex
    double total = 0.0;
    for (auto& v : x) {
      v = 0.05 + 0.8 * v;
      total += v;
    }
    if (total > 0.95) continue;
    const double lambda = n.total() * (n.total() + alpha.total() + static_cast<double>(r));
    const double scale = (1.0 + lambda) * std::max(1.0, std::abs(simplex_poly_eval(n, alpha, x)));
    EXPECT_LT(pde_residual(n, alpha, x, 1e-4), 1e-5 * scale) << i;
  }
}

TEST(Property, SimplexOrthogonalityRandomPairs) {
  Rng rng(1006);
  for (int i = 0; i < 40; ++i) {
    const std::size_t r = static_cast<std::size_t>(rng.integer(1, 3));
    const AlphaVector alpha = gen_params(rng, r + 1, -0.5, 2.0);
    const MultiIndex n = gen_index(rng, r, 2);
    const MultiIndex m = gen_index(rng, r, 2);
    const QuadratureRule rule = simplex_rule(r, static_cast<int>(n.total() + m.total()), alpha.entries());
    EXPECT_TRUE(orthogonality_check(n, m, alpha, rule).passed) << i;
  }
}

TEST(Property, FourierReductionFactorises) {
  Rng rng(1007);
  for (int i = 0; i < 100; ++i) {
    const std::size_t r = static_cast<std::size_t>(rng.integer(2, 3));
    const GParams p{gen_index(rng, r, 3), gen_params(rng, r + 1, 0.3, 2.5), gen_params(rng, r + 1, -0.5, 2.0)};
    std::vector<double> xi(r);
    for (auto& v : xi) v = rng.uniform(-4.0, 4.0);
    const Complex full = ft_closed_form(p, xi);
    const Complex reduced =
        ft_closed_form(reduce_last_axis(p), std::span<const double>(xi.data(), r - 1)) * ft_last_axis_factor(p, xi[r - 1]);
    EXPECT_LE(std::abs(full - reduced), 1e-10 * std::max(std::abs(full), 1e-300)) << i;
  }
}

TEST(Property, FourierConjugateSymmetry) {
  // g is real, so F(-xi) = conj F(xi).
  Rng rng(1008);
  for (int i = 0; i < 100; ++i) {
    const std::size_t r = static_cast<std::size_t>(rng.integer(1, 3));
    const GParams p{gen_index(rng, r, 3), gen_params(rng, r + 1, 0.3, 2.5), gen_params(rng, r + 1, -0.5, 2.0)};
    std::vector<double> xi(r);
    std::vector<double> neg(r);
    for (std::size_t k = 0; k < r; ++k) {
      xi[k] = rng.uniform(-4.0, 4.0);
      neg[k] = -xi[k];
    }
    const Complex f = ft_closed_form(p, xi);
    EXPECT_TRUE(near_rel(ft_closed_form(p, neg), std::conj(f), 1e-11)) << i;
  }
}

TEST(Property, SRelationsOnRandomSamples) {
  Rng rng(1009);
  for (int i = 0; i < 100; ++i) {
    const std::size_t r = static_cast<std::size_t>(rng.integer(2, 3));
    const SParams p{gen_index(rng, r, 3), gen_params(rng, r + 1, 0.5, 1.5), gen_params(rng, r + 1, 0.5, 1.5)};
    std::vector<Complex> x(r);
    for (auto& v : x) v = gen_complex(rng, -2.0, 2.0, 1.0);
    EXPECT_TRUE(s_relation_check(p, SRelation::p1, x).passed) << i;
    EXPECT_TRUE(s_relation_check(p, SRelation::p2, x).passed) << i;
  }
}

TEST(Property, SOrthogonalitySymmetricInSwap) {
  // Swapping (n, m) together with (a, b) is the substitution x -> -x.
  Rng rng(1010);
  for (int i = 0; i < 10; ++i) {
    const SParams p{gen_index(rng, 1, 2), gen_params(rng, 2, 0.5, 1.5), gen_params(rng, 2, 0.5, 1.5)};
    const MultiIndex m = gen_index(rng, 1, 2);
    const SParams q{m, p.b, p.a};
    const Complex lhs = s_orthogonality_lhs(p, m);
    const Complex swapped = s_orthogonality_lhs(q, p.n);
    const double scale = std::sqrt(s_orthogonality_rhs(p) * s_orthogonality_rhs(SParams{m, p.a, p.b}));
    EXPECT_LE(std::abs(lhs - swapped), 1e-8 * scale) << i;
  }
}

} // namespace
} // namespace simplexft
