#include "simplexft/numerics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "simplexft/errors.hpp"

namespace simplexft {
namespace {

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

// B_{2k} / (2k (2k - 1)), k = 1..10.
constexpr std::array<double, 10> kStirlingCoeff = {
    1.0 / 12.0,           -1.0 / 360.0,          1.0 / 1260.0,
    -1.0 / 1680.0,        1.0 / 1188.0,          -691.0 / 360360.0,
    1.0 / 156.0,          -3617.0 / 122400.0,    43867.0 / 244188.0,
    -174611.0 / 125400.0};

constexpr double kStirlingRadius = 16.0;

// Neumaier summation.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) noexcept {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  double value() const noexcept { return sum + carry; }
};

void add_product(CompensatedSum& acc, double a, double b) noexcept {
  const double p = a * b;
  acc.add(p);
  acc.add(std::fma(a, b, -p));
}

// Stirling series with upward shift; valid for Re(z) >= 1/2.
Complex stirling_log_gamma(Complex z) {
  CompensatedSum re;
  CompensatedSum im;
  // log Gamma(z) = log Gamma(z + m) - sum_{k<m} log(z + k)
  while (std::abs(z) < kStirlingRadius) {
    const Complex l = std::log(z);
    re.add(-l.real());
    im.add(-l.imag());
    z += 1.0;
  }
  const Complex log_z = std::log(z);
  const Complex shifted = z - 0.5;
  add_product(re, shifted.real(), log_z.real());
  add_product(re, -shifted.imag(), log_z.imag());
  add_product(im, shifted.real(), log_z.imag());
  add_product(im, shifted.imag(), log_z.real());
  re.add(-z.real());
  im.add(-z.imag());
  re.add(kHalfLog2Pi);

  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex tail = 0.0;
  for (std::size_t k = kStirlingCoeff.size(); k-- > 0;) {
    tail = tail * inv2 + kStirlingCoeff[k];
  }
  tail *= inv;
  re.add(tail.real());
  im.add(tail.imag());
  return {re.value(), im.value()};
}

// log sin(pi z), written so that neither branch overflows for large |Im z|.
Complex log_sin_pi(Complex z) {
  const Complex w = kPi * z;
  if (w.imag() >= 0.0) {
    // sin w = e^{-iw} (e^{2iw} - 1) / (2i), |e^{2iw}| <= 1
    return -kI * w + std::log((std::exp(2.0 * kI * w) - 1.0) / (2.0 * kI));
  }
  return kI * w + std::log((1.0 - std::exp(-2.0 * kI * w)) / (2.0 * kI));
}

bool on_pole(Complex z) noexcept {
  if (z.imag() != 0.0 || z.real() > 0.0) {
    return false;
  }
  const double nearest = std::round(z.real());
  return std::abs(z.real() - nearest) <=
         4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(nearest));
}

} // namespace

LogGammaValue log_gamma(Complex z) {
  if (on_pole(z)) {
    throw PoleError("log_gamma: argument " + std::to_string(z.real()) +
                    " is a non-positive integer");
  }
  Complex result;
  if (z.real() >= 0.5) {
    result = stirling_log_gamma(z);
  } else {
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    result = std::log(kPi) - log_sin_pi(z) - stirling_log_gamma(1.0 - z);
  }
  return {result.real(), result.imag()};
}

Complex gamma(Complex z) { return log_gamma(z).value(); }

Complex log_beta(Complex a, Complex b) {
  return log_gamma(a).log() + log_gamma(b).log() - log_gamma(a + b).log();
}

Complex beta(Complex a, Complex b) { return std::exp(log_beta(a, b)); }

bool beta_is_continuation(Complex a, Complex b) noexcept {
  return !(a.real() > 0.0 && b.real() > 0.0);
}

Complex pochhammer(Complex a, unsigned k) noexcept {
  Complex out = 1.0;
  for (unsigned j = 0; j < k; ++j) {
    out *= a + static_cast<double>(j);
  }
  return out;
}

double pochhammer(double a, unsigned k) noexcept {
  double out = 1.0;
  for (unsigned j = 0; j < k; ++j) {
    out *= a + static_cast<double>(j);
  }
  return out;
}

Complex i_pow(int n) noexcept {
  switch (((n % 4) + 4) % 4) {
  case 0:
    return {1.0, 0.0};
  case 1:
    return {0.0, 1.0};
  case 2:
    return {-1.0, 0.0};
  default:
    return {0.0, -1.0};
  }
}

bool is_nonpositive_integer(Complex z, double tol) noexcept {
  const double nearest = std::round(z.real());
  if (nearest > 0.0) {
    return false;
  }
  return std::abs(z - Complex(nearest, 0.0)) <= tol * (1.0 + std::abs(z));
}

double softplus(double x) noexcept {
  if (x > 0.0) {
    return x + std::log1p(std::exp(-x));
  }
  return std::log1p(std::exp(x));
}

double log1p_tanh(double x) noexcept {
  // 1 + tanh x = 2 / (1 + e^{-2x})
  return std::numbers::ln2 - softplus(-2.0 * x);
}

double log1m_tanh(double x) noexcept {
  // 1 - tanh x = 2 / (1 + e^{2x})
  return std::numbers::ln2 - softplus(2.0 * x);
}

} // namespace simplexft
