#include "simplexft/classical_poly.hpp"

#include <cmath>
#include <limits>

#include "simplexft/errors.hpp"
#include "simplexft/hypergeom.hpp"

namespace simplexft {
namespace {

template <typename T>
T pow_int(T base, unsigned k) {
  T out = 1.0;
  for (unsigned i = 0; i < k; ++i) {
    out *= base;
  }
  return out;
}

// Recurrence denominators 2k (k+a+b) (2k+a+b-2) vanish for some special
// parameter pairs; the hypergeometric form covers those.
bool recurrence_is_regular(const JacobiParams& p) {
  const double s = p.alpha + p.beta;
  for (unsigned k = 2; k <= p.n; ++k) {
    const double kk = static_cast<double>(k);
    if (std::abs((kk + s) * (2.0 * kk + s - 2.0)) < 1e-12) {
      return false;
    }
  }
  return true;
}

// w^n P_n(2y/w - 1) = sum_k c_k (w - y)^k w^(n-k) with
// c_k = (-n)_k (n+a+b+1)_k / k! * prod_{i=k}^{n-1} (a+1+i) / n!.
template <typename T>
T homogeneous_series(const JacobiParams& p, T y, T w) {
  const unsigned n = p.n;
  const double a = p.alpha;
  const double s = p.alpha + p.beta;
  T out = 0.0;
  for (unsigned k = 0; k <= n; ++k) {
    double c = 1.0;
    for (unsigned i = 0; i < k; ++i) {
      const double ii = static_cast<double>(i);
      c *= (-static_cast<double>(n) + ii) * (static_cast<double>(n) + s + 1.0 + ii) / (ii + 1.0);
    }
    for (unsigned i = k; i < n; ++i) {
      c *= a + 1.0 + static_cast<double>(i);
    }
    for (unsigned i = 2; i <= n; ++i) {
      c /= static_cast<double>(i);
    }
    out += c * pow_int(w - y, k) * pow_int(w, n - k);
  }
  return out;
}

template <typename T>
T homogeneous_recurrence(const JacobiParams& p, T y, T w) {
  const double a = p.alpha;
  const double b = p.beta;
  const double s = a + b;
  if (p.n == 0) {
    return T(1.0);
  }
  T prev = 1.0;
  T curr = (a + 1.0) * w + (s + 2.0) * (y - w);
  const T shifted = 2.0 * y - w;
  const T w2 = w * w;
  for (unsigned k = 2; k <= p.n; ++k) {
    const double kk = static_cast<double>(k);
    const double c0 = 2.0 * kk * (kk + s) * (2.0 * kk + s - 2.0);
    const double c1 = (2.0 * kk + s - 1.0) * (2.0 * kk + s) * (2.0 * kk + s - 2.0);
    const double c2 = (2.0 * kk + s - 1.0) * (a * a - b * b);
    const double c3 = 2.0 * (kk + a - 1.0) * (kk + b - 1.0) * (2.0 * kk + s);
    const T next = ((c1 * shifted + c2 * w) * curr - c3 * w2 * prev) / c0;
    prev = curr;
    curr = next;
  }
  return curr;
}

template <typename T>
T homogeneous(const JacobiParams& p, T y, T w) {
  if (recurrence_is_regular(p)) {
    return homogeneous_recurrence(p, y, w);
  }
  return homogeneous_series(p, y, w);
}

} // namespace

Complex jacobi_eval(const JacobiParams& p, Complex x) {
  // w = 1, y = (x + 1) / 2
  return homogeneous<Complex>(p, 0.5 * (x + 1.0), Complex(1.0, 0.0));
}

double jacobi_eval(const JacobiParams& p, double x) {
  return homogeneous<double>(p, 0.5 * (x + 1.0), 1.0);
}

Complex jacobi_shifted_eval(const JacobiParams& p, double t) {
  return homogeneous<Complex>(p, Complex(t, 0.0), Complex(1.0, 0.0));
}

double jacobi_homogeneous(const JacobiParams& p, double y, double w) {
  return homogeneous<double>(p, y, w);
}

double jacobi_derivative(const JacobiParams& p, double x) {
  if (p.n == 0) {
    return 0.0;
  }
  const JacobiParams lowered{p.n - 1, p.alpha + 1.0, p.beta + 1.0};
  return 0.5 * (static_cast<double>(p.n) + p.alpha + p.beta + 1.0) * jacobi_eval(lowered, x);
}

double jacobi_norm(const JacobiParams& p) {
  if (!(p.alpha > -1.0) || !(p.beta > -1.0)) {
    throw ParameterRangeError("jacobi_norm: alpha and beta must exceed -1");
  }
  const double n = static_cast<double>(p.n);
  const double s = p.alpha + p.beta;
  // At n = 0, (s + 1) Gamma(s + 1) = Gamma(s + 2) keeps s = -1 regular.
  double log_value = (s + 1.0) * std::numbers::ln2 + log_gamma(p.alpha + n + 1.0).log_modulus +
                     log_gamma(p.beta + n + 1.0).log_modulus -
                     log_gamma(n + 1.0).log_modulus;
  if (p.n == 0) {
    log_value -= log_gamma(s + 2.0).log_modulus;
  } else {
    log_value -= std::log(s + 2.0 * n + 1.0) + log_gamma(s + n + 1.0).log_modulus;
  }
  return std::exp(log_value);
}

Complex hahn_eval(const HahnParams& p, Complex x) {
  const double n = static_cast<double>(p.n);
  const Complex ac = p.a + p.c;
  const Complex ad = p.a + p.d;
  Complex prefactor = i_pow(static_cast<int>(p.n)) * pochhammer(ac, p.n) * pochhammer(ad, p.n);
  for (unsigned k = 2; k <= p.n; ++k) {
    prefactor /= static_cast<double>(k);
  }
  const Complex f =
      hyp3f2(-n, n + p.a + p.b + p.c + p.d - 1.0, p.a + kI * x, ac, ad, Complex(1.0, 0.0));
  return prefactor * f;
}

} // namespace simplexft
