#ifndef SIMPLEXFT_NUMERICS_HPP
#define SIMPLEXFT_NUMERICS_HPP

#include <complex>
#include <numbers>

namespace simplexft {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

/// log Gamma(z) split into modulus and phase.
///
/// Gamma(z) = exp(log_modulus + i * phase). The phase is the imaginary part of
/// the principal log-Gamma branch (continuous in the right half plane); it is
/// only meaningful modulo 2*pi once values are exponentiated.
struct LogGammaValue {
  double log_modulus = 0.0;
  double phase = 0.0;

  Complex log() const noexcept { return {log_modulus, phase}; }
  Complex value() const { return std::exp(log()); }
};

/// Complex log-Gamma via a shifted Stirling series; reflection for
/// Re(z) < 1/2. Throws PoleError on z in {0, -1, -2, ...}.
LogGammaValue log_gamma(Complex z);

Complex gamma(Complex z);

/// log B(a, b) = log Gamma(a) + log Gamma(b) - log Gamma(a + b).
Complex log_beta(Complex a, Complex b);

/// Euler Beta function evaluated as a Gamma ratio in log space.
///
/// The integral definition needs Re(a), Re(b) > 0; outside that region the
/// value is the analytic continuation (see beta_is_continuation).
Complex beta(Complex a, Complex b);

/// True when (a, b) lies outside the integral-definition region Re > 0.
bool beta_is_continuation(Complex a, Complex b) noexcept;

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), (a)_0 = 1.
Complex pochhammer(Complex a, unsigned k) noexcept;
double pochhammer(double a, unsigned k) noexcept;

/// i^n for integer n (exact, no trigonometry).
Complex i_pow(int n) noexcept;

/// True when z is a non-positive integer within a relative tolerance.
bool is_nonpositive_integer(Complex z, double tol = 1e-9) noexcept;

/// log(1 + exp(x)) without overflow.
double softplus(double x) noexcept;

/// log(1 + tanh x) and log(1 - tanh x), stable for large |x|.
double log1p_tanh(double x) noexcept;
double log1m_tanh(double x) noexcept;

} // namespace simplexft

#endif // SIMPLEXFT_NUMERICS_HPP
