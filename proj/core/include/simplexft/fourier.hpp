#ifndef SIMPLEXFT_FOURIER_HPP
#define SIMPLEXFT_FOURIER_HPP

#include <span>
#include <vector>

#include "simplexft/indices.hpp"
#include "simplexft/numerics.hpp"
#include "simplexft/report.hpp"

namespace simplexft {

/// Parameters of g_r: n has r entries, a and alpha have r + 1.
struct GParams {
  MultiIndex n;
  ParamVector a;
  AlphaVector alpha;

  std::size_t rank() const noexcept { return n.size(); }
};

enum class LambdaForm { hypergeometric, hahn };

/// Throws DimensionMismatchError on inconsistent lengths and
/// ParameterRangeError when some a_j <= 0.
void validate(const GParams& p);

/// g_r(x) = prod_j (1 + tanh x_j)^{a_j} (1 - tanh x_j)^{|a^{j+1}|} P_n^(alpha)(Y_1, ..., Y_r)
/// with Y_j = prod_{k<j} (1 - tanh x_k)/2 * (1 + tanh x_j)/2.
double g_eval(const GParams& p, std::span<const double> x);

/// Rank-r parameters produced by removing the last axis of a rank-(r+1) g:
/// a_{r+1} -> a_{r+1} + a_{r+2} + n_{r+1}, alpha_{r+1} -> alpha_{r+1} + alpha_{r+2} + 2 n_{r+1} + 1.
GParams reduce_last_axis(const GParams& p);

/// Compares g_{r+1}(x) with 2^{-r n_{r+1}} (1+t)^{a_{r+1}} (1-t)^{a_{r+2}}
/// P_{n_{r+1}}^{(alpha_{r+2}, alpha_{r+1})}(t) g_r(x_1..x_r), t = tanh x_{r+1}.
/// Requires rank >= 2.
VerificationReport g_recursion_check(const GParams& p, std::span<const double> x,
                                     double tolerance = 1e-11);

/// Per-axis factor Lambda_j (axis is 0-based) in 3F2 or continuous-Hahn form.
Complex lambda_factor(std::size_t axis, const GParams& p, double xi,
                      LambdaForm form = LambdaForm::hypergeometric);

/// Closed-form r-dimensional Fourier transform of g_r.
Complex ft_closed_form(const GParams& p, std::span<const double> xi,
                       LambdaForm form = LambdaForm::hypergeometric);

/// Closed-form transform of the last-axis factor of a rank-(r+1) g:
/// 2^{-r n} (1+tanh x)^{a_{r+1}} (1-tanh x)^{a_{r+2}} P_n^{(alpha_{r+2}, alpha_{r+1})}(tanh x),
/// n = n_{r+1}. Multiplying it by ft_closed_form(reduce_last_axis(p)) gives ft_closed_form(p).
Complex ft_last_axis_factor(const GParams& p, double xi);

/// Numeric Fourier transform: the integral factors into r line integrals,
/// each evaluated with a composite Gauss-Legendre line rule.
Complex ft_numeric(const GParams& p, std::span<const double> xi, double tolerance = 1e-12);

/// Brute-force tensor-product integral of exp(-i xi.x) g_r(x) for r <= 2.
/// Independent of the per-axis factorisation; used to cross-check it.
Complex ft_numeric_direct(const GParams& p, std::span<const double> xi, double tolerance = 1e-10);

} // namespace simplexft

#endif // SIMPLEXFT_FOURIER_HPP
