#ifndef SIMPLEXFT_SFAMILY_HPP
#define SIMPLEXFT_SFAMILY_HPP

#include <span>
#include <vector>

#include "simplexft/indices.hpp"
#include "simplexft/numerics.hpp"
#include "simplexft/report.hpp"

namespace simplexft {

/// Parameters of _rS_n(x; a, b): n has r entries, a and b have r + 1.
struct SParams {
  MultiIndex n;
  ParamVector a;
  ParamVector b;

  std::size_t rank() const noexcept { return n.size(); }
};

enum class SForm { hypergeometric, hahn };

/// Throws DimensionMismatchError on inconsistent lengths.
void validate_dimensions(const SParams& p);

/// Throws ParameterRangeError unless every a_j and b_j is positive.
void validate_positive(const SParams& p);

/// Factor of _rS attached to axis k (0-based):
/// (|a^{k+2}| + x/2)_{N} 3F2(-n_k, n_k + 2N + |a^{k+1}| + |b^{k+1}| - 1, N + |a^{k+2}| + x/2;
///                           2N + |a^{k+2}| + |b^{k+2}|, N + |a^{k+1}|; 1), N = |n^{k+2}|,
/// with 1-based tail sums. The Hahn form gives the same value.
Complex s_axis_factor(const SParams& p, std::size_t k, Complex x, SForm form = SForm::hypergeometric);

/// _rS_n(x; a, b), the product of the axis factors.
Complex s_eval(const SParams& p, std::span<const Complex> x, SForm form = SForm::hypergeometric);

/// Weight factor of axis k:
/// Gamma(a_k - ix/2) Gamma(|a^{k+1}| + ix/2) Gamma(b_k + ix/2) Gamma(|b^{k+1}| - ix/2).
Complex w_axis_factor(const SParams& p, std::size_t k, double x);

/// W_r(x; a, b), assembled from log-Gamma values before one exponentiation.
Complex w_weight(const SParams& p, std::span<const double> x);

/// Closed-form value of the orthogonality integral for m = n.
double s_orthogonality_rhs(const SParams& p);

/// Orthogonality integral of W_r _rS_n(ix; a, b) _rS_m(-ix; b, a) over R^r,
/// computed as a product of r line integrals. The report scale is the
/// geometric mean of the diagonal values for n and m.
VerificationReport s_orthogonality_check(const SParams& p, const MultiIndex& m,
                                         double tolerance = 1e-6);

/// Just the integral of s_orthogonality_check.
Complex s_orthogonality_lhs(const SParams& p, const MultiIndex& m, double tolerance = 1e-12);

enum class SRelation {
  /// Splits off the last axis (general r >= 2).
  p1,
  /// Splits off the first axis (general r >= 2).
  p2,
  /// r = 2 instance of p1 in its printed explicit form.
  relation1,
  /// r = 2 instance of p2 in its printed explicit form.
  relation2,
};

const char* to_string(SRelation which) noexcept;

/// Evaluates both sides of a factorisation of _rS in terms of a rank-(r-1) function.
VerificationReport s_relation_check(const SParams& p, SRelation which, std::span<const Complex> x,
                                    double tolerance = 1e-11);

} // namespace simplexft

#endif // SIMPLEXFT_SFAMILY_HPP
