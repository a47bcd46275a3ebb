#ifndef SIMPLEXFT_SIMPLEX_POLY_HPP
#define SIMPLEXFT_SIMPLEX_POLY_HPP

#include <span>
#include <vector>

#include "simplexft/indices.hpp"
#include "simplexft/quadrature.hpp"
#include "simplexft/report.hpp"

namespace simplexft {

/// Jacobi parameter attached to axis k (0-based) of the simplex basis:
/// 2 (n_{k+2} + ... + n_r) + (alpha_{k+2} + ... + alpha_{r+1}) + r - k - 1.
double simplex_axis_parameter(const MultiIndex& n, const AlphaVector& alpha, std::size_t k);

/// Orthogonal basis element P_n^(alpha)(x) on T^r.
///
/// Each factor (1 - |x_{j-1}|)^{n_j} P_{n_j}(2 x_j / (1 - |x_{j-1}|) - 1) is
/// evaluated in homogeneous form, so points on the facet |x_{j-1}| = 1 need no
/// special treatment. Throws DimensionMismatchError unless
/// x.size() == n.size() == alpha.size() - 1.
double simplex_poly_eval(const MultiIndex& n, const AlphaVector& alpha, std::span<const double> x);

/// simplex_poly_eval given the points y_j = x_j together with the remaining
/// lengths w_j = 1 - x_1 - ... - x_{j-1}, which callers may know more
/// accurately than the subtraction would give.
double simplex_poly_eval_collapsed(const MultiIndex& n, const AlphaVector& alpha,
                                   std::span<const double> y, std::span<const double> w);

/// Squared norm h_n^(alpha), assembled from log-Gamma values.
/// Throws ParameterRangeError unless every alpha entry exceeds -1.
double h_norm(const MultiIndex& n, const AlphaVector& alpha);

/// |L[P](x) + |n| (|n| + |alpha| + r) P(x)| for the second-order simplex
/// operator L, with central differences of step `step`.
/// Throws StencilOutsideDomainError when the stencil leaves T^r.
double pde_residual(const MultiIndex& n, const AlphaVector& alpha, std::span<const double> x,
                    double step);

/// Quadrature of W_alpha P_n P_m against h_n delta_{n,m}.
///
/// The report uses scale sqrt(h_n h_m). Throws RuleMismatchError when the rule
/// is not a simplex rule for the same alpha with exactness >= |n| + |m|.
VerificationReport orthogonality_check(const MultiIndex& n, const MultiIndex& m,
                                       const AlphaVector& alpha, const QuadratureRule& rule,
                                       double tolerance = 1e-10);

/// Number of multi-indices of length r and total degree d: C(d + r - 1, d).
unsigned long long basis_dimension(std::size_t r, unsigned degree);

} // namespace simplexft

#endif // SIMPLEXFT_SIMPLEX_POLY_HPP
