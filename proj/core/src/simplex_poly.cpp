#include "simplexft/simplex_poly.hpp"

#include <cmath>
#include <string>

#include "simplexft/classical_poly.hpp"
#include "simplexft/errors.hpp"
#include "simplexft/numerics.hpp"

namespace simplexft {
namespace {

void check_dimensions(const MultiIndex& n, const AlphaVector& alpha, std::size_t x_size,
                      const char* op) {
  if (alpha.size() != n.size() + 1 || x_size != n.size() || n.size() == 0) {
    throw DimensionMismatchError(std::string(op) + ": need len(alpha) = len(n) + 1 = len(x) + 1 (got n=" +
                                 std::to_string(n.size()) + ", alpha=" + std::to_string(alpha.size()) +
                                 ", x=" + std::to_string(x_size) + ")");
  }
}

bool inside_simplex(std::span<const double> x) {
  double sum = 0.0;
  for (const double v : x) {
    if (v < 0.0) {
      return false;
    }
    sum += v;
  }
  return sum <= 1.0;
}

} // namespace

double simplex_axis_parameter(const MultiIndex& n, const AlphaVector& alpha, std::size_t k) {
  const std::size_t r = n.size();
  return 2.0 * n.tail(k + 1) + alpha.tail(k + 1) + static_cast<double>(r - k - 1);
}

double simplex_poly_eval(const MultiIndex& n, const AlphaVector& alpha, std::span<const double> x) {
  check_dimensions(n, alpha, x.size(), "simplex_poly_eval");
  double value = 1.0;
  double remaining = 1.0;
  for (std::size_t k = 0; k < n.size(); ++k) {
    const JacobiParams p{n[k], simplex_axis_parameter(n, alpha, k), alpha[k]};
    value *= jacobi_homogeneous(p, x[k], remaining);
    remaining -= x[k];
  }
  return value;
}

double simplex_poly_eval_collapsed(const MultiIndex& n, const AlphaVector& alpha,
                                   std::span<const double> y, std::span<const double> w) {
  check_dimensions(n, alpha, y.size(), "simplex_poly_eval_collapsed");
  check_dimensions(n, alpha, w.size(), "simplex_poly_eval_collapsed");
  double value = 1.0;
  for (std::size_t k = 0; k < n.size(); ++k) {
    const JacobiParams p{n[k], simplex_axis_parameter(n, alpha, k), alpha[k]};
    value *= jacobi_homogeneous(p, y[k], w[k]);
  }
  return value;
}

double h_norm(const MultiIndex& n, const AlphaVector& alpha) {
  check_dimensions(n, alpha, n.size(), "h_norm");
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!(alpha[i] > -1.0)) {
      throw ParameterRangeError("h_norm: alpha entries must exceed -1");
    }
  }
  double log_h = 0.0;
  for (std::size_t k = 0; k < n.size(); ++k) {
    const double c = simplex_axis_parameter(n, alpha, k) + 1.0;
    const double nk = static_cast<double>(n[k]);
    const double ak = alpha[k];
    log_h += log_gamma(c + nk).log_modulus + log_gamma(1.0 + ak + nk).log_modulus -
             log_gamma(nk + 1.0).log_modulus - std::log(c + ak + 2.0 * nk) -
             log_gamma(c + ak + nk).log_modulus;
  }
  return std::exp(log_h);
}

double pde_residual(const MultiIndex& n, const AlphaVector& alpha, std::span<const double> x,
                    double step) {
  check_dimensions(n, alpha, x.size(), "pde_residual");
  const std::size_t r = n.size();
  std::vector<double> p(x.begin(), x.end());
  auto eval_at = [&](std::size_t i, double di, std::size_t j, double dj) {
    p.assign(x.begin(), x.end());
    p[i] += di;
    p[j] += dj;
    if (!inside_simplex(p)) {
      throw StencilOutsideDomainError("pde_residual: stencil with step " + std::to_string(step) +
                                      " leaves the simplex");
    }
    return simplex_poly_eval(n, alpha, p);
  };

  const double h = step;
  const double centre = simplex_poly_eval(n, alpha, x);
  const double abs_alpha = alpha.total();
  double lhs = 0.0;
  for (std::size_t i = 0; i < r; ++i) {
    const double plus = eval_at(i, h, i, 0.0);
    const double minus = eval_at(i, -h, i, 0.0);
    const double pii = (plus - 2.0 * centre + minus) / (h * h);
    const double pi = (plus - minus) / (2.0 * h);
    lhs += x[i] * (1.0 - x[i]) * pii;
    lhs += ((alpha[i] + 1.0) - (abs_alpha + static_cast<double>(r) + 1.0) * x[i]) * pi;
    for (std::size_t j = i + 1; j < r; ++j) {
      const double pij = (eval_at(i, h, j, h) - eval_at(i, h, j, -h) - eval_at(i, -h, j, h) +
                          eval_at(i, -h, j, -h)) /
                         (4.0 * h * h);
      lhs -= 2.0 * x[i] * x[j] * pij;
    }
  }
  const double degree = static_cast<double>(n.total());
  // n (n + |alpha| + r); the printed "+ r + 1" fails already for r = 1, P = 2x - 1
  return std::abs(lhs + degree * (degree + abs_alpha + static_cast<double>(r)) * centre);
}

VerificationReport orthogonality_check(const MultiIndex& n, const MultiIndex& m,
                                       const AlphaVector& alpha, const QuadratureRule& rule,
                                       double tolerance) {
  check_dimensions(n, alpha, m.size(), "orthogonality_check");
  if (rule.domain != Domain::simplex || rule.dimension != n.size()) {
    throw RuleMismatchError("orthogonality_check: rule is not a simplex rule of dimension " +
                            std::to_string(n.size()));
  }
  if (rule.weight_parameters != alpha.entries()) {
    throw RuleMismatchError("orthogonality_check: rule was built for a different alpha");
  }
  if (rule.exactness_degree < static_cast<int>(n.total() + m.total())) {
    throw RuleMismatchError("orthogonality_check: rule exactness " +
                            std::to_string(rule.exactness_degree) + " below |n| + |m| = " +
                            std::to_string(n.total() + m.total()));
  }
  double sum = 0.0;
  double carry = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto pt = rule.point(i);
    const double term = rule.weights[i] * simplex_poly_eval(n, alpha, pt) * simplex_poly_eval(m, alpha, pt);
    const double t = sum + term;
    carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  const double lhs = sum + carry;
  const double hn = h_norm(n, alpha);
  const double hm = h_norm(m, alpha);
  const double rhs = n == m ? hn : 0.0;
  ParamList params;
  params.add("r", static_cast<unsigned>(n.size())).add("n", n).add("m", m).add("alpha", alpha);
  return make_report("simplex_orthogonality", std::move(params), lhs, rhs, tolerance,
                     std::sqrt(hn * hm));
}

unsigned long long basis_dimension(std::size_t r, unsigned degree) {
  // C(degree + r - 1, degree)
  unsigned long long c = 1;
  for (unsigned k = 1; k <= degree; ++k) {
    c = c * (r - 1 + k) / k;
  }
  return c;
}

} // namespace simplexft
