#include "simplexft/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "simplexft/classical_poly.hpp"
#include "simplexft/errors.hpp"
#include "simplexft/numerics.hpp"

namespace simplexft {
namespace {

void check_jacobi_exponents(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw ParameterRangeError("gauss_jacobi: alpha and beta must exceed -1 (got alpha=" +
                              std::to_string(alpha) + ", beta=" + std::to_string(beta) + ")");
  }
}

// Monic Jacobi recurrence: diagonal a_k and squared off-diagonal b_k.
double recurrence_diagonal(std::size_t k, double alpha, double beta) {
  const double s = alpha + beta;
  if (k == 0) {
    return (beta - alpha) / (s + 2.0);
  }
  const double t = 2.0 * static_cast<double>(k) + s;
  return (beta * beta - alpha * alpha) / (t * (t + 2.0));
}

double recurrence_offdiag_sq(std::size_t k, double alpha, double beta) {
  const double s = alpha + beta;
  const double kk = static_cast<double>(k);
  const double t = 2.0 * kk + s;
  if (k == 1) {
    return 4.0 * (1.0 + alpha) * (1.0 + beta) / ((s + 2.0) * (s + 2.0) * (s + 3.0));
  }
  return 4.0 * kk * (kk + alpha) * (kk + beta) * (kk + s) / (t * t * (t + 1.0) * (t - 1.0));
}

double newton_polish(const JacobiParams& p, double x) {
  for (int it = 0; it < 8; ++it) {
    const double f = jacobi_eval(p, x);
    const double df = jacobi_derivative(p, x);
    if (df == 0.0) {
      break;
    }
    const double step = f / df;
    const double next = std::clamp(x - step, -1.0, 1.0);
    if (std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) {
      x = next;
      break;
    }
    x = next;
  }
  return x;
}

} // namespace

QuadratureRule gauss_jacobi(std::size_t npoints, double alpha, double beta) {
  check_jacobi_exponents(alpha, beta);
  if (npoints == 0) {
    throw ParameterRangeError("gauss_jacobi: npoints must be positive");
  }
  const std::size_t n = npoints;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 1);
  for (std::size_t k = 0; k < n; ++k) {
    diag(static_cast<Eigen::Index>(k)) = recurrence_diagonal(k, alpha, beta);
  }
  for (std::size_t k = 1; k < n; ++k) {
    sub(static_cast<Eigen::Index>(k - 1)) = std::sqrt(recurrence_offdiag_sq(k, alpha, beta));
  }
  // total mass 2^(a+b+1) B(a+1, b+1)
  const double mass = std::exp((alpha + beta + 1.0) * std::numbers::ln2 + log_gamma(alpha + 1.0).log_modulus +
                               log_gamma(beta + 1.0).log_modulus - log_gamma(alpha + beta + 2.0).log_modulus);
  QuadratureRule rule;
  rule.domain = Domain::interval;
  rule.dimension = 1;
  rule.exactness_degree = static_cast<int>(2 * n - 1);
  rule.weight_parameters = {alpha, beta};
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = diag(0);
    rule.weights[0] = mass;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(static_cast<Eigen::Index>(n - 1)), Eigen::ComputeEigenvectors);
  const JacobiParams p{static_cast<unsigned>(n), alpha, beta};
  for (std::size_t i = 0; i < n; ++i) {
    const auto col = static_cast<Eigen::Index>(i);
    rule.nodes[i] = newton_polish(p, solver.eigenvalues()(col));
    // Golub-Welsch: w_i = mass * v_{0i}^2. The derivative formula loses
    // relative accuracy at nodes next to +-1 where 1 - x_i^2 cancels.
    const double v0 = solver.eigenvectors()(0, col);
    rule.weights[i] = mass * v0 * v0;
  }
  return rule;
}

QuadratureRule simplex_rule(std::size_t r, int degree, const std::vector<double>& alpha) {
  if (r == 0) {
    throw DimensionMismatchError("simplex_rule: r must be at least 1");
  }
  if (alpha.size() != r + 1) {
    throw DimensionMismatchError("simplex_rule: alpha must have r + 1 = " + std::to_string(r + 1) +
                                 " entries, got " + std::to_string(alpha.size()));
  }
  for (const double a : alpha) {
    if (!(a > -1.0)) {
      throw ParameterRangeError("simplex_rule: alpha entries must exceed -1");
    }
  }
  const std::size_t m = static_cast<std::size_t>(std::max(degree, 0) + 2) / 2;

  // Axis k carries u^alpha_k (1-u)^(alpha_{k+1} + ... + alpha_r + r - 1 - k) on [0, 1].
  std::vector<std::vector<double>> u(r);
  std::vector<std::vector<double>> w(r);
  for (std::size_t k = 0; k < r; ++k) {
    double tail = static_cast<double>(r - 1 - k);
    for (std::size_t i = k + 1; i <= r; ++i) {
      tail += alpha[i];
    }
    const QuadratureRule axis = gauss_jacobi(m, tail, alpha[k]);
    const double scale = std::exp(-(tail + alpha[k] + 1.0) * std::numbers::ln2);
    for (std::size_t i = 0; i < m; ++i) {
      u[k].push_back(0.5 * (1.0 + axis.nodes[i]));
      w[k].push_back(axis.weights[i] * scale);
    }
  }

  QuadratureRule rule;
  rule.domain = Domain::simplex;
  rule.dimension = r;
  rule.exactness_degree = std::max(degree, 0);
  rule.weight_parameters = alpha;
  std::size_t total = 1;
  for (std::size_t k = 0; k < r; ++k) {
    total *= m;
  }
  rule.nodes.reserve(total * r);
  rule.weights.reserve(total);
  std::vector<std::size_t> idx(r, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    double remaining = 1.0;
    double weight = 1.0;
    for (std::size_t k = 0; k < r; ++k) {
      const double uk = u[k][idx[k]];
      rule.nodes.push_back(remaining * uk);
      remaining *= 1.0 - uk;
      weight *= w[k][idx[k]];
    }
    rule.weights.push_back(weight);
    for (std::size_t k = r; k-- > 0;) {
      if (++idx[k] < m) {
        break;
      }
      idx[k] = 0;
    }
  }
  return rule;
}

QuadratureRule line_rule(const LineRuleOptions& options) {
  if (!(options.decay_rate > 0.0) || !(options.tolerance > 0.0) ||
      !(options.singularity_distance > 0.0) || !(options.magnitude > 0.0)) {
    throw ParameterRangeError(
        "line_rule: decay_rate, tolerance, magnitude and singularity_distance must be positive");
  }
  const double half_length =
      options.core_radius +
      std::max(0.0, std::log(options.magnitude / options.tolerance)) / options.decay_rate;
  const double d = options.singularity_distance;
  const std::size_t panels = std::max<std::size_t>(
      2, static_cast<std::size_t>(std::ceil(2.0 * half_length / d)));
  const double h = 2.0 * half_length / static_cast<double>(panels);

  // Gauss-Legendre on a panel of width h converges like rho^(-2m), rho the
  // Bernstein ellipse parameter reaching 80% of the way to the singularity.
  const double b = 2.0 * 0.8 * d / h;
  const double rho = b + std::sqrt(b * b + 1.0);
  const double per_panel_tol = options.tolerance / static_cast<double>(panels);
  const double needed = std::log(64.0 * options.magnitude * h / per_panel_tol) / (2.0 * std::log(rho));
  const std::size_t m = std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil(needed)), 4, 64);
  if (panels * m > options.max_nodes) {
    throw BudgetInfeasibleError("line_rule: " + std::to_string(panels * m) +
                                " nodes needed, cap is " + std::to_string(options.max_nodes));
  }

  const QuadratureRule legendre = gauss_jacobi(m, 0.0, 0.0);
  QuadratureRule rule;
  rule.domain = Domain::real_line;
  rule.dimension = 1;
  rule.error_budget = options.tolerance;
  rule.nodes.reserve(panels * m);
  rule.weights.reserve(panels * m);
  for (std::size_t p = 0; p < panels; ++p) {
    const double left = -half_length + static_cast<double>(p) * h;
    for (std::size_t i = 0; i < m; ++i) {
      rule.nodes.push_back(left + 0.5 * h * (legendre.nodes[i] + 1.0));
      rule.weights.push_back(0.5 * h * legendre.weights[i]);
    }
  }
  return rule;
}

double estimate_tail_constant(const std::function<double(double)>& abs_f, double decay_rate,
                              double span) {
  constexpr int kSamples = 401;
  double best = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const double x = -span + 2.0 * span * static_cast<double>(i) / (kSamples - 1);
    const double v = abs_f(x) * std::exp(decay_rate * std::abs(x));
    if (std::isfinite(v)) {
      best = std::max(best, v);
    }
  }
  return 2.0 * std::max(best, std::numeric_limits<double>::min());
}

} // namespace simplexft
