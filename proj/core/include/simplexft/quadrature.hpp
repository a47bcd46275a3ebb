#ifndef SIMPLEXFT_QUADRATURE_HPP
#define SIMPLEXFT_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace simplexft {

enum class Domain { interval, simplex, real_line };

/// Nodes and positive weights together with what the rule promises.
///
/// Nodes are stored row-major with `dimension` coordinates per node. Weighted
/// rules (Gauss-Jacobi, simplex) fold the weight function into `weights`, so a
/// caller integrates f against the weight as sum_i weights[i] f(node_i).
struct QuadratureRule {
  Domain domain = Domain::interval;
  std::size_t dimension = 1;
  std::vector<double> nodes;
  std::vector<double> weights;
  /// Polynomial degree integrated exactly, or -1 when the rule has none.
  int exactness_degree = -1;
  /// Declared absolute error for non-polynomial rules (0 when unused).
  double error_budget = 0.0;
  /// Weight exponents: (alpha, beta) for interval rules, alpha for simplex rules.
  std::vector<double> weight_parameters;

  std::size_t size() const noexcept { return weights.size(); }
  std::span<const double> point(std::size_t i) const noexcept {
    return {nodes.data() + i * dimension, dimension};
  }
  double node(std::size_t i) const noexcept { return nodes[i * dimension]; }
};

/// n-point Gauss-Jacobi rule for (1-x)^alpha (1+x)^beta on [-1, 1].
QuadratureRule gauss_jacobi(std::size_t npoints, double alpha, double beta);

/// Collapsed-coordinate tensor rule on T^r against
/// W(x) = x_1^a_1 ... x_r^a_r (1 - |x|)^a_{r+1}, exact to total degree `degree`.
QuadratureRule simplex_rule(std::size_t r, int degree, const std::vector<double>& alpha);

struct LineRuleOptions {
  /// Integrand decays like magnitude * exp(-decay_rate |x|) outside the core.
  double decay_rate = 1.0;
  /// Target absolute error.
  double tolerance = 1e-10;
  double core_radius = 0.0;
  double magnitude = 1.0;
  /// Distance from the real axis to the nearest singularity of the integrand.
  double singularity_distance = 1.0;
  std::size_t max_nodes = 200000;
};

/// Truncated composite Gauss-Legendre rule on [-L, L],
/// L = core_radius + ln(magnitude / tolerance) / decay_rate.
/// Throws BudgetInfeasibleError when more than max_nodes nodes are needed.
QuadratureRule line_rule(const LineRuleOptions& options);

/// Estimates C in |f(x)| <= C exp(-decay_rate |x|) by sampling |f| e^(decay_rate |x|)
/// on [-span, span]; returns twice the observed maximum.
double estimate_tail_constant(const std::function<double(double)>& abs_f, double decay_rate,
                              double span);

} // namespace simplexft

#endif // SIMPLEXFT_QUADRATURE_HPP
