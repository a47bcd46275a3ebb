#include "simplexft/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simplexft/classical_poly.hpp"
#include "simplexft/errors.hpp"
#include "simplexft/hypergeom.hpp"
#include "simplexft/quadrature.hpp"
#include "simplexft/simplex_poly.hpp"

namespace simplexft {
namespace {

// (1 + tanh x) / 2 and (1 - tanh x) / 2 without cancellation.
double half_one_plus_tanh(double x) { return 1.0 / (1.0 + std::exp(-2.0 * x)); }
double half_one_minus_tanh(double x) { return 1.0 / (1.0 + std::exp(2.0 * x)); }

Complex beta_factor(Complex a, Complex b) { return std::exp(log_beta(a, b)); }

double factorial(unsigned n) {
  double f = 1.0;
  for (unsigned k = 2; k <= n; ++k) {
    f *= static_cast<double>(k);
  }
  return f;
}

// Integrand of the axis-k line integral, without the oscillatory factor:
// 2^{-N} (1+t)^{a_k} (1-t)^{|a^{k+1}| + N} P_{n_k}^{(A_k, alpha_k)}(t), N = |n^{k+1}|.
struct AxisIntegrand {
  double a_plus;
  double a_minus;
  double shift;
  JacobiParams jacobi;

  double operator()(double x) const {
    const double log_weight =
        a_plus * log1p_tanh(x) + a_minus * log1m_tanh(x) - shift * std::numbers::ln2;
    return std::exp(log_weight) * jacobi_eval(jacobi, std::tanh(x));
  }
  double decay() const { return 2.0 * std::min(a_plus, a_minus); }
};

AxisIntegrand axis_integrand(const GParams& p, std::size_t k) {
  const double tail_n = static_cast<double>(p.n.tail(k + 1));
  return AxisIntegrand{p.a[k], p.a.tail(k + 1) + tail_n, tail_n,
                       JacobiParams{p.n[k], simplex_axis_parameter(p.n, p.alpha, k), p.alpha[k]}};
}

QuadratureRule axis_rule(const AxisIntegrand& f, double xi, double tolerance) {
  constexpr double kSingularity = kPi / 2.0;
  const double decay = f.decay();
  const double span = std::max(4.0, 40.0 / decay);
  const double c = estimate_tail_constant([&](double x) { return std::abs(f(x)); }, decay, span);
  LineRuleOptions opt;
  opt.decay_rate = decay;
  opt.tolerance = tolerance * c;
  opt.core_radius = 0.0;
  // Growth inside the analyticity strip: the oscillatory factor and the
  // (1 +- tanh)^a powers off the real axis.
  const double growth = std::exp(0.8 * kSingularity * std::abs(xi)) *
                        std::pow(4.0, f.a_plus + f.a_minus + f.jacobi.n);
  opt.magnitude = c * growth;
  opt.singularity_distance = kSingularity;
  return line_rule(opt);
}

Complex integrate_axis(const AxisIntegrand& f, double xi, double tolerance) {
  const QuadratureRule rule = axis_rule(f, xi, tolerance);
  Complex sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.node(i);
    sum += rule.weights[i] * f(x) * std::exp(Complex(0.0, -xi * x));
  }
  return sum;
}

void check_xi(const GParams& p, std::size_t size, const char* op) {
  if (size != p.rank()) {
    throw DimensionMismatchError(std::string(op) + ": expected " + std::to_string(p.rank()) +
                                 " Fourier variables, got " + std::to_string(size));
  }
}

} // namespace

void validate(const GParams& p) {
  const std::size_t r = p.rank();
  if (r == 0 || p.a.size() != r + 1 || p.alpha.size() != r + 1) {
    throw DimensionMismatchError("GParams: need len(a) = len(alpha) = len(n) + 1 >= 2 (got n=" +
                                 std::to_string(r) + ", a=" + std::to_string(p.a.size()) +
                                 ", alpha=" + std::to_string(p.alpha.size()) + ")");
  }
  for (std::size_t k = 0; k <= r; ++k) {
    if (!(p.a[k] > 0.0)) {
      throw ParameterRangeError("GParams: a entries must be positive (a_" + std::to_string(k + 1) +
                                " = " + std::to_string(p.a[k]) + ")");
    }
  }
}

double g_eval(const GParams& p, std::span<const double> x) {
  const std::size_t r = p.rank();
  if (p.a.size() != r + 1 || p.alpha.size() != r + 1 || x.size() != r) {
    throw DimensionMismatchError("g_eval: inconsistent dimensions");
  }
  double log_prefactor = 0.0;
  std::vector<double> y(r);
  std::vector<double> w(r);
  double remaining = 1.0;
  for (std::size_t k = 0; k < r; ++k) {
    log_prefactor += p.a[k] * log1p_tanh(x[k]) + p.a.tail(k + 1) * log1m_tanh(x[k]);
    w[k] = remaining;
    y[k] = remaining * half_one_plus_tanh(x[k]);
    remaining *= half_one_minus_tanh(x[k]);
  }
  return std::exp(log_prefactor) * simplex_poly_eval_collapsed(p.n, p.alpha, y, w);
}

GParams reduce_last_axis(const GParams& p) {
  const std::size_t r1 = p.rank();
  if (r1 < 2) {
    throw DimensionMismatchError("reduce_last_axis: rank must be at least 2");
  }
  const std::size_t last = r1 - 1;
  const double nl = static_cast<double>(p.n[last]);
  std::vector<unsigned> n(p.n.entries().begin(), p.n.entries().end() - 1);
  std::vector<double> a(p.a.entries().begin(), p.a.entries().end() - 1);
  std::vector<double> alpha(p.alpha.entries().begin(), p.alpha.entries().end() - 1);
  a[last] = p.a[last] + p.a[last + 1] + nl;
  alpha[last] = p.alpha[last] + p.alpha[last + 1] + 2.0 * nl + 1.0;
  return GParams{MultiIndex(std::move(n)), ParamVector(std::move(a)), AlphaVector(std::move(alpha))};
}

VerificationReport g_recursion_check(const GParams& p, std::span<const double> x, double tolerance) {
  const GParams reduced = reduce_last_axis(p);
  const std::size_t last = p.rank() - 1;
  const double r = static_cast<double>(reduced.rank());
  const unsigned nl = p.n[last];
  const double xl = x[last];
  const double log_factor = -r * nl * std::numbers::ln2 + p.a[last] * log1p_tanh(xl) +
                            p.a[last + 1] * log1m_tanh(xl);
  const double jac = jacobi_eval(JacobiParams{nl, p.alpha[last + 1], p.alpha[last]}, std::tanh(xl));
  const double lhs = g_eval(p, x);
  const double rhs = std::exp(log_factor) * jac * g_eval(reduced, x.first(last));
  ParamList params;
  params.add("r", static_cast<unsigned>(p.rank()))
      .add("n", p.n)
      .add("a", p.a)
      .add("alpha", p.alpha)
      .add("x", std::vector<double>(x.begin(), x.end()));
  return make_report("g_recursion", std::move(params), lhs, rhs, tolerance, relative_scale(lhs, rhs));
}

Complex lambda_factor(std::size_t axis, const GParams& p, double xi, LambdaForm form) {
  validate(p);
  const std::size_t r = p.rank();
  if (axis >= r) {
    throw DimensionMismatchError("lambda_factor: axis " + std::to_string(axis) + " out of range");
  }
  const std::size_t k = axis;
  const unsigned nk = p.n[k];
  const double dn = static_cast<double>(nk);
  const double tail_n = static_cast<double>(p.n.tail(k + 1));
  const double a_next = p.a.tail(k + 1);
  const double a_here = p.a.tail(k);
  const double alpha_next = p.alpha.tail(k + 1);
  const double alpha_here = p.alpha.tail(k);
  const double rk = static_cast<double>(r - k); // r - j + 1 with j = k + 1
  const double c = 2.0 * tail_n + alpha_next + rk;
  const Complex half_i_xi(0.0, 0.5 * xi);
  const Complex beta = beta_factor(p.a[k] - half_i_xi, tail_n + a_next + half_i_xi);

  if (form == LambdaForm::hypergeometric) {
    return beta * hyp3f2(-dn, dn + 2.0 * tail_n + alpha_here + rk, tail_n + a_next + half_i_xi, c,
                         tail_n + a_here);
  }
  const HahnParams h{nk, tail_n + a_next, p.alpha[k] - p.a[k] + 1.0,
                     tail_n + alpha_next - a_next + rk, p.a[k]};
  const Complex denom =
      i_pow(static_cast<int>(nk)) * pochhammer(tail_n + a_here, nk) * pochhammer(c, nk);
  return factorial(nk) * beta / denom * hahn_eval(h, Complex(0.5 * xi, 0.0));
}

Complex ft_closed_form(const GParams& p, std::span<const double> xi, LambdaForm form) {
  validate(p);
  check_xi(p, xi.size(), "ft_closed_form");
  const std::size_t r = p.rank();
  double exponent = static_cast<double>(r) * (p.a[r - 1] + p.a[r] - 1.0);
  for (std::size_t k = 0; k + 1 < r; ++k) {
    exponent += static_cast<double>(k + 1) * p.a[k];
  }
  Complex value = std::exp2(exponent);
  for (std::size_t k = 0; k < r; ++k) {
    const double c = simplex_axis_parameter(p.n, p.alpha, k) + 1.0;
    value *= pochhammer(c, p.n[k]) / factorial(p.n[k]) * lambda_factor(k, p, xi[k], form);
  }
  return value;
}

Complex ft_last_axis_factor(const GParams& p, double xi) {
  validate(p);
  const std::size_t r1 = p.rank();
  if (r1 < 2) {
    throw DimensionMismatchError("ft_last_axis_factor: rank must be at least 2");
  }
  const std::size_t last = r1 - 1;
  const double r = static_cast<double>(r1 - 1);
  const unsigned nl = p.n[last];
  const double dn = static_cast<double>(nl);
  const double a1 = p.a[last];
  const double a2 = p.a[last + 1];
  const double al1 = p.alpha[last];
  const double al2 = p.alpha[last + 1];
  const Complex half_i_xi(0.0, 0.5 * xi);
  const double scale = std::exp2(a1 + a2 - r * dn - 1.0) * pochhammer(al2 + 1.0, nl) / factorial(nl);
  return scale * beta_factor(a1 - half_i_xi, a2 + half_i_xi) *
         hyp3f2(-dn, dn + al1 + al2 + 1.0, a2 + half_i_xi, al2 + 1.0, a1 + a2);
}

Complex ft_numeric(const GParams& p, std::span<const double> xi, double tolerance) {
  validate(p);
  check_xi(p, xi.size(), "ft_numeric");
  Complex value = 1.0;
  for (std::size_t k = 0; k < p.rank(); ++k) {
    value *= integrate_axis(axis_integrand(p, k), xi[k], tolerance);
  }
  return value;
}

Complex ft_numeric_direct(const GParams& p, std::span<const double> xi, double tolerance) {
  validate(p);
  check_xi(p, xi.size(), "ft_numeric_direct");
  const std::size_t r = p.rank();
  if (r > 2) {
    throw DimensionMismatchError("ft_numeric_direct: only r <= 2 is supported");
  }
  std::vector<QuadratureRule> rules;
  for (std::size_t k = 0; k < r; ++k) {
    rules.push_back(axis_rule(axis_integrand(p, k), xi[k], tolerance));
  }
  Complex sum = 0.0;
  std::vector<double> x(r);
  if (r == 1) {
    for (std::size_t i = 0; i < rules[0].size(); ++i) {
      x[0] = rules[0].node(i);
      sum += rules[0].weights[i] * g_eval(p, x) * std::exp(Complex(0.0, -xi[0] * x[0]));
    }
    return sum;
  }
  for (std::size_t i = 0; i < rules[0].size(); ++i) {
    x[0] = rules[0].node(i);
    const Complex e0 = std::exp(Complex(0.0, -xi[0] * x[0]));
    for (std::size_t j = 0; j < rules[1].size(); ++j) {
      x[1] = rules[1].node(j);
      sum += rules[0].weights[i] * rules[1].weights[j] * g_eval(p, x) * e0 *
             std::exp(Complex(0.0, -xi[1] * x[1]));
    }
  }
  return sum;
}

} // namespace simplexft
