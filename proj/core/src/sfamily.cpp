#include "simplexft/sfamily.hpp"

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

double factorial(unsigned n) {
  double f = 1.0;
  for (unsigned k = 2; k <= n; ++k) {
    f *= static_cast<double>(k);
  }
  return f;
}

double log_gamma_real(double x) { return log_gamma(Complex(x, 0.0)).log_modulus; }

// _1S_n(x; a1, a2, b1, b2) straight from its defining 3F2.
Complex s1_explicit(unsigned n, Complex x, double a1, double a2, double b1, double b2) {
  const double dn = static_cast<double>(n);
  return hyp3f2(-dn, a2 + 0.5 * x, dn + a1 + a2 + b1 + b2 - 1.0, a2 + b2, a1 + a2);
}

SParams drop_last_axis(const SParams& p) {
  const std::size_t r = p.rank();
  const std::size_t last = r - 1;
  std::vector<unsigned> n(p.n.entries().begin(), p.n.entries().end() - 1);
  std::vector<double> a(p.a.entries().begin(), p.a.entries().end() - 1);
  std::vector<double> b(p.b.entries().begin(), p.b.entries().end() - 1);
  const double nl = static_cast<double>(p.n[last]);
  a[last] = p.a[last] + p.a[last + 1] + nl;
  b[last] = p.b[last] + p.b[last + 1] + nl;
  return SParams{MultiIndex(std::move(n)), ParamVector(std::move(a)), ParamVector(std::move(b))};
}

SParams drop_first_axis(const SParams& p) {
  std::vector<unsigned> n(p.n.entries().begin() + 1, p.n.entries().end());
  std::vector<double> a(p.a.entries().begin() + 1, p.a.entries().end());
  std::vector<double> b(p.b.entries().begin() + 1, p.b.entries().end());
  return SParams{MultiIndex(std::move(n)), ParamVector(std::move(a)), ParamVector(std::move(b))};
}

Complex p1_rhs(const SParams& p, std::span<const Complex> x) {
  const std::size_t r = p.rank();
  const std::size_t last = r - 1;
  const unsigned nr = p.n[last];
  const double dn = static_cast<double>(nr);
  const double a_r = p.a[last] + p.a[last + 1];
  const double b_r = p.b[last] + p.b[last + 1];
  Complex value = hyp3f2(-dn, dn + a_r + b_r - 1.0, p.a[last + 1] + 0.5 * x[last],
                         p.a[last + 1] + p.b[last + 1], a_r);
  for (std::size_t j = 0; j < last; ++j) {
    value *= pochhammer(p.a.tail(j + 1) + 0.5 * x[j], nr);
  }
  return value * s_eval(drop_last_axis(p), x.first(last));
}

Complex p2_rhs(const SParams& p, std::span<const Complex> x) {
  const double n1 = static_cast<double>(p.n[0]);
  const unsigned tail = p.n.tail(1);
  const double dt = static_cast<double>(tail);
  const double a2 = p.a.tail(1);
  const double b2 = p.b.tail(1);
  const Complex f = hyp3f2(-n1, n1 + 2.0 * dt + p.a.total() + p.b.total() - 1.0, dt + a2 + 0.5 * x[0],
                           2.0 * dt + a2 + b2, dt + p.a.total());
  return pochhammer(a2 + 0.5 * x[0], tail) * s_eval(drop_first_axis(p), x.subspan(1)) * f;
}

Complex relation1_rhs(const SParams& p, std::span<const Complex> x) {
  const double a1 = p.a[0], a2 = p.a[1], a3 = p.a[2];
  const double b1 = p.b[0], b2 = p.b[1], b3 = p.b[2];
  const unsigned n1 = p.n[0], n2 = p.n[1];
  const double dn2 = static_cast<double>(n2);
  return s1_explicit(n1, x[0], a1, a2 + a3 + dn2, b1, b2 + b3 + dn2) *
         hyp3f2(-dn2, a3 + 0.5 * x[1], dn2 + a2 + a3 + b2 + b3 - 1.0, a3 + b3, a2 + a3) *
         pochhammer(a2 + a3 + 0.5 * x[0], n2);
}

Complex relation2_rhs(const SParams& p, std::span<const Complex> x) {
  const double a1 = p.a[0], a2 = p.a[1], a3 = p.a[2];
  const double b1 = p.b[0], b2 = p.b[1], b3 = p.b[2];
  const double dn1 = static_cast<double>(p.n[0]);
  const double dn2 = static_cast<double>(p.n[1]);
  return pochhammer(a2 + a3 + 0.5 * x[0], p.n[1]) * s1_explicit(p.n[1], x[1], a2, a3, b2, b3) *
         hyp3f2(-dn1, dn2 + a2 + a3 + 0.5 * x[0], dn1 + 2.0 * dn2 + a1 + a2 + a3 + b1 + b2 + b3 - 1.0,
                2.0 * dn2 + a2 + a3 + b2 + b3, dn2 + a1 + a2 + a3);
}

// Integrand of one axis of the orthogonality integral.
struct OrthAxis {
  const SParams& left;
  const SParams& right;
  std::size_t k;

  Complex operator()(double x) const {
    return w_axis_factor(left, k, x) * s_axis_factor(left, k, Complex(0.0, x)) *
           s_axis_factor(right, k, Complex(0.0, -x));
  }
};

Complex integrate_orth_axis(const OrthAxis& f, double tolerance) {
  const SParams& p = f.left;
  const std::size_t k = f.k;
  // Four Gamma factors each decay like exp(-pi |x| / 4); half of the total
  // rate is kept in reserve for the polynomial factors.
  const double decay = kPi / 2.0;
  const double distance = 2.0 * std::min({p.a[k], p.b[k], p.a.tail(k + 1), p.b.tail(k + 1)});
  const double c = estimate_tail_constant([&](double x) { return std::abs(f(x)); }, decay, 40.0 / decay);
  LineRuleOptions opt;
  opt.decay_rate = decay;
  opt.tolerance = tolerance * c;
  opt.magnitude = 100.0 * c;
  opt.singularity_distance = distance;
  const QuadratureRule rule = line_rule(opt);
  Complex sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    sum += rule.weights[i] * f(rule.node(i));
  }
  return sum;
}

} // namespace

void validate_dimensions(const SParams& p) {
  const std::size_t r = p.rank();
  if (r == 0 || p.a.size() != r + 1 || p.b.size() != r + 1) {
    throw DimensionMismatchError("SParams: need len(a) = len(b) = len(n) + 1 >= 2 (got n=" +
                                 std::to_string(r) + ", a=" + std::to_string(p.a.size()) +
                                 ", b=" + std::to_string(p.b.size()) + ")");
  }
}

void validate_positive(const SParams& p) {
  validate_dimensions(p);
  for (std::size_t k = 0; k < p.a.size(); ++k) {
    if (!(p.a[k] > 0.0) || !(p.b[k] > 0.0)) {
      throw ParameterRangeError("SParams: a and b entries must be positive");
    }
  }
}

Complex s_axis_factor(const SParams& p, std::size_t k, Complex x, SForm form) {
  const unsigned nk = p.n[k];
  const double dn = static_cast<double>(nk);
  const unsigned tail = p.n.tail(k + 1);
  const double dt = static_cast<double>(tail);
  const double a_next = p.a.tail(k + 1);
  const double a_here = p.a.tail(k);
  const double b_next = p.b.tail(k + 1);
  const double b_here = p.b.tail(k);
  const Complex poch = pochhammer(a_next + 0.5 * x, tail);
  if (form == SForm::hypergeometric) {
    return poch * hyp3f2(-dn, dn + 2.0 * dt + a_here + b_here - 1.0, dt + a_next + 0.5 * x,
                         2.0 * dt + a_next + b_next, dt + a_here);
  }
  const HahnParams h{nk, dt + a_next, p.b[k], dt + b_next, p.a[k]};
  const Complex denom = pochhammer(dt + a_here, nk) * pochhammer(2.0 * dt + a_next + b_next, nk);
  return factorial(nk) * i_pow(-static_cast<int>(nk)) / denom * poch *
         hahn_eval(h, Complex(0.0, -0.5) * x);
}

Complex s_eval(const SParams& p, std::span<const Complex> x, SForm form) {
  validate_dimensions(p);
  if (x.size() != p.rank()) {
    throw DimensionMismatchError("s_eval: expected " + std::to_string(p.rank()) + " arguments");
  }
  Complex value = 1.0;
  for (std::size_t k = 0; k < p.rank(); ++k) {
    value *= s_axis_factor(p, k, x[k], form);
  }
  return value;
}

Complex w_axis_factor(const SParams& p, std::size_t k, double x) {
  const Complex half_ix(0.0, 0.5 * x);
  const Complex log_w = log_gamma(p.a[k] - half_ix).log() + log_gamma(p.a.tail(k + 1) + half_ix).log() +
                        log_gamma(p.b[k] + half_ix).log() + log_gamma(p.b.tail(k + 1) - half_ix).log();
  return std::exp(log_w);
}

Complex w_weight(const SParams& p, std::span<const double> x) {
  validate_dimensions(p);
  if (x.size() != p.rank()) {
    throw DimensionMismatchError("w_weight: expected " + std::to_string(p.rank()) + " arguments");
  }
  Complex log_w = 0.0;
  for (std::size_t k = 0; k < p.rank(); ++k) {
    const Complex half_ix(0.0, 0.5 * x[k]);
    log_w += log_gamma(p.a[k] - half_ix).log() + log_gamma(p.a.tail(k + 1) + half_ix).log() +
             log_gamma(p.b[k] + half_ix).log() + log_gamma(p.b.tail(k + 1) - half_ix).log();
  }
  return std::exp(log_w);
}

double s_orthogonality_rhs(const SParams& p) {
  validate_positive(p);
  const std::size_t r = p.rank();
  std::vector<double> alpha(r + 1);
  for (std::size_t k = 0; k <= r; ++k) {
    alpha[k] = p.a[k] + p.b[k] - 1.0;
  }
  double log_v = 2.0 * static_cast<double>(r) * std::numbers::ln2 +
                 static_cast<double>(r) * std::log(kPi) + std::log(h_norm(p.n, AlphaVector(alpha)));
  for (std::size_t k = 0; k < r; ++k) {
    const double dt = static_cast<double>(p.n.tail(k + 1));
    log_v += 2.0 * std::log(factorial(p.n[k])) + log_gamma_real(dt + p.a.tail(k)) +
             log_gamma_real(dt + p.b.tail(k)) -
             2.0 * std::log(pochhammer(2.0 * dt + p.a.tail(k + 1) + p.b.tail(k + 1), p.n[k]));
  }
  return std::exp(log_v);
}

Complex s_orthogonality_lhs(const SParams& p, const MultiIndex& m, double tolerance) {
  validate_positive(p);
  if (m.size() != p.rank()) {
    throw DimensionMismatchError("s_orthogonality: n and m must have the same length");
  }
  const SParams swapped{m, p.b, p.a};
  Complex value = 1.0;
  for (std::size_t k = 0; k < p.rank(); ++k) {
    value *= integrate_orth_axis(OrthAxis{p, swapped, k}, tolerance);
  }
  return value;
}

VerificationReport s_orthogonality_check(const SParams& p, const MultiIndex& m, double tolerance) {
  const Complex lhs = s_orthogonality_lhs(p, m, std::min(1e-12, 1e-3 * tolerance));
  const double dn = s_orthogonality_rhs(p);
  const double dm = s_orthogonality_rhs(SParams{m, p.a, p.b});
  const double rhs = p.n == m ? dn : 0.0;
  ParamList params;
  params.add("r", static_cast<unsigned>(p.rank())).add("n", p.n).add("m", m).add("a", p.a).add("b", p.b);
  return make_report("s_orthogonality", std::move(params), lhs, rhs, tolerance, std::sqrt(dn * dm));
}

const char* to_string(SRelation which) noexcept {
  switch (which) {
  case SRelation::p1:
    return "P1";
  case SRelation::p2:
    return "P2";
  case SRelation::relation1:
    return "relation1";
  case SRelation::relation2:
    return "relation2";
  }
  return "unknown";
}

VerificationReport s_relation_check(const SParams& p, SRelation which, std::span<const Complex> x,
                                    double tolerance) {
  validate_dimensions(p);
  if (x.size() != p.rank()) {
    throw DimensionMismatchError("s_relation_check: expected " + std::to_string(p.rank()) + " arguments");
  }
  const bool rank_two_only = which == SRelation::relation1 || which == SRelation::relation2;
  if (p.rank() < 2 || (rank_two_only && p.rank() != 2)) {
    throw DimensionMismatchError(std::string("s_relation_check: ") + to_string(which) +
                                 (rank_two_only ? " needs r = 2" : " needs r >= 2"));
  }
  const Complex lhs = s_eval(p, x);
  Complex rhs;
  switch (which) {
  case SRelation::p1:
    rhs = p1_rhs(p, x);
    break;
  case SRelation::p2:
    rhs = p2_rhs(p, x);
    break;
  case SRelation::relation1:
    rhs = relation1_rhs(p, x);
    break;
  case SRelation::relation2:
    rhs = relation2_rhs(p, x);
    break;
  }
  std::vector<double> xr;
  std::vector<double> xi;
  for (const Complex v : x) {
    xr.push_back(v.real());
    xi.push_back(v.imag());
  }
  ParamList params;
  params.add("r", static_cast<unsigned>(p.rank())).add("n", p.n).add("a", p.a).add("b", p.b);
  params.add("x_re", xr).add("x_im", xi);
  return make_report(std::string("s_") + to_string(which), std::move(params), lhs, rhs, tolerance,
                     relative_scale(lhs, rhs));
}

} // namespace simplexft
