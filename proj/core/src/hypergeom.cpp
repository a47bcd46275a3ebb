#include "simplexft/hypergeom.hpp"

#include <cmath>
#include <sstream>

#include "simplexft/errors.hpp"

namespace simplexft {
namespace {

bool near_integer_value(Complex a, double target, double tol) {
  return std::abs(a - Complex(target, 0.0)) <= tol * (1.0 + std::abs(a));
}

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

unsigned checked_length(const HyperParams& params) {
  const auto n = termination_index(params.numerator);
  if (!n) {
    throw NonTerminatingError("eval_terminating: no numerator parameter is a non-positive integer");
  }
  for (const Complex b : params.denominator) {
    for (unsigned j = 0; j < *n; ++j) {
      if (near_integer_value(b, -static_cast<double>(j), kIntegerTolerance)) {
        throw ZeroDenominatorError("eval_terminating: denominator parameter " + describe(b) +
                                   " vanishes inside the summation range 0.." +
                                   std::to_string(*n));
      }
    }
  }
  return *n;
}

using Wide = std::complex<long double>;

// Neumaier summation on both components, in extended precision.
class ComplexAccumulator {
public:
  void add(Wide x) noexcept {
    add_part(re_, re_carry_, x.real());
    add_part(im_, im_carry_, x.imag());
  }
  Complex value() const noexcept {
    return {static_cast<double>(re_ + re_carry_), static_cast<double>(im_ + im_carry_)};
  }

private:
  static void add_part(long double& sum, long double& carry, long double x) noexcept {
    const long double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }

  long double re_ = 0.0L;
  long double re_carry_ = 0.0L;
  long double im_ = 0.0L;
  long double im_carry_ = 0.0L;
};

Wide widen(Complex z) noexcept { return {z.real(), z.imag()}; }

// Terms come from the ratio recurrence in long double: strongly alternating
// sums (large parameters, |value| << sum |terms|) lose about log10 of that
// ratio in digits, and the extra bits keep the double result clean.
template <typename Visit>
void for_each_term(const HyperParams& params, unsigned n, Visit&& visit) {
  Wide term = 1.0L;
  visit(term);
  const Wide z = widen(params.argument);
  for (unsigned k = 0; k < n; ++k) {
    const long double kk = static_cast<long double>(k);
    Wide num = z;
    for (const Complex a : params.numerator) {
      num *= widen(a) + kk;
    }
    Wide den = kk + 1.0L;
    for (const Complex b : params.denominator) {
      den *= widen(b) + kk;
    }
    term *= num / den;
    visit(term);
  }
}

} // namespace

std::optional<unsigned> termination_index(const std::vector<Complex>& numerator, double tol) {
  std::optional<unsigned> best;
  for (const Complex a : numerator) {
    const double nearest = std::round(-a.real());
    if (nearest < 0.0 || nearest > 4.0e9) {
      continue;
    }
    if (near_integer_value(a, -nearest, tol)) {
      const auto n = static_cast<unsigned>(nearest);
      if (!best || n < *best) {
        best = n;
      }
    }
  }
  return best;
}

Complex eval_terminating(const HyperParams& params) {
  const unsigned n = checked_length(params);
  ComplexAccumulator acc;
  for_each_term(params, n, [&](Wide t) { acc.add(t); });
  return acc.value();
}

double term_magnitude_sum(const HyperParams& params) {
  const unsigned n = checked_length(params);
  double total = 0.0;
  for_each_term(params, n, [&](Wide t) { total += static_cast<double>(std::abs(t)); });
  return total;
}

Complex hyp3f2(Complex a1, Complex a2, Complex a3, Complex b1, Complex b2, Complex z) {
  return eval_terminating(HyperParams{{a1, a2, a3}, {b1, b2}, z});
}

} // namespace simplexft
