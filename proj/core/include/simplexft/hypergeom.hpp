#ifndef SIMPLEXFT_HYPERGEOM_HPP
#define SIMPLEXFT_HYPERGEOM_HPP

#include <optional>
#include <vector>

#include "simplexft/numerics.hpp"

namespace simplexft {

/// Parameters of pFq(a_1..a_p; b_1..b_q; z).
struct HyperParams {
  std::vector<Complex> numerator;
  std::vector<Complex> denominator;
  Complex argument{1.0, 0.0};
};

/// Relative tolerance used to recognise integer-valued parameters.
inline constexpr double kIntegerTolerance = 1e-9;

/// Smallest n such that some numerator parameter equals -n, if any.
std::optional<unsigned> termination_index(const std::vector<Complex>& numerator,
                                          double tol = kIntegerTolerance);

/// Terminating pFq, summed forward in extended precision with compensated addition.
///
/// Throws NonTerminatingError when no numerator parameter is a non-positive
/// integer, and ZeroDenominatorError when a denominator Pochhammer symbol
/// (b)_k vanishes for some k <= n.
Complex eval_terminating(const HyperParams& params);

/// Convenience wrapper for 3F2(a1, a2, a3; b1, b2; z).
Complex hyp3f2(Complex a1, Complex a2, Complex a3, Complex b1, Complex b2,
               Complex z = 1.0);

/// Sum of term magnitudes of a terminating series; a rounding-error scale.
double term_magnitude_sum(const HyperParams& params);

} // namespace simplexft

#endif // SIMPLEXFT_HYPERGEOM_HPP
