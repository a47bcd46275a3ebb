#ifndef SIMPLEXFT_ERRORS_HPP
#define SIMPLEXFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace simplexft {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Gamma-function argument sits on a pole (0, -1, -2, ...).
class PoleError : public Error {
public:
  using Error::Error;
};

/// A hypergeometric series was requested that does not terminate.
class NonTerminatingError : public Error {
public:
  using Error::Error;
};

/// A denominator Pochhammer symbol vanishes inside the active summation range.
class ZeroDenominatorError : public Error {
public:
  using Error::Error;
};

/// A parameter lies outside the range where the requested quantity is defined.
class ParameterRangeError : public Error {
public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
public:
  using Error::Error;
};

/// A quadrature rule would need more nodes than the configured cap.
class BudgetInfeasibleError : public Error {
public:
  using Error::Error;
};

/// A finite-difference stencil leaves the simplex.
class StencilOutsideDomainError : public Error {
public:
  using Error::Error;
};

/// A quadrature rule does not match the integral it is asked to evaluate.
class RuleMismatchError : public Error {
public:
  using Error::Error;
};

/// A recurrence coefficient has a vanishing denominator at the given parameters.
class DegenerateParameterError : public Error {
public:
  using Error::Error;
};

/// Least-squares samples do not determine the unknown coefficients.
class RankDeficientError : public Error {
public:
  using Error::Error;
};

} // namespace simplexft

#endif // SIMPLEXFT_ERRORS_HPP
