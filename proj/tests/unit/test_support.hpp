#ifndef SIMPLEXFT_TESTS_TEST_SUPPORT_HPP
#define SIMPLEXFT_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "simplexft/numerics.hpp"

namespace simplexft::testing {

inline ::testing::AssertionResult near_rel(Complex actual, Complex expected, double tol) {
  const double err = std::abs(actual - expected);
  const double scale = std::max(1.0, std::abs(expected));
  if (err <= tol * scale) {
    return ::testing::AssertionSuccess();
  }
  std::ostringstream os;
  os.precision(17);
  os << "actual " << actual << " expected " << expected << " rel err " << err / scale << " > " << tol;
  return ::testing::AssertionFailure() << os.str();
}

// Relative to |expected| even when it is small.
inline ::testing::AssertionResult near_strict(Complex actual, Complex expected, double tol) {
  const double err = std::abs(actual - expected);
  const double scale = std::abs(expected);
  if (err <= tol * scale) {
    return ::testing::AssertionSuccess();
  }
  std::ostringstream os;
  os.precision(17);
  os << "actual " << actual << " expected " << expected << " rel err " << err / scale << " > " << tol;
  return ::testing::AssertionFailure() << os.str();
}

} // namespace simplexft::testing

#endif // SIMPLEXFT_TESTS_TEST_SUPPORT_HPP
