#ifndef SIMPLEXFT_CLASSICAL_POLY_HPP
#define SIMPLEXFT_CLASSICAL_POLY_HPP

#include "simplexft/numerics.hpp"

namespace simplexft {

/// Degree and parameters of a Jacobi polynomial P_n^(alpha, beta).
struct JacobiParams {
  unsigned n = 0;
  double alpha = 0.0;
  double beta = 0.0;
};

/// Degree and parameters of a continuous Hahn polynomial p_n(x; a, b, c, d).
struct HahnParams {
  unsigned n = 0;
  Complex a{0.0, 0.0};
  Complex b{0.0, 0.0};
  Complex c{0.0, 0.0};
  Complex d{0.0, 0.0};
};

/// P_n^(alpha, beta)(x) by the three-term recurrence.
Complex jacobi_eval(const JacobiParams& p, Complex x);
double jacobi_eval(const JacobiParams& p, double x);

/// P_n^(alpha, beta)(2t - 1).
Complex jacobi_shifted_eval(const JacobiParams& p, double t);

/// Homogenised form w^n P_n^(alpha, beta)(2y/w - 1).
///
/// This is a polynomial in (y, w), so it stays finite at w = 0 where the
/// inhomogeneous expression has a removable singularity.
double jacobi_homogeneous(const JacobiParams& p, double y, double w);

/// d/dx P_n^(alpha, beta)(x).
double jacobi_derivative(const JacobiParams& p, double x);

/// Squared norm of P_n^(alpha, beta) against (1-x)^alpha (1+x)^beta on [-1, 1].
/// Throws ParameterRangeError unless alpha, beta > -1.
double jacobi_norm(const JacobiParams& p);

/// Continuous Hahn polynomial
/// i^n (a+c)_n (a+d)_n / n! 3F2(-n, n+a+b+c+d-1, a+ix; a+c, a+d; 1).
Complex hahn_eval(const HahnParams& p, Complex x);

} // namespace simplexft

#endif // SIMPLEXFT_CLASSICAL_POLY_HPP
