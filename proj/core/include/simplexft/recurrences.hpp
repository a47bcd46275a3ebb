#ifndef SIMPLEXFT_RECURRENCES_HPP
#define SIMPLEXFT_RECURRENCES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "simplexft/numerics.hpp"
#include "simplexft/report.hpp"
#include "simplexft/rng.hpp"
#include "simplexft/sfamily.hpp"

namespace simplexft {

/// Printed recurrence relations. Labels (*5) and (105) do not exist in the
/// source numbering, so they have no id here.
enum class RelationId {
  H1,
  H2,
  H3,
  S1_STAR1,
  S1_STAR2,
  S1_STAR3,
  S1_STAR4,
  S1_STAR6,
  S1_STAR7,
  S2_101,
  S2_102,
  S2_103,
  S2_104,
  S2_106,
  S2_107,
  SR_T514,
  SR_T515,
  SR_T516,
  SR_T517,
  SR_T518,
  SR_T519,
};

inline constexpr std::array<RelationId, 21> kAllRelations = {
    RelationId::H1,       RelationId::H2,       RelationId::H3,       RelationId::S1_STAR1,
    RelationId::S1_STAR2, RelationId::S1_STAR3, RelationId::S1_STAR4, RelationId::S1_STAR6,
    RelationId::S1_STAR7, RelationId::S2_101,   RelationId::S2_102,   RelationId::S2_103,
    RelationId::S2_104,   RelationId::S2_106,   RelationId::S2_107,   RelationId::SR_T514,
    RelationId::SR_T515,  RelationId::SR_T516,  RelationId::SR_T517,  RelationId::SR_T518,
    RelationId::SR_T519};

const char* to_string(RelationId id) noexcept;
std::optional<RelationId> relation_from_string(std::string_view name);

/// Free parameters of the 3F2 contiguous relations H1-H3:
/// F(m1, m2, m3; s1, s2; z). Terminating evaluation needs m2 (or m3) to be
/// a non-positive integer.
struct HyperRelationParams {
  double m1 = 1.0;
  double m2 = -1.0;
  double m3 = 1.0;
  double s1 = 1.0;
  double s2 = 1.0;
  Complex z = 0.0;
};

/// Parameters of the _1S / _2S / _rS relations. S1 ids need rank 1, S2 ids
/// rank 2, SR ids any rank.
struct FamilyRelationParams {
  SParams s;
  std::vector<Complex> x;
};

using RelationParams = std::variant<HyperRelationParams, FamilyRelationParams>;

/// Coefficient B + C z of the H relations.
struct TwoPartCoefficient {
  Complex b;
  Complex c;

  Complex at(Complex z) const noexcept { return b + c * z; }
};

/// Number of terms (3 or 4).
std::size_t term_count(RelationId id) noexcept;

/// Throws DimensionMismatchError when the parameter kind or rank does not fit.
void validate(RelationId id, const RelationParams& params);

/// B/C pairs of H1, H2, H3 in term order.
std::vector<TwoPartCoefficient> hyper_coefficient_parts(RelationId id, const HyperRelationParams& p);

/// Printed coefficients in term order. Throws DegenerateParameterError naming
/// the vanishing denominator (|den| < kDegenerateTolerance).
std::vector<Complex> coefficients(RelationId id, const RelationParams& params);

/// Coefficients with the known misprints repaired (S1_STAR4, S1_STAR6,
/// S2_103); equal to coefficients() for every other id.
std::vector<Complex> corrected_coefficients(RelationId id, const RelationParams& params);

/// True for the ids whose printed coefficients fail.
bool has_known_misprint(RelationId id) noexcept;

/// Human-readable description of the repair made by corrected_coefficients.
std::string misprint_note(RelationId id);

/// The shifted function values F_k the coefficients multiply.
std::vector<Complex> terms(RelationId id, const RelationParams& params);

inline constexpr double kDegenerateTolerance = 1e-6;

struct RelationEvaluation {
  std::vector<Complex> coefficients;
  std::vector<Complex> terms;
  Complex sum;
  /// max_k |c_k F_k|
  double scale = 0.0;
  /// |sum| / scale (0 when every term vanishes)
  double residual = 0.0;
};

RelationEvaluation evaluate_relation(RelationId id, const RelationParams& params,
                                     const std::vector<Complex>& coefficients);

/// Relative residual |sum c_k F_k| / max_k |c_k F_k| with printed coefficients.
double residual(RelationId id, const RelationParams& params);

/// Report with lhs = sum c_k F_k, rhs = 0 and scale max_k |c_k F_k|.
VerificationReport relation_report(RelationId id, const RelationParams& params,
                                   const std::vector<Complex>& coefficients, double tolerance = 1e-9);

/// Random admissible-looking parameters for a sweep: degrees <= 4, real
/// parameters in (0.7, 2.5), x or z in [-2, 2]. H relations use m2 = -k with
/// k in 1..4. SR ids draw r from {1, 2, 3}. Degeneracy is not checked here.
RelationParams sample_relation_params(RelationId id, Rng& rng);

/// Base point for brute_force_coefficients: like sample_relation_params but
/// with degrees 3..4 (and m2 in {-6, -5}) so the shifted functions span a
/// space large enough to determine every unknown.
RelationParams sample_fit_base(RelationId id, Rng& rng);

/// The variable along which coefficients are fitted: z for H relations,
/// otherwise one entry of x.
Complex sampling_variable(RelationId id, const RelationParams& params);
RelationParams with_sampling_variable(RelationId id, RelationParams params, Complex t);

struct BruteForceFit {
  /// Coefficients at the base point; the first one is the printed value.
  std::vector<Complex> fitted;
  std::vector<Complex> printed;
  /// Max relative residual over the fit samples using fitted coefficients.
  double fit_residual = 0.0;
  /// Max relative residual over the fit samples using printed coefficients.
  double printed_residual = 0.0;
  /// Max over samples of max_k |fitted_k - printed_k| / max_k |printed_k|.
  double discrepancy = 0.0;
  std::size_t unknowns = 0;
  std::size_t samples = 0;
  /// |R_00| / |R_kk| of the pivoted QR factor.
  double condition = 0.0;
};

/// Least-squares fit of the coefficients along the sampling variable.
///
/// Each coefficient times a fixed denominator D(t) is taken to be a polynomial
/// of known degree in t; the first coefficient is fixed at its printed value.
/// Other parameters are held at `base`. Throws RankDeficientError when the
/// samples do not determine the unknowns.
BruteForceFit brute_force_coefficients(RelationId id, const RelationParams& base,
                                       std::size_t sample_count, std::uint64_t seed);

} // namespace simplexft

#endif // SIMPLEXFT_RECURRENCES_HPP
