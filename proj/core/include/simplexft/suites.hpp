#ifndef SIMPLEXFT_SUITES_HPP
#define SIMPLEXFT_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simplexft/recurrences.hpp"
#include "simplexft/report.hpp"

namespace simplexft {

/// A printed recurrence whose coefficients the least-squares oracle contradicts.
struct Erratum {
  std::string identity_id;
  std::string note;
  /// Worst relative residual of the printed coefficients over the fit sets.
  double printed_residual = 0.0;
  /// Worst relative residual of the fitted coefficients over the fit sets.
  double fit_residual = 0.0;
  /// Worst relative distance between fitted and printed coefficients.
  double discrepancy = 0.0;
  /// Worst relative distance between fitted and corrected coefficients.
  double correction_discrepancy = 0.0;
  std::size_t sample_sets = 0;
};

struct SuiteResult {
  std::vector<VerificationReport> reports;
  std::vector<Erratum> errata;
  /// Draws rejected by a degeneracy guard and replaced.
  std::size_t skipped = 0;

  std::size_t passed() const noexcept;
  std::size_t failed() const noexcept;
  bool all_passed() const noexcept { return failed() == 0; }
  void append(SuiteResult&& other);
};

struct OrthogonalitySuiteOptions {
  std::vector<std::size_t> ranks{1, 2, 3};
  unsigned max_degree = 4;
  unsigned draws = 10;
  double tolerance = 1e-10;
};

/// Simplex orthogonality for every pair n <= m (graded order) of total degree
/// <= max_degree, alpha entries drawn from (-0.5, 2).
SuiteResult run_orthogonality_suite(const OrthogonalitySuiteOptions& options, std::uint64_t seed);

struct FourierSuiteOptions {
  std::vector<std::size_t> ranks{1, 2};
  /// Bound on each entry of n.
  unsigned max_degree = 3;
  unsigned draws = 20;
  std::vector<double> xi_values{-3.0, -1.0, 0.0, 1.0, 3.0};
  /// Closed form vs numeric: |difference| <= tolerance (1 + |numeric|).
  double tolerance = 1e-8;
  /// 3F2 vs Hahn forms, g recursion, one-step transform reduction.
  double identity_tolerance = 1e-11;
  unsigned identity_samples = 50;
};

/// Closed-form transform against the numeric oracle, Lambda form equivalence,
/// the g recursion and the one-step reduction of the transform.
SuiteResult run_fourier_suite(const FourierSuiteOptions& options, std::uint64_t seed);

struct SfamilySuiteOptions {
  std::vector<std::size_t> ranks{1, 2};
  /// Bound on each entry of n and m.
  unsigned max_index = 2;
  unsigned draws = 5;
  double tolerance = 1e-6;
  double identity_tolerance = 1e-11;
  unsigned identity_samples = 50;
};

/// _rS orthogonality for every pair (n, m) in the index box, the 3F2 / Hahn
/// form equivalence and the P1, P2, relation1, relation2 factorisations.
SuiteResult run_sfamily_suite(const SfamilySuiteOptions& options, std::uint64_t seed);

struct RecurrenceSuiteOptions {
  /// Restrict to one relation; all of kAllRelations otherwise.
  std::optional<RelationId> relation;
  std::size_t samples = 100;
  double tolerance = 1e-9;
  /// Emit one report per brute-force fit set.
  bool brute_force = false;
  std::size_t fit_sets = 3;
  std::size_t fit_samples = 40;
  /// A relation is demoted when every fit set has fit residual <= fit_tolerance
  /// while the printed coefficients leave a residual > printed_failure.
  double fit_tolerance = 1e-10;
  double printed_failure = 1e-8;
};

/// Residual sweep per relation. Relations demoted by the brute-force oracle are
/// checked with per-sample fitted coefficients and produce an Erratum.
SuiteResult run_recurrence_suite(const RecurrenceSuiteOptions& options, std::uint64_t seed);

/// Every suite with default options.
SuiteResult run_all_suites(std::uint64_t seed);

/// Independent stream seed for a named part of a suite, so that a sub-run
/// (one relation, one rank) sees the same draws as the full run.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t index = 0) noexcept;

std::string to_json_line(const Erratum& erratum);

/// {"summary": {...}} line with pass/fail/skipped/errata counts.
std::string summary_json_line(const std::string& suite, const SuiteResult& result);

} // namespace simplexft

#endif // SIMPLEXFT_SUITES_HPP
