#include "simplexft/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "simplexft/errors.hpp"
#include "simplexft/fourier.hpp"
#include "simplexft/indices.hpp"
#include "simplexft/quadrature.hpp"
#include "simplexft/rng.hpp"
#include "simplexft/sfamily.hpp"
#include "simplexft/simplex_poly.hpp"

namespace simplexft {
namespace {

constexpr double kReductionTolerance = 1e-10;

template <typename F>
VerificationReport timed(F&& check) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep = check();
  rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<double> draw(Rng& rng, std::size_t count, double lo, double hi) {
  std::vector<double> v(count);
  for (double& e : v) {
    e = rng.uniform(lo, hi);
  }
  return v;
}

MultiIndex draw_index(Rng& rng, std::size_t r, unsigned max_entry) {
  std::vector<unsigned> n(r);
  for (unsigned& e : n) {
    e = static_cast<unsigned>(rng.integer(0, static_cast<int>(max_entry)));
  }
  return MultiIndex(std::move(n));
}

std::vector<Complex> draw_complex(Rng& rng, std::size_t count) {
  std::vector<Complex> v(count);
  for (Complex& e : v) {
    const double re = rng.uniform(-2.0, 2.0);
    e = Complex(re, rng.uniform(-1.0, 1.0));
  }
  return v;
}

// All tuples of length r over `values`, first entry slowest.
std::vector<std::vector<double>> grid(const std::vector<double>& values, std::size_t r) {
  std::vector<std::vector<double>> out{{}};
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<std::vector<double>> next;
    for (const auto& prefix : out) {
      for (const double v : values) {
        auto t = prefix;
        t.push_back(v);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

ParamList g_params(const GParams& p) {
  ParamList list;
  list.add("r", static_cast<unsigned>(p.rank())).add("n", p.n).add("a", p.a).add("alpha", p.alpha);
  return list;
}

std::vector<double> real_parts(const std::vector<Complex>& v) {
  std::vector<double> out;
  for (const Complex c : v) {
    out.push_back(c.real());
  }
  return out;
}

std::vector<double> imag_parts(const std::vector<Complex>& v) {
  std::vector<double> out;
  for (const Complex c : v) {
    out.push_back(c.imag());
  }
  return out;
}

struct FitSet {
  BruteForceFit fit;
  std::vector<Complex> corrected;
};

// Coefficients for one sample of a demoted relation.
std::vector<Complex> demoted_coefficients(RelationId id, const RelationParams& p, const RecurrenceSuiteOptions& o,
                                          std::uint64_t seed, std::string& note) {
  try {
    note = "fitted coefficients";
    return brute_force_coefficients(id, p, o.fit_samples, seed).fitted;
  } catch (const RankDeficientError&) {
    note = "corrected coefficients (fit underdetermined at this sample)";
    return corrected_coefficients(id, p);
  }
}

double relative_distance(const std::vector<Complex>& x, const std::vector<Complex>& y) {
  double diff = 0.0;
  double scale = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    diff = std::max(diff, std::abs(x[k] - y[k]));
    scale = std::max(scale, std::abs(y[k]));
  }
  return scale > 0.0 ? diff / scale : diff;
}

void run_relation(RelationId id, std::size_t index, const RecurrenceSuiteOptions& o, std::uint64_t seed,
                  SuiteResult& out) {
  const std::string name = to_string(id);

  // Brute-force oracle on well-posed base points.
  std::vector<FitSet> sets;
  Rng fit_rng(derive_seed(seed, "recurrence-fit", index));
  for (std::size_t attempt = 0; sets.size() < o.fit_sets && attempt < 20 * o.fit_sets; ++attempt) {
    const RelationParams base = sample_fit_base(id, fit_rng);
    try {
      FitSet s{brute_force_coefficients(id, base, o.fit_samples,
                                        derive_seed(seed, "recurrence-fit-points", index * 64 + attempt)),
               corrected_coefficients(id, base)};
      if (o.brute_force) {
        ParamList params;
        params.add("set", static_cast<unsigned>(sets.size()));
        params.add("printed_re", real_parts(s.fit.printed)).add("printed_im", imag_parts(s.fit.printed));
        params.add("fitted_re", real_parts(s.fit.fitted)).add("fitted_im", imag_parts(s.fit.fitted));
        params.add("printed_residual", s.fit.printed_residual).add("discrepancy", s.fit.discrepancy);
        params.add("condition", s.fit.condition).add("samples", static_cast<unsigned>(s.fit.samples));
        VerificationReport rep =
            make_report(name + ":fit", std::move(params), s.fit.fit_residual, 0.0, o.fit_tolerance, 1.0);
        rep.note = "lhs is the fit residual";
        out.reports.push_back(std::move(rep));
      }
      sets.push_back(std::move(s));
    } catch (const DegenerateParameterError&) {
    } catch (const ZeroDenominatorError&) {
    } catch (const RankDeficientError&) {
    }
  }
  const bool demoted =
      sets.size() == o.fit_sets && std::all_of(sets.begin(), sets.end(), [&](const FitSet& s) {
        return s.fit.fit_residual <= o.fit_tolerance && s.fit.printed_residual > o.printed_failure;
      });
  if (demoted) {
    Erratum e;
    e.identity_id = name;
    e.note = has_known_misprint(id) ? misprint_note(id) : "printed coefficients contradicted by the fit";
    e.sample_sets = sets.size();
    for (const FitSet& s : sets) {
      e.printed_residual = std::max(e.printed_residual, s.fit.printed_residual);
      e.fit_residual = std::max(e.fit_residual, s.fit.fit_residual);
      e.discrepancy = std::max(e.discrepancy, s.fit.discrepancy);
      e.correction_discrepancy = std::max(e.correction_discrepancy, relative_distance(s.fit.fitted, s.corrected));
    }
    out.errata.push_back(std::move(e));
  }

  // Residual sweep.
  Rng rng(derive_seed(seed, "recurrence", index));
  std::size_t done = 0;
  for (std::size_t attempt = 0; done < o.samples && attempt < 100 * o.samples; ++attempt) {
    const RelationParams p = sample_relation_params(id, rng);
    try {
      std::string note;
      VerificationReport rep = timed([&] {
        const std::vector<Complex> c =
            demoted ? demoted_coefficients(id, p, o, derive_seed(seed, "recurrence-sample-fit", index * 100000 + done),
                                           note)
                    : coefficients(id, p);
        return relation_report(id, p, c, o.tolerance);
      });
      rep.note = note;
      out.reports.push_back(std::move(rep));
      ++done;
    } catch (const DegenerateParameterError&) {
      ++out.skipped;
    } catch (const ZeroDenominatorError&) {
      ++out.skipped;
    }
  }
}

} // namespace

std::size_t SuiteResult::passed() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed; }));
}

std::size_t SuiteResult::failed() const noexcept { return reports.size() - passed(); }

void SuiteResult::append(SuiteResult&& other) {
  reports.insert(reports.end(), std::make_move_iterator(other.reports.begin()),
                 std::make_move_iterator(other.reports.end()));
  errata.insert(errata.end(), std::make_move_iterator(other.errata.begin()),
                std::make_move_iterator(other.errata.end()));
  skipped += other.skipped;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t index) noexcept {
  // FNV-1a over the label, then splitmix64 finalisation.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : label) {
    h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  }
  std::uint64_t z = seed ^ h ^ (index * 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SuiteResult run_orthogonality_suite(const OrthogonalitySuiteOptions& options, std::uint64_t seed) {
  SuiteResult out;
  for (const std::size_t r : options.ranks) {
    Rng rng(derive_seed(seed, "orthogonality", r));
    const std::vector<MultiIndex> indices = multi_indices_up_to(r, options.max_degree);
    for (unsigned d = 0; d < options.draws; ++d) {
      const AlphaVector alpha(draw(rng, r + 1, -0.5, 2.0));
      const QuadratureRule rule = simplex_rule(r, static_cast<int>(2 * options.max_degree), alpha.entries());
      for (std::size_t i = 0; i < indices.size(); ++i) {
        for (std::size_t j = i; j < indices.size(); ++j) {
          out.reports.push_back(
              timed([&] { return orthogonality_check(indices[i], indices[j], alpha, rule, options.tolerance); }));
        }
      }
    }
  }
  return out;
}

SuiteResult run_fourier_suite(const FourierSuiteOptions& options, std::uint64_t seed) {
  SuiteResult out;
  for (const std::size_t r : options.ranks) {
    Rng rng(derive_seed(seed, "fourier", r));
    const std::vector<MultiIndex> indices = multi_indices_box(r, options.max_degree);
    const auto xis = grid(options.xi_values, r);
    for (unsigned d = 0; d < options.draws; ++d) {
      const ParamVector a(draw(rng, r + 1, 0.5, 2.0));
      const AlphaVector alpha(draw(rng, r + 1, -0.5, 2.0));
      for (const MultiIndex& n : indices) {
        const GParams p{n, a, alpha};
        for (const auto& xi : xis) {
          Complex closed;
          out.reports.push_back(timed([&] {
            closed = ft_closed_form(p, xi);
            const Complex numeric = ft_numeric(p, xi);
            ParamList params = g_params(p);
            params.add("xi", xi);
            return make_report("ft_closed_form", std::move(params), closed, numeric, options.tolerance,
                               1.0 + std::abs(numeric));
          }));
          out.reports.push_back(timed([&] {
            const Complex hahn = ft_closed_form(p, xi, LambdaForm::hahn);
            ParamList params = g_params(p);
            params.add("xi", xi);
            return make_report("lambda_form_equivalence", std::move(params), closed, hahn,
                               options.identity_tolerance, relative_scale(closed, hahn));
          }));
        }
      }
    }
  }

  Rng rng(derive_seed(seed, "fourier-identities"));
  for (unsigned s = 0; s < options.identity_samples; ++s) {
    const std::size_t r = static_cast<std::size_t>(rng.integer(2, 3));
    const GParams p{draw_index(rng, r, 3), ParamVector(draw(rng, r + 1, 0.5, 2.0)),
                    AlphaVector(draw(rng, r + 1, -0.5, 2.0))};
    const std::vector<double> x = draw(rng, r, -2.0, 2.0);
    out.reports.push_back(timed([&] { return g_recursion_check(p, x, options.identity_tolerance); }));
  }
  for (unsigned s = 0; s < options.identity_samples; ++s) {
    const std::size_t r = static_cast<std::size_t>(rng.integer(2, 3));
    const GParams p{draw_index(rng, r, 3), ParamVector(draw(rng, r + 1, 0.5, 2.0)),
                    AlphaVector(draw(rng, r + 1, -0.5, 2.0))};
    const std::vector<double> xi = draw(rng, r, -3.0, 3.0);
    out.reports.push_back(timed([&] {
      const Complex full = ft_closed_form(p, xi);
      const Complex reduced = ft_closed_form(reduce_last_axis(p), std::span<const double>(xi).first(r - 1)) *
                              ft_last_axis_factor(p, xi.back());
      ParamList params = g_params(p);
      params.add("xi", xi);
      return make_report("ft_reduction", std::move(params), full, reduced, kReductionTolerance,
                         relative_scale(full, reduced));
    }));
  }
  return out;
}

SuiteResult run_sfamily_suite(const SfamilySuiteOptions& options, std::uint64_t seed) {
  SuiteResult out;
  for (const std::size_t r : options.ranks) {
    Rng rng(derive_seed(seed, "sfamily", r));
    const std::vector<MultiIndex> indices = multi_indices_box(r, options.max_index);
    for (unsigned d = 0; d < options.draws; ++d) {
      const ParamVector a(draw(rng, r + 1, 0.5, 1.5));
      const ParamVector b(draw(rng, r + 1, 0.5, 1.5));
      for (const MultiIndex& n : indices) {
        const SParams p{n, a, b};
        for (const MultiIndex& m : indices) {
          out.reports.push_back(timed([&] { return s_orthogonality_check(p, m, options.tolerance); }));
        }
        const std::vector<Complex> x = draw_complex(rng, r);
        out.reports.push_back(timed([&] {
          const Complex lhs = s_eval(p, x);
          const Complex rhs = s_eval(p, x, SForm::hahn);
          ParamList params;
          params.add("r", static_cast<unsigned>(r)).add("n", n).add("a", a).add("b", b);
          params.add("x_re", real_parts(x)).add("x_im", imag_parts(x));
          return make_report("s_form_equivalence", std::move(params), lhs, rhs, options.identity_tolerance,
                             relative_scale(lhs, rhs));
        }));
      }
    }
  }

  Rng rng(derive_seed(seed, "sfamily-identities"));
  for (const SRelation which : {SRelation::p1, SRelation::p2, SRelation::relation1, SRelation::relation2}) {
    const bool rank_two = which == SRelation::relation1 || which == SRelation::relation2;
    for (unsigned s = 0; s < options.identity_samples; ++s) {
      const std::size_t r = rank_two ? 2 : static_cast<std::size_t>(rng.integer(2, 3));
      const SParams p{draw_index(rng, r, 3), ParamVector(draw(rng, r + 1, 0.5, 2.5)),
                      ParamVector(draw(rng, r + 1, 0.5, 2.5))};
      const std::vector<Complex> x = draw_complex(rng, r);
      out.reports.push_back(timed([&] { return s_relation_check(p, which, x, options.identity_tolerance); }));
    }
  }
  return out;
}

SuiteResult run_recurrence_suite(const RecurrenceSuiteOptions& options, std::uint64_t seed) {
  SuiteResult out;
  for (std::size_t i = 0; i < kAllRelations.size(); ++i) {
    if (!options.relation || *options.relation == kAllRelations[i]) {
      run_relation(kAllRelations[i], i, options, seed, out);
    }
  }
  return out;
}

SuiteResult run_all_suites(std::uint64_t seed) {
  SuiteResult out = run_orthogonality_suite({}, seed);
  out.append(run_fourier_suite({}, seed));
  out.append(run_sfamily_suite({}, seed));
  out.append(run_recurrence_suite({}, seed));
  return out;
}

std::string to_json_line(const Erratum& e) {
  nlohmann::ordered_json j;
  j["erratum"] = {{"identity_id", e.identity_id},
                  {"note", e.note},
                  {"printed_residual", e.printed_residual},
                  {"fit_residual", e.fit_residual},
                  {"discrepancy", e.discrepancy},
                  {"correction_discrepancy", e.correction_discrepancy},
                  {"sample_sets", e.sample_sets}};
  return j.dump();
}

std::string summary_json_line(const std::string& suite, const SuiteResult& result) {
  nlohmann::ordered_json j;
  j["summary"] = {{"suite", suite},
                  {"reports", result.reports.size()},
                  {"passed", result.passed()},
                  {"failed", result.failed()},
                  {"skipped", result.skipped},
                  {"errata", result.errata.size()}};
  return j.dump();
}

} // namespace simplexft
