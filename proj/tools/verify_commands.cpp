#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "cli.hpp"
#include "simplexft/errors.hpp"
#include "simplexft/suites.hpp"

namespace simplexft::cli {
namespace {

constexpr const char* kToleranceEnv = "SIMPLEXFT_TOLERANCE";

struct VerifyArgs {
  std::uint64_t seed = 1;
  std::optional<double> tolerance;
  bool timing = false;
  std::vector<int> ranks;
  std::optional<int> max_degree;
  std::optional<int> draws;
  std::string id;
  int samples = 100;
  bool brute_force = false;
};

// --tolerance, else $SIMPLEXFT_TOLERANCE, else the suite default.
std::optional<double> tolerance_override(const VerifyArgs& args) {
  if (args.tolerance) {
    return args.tolerance;
  }
  if (const char* env = std::getenv(kToleranceEnv); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      throw ParameterRangeError(std::string(kToleranceEnv) + " must be a positive number, got '" + env + "'");
    }
    return v;
  }
  return std::nullopt;
}

std::vector<std::size_t> ranks(const VerifyArgs& args, std::vector<std::size_t> fallback) {
  if (args.ranks.empty()) {
    return fallback;
  }
  std::vector<std::size_t> out;
  for (const int r : args.ranks) {
    if (r < 1) {
      throw ParameterRangeError("--r entries must be >= 1");
    }
    out.push_back(static_cast<std::size_t>(r));
  }
  return out;
}

unsigned non_negative(std::optional<int> v, unsigned fallback, const char* flag) {
  if (!v) {
    return fallback;
  }
  if (*v < 0) {
    throw ParameterRangeError(std::string(flag) + " must be >= 0");
  }
  return static_cast<unsigned>(*v);
}

SuiteResult run(const std::string& suite, const VerifyArgs& args) {
  const std::optional<double> tol = tolerance_override(args);
  if (suite == "orthogonality") {
    OrthogonalitySuiteOptions o;
    o.ranks = ranks(args, o.ranks);
    o.max_degree = non_negative(args.max_degree, o.max_degree, "--max-degree");
    o.draws = non_negative(args.draws, o.draws, "--draws");
    o.tolerance = tol.value_or(o.tolerance);
    return run_orthogonality_suite(o, args.seed);
  }
  if (suite == "fourier") {
    FourierSuiteOptions o;
    o.ranks = ranks(args, o.ranks);
    o.max_degree = non_negative(args.max_degree, o.max_degree, "--max-degree");
    o.draws = non_negative(args.draws, o.draws, "--draws");
    o.tolerance = tol.value_or(o.tolerance);
    return run_fourier_suite(o, args.seed);
  }
  if (suite == "sfamily") {
    SfamilySuiteOptions o;
    o.ranks = ranks(args, o.ranks);
    o.max_index = non_negative(args.max_degree, o.max_index, "--max-index");
    o.draws = non_negative(args.draws, o.draws, "--draws");
    o.tolerance = tol.value_or(o.tolerance);
    return run_sfamily_suite(o, args.seed);
  }
  if (suite == "recurrence") {
    RecurrenceSuiteOptions o;
    if (!args.id.empty()) {
      o.relation = relation_from_string(args.id);
      if (!o.relation) {
        throw ParameterRangeError("unknown relation id '" + args.id + "'");
      }
    }
    if (args.samples < 1) {
      throw ParameterRangeError("--samples must be >= 1");
    }
    o.samples = static_cast<std::size_t>(args.samples);
    o.brute_force = args.brute_force;
    o.tolerance = tol.value_or(o.tolerance);
    return run_recurrence_suite(o, args.seed);
  }
  // all: default sizes, shared seed and tolerance override.
  OrthogonalitySuiteOptions oo;
  FourierSuiteOptions fo;
  SfamilySuiteOptions so;
  RecurrenceSuiteOptions ro;
  if (tol) {
    oo.tolerance = fo.tolerance = so.tolerance = ro.tolerance = *tol;
  }
  SuiteResult result = run_orthogonality_suite(oo, args.seed);
  result.append(run_fourier_suite(fo, args.seed));
  result.append(run_sfamily_suite(so, args.seed));
  result.append(run_recurrence_suite(ro, args.seed));
  return result;
}

void add_common(CLI::App& s, VerifyArgs& args) {
  s.add_option("--seed", args.seed, "Seed for all parameter sampling")->capture_default_str();
  s.add_option("--tolerance", args.tolerance, "Override the primary tolerance (also $SIMPLEXFT_TOLERANCE)");
  s.add_flag("--timing", args.timing, "Include runtime_ms in reports (output is then not reproducible)");
}

} // namespace

void register_verify(CLI::App& app, int& exit_code) {
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite; JSON lines on stdout");
  verify->require_subcommand(1);
  for (const char* suite : {"orthogonality", "fourier", "sfamily", "recurrence", "all"}) {
    auto args = std::make_shared<VerifyArgs>();
    const std::string name = suite;
    CLI::App* s = verify->add_subcommand(name, "Suite: " + name);
    add_common(*s, *args);
    if (name == "orthogonality" || name == "fourier" || name == "sfamily") {
      s->add_option("--r", args->ranks, "Dimensions to sweep")->delimiter(',');
      s->add_option(name == "sfamily" ? "--max-index" : "--max-degree", args->max_degree,
                    name == "orthogonality" ? "Bound on total degree" : "Bound on each index entry");
      s->add_option("--draws", args->draws, "Random parameter draws per dimension");
    }
    if (name == "recurrence") {
      s->add_option("--id", args->id, "Relation id, e.g. S1_STAR7");
      s->add_option("--samples", args->samples, "Samples per relation")->capture_default_str();
      s->add_flag("--brute-force", args->brute_force, "Also emit the least-squares fit reports");
    }
    s->callback([args, name, &exit_code] {
      const SuiteResult result = run(name, *args);
      std::cout << "{\"schema\":1}\n";
      for (const VerificationReport& rep : result.reports) {
        std::cout << to_json_line(rep, args->timing) << "\n";
      }
      for (const Erratum& e : result.errata) {
        std::cout << to_json_line(e) << "\n";
      }
      std::cout << summary_json_line(name, result) << "\n";
      std::cout.flush();
      exit_code = result.all_passed() ? kExitOk : kExitFailed;
    });
  }
}

} // namespace simplexft::cli
