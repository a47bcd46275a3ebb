#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "simplexft/rng.hpp"
#include "simplexft/suites.hpp"

namespace simplexft {
namespace {

std::string render(const SuiteResult& r) {
  std::string out;
  for (const auto& rep : r.reports) {
    out += to_json_line(rep) + "\n";
  }
  for (const auto& e : r.errata) {
    out += to_json_line(e) + "\n";
  }
  return out;
}

TEST(Rng, Mt19937_64ReferenceSequence) {
  Rng rng(5489);
  EXPECT_EQ(rng.next(), 14514284786278117030ull);
  Rng a(3);
  Rng b(3);
  for (int i = 0; i < 100; ++i) {
    const double u = a.unit();
    EXPECT_EQ(u, b.unit());
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    const int k = a.integer(-2, 4);
    EXPECT_EQ(k, b.integer(-2, 4));
    EXPECT_GE(k, -2);
    EXPECT_LE(k, 4);
  }
}

TEST(DeriveSeed, StableAndDistinct) {
  EXPECT_EQ(derive_seed(1, "recurrence", 3), derive_seed(1, "recurrence", 3));
  EXPECT_NE(derive_seed(1, "recurrence", 3), derive_seed(1, "recurrence", 4));
  EXPECT_NE(derive_seed(1, "recurrence", 3), derive_seed(2, "recurrence", 3));
  EXPECT_NE(derive_seed(1, "fourier", 0), derive_seed(1, "sfamily", 0));
}

TEST(Suites, SmallOrthogonalityRunPasses) {
  OrthogonalitySuiteOptions o;
  o.ranks = {2};
  o.max_degree = 3;
  o.draws = 2;
  const SuiteResult r = run_orthogonality_suite(o, 42);
  // pairs n <= m over 10 indices
  EXPECT_EQ(r.reports.size(), 2u * 55u);
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(r.passed(), r.reports.size());
}

TEST(Suites, SmallFourierRunPasses) {
  FourierSuiteOptions o;
  o.ranks = {1};
  o.max_degree = 2;
  o.draws = 2;
  o.identity_samples = 5;
  const SuiteResult r = run_fourier_suite(o, 5);
  EXPECT_FALSE(r.reports.empty());
  EXPECT_TRUE(r.all_passed());
}

TEST(Suites, SmallSfamilyRunPasses) {
  SfamilySuiteOptions o;
  o.ranks = {1};
  o.max_index = 1;
  o.draws = 1;
  o.identity_samples = 5;
  const SuiteResult r = run_sfamily_suite(o, 5);
  EXPECT_FALSE(r.reports.empty());
  EXPECT_TRUE(r.all_passed());
}

TEST(Suites, RecurrenceSingleRelation) {
  RecurrenceSuiteOptions o;
  o.relation = RelationId::S1_STAR7;
  o.samples = 20;
  const SuiteResult r = run_recurrence_suite(o, 1);
  EXPECT_EQ(r.reports.size(), 20u);
  EXPECT_TRUE(r.all_passed());
  EXPECT_TRUE(r.errata.empty());
}

TEST(Suites, DemotedRelationEmitsErratumAndPasses) {
  RecurrenceSuiteOptions o;
  o.relation = RelationId::S1_STAR4;
  o.samples = 10;
  o.brute_force = true;
  const SuiteResult r = run_recurrence_suite(o, 1);
  ASSERT_EQ(r.errata.size(), 1u);
  EXPECT_EQ(r.errata[0].identity_id, "S1_STAR4");
  EXPECT_EQ(r.errata[0].sample_sets, 3u);
  EXPECT_LE(r.errata[0].fit_residual, 1e-10);
  EXPECT_GT(r.errata[0].printed_residual, 1e-8);
  EXPECT_LE(r.errata[0].correction_discrepancy, 1e-8);
  // 3 fit reports, then the sweep
  EXPECT_EQ(r.reports.size(), 13u);
  EXPECT_EQ(r.reports[0].identity_id, "S1_STAR4:fit");
  EXPECT_TRUE(r.all_passed());
}

TEST(Suites, SubRunMatchesFullRunDraws) {
  RecurrenceSuiteOptions all;
  all.samples = 5;
  const SuiteResult full = run_recurrence_suite(all, 9);
  RecurrenceSuiteOptions one = all;
  one.relation = RelationId::S2_104;
  const SuiteResult part = run_recurrence_suite(one, 9);
  std::string expected;
  for (const auto& rep : full.reports) {
    if (rep.identity_id == "S2_104") {
      expected += to_json_line(rep) + "\n";
    }
  }
  EXPECT_EQ(render(part), expected);
}

TEST(Suites, Deterministic) {
  FourierSuiteOptions o;
  o.ranks = {1, 2};
  o.max_degree = 1;
  o.draws = 1;
  o.identity_samples = 3;
  EXPECT_EQ(render(run_fourier_suite(o, 17)), render(run_fourier_suite(o, 17)));
  EXPECT_NE(render(run_fourier_suite(o, 17)), render(run_fourier_suite(o, 18)));
}

TEST(Suites, JsonLinesParse) {
  RecurrenceSuiteOptions o;
  o.relation = RelationId::S2_103;
  o.samples = 3;
  const SuiteResult r = run_recurrence_suite(o, 1);
  for (const auto& rep : r.reports) {
    const auto j = nlohmann::json::parse(to_json_line(rep));
    EXPECT_EQ(j["identity_id"], "S2_103");
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_FALSE(j.contains("runtime_ms"));
  }
  ASSERT_EQ(r.errata.size(), 1u);
  const auto e = nlohmann::json::parse(to_json_line(r.errata[0]));
  EXPECT_EQ(e["erratum"]["identity_id"], "S2_103");
  const auto s = nlohmann::json::parse(summary_json_line("recurrence", r));
  EXPECT_EQ(s["summary"]["suite"], "recurrence");
  EXPECT_EQ(s["summary"]["reports"].get<std::size_t>(), r.reports.size());
  EXPECT_EQ(s["summary"]["failed"].get<std::size_t>(), 0u);
  EXPECT_EQ(s["summary"]["errata"].get<std::size_t>(), 1u);
}

TEST(SuiteResult, Append) {
  SuiteResult a;
  a.reports.resize(2);
  a.reports[0].passed = true;
  a.skipped = 1;
  SuiteResult b;
  b.reports.resize(1);
  b.reports[0].passed = true;
  b.errata.resize(1);
  b.skipped = 2;
  a.append(std::move(b));
  EXPECT_EQ(a.reports.size(), 3u);
  EXPECT_EQ(a.passed(), 2u);
  EXPECT_EQ(a.failed(), 1u);
  EXPECT_FALSE(a.all_passed());
  EXPECT_EQ(a.errata.size(), 1u);
  EXPECT_EQ(a.skipped, 3u);
}

} // namespace
} // namespace simplexft
