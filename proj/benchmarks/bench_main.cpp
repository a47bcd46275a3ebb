#include <array>
#include <vector>

#include <benchmark/benchmark.h>

#include "simplexft/classical_poly.hpp"
#include "simplexft/fourier.hpp"
#include "simplexft/hypergeom.hpp"
#include "simplexft/numerics.hpp"
#include "simplexft/quadrature.hpp"
#include "simplexft/recurrences.hpp"
#include "simplexft/rng.hpp"
#include "simplexft/sfamily.hpp"
#include "simplexft/simplex_poly.hpp"

using namespace simplexft;

static void BM_LogGamma(benchmark::State& state) {
  Complex z(2.3, -7.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_gamma(z));
    z += Complex(1e-9, 0.0);
  }
}
BENCHMARK(BM_LogGamma);

static void BM_Hyp3F2(benchmark::State& state) {
  const double n = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyp3f2(-n, n + 3.7, Complex(1.2, 0.4), 2.1, 1.6));
  }
}
BENCHMARK(BM_Hyp3F2)->Arg(2)->Arg(8)->Arg(32);

static void BM_JacobiEval(benchmark::State& state) {
  const JacobiParams p{static_cast<unsigned>(state.range(0)), 0.7, 1.3};
  double x = 0.31;
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobi_eval(p, x));
  }
}
BENCHMARK(BM_JacobiEval)->Arg(4)->Arg(32);

static void BM_GaussJacobi(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauss_jacobi(static_cast<std::size_t>(state.range(0)), -0.3, 1.4));
  }
}
BENCHMARK(BM_GaussJacobi)->Arg(8)->Arg(32)->Arg(128);

static void BM_SimplexRule(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const std::vector<double> alpha(r + 1, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simplex_rule(r, 8, alpha));
  }
}
BENCHMARK(BM_SimplexRule)->Arg(1)->Arg(2)->Arg(3);

static void BM_OrthogonalityCheck(benchmark::State& state) {
  const AlphaVector alpha{0.3, 1.1, -0.2, 0.6};
  const QuadratureRule rule = simplex_rule(3, 8, alpha.entries());
  for (auto _ : state) {
    benchmark::DoNotOptimize(orthogonality_check({2, 1, 1}, {1, 2, 1}, alpha, rule));
  }
}
BENCHMARK(BM_OrthogonalityCheck);

static void BM_FtClosedForm(benchmark::State& state) {
  const GParams p{{2, 1}, {1.2, 0.9, 1.5}, {0.3, 0.8, -0.2}};
  const std::array<double, 2> xi{0.7, -1.3};
  const auto form = state.range(0) == 0 ? LambdaForm::hypergeometric : LambdaForm::hahn;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ft_closed_form(p, xi, form));
  }
}
BENCHMARK(BM_FtClosedForm)->Arg(0)->Arg(1);

static void BM_FtNumeric(benchmark::State& state) {
  const GParams p{{2, 1}, {1.2, 0.9, 1.5}, {0.3, 0.8, -0.2}};
  const std::array<double, 2> xi{0.7, -1.3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ft_numeric(p, xi));
  }
}
BENCHMARK(BM_FtNumeric)->Unit(benchmark::kMicrosecond);

static void BM_SEval(benchmark::State& state) {
  const SParams p{{2, 1, 2}, {0.8, 1.2, 0.7, 1.4}, {1.1, 0.6, 1.3, 0.9}};
  const std::array<Complex, 3> x{Complex(0.3, 0.2), Complex(-1.1, 0.5), Complex(0.8, -0.4)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(s_eval(p, x));
  }
}
BENCHMARK(BM_SEval);

static void BM_SOrthogonalityLhs(benchmark::State& state) {
  const SParams p{{1, 2}, {0.8, 1.2, 0.7}, {1.1, 0.6, 1.3}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(s_orthogonality_lhs(p, {2, 1}));
  }
}
BENCHMARK(BM_SOrthogonalityLhs)->Unit(benchmark::kMillisecond);

static void BM_RecurrenceResidual(benchmark::State& state) {
  const auto id = kAllRelations[static_cast<std::size_t>(state.range(0))];
  Rng rng(3);
  RelationParams p = sample_relation_params(id, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(residual(id, p));
  }
  state.SetLabel(to_string(id));
}
BENCHMARK(BM_RecurrenceResidual)->Arg(0)->Arg(8)->Arg(15);

static void BM_BruteForceFit(benchmark::State& state) {
  Rng rng(4);
  const RelationParams base = sample_fit_base(RelationId::S2_103, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_coefficients(RelationId::S2_103, base, 40, 5));
  }
}
BENCHMARK(BM_BruteForceFit)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
