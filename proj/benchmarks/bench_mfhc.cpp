#include <benchmark/benchmark.h>

#include "mfhc/arith.hpp"
#include "mfhc/forms.hpp"
#include "mfhc/operators.hpp"
#include "mfhc/verify.hpp"
#include "mfhc/weil.hpp"

namespace {

void BM_Hurwitz(benchmark::State& state) {
  const long D_max = state.range(0);
  for (auto _ : state) {
    auto table = mfhc::arith::hurwitz_table(D_max);
    benchmark::DoNotOptimize(table);
  }
  state.SetComplexityN(D_max);
}
BENCHMARK(BM_Hurwitz)->Range(64, 4096)->Complexity();

void BM_BuildE32(benchmark::State& state) {
  for (auto _ : state) {
    auto e = mfhc::forms::build_e32star(state.range(0), 20);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_BuildE32)->Arg(100)->Arg(400);

void BM_LaplacianE32(benchmark::State& state) {
  const auto e = mfhc::forms::build_e32star(state.range(0), 10);
  for (auto _ : state) {
    auto lap = mfhc::ops::laplacian(e);
    benchmark::DoNotOptimize(lap);
  }
}
BENCHMARK(BM_LaplacianE32)->Arg(50)->Arg(200);

void BM_FlipRoundtrip(benchmark::State& state) {
  mfhc::verify::Rng rng(1);
  const auto f = mfhc::verify::random_harmonic_expansion(rng, mfhc::HalfInteger::whole(-4));
  for (auto _ : state) {
    auto g = mfhc::ops::flip(mfhc::ops::flip(f));
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_FlipRoundtrip);

void BM_WeilRelations(benchmark::State& state) {
  const auto D = mfhc::weil::FiniteQuadraticModule::parse("Z/2:1/4 + Z/4:1/8");
  for (auto _ : state) {
    auto rel = mfhc::weil::check_relations(D);
    benchmark::DoNotOptimize(rel);
  }
}
BENCHMARK(BM_WeilRelations);

void BM_EvalE32(benchmark::State& state) {
  const auto e = mfhc::forms::build_e32star(400, 20);
  const std::complex<double> tau{0.3, 1.2};
  for (auto _ : state) {
    auto z = mfhc::qexp::eval_numeric(e, tau);
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_EvalE32);

}  // namespace

BENCHMARK_MAIN();
