#include "smalldiv/cohomology.hpp"
#include "smalldiv/continued_fraction.hpp"
#include "smalldiv/counterexamples.hpp"
#include "smalldiv/diophantine.hpp"

#include <benchmark/benchmark.h>

using namespace smalldiv;

namespace {

const AlphaSpec kSqrt2 = AlphaSpec::surd(0, 1, 2, 1);

PeriodicFunction dense(long degree) {
  std::vector<std::pair<mpz_class, Coeff>> entries;
  for (long k = 1; k <= degree; ++k) entries.push_back({k, {Scalar(mpq_class(1, k * k)), Scalar(mpq_class(-1, k))}});
  return PeriodicFunction::from_coeffs(entries);
}

void BM_CfExpandLiouville(benchmark::State& state) {
  const auto alpha = liouville_alpha(10);
  for (auto _ : state) benchmark::DoNotOptimize(cf_expand(alpha, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CfExpandLiouville)->Arg(8)->Arg(12);

void BM_LambdaScan(benchmark::State& state) {
  RotationEnclosure rot(kSqrt2, 96);
  for (auto _ : state) {
    for (long k = 1; k <= state.range(0); ++k) benchmark::DoNotOptimize(lambda_k(rot, k));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LambdaScan)->Arg(1000);

void BM_SolveRoundTrip(benchmark::State& state) {
  const auto f = delta_forward(dense(state.range(0)), kSqrt2);
  for (auto _ : state) benchmark::DoNotOptimize(solve(f, kSqrt2));
}
BENCHMARK(BM_SolveRoundTrip)->Arg(16)->Arg(64)->Arg(256);

void BM_Birkhoff(benchmark::State& state) {
  const auto f = PeriodicFunction::cosine(1);
  for (auto _ : state) benchmark::DoNotOptimize(birkhoff_sum(f, kSqrt2, 0.1, state.range(0)));
}
BENCHMARK(BM_Birkhoff)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_DiophantineLiouville(benchmark::State& state) {
  const auto alpha = liouville_alpha(10);
  for (auto _ : state) benchmark::DoNotOptimize(diophantine_report(alpha, 2, 1000000));
}
BENCHMARK(BM_DiophantineLiouville)->Unit(benchmark::kMillisecond);

void BM_CounterexampleFamily(benchmark::State& state) {
  const auto alpha = liouville_alpha(10);
  for (auto _ : state) {
    const auto modes = select_resonant_modes(alpha, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(build_family(partition_modes(modes, 1), alpha));
  }
}
BENCHMARK(BM_CounterexampleFamily)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
