#include <benchmark/benchmark.h>

#include "flexcore/fflab.hpp"
#include "flexcore/flex_variety.hpp"

namespace {

void BM_UniversalHessian(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(flexcore::universal_cubic_hessian());
  }
}
BENCHMARK(BM_UniversalHessian);

void BM_PolynomialMul(benchmark::State& state) {
  const auto& system = flexcore::FlexSystem::instance();
  for (auto _ : state) {
    benchmark::DoNotOptimize(system.f() * system.h());
  }
}
BENCHMARK(BM_PolynomialMul);

void BM_Certificate(benchmark::State& state) {
  const auto& system = flexcore::FlexSystem::instance();
  for (auto _ : state) {
    benchmark::DoNotOptimize(system.verify_certificate());
  }
}
BENCHMARK(BM_Certificate);

void BM_FlexScanP101(benchmark::State& state) {
  const flexcore::PrimeField field(101);
  const flexcore::CubicCoefficients witness_cubic = {1, 0, 0, 0, 1, 0,
                                                     1, 0, 0, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(flexcore::flexes_of_cubic(field, witness_cubic));
  }
}
BENCHMARK(BM_FlexScanP101);

void BM_SampleCPointsP10007(benchmark::State& state) {
  const flexcore::PrimeField field(10007);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(flexcore::sample_C_points(field, 5, seed++));
  }
}
BENCHMARK(BM_SampleCPointsP10007);

}  // namespace

BENCHMARK_MAIN();
