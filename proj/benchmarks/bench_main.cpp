#include <svq/combinatorics.hpp>
#include <svq/families.hpp>
#include <svq/geometry.hpp>
#include <svq/volumes.hpp>

#include <benchmark/benchmark.h>

namespace {

const svq::VolumeDb& db() {
  static svq::VolumeDb instance = svq::VolumeDb::load_file(std::string(SVQ_DATA_DIR) + "/volumes.json");
  return instance;
}

void BM_factorial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(svq::factorial(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_factorial)->Arg(20)->Arg(40);

void BM_pi_value_mul(benchmark::State& state) {
  svq::PiValue a, b;
  for (int e = -4; e <= 4; ++e) {
    a += svq::PiValue::monomial(svq::Rational(e + 7, 3), e);
    b += svq::PiValue::monomial(svq::Rational(2 * e + 9, 5), -e);
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_pi_value_mul);

void BM_incomplete_beta_ratio(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(svq::incomplete_beta_ratio(svq::Rational(3, 7), 6, 6));
}
BENCHMARK(BM_incomplete_beta_ratio);

void BM_principal_total(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0)), l = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(svq::c_area_principal_stratum(k, l, db()));
}
BENCHMARK(BM_principal_total)->Args({3, 3})->Args({5, 5})->Args({6, 2});

void BM_qmax_subset(benchmark::State& state) {
  std::vector<int> orders = {8, 8, 8, 8, 4, 4, 4, 4, 6, 6, 6, 6, 2, 2};  // m = 8, n = 6
  orders.insert(orders.end(), 72, -1);                                   // genus 2
  svq::QuadStratum s(std::move(orders));
  svq::QmaxInput in = svq::QmaxInput::from_stratum(s);
  for (auto _ : state) benchmark::DoNotOptimize(svq::qmax_subset_search(in));
}
BENCHMARK(BM_qmax_subset);

}  // namespace

BENCHMARK_MAIN();
