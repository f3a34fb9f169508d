#include <benchmark/benchmark.h>

#include "homrand/catalog.hpp"
#include "homrand/chart.hpp"
#include "homrand/connection.hpp"
#include "homrand/criteria.hpp"
#include "homrand/finsler.hpp"
#include "homrand/sweep.hpp"

using namespace homrand;

namespace {

RandersDatum axis_datum(const char* name, double c) {
  const auto& e = catalog_entry(name);
  VectorXd u = VectorXd::Zero(e.space.n());
  u[e.space.n() - 1] = c;
  return RandersDatum::make(e.space, u);
}

void BM_ChristoffelDerivative(benchmark::State& state) {
  const auto& s = catalog_entry("hopf_s3").space;
  for (auto _ : state) benchmark::DoNotOptimize(christoffel_derivative_origin(s));
}
BENCHMARK(BM_ChristoffelDerivative);

void BM_MetricAt(benchmark::State& state) {
  RandersDatum d = axis_datum("su2", 0.3);
  VectorXd x(3);
  x << 0.1, -0.05, 0.08;
  for (auto _ : state) benchmark::DoNotOptimize(metric_at(d, x));
}
BENCHMARK(BM_MetricAt);

void BM_SprayCoefficients(benchmark::State& state) {
  RandersDatum d = axis_datum("su2", 0.3);
  MetricField f = make_metric_field(d);
  VectorXd x = VectorXd::Zero(3), y(3);
  y << 0.7, -0.2, 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(spray_coefficients(f, x, y));
}
BENCHMARK(BM_SprayCoefficients);

void BM_Ricci(benchmark::State& state) {
  RandersDatum d = axis_datum("su2", 0.3);
  MetricField f = make_metric_field(d);
  VectorXd x = VectorXd::Zero(3), y(3);
  y << 0.7, -0.2, 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(ricci(f, x, y));
}
BENCHMARK(BM_Ricci);

void BM_EquivalenceCheck(benchmark::State& state) {
  RandersDatum d = axis_datum("hopf_s3", 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(equivalence_check(d));
}
BENCHMARK(BM_EquivalenceCheck);

void BM_Sweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(7, 2, false));
}
BENCHMARK(BM_Sweep);

}  // namespace

BENCHMARK_MAIN();
