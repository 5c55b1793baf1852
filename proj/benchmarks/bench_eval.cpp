#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "symell/asym.hpp"
#include "symell/carlson.hpp"
#include "symell/dispatch.hpp"
#include "symell/harness.hpp"
#include "symell/oracle.hpp"

using namespace symell;

namespace {

std::vector<std::vector<double>> tuples(int arity, int n) {
  std::mt19937_64 g(1);
  std::uniform_real_distribution<double> u(std::log(1e-3), std::log(1e3));
  std::vector<std::vector<double>> out(n, std::vector<double>(arity));
  for (auto& v : out)
    for (double& a : v) a = std::exp(u(g));
  return out;
}

void BM_rf(benchmark::State& st) {
  const auto v = tuples(3, 256);
  size_t i = 0;
  for (auto _ : st) {
    const auto& a = v[i++ & 255];
    benchmark::DoNotOptimize(rf(a[0], a[1], a[2]));
  }
}
BENCHMARK(BM_rf);

void BM_rd(benchmark::State& st) {
  const auto v = tuples(3, 256);
  size_t i = 0;
  for (auto _ : st) {
    const auto& a = v[i++ & 255];
    benchmark::DoNotOptimize(rd(a[0], a[1], a[2]));
  }
}
BENCHMARK(BM_rd);

void BM_rj(benchmark::State& st) {
  const auto v = tuples(4, 256);
  size_t i = 0;
  for (auto _ : st) {
    const auto& a = v[i++ & 255];
    benchmark::DoNotOptimize(rj(a[0], a[1], a[2], a[3]));
  }
}
BENCHMARK(BM_rj);

void BM_rg(benchmark::State& st) {
  const auto v = tuples(3, 256);
  size_t i = 0;
  for (auto _ : st) {
    const auto& a = v[i++ & 255];
    benchmark::DoNotOptimize(rg(a[0], a[1], a[2]));
  }
}
BENCHMARK(BM_rg);

// One enclosure per case at ratio 1e-6.
void BM_asym(benchmark::State& st) {
  const CaseId id = kAllCases[st.range(0)];
  const auto v = sample_case(id, 1e-6, 64, 1);
  size_t i = 0;
  for (auto _ : st) benchmark::DoNotOptimize(approximate(id, v[i++ & 63]));
  st.SetLabel(std::string(to_string(id)));
}
BENCHMARK(BM_asym)->DenseRange(0, static_cast<int>(kAllCases.size()) - 1);

void BM_dispatch(benchmark::State& st) {
  const double tol = std::pow(10.0, -static_cast<double>(st.range(0)));
  const auto v = sample_case(CaseId::F1a, 1e-9, 64, 1);
  size_t i = 0;
  for (auto _ : st) {
    const auto& a = v[i++ & 63];
    benchmark::DoNotOptimize(evaluate(EvalRequest{Kind::RF, a, tol}));
  }
}
BENCHMARK(BM_dispatch)->Arg(3)->Arg(6)->Arg(12);

void BM_oracle_rf(benchmark::State& st) {
  const auto v = tuples(3, 16);
  size_t i = 0;
  for (auto _ : st) {
    const auto& a = v[i++ & 15];
    benchmark::DoNotOptimize(oracle(OracleKind::RF, a));
  }
}
BENCHMARK(BM_oracle_rf)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
