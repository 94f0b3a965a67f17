#include <benchmark/benchmark.h>

#include <random>

#include "mmslab/transport.hpp"

namespace {

mms::FiniteSpace cloud(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> xy(2 * n);
  for (auto& v : xy) v = u(rng);
  return mms::from_euclidean(2, xy, std::vector<double>(n, 1.0));
}

mms::Measure random_measure(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.1, 1);
  mms::Measure m{std::vector<double>(n)};
  double s = 0.0;
  for (auto& v : m.mass) s += (v = u(rng));
  for (auto& v : m.mass) v /= s;
  return m;
}

void BM_W2Exact(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  auto X = cloud(n, rng);
  auto a = random_measure(n, rng), b = random_measure(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mms::w2(X, a, b).cost);
}
BENCHMARK(BM_W2Exact)->Arg(25)->Arg(50)->Arg(100)->Arg(200);

void BM_W2Entropic(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  auto X = cloud(n, rng);
  auto a = random_measure(n, rng), b = random_measure(n, rng);
  mms::W2Options o;
  o.solver = mms::Solver::entropic;
  o.entropic_reg = 1e-2;
  for (auto _ : state) benchmark::DoNotOptimize(mms::w2(X, a, b, o).cost);
}
BENCHMARK(BM_W2Entropic)->Arg(50)->Arg(200);

void BM_Monotone1d(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> x(n);
  for (auto& v : x) v = u(rng);
  auto X = mms::from_euclidean(1, x, std::vector<double>(n, 1.0));
  auto a = random_measure(n, rng), b = random_measure(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mms::monotone_1d(X, a, b).cost);
}
BENCHMARK(BM_Monotone1d)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
