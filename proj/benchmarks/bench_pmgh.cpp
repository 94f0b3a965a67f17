#include <benchmark/benchmark.h>

#include "mmslab/models.hpp"
#include "mmslab/pmgh.hpp"
#include "mmslab/tangent.hpp"

namespace {

// Blow-up of a planar grid against the plane model at matched resolution.
void BM_PmghPlaneModel(benchmark::State& state) {
  mms::ModelSpec s;
  s.dim = 2;
  s.h = 0.01;
  s.lo = -1.5;
  s.hi = 1.5;
  auto seq = mms::blowup(mms::make_model(s), {0.125});
  const auto& member = seq.members.front();
  auto model = mms::euclidean_model(2).make(member.relative_resolution, seq.window);
  for (auto _ : state) benchmark::DoNotOptimize(mms::pmgh_distance(member.space, model).value);
}
BENCHMARK(BM_PmghPlaneModel)->Unit(benchmark::kMillisecond);

void BM_PmghAnneal(benchmark::State& state) {
  mms::ModelSpec s;
  s.kind = mms::ModelKind::graph;
  s.nodes = static_cast<std::size_t>(state.range(0));
  auto a = mms::make_model(s);
  s.seed = 2;
  auto b = mms::make_model(s);
  mms::PmghOptions o;
  o.mode = mms::PmghMode::anneal;
  o.radii = {0.25, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(mms::pmgh_distance(a, b, o).value);
}
BENCHMARK(BM_PmghAnneal)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

}  // namespace
