#include <benchmark/benchmark.h>

#include <vector>

#include "catnet/codes.hpp"
#include "catnet/graph.hpp"
#include "catnet/hopfield.hpp"
#include "catnet/integinfo.hpp"
#include "catnet/rng.hpp"
#include "catnet/simplicial.hpp"
#include "catnet/transitions.hpp"

using namespace catnet;

namespace {

DiGraph er_graph(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  DiGraph g = DiGraph::with_vertices(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

}  // namespace

static void BM_FlagComplexBetti(benchmark::State& state) {
  const DiGraph g = er_graph(static_cast<std::size_t>(state.range(0)), 0.5, 7);
  for (auto _ : state) {
    const SimplicialComplex k = flag_complex_undirected(g, 2);
    benchmark::DoNotOptimize(betti(k));
  }
}
BENCHMARK(BM_FlagComplexBetti)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_DirectedFlagPath(benchmark::State& state) {
  const DiGraph g = er_graph(static_cast<std::size_t>(state.range(0)), 0.4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(directed_flag_complex(g, 3, CliqueVariant::Path));
}
BENCHMARK(BM_DirectedFlagPath)->Arg(12)->Arg(24);

static void BM_HopfieldRun(benchmark::State& state) {
  DiGraph g = DiGraph::with_vertices(4);
  for (VertexId v = 0; v < 4; ++v) g.add_edge(v, (v + 1) % 4);
  g.add_edge(0, 2);
  const std::size_t m = g.edge_count();
  std::vector<double> t(m * m, -0.3);
  const WeightedCode one(Code::from_strings(2, {"000", "101"}), {0.0, 1.0});
  const HopfieldSystem sys(g, t, std::vector<WeightedCode>(m, one), {HopfieldVariant::WithSelf, true, false, 2'000'000, true});
  const HopfieldState init{std::vector<WeightedCode>(m, one), 0};
  for (auto _ : state) benchmark::DoNotOptimize(run(sys, init, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_HopfieldRun)->Arg(10)->Arg(50);

static void BM_ProjectAllPartitions(benchmark::State& state) {
  const std::size_t units = static_cast<std::size_t>(state.range(0));
  std::vector<Axis> axes;
  for (std::size_t i = 0; i < 2 * units; ++i) axes.push_back({"U" + std::to_string(i), 2});
  Rng rng(5);
  std::vector<double> p(std::size_t{1} << (2 * units));
  double s = 0.0;
  for (double& x : p) s += (x = 0.05 + rng.uniform());
  for (double& x : p) x /= s;
  const JointDistribution d(axes, p);
  for (auto _ : state) benchmark::DoNotOptimize(ii(d, PartitionSet::All));
}
BENCHMARK(BM_ProjectAllPartitions)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_XiStrong(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  DiGraph g = DiGraph::with_vertices(n);
  for (VertexId v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  PartMap parts;
  for (VertexId v : g.vertices()) parts.emplace(v, integrate_and_fire(2));
  for (auto _ : state) benchmark::DoNotOptimize(xi(g, parts));
}
BENCHMARK(BM_XiStrong)->Arg(3)->Arg(6);

static void BM_ExtractCode(benchmark::State& state) {
  DiGraph g = DiGraph::with_vertices(3);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(1, 2);
  PartMap parts;
  for (VertexId v : g.vertices()) parts.emplace(v, integrate_and_fire(1));
  const TransitionSystem t = xi(g, parts);
  for (auto _ : state) benchmark::DoNotOptimize(extract_code(t, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ExtractCode)->Arg(3)->Arg(5);
BENCHMARK_MAIN();
