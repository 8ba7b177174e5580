#include <benchmark/benchmark.h>

#include <map>
#include <numeric>

#include "ncst/instances.hpp"
#include "ncst/oracle/census.hpp"
#include "ncst/oracle/eccentricity.hpp"
#include "ncst/oracle/enumerate.hpp"

namespace {

using namespace ncst;
using namespace ncst::oracle;

struct Fixture {
  ReconfigGraph graph;
  std::vector<std::uint32_t> sources;
  std::vector<char> paths;
};

const Fixture& fixture(int n) {
  static std::map<int, Fixture> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    const auto ps = regular_polygon(n);
    Fixture f{build_graph(enumerate_trees(*ps, EdgeUniverse(n)), *ps, FlipRule::Exchange), {}, {}};
    // A fixed slice of sources keeps one iteration short at n = 8.
    f.sources.resize(std::min<std::size_t>(f.graph.node_count(), 512));
    std::iota(f.sources.begin(), f.sources.end(), 0u);
    f.paths = path_mask(f.graph);
    it = cache.emplace(n, std::move(f)).first;
  }
  return it->second;
}

void BM_EccentricitySerial(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eccentricities_serial(f.graph, f.sources, f.paths));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.sources.size()));
}

void BM_EccentricityParallel(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(eccentricities_parallel(f.graph, f.sources, f.paths, threads));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.sources.size()));
}

}  // namespace

BENCHMARK(BM_EccentricitySerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EccentricityParallel)->ArgsProduct({{7, 8}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
