#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "mmroute/bench/ranks.hpp"
#include "mmroute/geo_index.hpp"
#include "mmroute/model/road_graph.hpp"
#include "mmroute/routing/dijkstra.hpp"
#include "mmroute/routing/heuristics.hpp"

namespace {

using namespace mmroute;

// Each node joined both ways to its three nearest neighbours, driven at 50 km/h.
const RoadGraph& grid() {
  static const RoadGraph graph = [] {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 0.4);
    RoadGraphBuilder b;
    GeoIndex index;
    for (int i = 0; i < 50'000; ++i) {
      const GeoPoint p = GeoPoint::fromDegrees(48.0 + u(rng), 8.0 + u(rng));
      index.insert(p, b.addNode(i, p));
    }
    const ModeSet modes{TransportMode::kCar};
    const ModeSpeeds speeds = RoadSpeedPolicy{}.speedsFor(modes, 50);
    for (NodeId v = 0; v < b.nodeCount(); ++v) {
      for (const GeoIndex::Hit& hit : index.kNearest(b.point(v), 4)) {
        if (hit.id == v) continue;
        b.addEdge({v, hit.id, hit.distance * 1.1, modes, speeds});
        b.addEdge({hit.id, v, hit.distance * 1.1, modes, speeds});
      }
    }
    return std::move(b).build();
  }();
  return graph;
}

const RankedQuerySet& queries() {
  static const RankedQuerySet set = generateRankedQueries(grid(), 50, 14, 5);
  return set;
}

template <class Run>
void runRanked(benchmark::State& state, Run run) {
  const auto k = static_cast<unsigned>(state.range(0));
  const RankedQuerySet& set = queries();
  std::size_t i = 0, settled = 0;
  for (auto _ : state) {
    const NodeId s = set.sources[i % set.sources.size()];
    const NodeId t = set.targets[i % set.sources.size()][k];
    settled += run(s, t).stats.settledCount;
    ++i;
  }
  state.counters["settled"] = benchmark::Counter(static_cast<double>(settled) / static_cast<double>(i));
}

void BM_Dijkstra(benchmark::State& state) {
  runRanked(state, [](NodeId s, NodeId t) { return dijkstra(grid(), s, t); });
}

void BM_AStarCrowFlies(benchmark::State& state) {
  runRanked(state, [](NodeId s, NodeId t) {
    return aStar(grid(), s, t, ModeSet::all(), CrowFliesToTarget(grid(), t, grid().maxSpeedKmh()));
  });
}

void BM_AStarLandmarks(benchmark::State& state) {
  static const LandmarkTable table = precomputeLandmarks(grid());
  runRanked(state, [](NodeId s, NodeId t) {
    return aStar(grid(), s, t, ModeSet::all(), LandmarksToTarget(table, t));
  });
}

BENCHMARK(BM_Dijkstra)->DenseRange(6, 14, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_AStarCrowFlies)->DenseRange(6, 14, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_AStarLandmarks)->DenseRange(6, 14, 4)->Unit(benchmark::kMicrosecond);

}  // namespace
