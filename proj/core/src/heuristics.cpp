#include "mmroute/routing/heuristics.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <spdlog/spdlog.h>

namespace mmroute {

std::vector<NodeId> chooseLandmarks(std::size_t nodeCount, std::size_t count,
                                    std::uint64_t seed) {
  if (count == 0) throw InvalidArgument("landmark count must be at least 1");
  if (count > nodeCount) {
    spdlog::warn("requested {} landmarks but the graph has {} nodes; using {}", count,
                 nodeCount, nodeCount);
    count = nodeCount;
  }
  std::vector<NodeId> nodes(nodeCount);
  std::iota(nodes.begin(), nodes.end(), NodeId{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, nodeCount - 1);
    std::swap(nodes[i], nodes[pick(rng)]);
  }
  nodes.resize(count);
  return nodes;
}

double landmarkHeuristic(const LandmarkTable& table, NodeId u, NodeId v) {
  double best = 0.0;
  for (std::size_t i = 0; i < table.landmarks.size(); ++i) {
    const double ul = table.distTo[i][u], vl = table.distTo[i][v];
    const double lu = table.distFrom[i][u], lv = table.distFrom[i][v];
    // v reaches the landmark but u does not, or the landmark reaches u but
    // not v: either way u cannot reach v.
    if ((ul == kInfinity && vl < kInfinity) || (lv == kInfinity && lu < kInfinity)) {
      return kInfinity;
    }
    if (ul < kInfinity && vl < kInfinity) best = std::max(best, ul - vl);
    if (lu < kInfinity && lv < kInfinity) best = std::max(best, lv - lu);
  }
  return best;
}

}  // namespace mmroute
