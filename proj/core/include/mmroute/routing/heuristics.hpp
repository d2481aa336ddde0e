#pragma once

#include <cstdint>
#include <vector>

#include "mmroute/geo.hpp"
#include "mmroute/routing/dijkstra.hpp"

namespace mmroute {

/// Straight-line travel time in seconds at `topSpeedKmh`.
inline double crowFliesHeuristic(const GeoPoint& u, const GeoPoint& t,
                                 double topSpeedKmh) noexcept {
  return asTheCrowFlies(u, t) / (topSpeedKmh / 3.6);
}

/// Heuristic functor for graphs exposing `point(NodeId)`.
template <class G>
class CrowFliesToTarget {
 public:
  CrowFliesToTarget(const G& g, NodeId target, double topSpeedKmh)
      : graph_(&g), target_(g.point(target)), topSpeedKmh_(topSpeedKmh) {
    if (!(topSpeedKmh > 0.0)) throw InvalidArgument("top speed must be positive");
  }
  double operator()(NodeId v) const {
    return crowFliesHeuristic(graph_->point(v), target_, topSpeedKmh_);
  }

 private:
  const G* graph_;
  GeoPoint target_;
  double topSpeedKmh_;
};

/// Exact distances between a set of landmarks and every node, computed with
/// all modes allowed. Unreachable entries are infinite.
struct LandmarkTable {
  std::vector<NodeId> landmarks;
  std::vector<std::vector<double>> distTo;    // distTo[i][v] = dist(v, landmark i)
  std::vector<std::vector<double>> distFrom;  // distFrom[i][v] = dist(landmark i, v)
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kDefaultLandmarkCount = 24;

/// Table for the given landmarks: one forward and one reverse search each.
template <RoutingGraph G>
LandmarkTable landmarksFrom(const G& g, std::vector<NodeId> landmarks) {
  LandmarkTable table;
  table.landmarks = std::move(landmarks);
  const ReverseView<G> reversed(g);
  for (NodeId l : table.landmarks) {
    table.distFrom.push_back(dijkstraAll(g, l, ModeSet::all()).distances());
    table.distTo.push_back(dijkstraAll(reversed, l, ModeSet::all()).distances());
  }
  return table;
}

/// `count` distinct landmarks drawn uniformly with `seed`. A count above the
/// node count is clamped with a warning.
std::vector<NodeId> chooseLandmarks(std::size_t nodeCount, std::size_t count,
                                    std::uint64_t seed);

template <RoutingGraph G>
LandmarkTable precomputeLandmarks(const G& g,
                                  std::size_t count = kDefaultLandmarkCount,
                                  std::uint64_t seed = 1) {
  LandmarkTable table = landmarksFrom(g, chooseLandmarks(g.nodeCount(), count, seed));
  table.seed = seed;
  return table;
}

/// Largest triangle-inequality lower bound on dist(u, v) over all landmarks,
/// floored at zero. Infinite when the table proves v unreachable from u.
double landmarkHeuristic(const LandmarkTable& table, NodeId u, NodeId v);

/// Functor form of landmarkHeuristic for a fixed target.
class LandmarksToTarget {
 public:
  LandmarksToTarget(const LandmarkTable& table, NodeId target)
      : table_(&table), target_(target) {}
  double operator()(NodeId v) const { return landmarkHeuristic(*table_, v, target_); }

 private:
  const LandmarkTable* table_;
  NodeId target_;
};

}  // namespace mmroute
