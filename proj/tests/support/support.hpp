#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <random>
#include <vector>

#include "mmroute/geo.hpp"
#include "mmroute/ingest/gtfs.hpp"
#include "mmroute/model/graph.hpp"
#include "mmroute/model/road_graph.hpp"
#include "mmroute/model/timetable.hpp"
#include "mmroute/model/weighted_digraph.hpp"

namespace mmroute::testing {

using Rng = std::mt19937_64;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

std::filesystem::path dataDir();

/// Great-circle distance in meters, used as an independent reference.
double haversineMeters(const GeoPoint& a, const GeoPoint& b);

/// Distances from s by repeated edge relaxation until nothing changes.
template <RoutingGraph G>
std::vector<double> bellmanFord(const G& g, NodeId s, ModeSet allowed = ModeSet::all()) {
  std::vector<double> dist(g.nodeCount(), kInf);
  dist[s] = 0.0;
  for (std::size_t round = 0; round < g.nodeCount(); ++round) {
    bool changed = false;
    for (EdgeId e = 0; e < g.edgeCount(); ++e) {
      const auto w = g.weight(e, allowed);
      if (!w || dist[g.source(e)] == kInf) continue;
      const double candidate = dist[g.source(e)] + *w;
      if (candidate < dist[g.target(e)]) {
        dist[g.target(e)] = candidate;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return dist;
}

struct Point2 {
  double x;
  double y;
};

struct Euclid {
  double operator()(const Point2& a, const Point2& b) const noexcept {
    return std::hypot(a.x - b.x, a.y - b.y);
  }
};

/// Linear scans; points at distance zero from q are skipped, matching the
/// "other than q" convention of the cover tree.
template <class P, class M>
std::vector<double> scanSortedDistances(const std::vector<P>& points, const P& q, M metric) {
  std::vector<double> out;
  for (const P& p : points) {
    const double d = metric(q, p);
    if (d > 0.0) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class P, class M>
std::vector<std::size_t> scanWithin(const std::vector<P>& points, const P& q, double r,
                                    M metric) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double d = metric(q, points[i]);
    if (d > 0.0 && d <= r) out.push_back(i);
  }
  return out;
}

GeoPoint randomPoint(Rng& rng, double lat0, double lng0, double spanDeg);

/// Speed at which a length in meters equals its travel time in seconds.
inline constexpr double kUnitSpeedKmh = 3.6;

/// Directed graph on random coordinates inside a small box with integer
/// weights in [minWeight, maxWeight]. Every mode travels at kUnitSpeedKmh, so
/// weights are exact integers.
RoadGraph randomDigraph(Rng& rng, std::size_t n, std::size_t m, int minWeight = 1,
                        int maxWeight = 100);

/// Each node joined in both directions to its `degree` nearest neighbours.
/// Lengths are whole meters, at least 1% longer than the straight line, and
/// every mode travels at kUnitSpeedKmh.
RoadGraph randomGeometricGraph(Rng& rng, std::size_t n, std::size_t degree = 3);

/// Smallest top speed (km/h) for which the crow-flies heuristic never exceeds
/// an edge's cost, raised by `margin`.
double admissibleTopSpeed(const RoadGraph& g, double margin = 1.01);

/// Plain weighted digraph copy of a road graph under `allowed`.
WeightedDigraph toWeightedDigraph(const RoadGraph& g, ModeSet allowed = ModeSet::all());

/// Stops at random coordinates in a box `spanMeters` wide around 48N 8E.
std::vector<Stop> randomStops(Rng& rng, std::size_t n, double spanMeters);

/// Feed with stops far enough apart that only self-loop footpaths arise and
/// trips whose rides take at least one minute.
GtfsFeed randomFeed(Rng& rng, std::size_t stops, std::size_t trips);

}  // namespace mmroute::testing
