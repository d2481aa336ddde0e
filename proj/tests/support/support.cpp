#include "support.hpp"

#include <algorithm>
#include <numbers>

#include "mmroute/geo_index.hpp"

namespace mmroute::testing {

std::filesystem::path dataDir() { return MMROUTE_TEST_DATA_DIR; }

double haversineMeters(const GeoPoint& a, const GeoPoint& b) {
  const double dLat = b.lat() - a.lat();
  const double dLng = b.lng() - a.lng();
  const double h = std::pow(std::sin(dLat / 2), 2) +
                   std::cos(a.lat()) * std::cos(b.lat()) * std::pow(std::sin(dLng / 2), 2);
  return 2.0 * kEarthRadiusMeters * std::asin(std::min(1.0, std::sqrt(h)));
}

GeoPoint randomPoint(Rng& rng, double lat0, double lng0, double spanDeg) {
  std::uniform_real_distribution<double> u(0.0, spanDeg);
  return GeoPoint::fromDegrees(lat0 + u(rng), lng0 + u(rng));
}

namespace {

ModeSpeeds unitSpeeds() {
  ModeSpeeds speeds{};
  for (TransportMode m : ModeSet::road().modes()) {
    speeds[static_cast<std::size_t>(m)] = kUnitSpeedKmh;
  }
  return speeds;
}

}  // namespace

RoadGraph randomDigraph(Rng& rng, std::size_t n, std::size_t m, int minWeight,
                        int maxWeight) {
  RoadGraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) {
    b.addNode(static_cast<std::int64_t>(i), randomPoint(rng, 48.0, 8.0, 0.01));
  }
  std::uniform_int_distribution<NodeId> node(0, static_cast<NodeId>(n - 1));
  std::uniform_int_distribution<int> weight(minWeight, maxWeight);
  for (std::size_t i = 0; i < m; ++i) {
    const NodeId u = node(rng);
    const NodeId v = node(rng);
    if (u == v) continue;
    b.addEdge({u, v, static_cast<double>(weight(rng)), ModeSet::road(), unitSpeeds()});
  }
  return std::move(b).build();
}

RoadGraph randomGeometricGraph(Rng& rng, std::size_t n, std::size_t degree) {
  const double span = 0.002 * std::sqrt(static_cast<double>(n));
  RoadGraphBuilder b;
  GeoIndex index;
  for (std::size_t i = 0; i < n; ++i) {
    const GeoPoint p = randomPoint(rng, 48.0, 8.0, span);
    const NodeId u = b.addNode(static_cast<std::int64_t>(i), p);
    index.insert(p, u);
  }
  std::uniform_real_distribution<double> slack(1.01, 1.3);
  std::vector<std::pair<NodeId, NodeId>> joined;
  for (NodeId u = 0; u < n; ++u) {
    for (const GeoIndex::Hit& hit : index.kNearest(b.point(u), degree + 1)) {
      if (hit.id == u) continue;
      joined.emplace_back(std::min(u, hit.id), std::max(u, hit.id));
    }
  }
  std::sort(joined.begin(), joined.end());
  joined.erase(std::unique(joined.begin(), joined.end()), joined.end());
  for (auto [u, v] : joined) {
    const double length =
        std::ceil(asTheCrowFlies(b.point(u), b.point(v)) * slack(rng));
    b.addEdge({u, v, length, ModeSet::road(), unitSpeeds()});
    b.addEdge({v, u, length, ModeSet::road(), unitSpeeds()});
  }
  return std::move(b).build();
}

double admissibleTopSpeed(const RoadGraph& g, double margin) {
  double ratio = 0.0;  // meters per second of cost
  for (EdgeId e = 0; e < g.edgeCount(); ++e) {
    const auto w = g.weight(e, ModeSet::all());
    if (!w || *w == 0.0) continue;
    ratio = std::max(ratio, asTheCrowFlies(g.point(g.source(e)), g.point(g.target(e))) / *w);
  }
  return std::max({ratio * 3.6, g.maxSpeedKmh(), kUnitSpeedKmh}) * margin;
}

WeightedDigraph toWeightedDigraph(const RoadGraph& g, ModeSet allowed) {
  std::vector<WeightedDigraph::Edge> edges;
  for (EdgeId e = 0; e < g.edgeCount(); ++e) {
    if (const auto w = g.weight(e, allowed)) edges.push_back({g.source(e), g.target(e), *w});
  }
  return WeightedDigraph(g.nodeCount(), std::move(edges));
}

std::vector<Stop> randomStops(Rng& rng, std::size_t n, double spanMeters) {
  const double spanDeg = spanMeters / 111'000.0;
  std::vector<Stop> stops;
  for (std::size_t i = 0; i < n; ++i) {
    stops.push_back({"s" + std::to_string(i), "Stop " + std::to_string(i),
                     randomPoint(rng, 48.0, 8.0, spanDeg)});
  }
  return stops;
}

GtfsFeed randomFeed(Rng& rng, std::size_t stopCount, std::size_t tripCount) {
  GtfsFeed feed;
  for (std::size_t i = 0; i < stopCount; ++i) {
    // 0.1 degree of latitude apart: far beyond any footpath radius.
    feed.stops.push_back({"s" + std::to_string(i), "Stop " + std::to_string(i),
                          GeoPoint::fromDegrees(47.0 + 0.1 * static_cast<double>(i), 8.0)});
  }
  std::uniform_int_distribution<std::size_t> stop(0, stopCount - 1);
  std::uniform_int_distribution<std::size_t> length(2, std::max<std::size_t>(2, stopCount));
  std::uniform_int_distribution<Seconds> start(6 * 3600, 10 * 3600);
  std::uniform_int_distribution<Seconds> ride(1, 30);
  std::uniform_int_distribution<Seconds> dwell(0, 5);
  for (std::size_t t = 0; t < tripCount; ++t) {
    feed.trips.push_back({"t" + std::to_string(t), "Line " + std::to_string(t)});
    TripSchedule schedule;
    Seconds clock = start(rng) / 60 * 60;
    StopIndex previous = kNoStop;
    const std::size_t events = length(rng);
    while (schedule.events.size() < events) {
      const auto s = static_cast<StopIndex>(stop(rng));
      if (s == previous) continue;
      const Seconds arrival = clock;
      const Seconds departure = arrival + 60 * dwell(rng);
      schedule.events.push_back({s, arrival, departure});
      clock = departure + 60 * ride(rng);
      previous = s;
    }
    feed.schedules.push_back(std::move(schedule));
  }
  return feed;
}

}  // namespace mmroute::testing
