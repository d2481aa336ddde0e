#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mmroute/geo_index.hpp"
#include "mmroute/model/road_graph.hpp"
#include "mmroute/model/timetable.hpp"
#include "mmroute/routing/csa.hpp"
#include "mmroute/routing/path.hpp"

namespace mmroute {

inline constexpr std::size_t kDefaultAccessNodes = 3;

/// A road node or a coordinate resolved to its nearest road node.
using Location = std::variant<NodeId, GeoPoint>;

struct AnrQuery {
  Location from;
  Location to;
  Seconds depTime = 0;
  ModeSet modes = ModeSet::all();
  std::size_t k = kDefaultAccessNodes;
};

struct MultiModalLeg {
  TransportMode mode;
  std::vector<GeoPoint> geometry;
  double departure;  // seconds of the service day
  double arrival;
  std::string name;  // road or trip name, may be empty
};

struct MultiModalJourney {
  std::vector<MultiModalLeg> legs;
  double departure = 0.0;
  double arrival = 0.0;
  double totalCost = 0.0;  // arrival - departure
};

/// Sub-queries issued by one ANR query.
struct AnrCounters {
  std::size_t nearestNeighborQueries = 0;
  std::size_t roadSearches = 0;
  std::size_t csaQueries = 0;
  std::size_t roadOnlySearches = 0;
  std::size_t settledNodes = 0;        // over all road searches
  std::size_t scannedConnections = 0;  // over all connection scans
};

struct AnrResult {
  std::optional<MultiModalJourney> best;      // nullopt when unreachable
  std::optional<MultiModalJourney> roadOnly;  // the road-only candidate
  AnrCounters counters;
};

/// Up to k stops nearest to p, ascending by distance; empty for an empty index.
std::vector<StopIndex> selectAccessNodes(const GeoIndex& stopIndex, const GeoPoint& p,
                                         std::size_t k);

/// Access-node routing: road legs to and from the k nearest stops of both
/// ends joined by connection scans, compared against a pure road route.
/// All referenced models must outlive the router.
class AnrRouter {
 public:
  AnrRouter(const RoadGraph& road, const GeoIndex& roadIndex, const Timetable& timetable,
            const GeoIndex& stopIndex, std::vector<NodeId> stopRoadNode);

  /// Throws InvalidArgument for k = 0 or empty modes and InvalidNode when an
  /// endpoint cannot be resolved to a road node.
  AnrResult query(const AnrQuery& q) const;

  NodeId resolve(const Location& location) const;
  const RoadGraph& road() const noexcept { return *road_; }
  const Timetable& timetable() const noexcept { return *timetable_; }
  NodeId stopRoadNode(StopIndex s) const { return stopRoadNode_.at(s); }

  /// Legs of a road path departing at `departure`, one per run of edges
  /// travelled with the same mode.
  std::vector<MultiModalLeg> roadLegs(const Path& path, ModeSet modes,
                                      double departure) const;
  /// Legs of a connection scan journey.
  std::vector<MultiModalLeg> transitLegs(const Journey& journey) const;

 private:
  const RoadGraph* road_;
  const GeoIndex* roadIndex_;
  const Timetable* timetable_;
  const GeoIndex* stopIndex_;
  std::vector<NodeId> stopRoadNode_;
  std::vector<std::vector<std::size_t>> tripConnections_;  // by trip, in travel order
};

}  // namespace mmroute
