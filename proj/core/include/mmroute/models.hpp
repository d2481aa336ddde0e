#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mmroute/geo_index.hpp"
#include "mmroute/ingest/gtfs.hpp"
#include "mmroute/ingest/osm.hpp"
#include "mmroute/model/link_graph.hpp"
#include "mmroute/model/road_graph.hpp"
#include "mmroute/model/timetable.hpp"
#include "mmroute/model/transit_graph.hpp"
#include "mmroute/routing/anr.hpp"

namespace mmroute {

/// Every model a query service needs, built once and then read-only. Not
/// movable: the router and link graph point into the other members.
struct ModelBundle {
  RoadGraph road;
  GeoIndex roadIndex;  // payload: road node index
  Timetable timetable;
  TransitGraph transit;
  GeoIndex stopIndex;  // payload: stop index
  std::vector<NodeId> stopRoadNode;
  std::optional<LinkGraph> link;
  std::optional<AnrRouter> router;
  std::vector<std::string> warnings;

  ModelBundle() = default;
  ModelBundle(const ModelBundle&) = delete;
  ModelBundle& operator=(const ModelBundle&) = delete;
};

/// Indexes the road graph, builds timetable and transit graph from `feed`
/// and links stops to road nodes. Throws ConfigError when stops exist but
/// the road graph is empty.
std::unique_ptr<ModelBundle> buildModels(RoadGraph road, const GtfsFeed& feed,
                                         const GtfsConfig& config = {});

std::unique_ptr<ModelBundle> loadModels(const std::filesystem::path& osm,
                                        const std::optional<std::filesystem::path>& gtfs,
                                        const GtfsConfig& gtfsConfig = {},
                                        const OsmOptions& osmOptions = {});

/// Versioned binary snapshot of the road graph and the parsed feed.
void writeSnapshot(std::ostream& out, const RoadGraph& road, const GtfsFeed& feed);
/// Throws ParseError on a foreign or incompatible snapshot.
std::pair<RoadGraph, GtfsFeed> readSnapshot(std::istream& in);

}  // namespace mmroute
