#include "mmroute/models.hpp"

#include <cstring>
#include <istream>
#include <ostream>

#include <cereal/archives/portable_binary.hpp>
#include <cereal/types/array.hpp>
#include <cereal/types/string.hpp>
#include <cereal/types/vector.hpp>
#include <spdlog/spdlog.h>

#include "mmroute/error.hpp"

namespace mmroute {

namespace {

constexpr char kMagic[8] = {'M', 'M', 'R', 'O', 'U', 'T', 'E', '\0'};
constexpr std::uint32_t kSnapshotVersion = 1;

}  // namespace

template <class Archive>
void serialize(Archive& ar, GivenTransfer& t) {
  ar(t.from, t.to);
}

std::unique_ptr<ModelBundle> buildModels(RoadGraph road, const GtfsFeed& feed,
                                         const GtfsConfig& config) {
  auto m = std::make_unique<ModelBundle>();
  m->road = std::move(road);
  for (NodeId u = 0; u < m->road.nodeCount(); ++u) m->roadIndex.insert(m->road.point(u), u);
  m->timetable = buildTimetable(feed, config);
  m->transit = buildTransitGraph(feed, config);
  for (StopIndex s = 0; s < feed.stops.size(); ++s) m->stopIndex.insert(feed.stops[s].point, s);
  m->warnings = feed.warnings;
  if (!m->road.empty()) {
    m->link.emplace(buildLinkGraph(m->road, m->transit, m->roadIndex));
    m->stopRoadNode = linkStops(feed.stops, m->roadIndex);
    m->router.emplace(m->road, m->roadIndex, m->timetable, m->stopIndex, m->stopRoadNode);
  } else if (!feed.stops.empty()) {
    throw ConfigError("cannot link stops to an empty road graph");
  }
  return m;
}

std::unique_ptr<ModelBundle> loadModels(const std::filesystem::path& osm,
                                        const std::optional<std::filesystem::path>& gtfs,
                                        const GtfsConfig& gtfsConfig,
                                        const OsmOptions& osmOptions) {
  OsmResult roads = parseOsmFile(osm, osmOptions);
  spdlog::info("road graph: {} nodes, {} edges from {} ways", roads.graph.nodeCount(),
               roads.graph.edgeCount(), roads.keptWays);
  GtfsFeed feed;
  if (gtfs) {
    feed = parseGtfs(*gtfs, gtfsConfig);
    spdlog::info("feed: {} stops, {} trips", feed.stops.size(), feed.trips.size());
  }
  for (const auto& w : roads.warnings) spdlog::debug("osm: {}", w);
  for (const auto& w : feed.warnings) spdlog::debug("gtfs: {}", w);
  auto models = buildModels(std::move(roads.graph), feed, gtfsConfig);
  models->warnings.insert(models->warnings.begin(), roads.warnings.begin(),
                          roads.warnings.end());
  return models;
}

void writeSnapshot(std::ostream& out, const RoadGraph& road, const GtfsFeed& feed) {
  out.write(kMagic, sizeof kMagic);
  cereal::PortableBinaryOutputArchive ar(out);
  ar(kSnapshotVersion, road, feed.stops, feed.trips, feed.schedules, feed.transfers);
}

std::pair<RoadGraph, GtfsFeed> readSnapshot(std::istream& in) {
  char magic[sizeof kMagic] = {};
  in.read(magic, sizeof magic);
  if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0) {
    throw ParseError("not a model snapshot");
  }
  try {
    cereal::PortableBinaryInputArchive ar(in);
    std::uint32_t version = 0;
    ar(version);
    if (version != kSnapshotVersion) {
      throw ParseError("unsupported snapshot version " + std::to_string(version));
    }
    std::pair<RoadGraph, GtfsFeed> result;
    GtfsFeed& feed = result.second;
    ar(result.first, feed.stops, feed.trips, feed.schedules, feed.transfers);
    return result;
  } catch (const cereal::Exception& e) {
    throw ParseError(std::string("truncated snapshot: ") + e.what());
  }
}

}  // namespace mmroute
