#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mmroute/model/road_graph.hpp"

namespace mmroute {

using OsmTags = std::map<std::string, std::string, std::less<>>;

/// Tag filter for ways: a way passes when it carries at least one KEEP pair
/// and no DROP pair.
struct OsmFilter {
  std::set<std::pair<std::string, std::string>> keep;
  std::set<std::pair<std::string, std::string>> drop;

  /// The built-in road filter.
  static OsmFilter defaults();
  /// Reads the `--KEEP` / `--DROP` text format with `key=value` lines and
  /// `#` comments. Throws ParseError with the offending line.
  static OsmFilter parse(std::istream& in);
  static OsmFilter load(const std::filesystem::path& file);
};

bool filterWay(const OsmTags& tags, const OsmFilter& filter);

/// Average car speed in km/h by highway tag value.
struct SpeedTable {
  std::map<std::string, double, std::less<>> kmh;

  static SpeedTable defaults();
  std::optional<double> lookup(std::string_view highway) const;
};

/// Modes allowed on a way with the given highway value.
ModeSet modesForHighway(std::string_view highway);

/// Numeric km/h value of a maxspeed tag; nullopt for anything else.
std::optional<double> parseMaxSpeed(std::string_view value);

struct OsmOptions {
  OsmFilter filter = OsmFilter::defaults();
  SpeedTable speeds = SpeedTable::defaults();
  /// Car speed for kept ways with neither a known highway value nor maxspeed.
  double fallbackSpeedKmh = 30.0;
  RoadSpeedPolicy modeSpeeds;
};

struct OsmResult {
  RoadGraph graph;
  std::size_t keptWays = 0;
  std::vector<std::string> warnings;
};

/// Builds a road graph from OSM XML. Ways are read in a first pass and nodes
/// in a second; unseekable streams are buffered in memory. Throws ParseError
/// on malformed XML.
OsmResult parseOsm(std::istream& in, const OsmOptions& options = {});
OsmResult parseOsmFile(const std::filesystem::path& file,
                       const OsmOptions& options = {});

}  // namespace mmroute
