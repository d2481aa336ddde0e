#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mmroute/model/timetable.hpp"
#include "mmroute/model/transit_graph.hpp"

namespace mmroute {

struct GtfsConfig {
  double footpathRadius = 600.0;  // meters
  Seconds transferBuffer = 300;
  double walkSpeedKmh = 5.0;
  /// Keep only trips running on this day; all trips when unset.
  std::optional<std::chrono::year_month_day> serviceDate;
  /// Upper bound on generated footpaths; exceeding it throws ConfigError.
  std::size_t maxFootpaths = 20'000'000;
};

/// Transfer pair listed by the feed. Its duration is not used.
struct GivenTransfer {
  StopIndex from;
  StopIndex to;
};

/// Parsed feed: stops, trips with their stop events in sequence order, and
/// listed transfers. trips[i] runs schedules[i].
struct GtfsFeed {
  std::vector<Stop> stops;
  std::vector<Trip> trips;
  std::vector<TripSchedule> schedules;
  std::vector<GivenTransfer> transfers;
  std::vector<std::string> warnings;
};

/// "H:MM:SS" or "HH:MM:SS"; hours may exceed 23.
std::optional<Seconds> parseGtfsTime(std::string_view text);
/// "YYYY-MM-DD" or "YYYYMMDD".
std::optional<std::chrono::year_month_day> parseDate(std::string_view text);

/// Reads agency, routes, trips, stop_times, stops and calendar (mandatory)
/// and transfers (optional) from `dir`. Throws ConfigError when a mandatory
/// table is missing; bad rows are dropped with a warning.
GtfsFeed parseGtfs(const std::filesystem::path& dir, const GtfsConfig& config = {});

/// Self-loops of `buffer` seconds for every stop, plus both directions of
/// every pair of stops in one component of the graph joining stops closer
/// than `radius` and the given transfer pairs. Walking durations are
/// max(buffer, ceil(crow-flies distance / walk speed)).
std::vector<Footpath> generateFootpaths(const std::vector<Stop>& stops,
                                        const std::vector<GivenTransfer>& given,
                                        double radius, Seconds buffer,
                                        double walkSpeedKmh,
                                        std::size_t maxFootpaths = 20'000'000);

Timetable buildTimetable(const GtfsFeed& feed, const GtfsConfig& config = {});
TransitGraph buildTransitGraph(const GtfsFeed& feed, const GtfsConfig& config = {});

}  // namespace mmroute
