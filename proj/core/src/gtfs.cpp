#include "mmroute/ingest/gtfs.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include <fmt/format.h>

#include "mmroute/error.hpp"
#include "mmroute/geo_index.hpp"
#include "mmroute/ingest/csv.hpp"

namespace mmroute {

namespace {

template <class T>
std::optional<T> parseNumber(std::string_view text) {
  T v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return v;
}

class Table {
 public:
  Table(const std::filesystem::path& dir, std::string name, bool required,
        std::vector<std::string>& warnings)
      : name_(std::move(name)), warnings_(&warnings) {
    in_.open(dir / name_, std::ios::binary);
    if (!in_) {
      if (required) throw ConfigError("GTFS table " + name_ + " is missing in " + dir.string());
      return;
    }
    reader_.emplace(in_);
  }

  bool present() const { return reader_.has_value(); }

  std::size_t column(std::string_view name, bool required = true) {
    const auto c = reader_->column(name);
    if (!c && required) {
      throw ParseError(fmt::format("missing column {}", name), name_);
    }
    return c.value_or(static_cast<std::size_t>(-1));
  }

  bool next() { return reader_ && reader_->next(row_); }

  const std::string& at(std::size_t column) const {
    static const std::string empty;
    return column < row_.size() ? row_[column] : empty;
  }

  void warn(const std::string& message) {
    warnings_->push_back(fmt::format("{}:{}: {}", name_, reader_->line(), message));
  }

 private:
  std::string name_;
  std::vector<std::string>* warnings_;
  std::ifstream in_;
  std::optional<CsvReader> reader_;
  std::vector<std::string> row_;
};

struct Calendar {
  std::array<bool, 7> days{};  // monday first
  std::chrono::year_month_day start, end;
};

bool runsOn(const Calendar& c, std::chrono::year_month_day date) {
  if (date < c.start || c.end < date) return false;
  const unsigned weekday = std::chrono::weekday(std::chrono::sys_days(date)).iso_encoding();
  return c.days[weekday - 1];
}

struct StopTimeRow {
  std::uint32_t sequence;
  StopEvent event;
};

}  // namespace

std::optional<Seconds> parseGtfsTime(std::string_view text) {
  const auto first = text.find(':');
  if (first == std::string_view::npos) return std::nullopt;
  const auto second = text.find(':', first + 1);
  if (second == std::string_view::npos) return std::nullopt;
  const std::string_view h = text.substr(0, first);
  const std::string_view m = text.substr(first + 1, second - first - 1);
  const std::string_view s = text.substr(second + 1);
  if (h.empty() || h.size() > 3 || m.size() != 2 || s.size() != 2) return std::nullopt;
  const auto hv = parseNumber<int>(h), mv = parseNumber<int>(m), sv = parseNumber<int>(s);
  if (!hv || !mv || !sv || *mv > 59 || *sv > 59 || *hv < 0) return std::nullopt;
  return *hv * 3600 + *mv * 60 + *sv;
}

std::optional<std::chrono::year_month_day> parseDate(std::string_view text) {
  std::string digits;
  for (char c : text) {
    if (c != '-') digits.push_back(c);
  }
  if (digits.size() != 8 || (text.size() != 8 && text.size() != 10)) return std::nullopt;
  const auto y = parseNumber<int>(std::string_view(digits).substr(0, 4));
  const auto m = parseNumber<unsigned>(std::string_view(digits).substr(4, 2));
  const auto d = parseNumber<unsigned>(std::string_view(digits).substr(6, 2));
  if (!y || !m || !d) return std::nullopt;
  const std::chrono::year_month_day date{std::chrono::year(*y), std::chrono::month(*m),
                                         std::chrono::day(*d)};
  if (!date.ok()) return std::nullopt;
  return date;
}

GtfsFeed parseGtfs(const std::filesystem::path& dir, const GtfsConfig& config) {
  GtfsFeed feed;
  auto& warnings = feed.warnings;
  if (!std::filesystem::is_directory(dir)) {
    throw ConfigError("GTFS directory " + dir.string() + " does not exist");
  }
  Table agency(dir, "agency.txt", true, warnings);

  std::unordered_map<std::string, std::string> routeNames;
  {
    Table routes(dir, "routes.txt", true, warnings);
    const auto id = routes.column("route_id");
    const auto shortName = routes.column("route_short_name", false);
    const auto longName = routes.column("route_long_name", false);
    while (routes.next()) {
      const std::string& name =
          routes.at(shortName).empty() ? routes.at(longName) : routes.at(shortName);
      routeNames.emplace(routes.at(id), name);
    }
  }

  std::unordered_map<std::string, bool> serviceActive;
  {
    Table calendar(dir, "calendar.txt", true, warnings);
    const auto id = calendar.column("service_id");
    const std::array<const char*, 7> dayNames{"monday", "tuesday", "wednesday", "thursday",
                                              "friday", "saturday", "sunday"};
    std::array<std::size_t, 7> dayColumns{};
    for (std::size_t i = 0; i < 7; ++i) dayColumns[i] = calendar.column(dayNames[i]);
    const auto start = calendar.column("start_date");
    const auto end = calendar.column("end_date");
    while (calendar.next()) {
      Calendar c;
      bool valid = true;
      for (std::size_t i = 0; i < 7; ++i) {
        const std::string& flag = calendar.at(dayColumns[i]);
        valid = valid && (flag == "0" || flag == "1");
        c.days[i] = flag == "1";
      }
      const auto s = parseDate(calendar.at(start));
      const auto e = parseDate(calendar.at(end));
      if (!valid || !s || !e) {
        calendar.warn("malformed calendar row for service " + calendar.at(id) + " dropped");
        continue;
      }
      c.start = *s;
      c.end = *e;
      serviceActive[calendar.at(id)] =
          !config.serviceDate || runsOn(c, *config.serviceDate);
    }
  }

  std::unordered_map<std::string, TripIndex> tripIndex;
  std::unordered_set<std::string> declaredTrips;
  {
    Table trips(dir, "trips.txt", true, warnings);
    const auto route = trips.column("route_id");
    const auto service = trips.column("service_id");
    const auto id = trips.column("trip_id");
    const auto headsign = trips.column("trip_headsign", false);
    const auto shortName = trips.column("trip_short_name", false);
    while (trips.next()) {
      declaredTrips.insert(trips.at(id));
      if (config.serviceDate) {
        const auto it = serviceActive.find(trips.at(service));
        if (it == serviceActive.end()) {
          trips.warn("trip " + trips.at(id) + " has an unknown service and is dropped");
          continue;
        }
        if (!it->second) continue;
      }
      if (tripIndex.contains(trips.at(id))) {
        trips.warn("duplicate trip " + trips.at(id) + " dropped");
        continue;
      }
      std::string name = trips.at(shortName);
      if (const auto r = routeNames.find(trips.at(route));
          name.empty() && r != routeNames.end()) {
        name = r->second;
      }
      if (name.empty()) name = trips.at(headsign);
      tripIndex.emplace(trips.at(id), static_cast<TripIndex>(feed.trips.size()));
      feed.trips.push_back(Trip{trips.at(id), std::move(name)});
    }
  }

  std::unordered_map<std::string, StopIndex> stopIndex;
  {
    Table stops(dir, "stops.txt", true, warnings);
    const auto id = stops.column("stop_id");
    const auto name = stops.column("stop_name", false);
    const auto lat = stops.column("stop_lat");
    const auto lon = stops.column("stop_lon");
    while (stops.next()) {
      const auto la = parseNumber<double>(stops.at(lat));
      const auto lo = parseNumber<double>(stops.at(lon));
      if (!la || !lo || !GeoPoint::isValidRadians(degreesToRadians(*la),
                                                   degreesToRadians(*lo))) {
        stops.warn("stop " + stops.at(id) + " has no valid coordinate and is dropped");
        continue;
      }
      if (stopIndex.contains(stops.at(id))) {
        stops.warn("duplicate stop " + stops.at(id) + " dropped");
        continue;
      }
      stopIndex.emplace(stops.at(id), static_cast<StopIndex>(feed.stops.size()));
      feed.stops.push_back(
          Stop{stops.at(id), stops.at(name), GeoPoint::fromDegrees(*la, *lo)});
    }
  }

  std::vector<std::vector<StopTimeRow>> rows(feed.trips.size());
  {
    Table times(dir, "stop_times.txt", true, warnings);
    const auto trip = times.column("trip_id");
    const auto arrival = times.column("arrival_time");
    const auto departure = times.column("departure_time");
    const auto stop = times.column("stop_id");
    const auto sequence = times.column("stop_sequence");
    while (times.next()) {
      const auto t = tripIndex.find(times.at(trip));
      if (t == tripIndex.end()) {
        if (!declaredTrips.contains(times.at(trip))) {
          times.warn("stop time of unknown trip " + times.at(trip) + " dropped");
        }
        continue;
      }
      const auto s = stopIndex.find(times.at(stop));
      if (s == stopIndex.end()) {
        times.warn("stop time at unknown stop " + times.at(stop) + " dropped");
        continue;
      }
      auto arr = parseGtfsTime(times.at(arrival));
      auto dep = parseGtfsTime(times.at(departure));
      const bool garbled = (!arr && !times.at(arrival).empty()) ||
                           (!dep && !times.at(departure).empty());
      if (!arr) arr = dep;
      if (!dep) dep = arr;
      const auto seq = parseNumber<std::uint32_t>(times.at(sequence));
      if (garbled || !arr || !seq) {
        times.warn("stop time with unparseable time or sequence dropped");
        continue;
      }
      rows[t->second].push_back({*seq, StopEvent{s->second, *arr, *dep}});
    }
  }

  std::vector<bool> keepTrip(feed.trips.size(), true);
  feed.schedules.resize(feed.trips.size());
  for (TripIndex t = 0; t < feed.trips.size(); ++t) {
    auto& trip = rows[t];
    std::stable_sort(trip.begin(), trip.end(),
                     [](const StopTimeRow& a, const StopTimeRow& b) {
                       return a.sequence < b.sequence;
                     });
    auto& events = feed.schedules[t].events;
    for (const StopTimeRow& row : trip) {
      if (!events.empty() && events.back().stop == row.event.stop) {
        warnings.push_back(fmt::format("trip {} visits stop {} twice in a row; merged",
                                       feed.trips[t].id, feed.stops[row.event.stop].id));
        events.back().departure = row.event.departure;
        continue;
      }
      events.push_back(row.event);
    }
    for (std::size_t i = 0; i < events.size(); ++i) {
      if (events[i].arrival > events[i].departure ||
          (i + 1 < events.size() && events[i].departure > events[i + 1].arrival)) {
        warnings.push_back(
            fmt::format("trip {} has decreasing times and is dropped", feed.trips[t].id));
        keepTrip[t] = false;
        break;
      }
    }
  }
  if (std::find(keepTrip.begin(), keepTrip.end(), false) != keepTrip.end()) {
    std::vector<Trip> trips;
    std::vector<TripSchedule> schedules;
    for (TripIndex t = 0; t < feed.trips.size(); ++t) {
      if (!keepTrip[t]) continue;
      trips.push_back(std::move(feed.trips[t]));
      schedules.push_back(std::move(feed.schedules[t]));
    }
    feed.trips = std::move(trips);
    feed.schedules = std::move(schedules);
  }

  Table transfers(dir, "transfers.txt", false, warnings);
  if (transfers.present()) {
    const auto from = transfers.column("from_stop_id");
    const auto to = transfers.column("to_stop_id");
    while (transfers.next()) {
      const auto a = stopIndex.find(transfers.at(from));
      const auto b = stopIndex.find(transfers.at(to));
      if (a == stopIndex.end() || b == stopIndex.end()) {
        transfers.warn("transfer between unknown stops " + transfers.at(from) + " and " +
                       transfers.at(to) + " dropped");
        continue;
      }
      feed.transfers.push_back(GivenTransfer{a->second, b->second});
    }
  }
  return feed;
}

std::vector<Footpath> generateFootpaths(const std::vector<Stop>& stops,
                                        const std::vector<GivenTransfer>& given,
                                        double radius, Seconds buffer,
                                        double walkSpeedKmh, std::size_t maxFootpaths) {
  if (!(radius > 0.0)) throw InvalidArgument("footpath radius must be positive");
  if (buffer < 0) throw InvalidArgument("transfer buffer must be non-negative");
  if (!(walkSpeedKmh > 0.0)) throw InvalidArgument("walking speed must be positive");

  std::vector<StopIndex> parent(stops.size());
  std::iota(parent.begin(), parent.end(), StopIndex{0});
  auto find = [&](StopIndex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](StopIndex a, StopIndex b) { parent[find(a)] = find(b); };

  GeoIndex index;
  for (StopIndex s = 0; s < stops.size(); ++s) index.insert(stops[s].point, s);
  for (StopIndex s = 0; s < stops.size(); ++s) {
    for (const GeoIndex::Hit& hit : index.withinRadius(stops[s].point, radius)) {
      unite(s, hit.id);
    }
  }
  for (const GivenTransfer& t : given) unite(t.from, t.to);

  std::vector<std::vector<StopIndex>> components(stops.size());
  for (StopIndex s = 0; s < stops.size(); ++s) components[find(s)].push_back(s);
  std::size_t total = stops.size();
  for (const auto& c : components) total += c.size() * (c.size() - (c.empty() ? 0 : 1));
  if (total > maxFootpaths) {
    throw ConfigError(fmt::format(
        "footpath generation would create {} footpaths (limit {}); reduce the radius",
        total, maxFootpaths));
  }

  const double metersPerSecond = walkSpeedKmh / 3.6;
  std::vector<Footpath> out;
  out.reserve(total);
  for (StopIndex s = 0; s < stops.size(); ++s) out.push_back({s, buffer, s});
  for (const auto& c : components) {
    for (StopIndex a : c) {
      for (StopIndex b : c) {
        if (a == b) continue;
        const double walk = std::ceil(asTheCrowFlies(stops[a].point, stops[b].point) /
                                      metersPerSecond);
        out.push_back({a, std::max(buffer, static_cast<Seconds>(walk)), b});
      }
    }
  }
  return out;
}

Timetable buildTimetable(const GtfsFeed& feed, const GtfsConfig& config) {
  std::vector<Connection> connections;
  for (TripIndex t = 0; t < feed.schedules.size(); ++t) {
    const auto& events = feed.schedules[t].events;
    for (std::size_t i = 0; i + 1 < events.size(); ++i) {
      connections.push_back({events[i].stop, events[i + 1].stop, events[i].departure,
                             events[i + 1].arrival, t});
    }
  }
  return Timetable(feed.stops, feed.trips, std::move(connections),
                   generateFootpaths(feed.stops, feed.transfers, config.footpathRadius,
                                     config.transferBuffer, config.walkSpeedKmh,
                                     config.maxFootpaths));
}

TransitGraph buildTransitGraph(const GtfsFeed& feed, const GtfsConfig& config) {
  return TransitGraph(feed.stops, feed.trips, feed.schedules,
                      TransitGraph::Options{config.transferBuffer, false});
}

}  // namespace mmroute
