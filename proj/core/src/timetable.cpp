#include "mmroute/model/timetable.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "mmroute/error.hpp"

namespace mmroute {

std::string formatTime(Seconds t) {
  const char* sign = t < 0 ? "-" : "";
  const long long v = t < 0 ? -static_cast<long long>(t) : t;
  return fmt::format("{}{}:{:02}:{:02}", sign, v / 3600, v / 60 % 60, v % 60);
}

Timetable::Timetable(std::vector<Stop> stops, std::vector<Trip> trips,
                     std::vector<Connection> connections,
                     std::vector<Footpath> footpaths)
    : stops_(std::move(stops)),
      trips_(std::move(trips)),
      connections_(std::move(connections)),
      footpaths_(std::move(footpaths)) {
  for (StopIndex s = 0; s < stops_.size(); ++s) stopById_.emplace(stops_[s].id, s);
  for (TripIndex t = 0; t < trips_.size(); ++t) tripById_.emplace(trips_[t].id, t);

  for (const Connection& c : connections_) {
    if (c.departureStop >= stops_.size() || c.arrivalStop >= stops_.size()) {
      throw InvalidNode("connection references an unknown stop");
    }
    if (c.trip >= trips_.size()) {
      throw InvalidArgument("connection references an unknown trip");
    }
  }
  std::stable_sort(connections_.begin(), connections_.end(),
                   [](const Connection& a, const Connection& b) {
                     return a.departureTime < b.departureTime;
                   });

  for (const Footpath& f : footpaths_) {
    if (f.from >= stops_.size() || f.to >= stops_.size()) {
      throw InvalidNode("footpath references an unknown stop");
    }
    if (f.duration < 0) throw InvalidArgument("negative footpath duration");
  }
  std::stable_sort(footpaths_.begin(), footpaths_.end(),
                   [](const Footpath& a, const Footpath& b) { return a.from < b.from; });
  footpathOffsets_.assign(stops_.size() + 1, 0);
  for (const Footpath& f : footpaths_) ++footpathOffsets_[f.from + 1];
  for (std::size_t i = 0; i < stops_.size(); ++i) {
    footpathOffsets_[i + 1] += footpathOffsets_[i];
  }
}

std::span<const Footpath> Timetable::footpathsFrom(StopIndex s) const {
  if (s >= stops_.size()) throw InvalidNode("unknown stop index");
  return {footpaths_.data() + footpathOffsets_[s],
          footpaths_.data() + footpathOffsets_[s + 1]};
}

std::optional<StopIndex> Timetable::findStop(std::string_view id) const {
  const auto it = stopById_.find(std::string(id));
  if (it == stopById_.end()) return std::nullopt;
  return it->second;
}

std::optional<TripIndex> Timetable::findTrip(std::string_view id) const {
  const auto it = tripById_.find(std::string(id));
  if (it == tripById_.end()) return std::nullopt;
  return it->second;
}

std::size_t Timetable::firstConnectionAtOrAfter(Seconds t) const noexcept {
  const auto it = std::partition_point(
      connections_.begin(), connections_.end(),
      [t](const Connection& c) { return c.departureTime < t; });
  return static_cast<std::size_t>(it - connections_.begin());
}

namespace {

std::string describe(const Timetable& tt, const Footpath& f) {
  return fmt::format("({}, {}, {})", tt.stops()[f.from].id, f.duration,
                     tt.stops()[f.to].id);
}

std::string describe(const Timetable& tt, const Connection& c) {
  return fmt::format("({}, {}, {}, {}, {})", tt.stops()[c.departureStop].id,
                     tt.stops()[c.arrivalStop].id, formatTime(c.departureTime),
                     formatTime(c.arrivalTime), tt.trips()[c.trip].id);
}

}  // namespace

std::vector<TimetableViolation> validateTimetable(const Timetable& tt) {
  using Kind = TimetableViolation::Kind;
  std::vector<TimetableViolation> out;
  const auto& cs = tt.connections();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Connection& c = cs[i];
    if (c.departureTime > c.arrivalTime) {
      out.push_back({Kind::kConnection,
                     "connection arrives before it departs: " + describe(tt, c)});
    }
    if (c.departureStop == c.arrivalStop) {
      out.push_back({Kind::kConnection,
                     "connection does not change stop: " + describe(tt, c)});
    }
    if (i > 0 && cs[i - 1].departureTime > c.departureTime) {
      out.push_back({Kind::kUnsorted, "connections out of order at " + describe(tt, c)});
    }
  }

  const std::size_t n = tt.stops().size();
  // Shortest stated duration per ordered stop pair.
  std::vector<std::unordered_map<StopIndex, Seconds>> best(n);
  for (const Footpath& f : tt.footpaths()) {
    auto [it, inserted] = best[f.from].emplace(f.to, f.duration);
    if (!inserted) it->second = std::min(it->second, f.duration);
  }
  for (StopIndex s = 0; s < n; ++s) {
    if (!best[s].contains(s)) {
      out.push_back({Kind::kMissingSelfLoop,
                     "stop " + tt.stops()[s].id + " has no self-loop footpath"});
    }
  }
  for (const Footpath& ab : tt.footpaths()) {
    for (const Footpath& bc : tt.footpathsFrom(ab.to)) {
      const auto it = best[ab.from].find(bc.to);
      if (it == best[ab.from].end()) {
        out.push_back({Kind::kNotClosed, "footpaths " + describe(tt, ab) + " and " +
                                             describe(tt, bc) +
                                             " have no closing footpath"});
        continue;
      }
      if (it->second > ab.duration + bc.duration) {
        out.push_back({Kind::kTriangle,
                       fmt::format("footpath ({}, {}, {}) is longer than {} + {}",
                                   tt.stops()[ab.from].id, it->second,
                                   tt.stops()[bc.to].id, describe(tt, ab),
                                   describe(tt, bc))});
      }
    }
  }
  return out;
}

}  // namespace mmroute
