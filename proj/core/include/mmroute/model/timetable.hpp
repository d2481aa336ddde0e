#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mmroute/model/transit.hpp"

namespace mmroute {

struct Connection {
  StopIndex departureStop;
  StopIndex arrivalStop;
  Seconds departureTime;
  Seconds arrivalTime;
  TripIndex trip;

  friend bool operator==(const Connection&, const Connection&) = default;

  template <class Archive>
  void serialize(Archive& ar) {
    ar(departureStop, arrivalStop, departureTime, arrivalTime, trip);
  }
};

struct Footpath {
  StopIndex from;
  Seconds duration;
  StopIndex to;

  friend bool operator==(const Footpath&, const Footpath&) = default;

  template <class Archive>
  void serialize(Archive& ar) {
    ar(from, duration, to);
  }
};

/// Stops, trips, connections sorted by departure time, and footpaths.
class Timetable {
 public:
  Timetable() = default;
  /// Sorts connections stably by departure time. Throws InvalidArgument when a
  /// connection or footpath references an unknown stop or trip.
  Timetable(std::vector<Stop> stops, std::vector<Trip> trips,
            std::vector<Connection> connections, std::vector<Footpath> footpaths);

  const std::vector<Stop>& stops() const noexcept { return stops_; }
  const std::vector<Trip>& trips() const noexcept { return trips_; }
  const std::vector<Connection>& connections() const noexcept {
    return connections_;
  }
  const std::vector<Footpath>& footpaths() const noexcept { return footpaths_; }
  std::span<const Footpath> footpathsFrom(StopIndex s) const;

  std::optional<StopIndex> findStop(std::string_view id) const;
  std::optional<TripIndex> findTrip(std::string_view id) const;

  /// Index of the first connection departing at or after `t`;
  /// connections().size() when there is none.
  std::size_t firstConnectionAtOrAfter(Seconds t) const noexcept;

  template <class Archive>
  void save(Archive& ar) const {
    ar(stops_, trips_, connections_, footpaths_);
  }
  template <class Archive>
  void load(Archive& ar) {
    std::vector<Stop> stops;
    std::vector<Trip> trips;
    std::vector<Connection> connections;
    std::vector<Footpath> footpaths;
    ar(stops, trips, connections, footpaths);
    *this = Timetable(std::move(stops), std::move(trips), std::move(connections),
                      std::move(footpaths));
  }

 private:
  std::vector<Stop> stops_;
  std::vector<Trip> trips_;
  std::vector<Connection> connections_;
  std::vector<Footpath> footpaths_;  // grouped by `from`
  std::vector<std::uint32_t> footpathOffsets_;
  std::unordered_map<std::string, StopIndex> stopById_;
  std::unordered_map<std::string, TripIndex> tripById_;
};

struct TimetableViolation {
  enum class Kind {
    kConnection,  // departs after it arrives, or stays at one stop
    kUnsorted,
    kMissingSelfLoop,
    kNotClosed,
    kTriangle,
  };
  Kind kind;
  std::string message;
};

/// Every violated footpath or connection property, each naming the offending
/// tuples. Empty when the timetable is consistent.
std::vector<TimetableViolation> validateTimetable(const Timetable& tt);

}  // namespace mmroute
