#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mmroute/model/timetable.hpp"

namespace mmroute {

struct JourneyLeg {
  enum class Kind { kTrip, kFootpath };
  Kind kind;
  StopIndex from;
  StopIndex to;
  Seconds departure;
  Seconds arrival;
  TripIndex trip = kNoTrip;          // trip legs only
  std::size_t enter = 0, exit = 0;   // connection indices of a trip leg
};

struct Journey {
  std::vector<JourneyLeg> legs;
  Seconds departure = 0;
  Seconds arrival = 0;
};

struct CsaOptions {
  /// Count the target's transfer footpath into the arrival time. When false,
  /// the arrival is the moment the vehicle reaches the target.
  bool egressTransfer = true;
};

struct CsaStats {
  std::size_t scannedConnections = 0;
  std::size_t relaxedFootpaths = 0;
};

struct CsaResult {
  std::optional<Journey> journey;  // nullopt when unreachable
  CsaStats stats;

  bool reachable() const noexcept { return journey.has_value(); }
  Seconds arrival() const noexcept { return journey ? journey->arrival : kInfiniteTime; }
};

/// Earliest arrival at t when leaving s at time tau. Throws InvalidNode for
/// unknown stops.
CsaResult csaQuery(const Timetable& tt, StopIndex s, StopIndex t, Seconds tau,
                   CsaOptions options = {});

}  // namespace mmroute
