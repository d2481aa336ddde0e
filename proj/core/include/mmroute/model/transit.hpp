#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "mmroute/geo.hpp"

namespace mmroute {

/// Seconds since midnight of the service day. May exceed 86 400 for trips
/// running past midnight.
using Seconds = std::int32_t;
inline constexpr Seconds kInfiniteTime = std::numeric_limits<Seconds>::max();

using StopIndex = std::uint32_t;
using TripIndex = std::uint32_t;
inline constexpr StopIndex kNoStop = std::numeric_limits<StopIndex>::max();
inline constexpr TripIndex kNoTrip = std::numeric_limits<TripIndex>::max();

struct Stop {
  std::string id;
  std::string name;
  GeoPoint point;

  template <class Archive>
  void serialize(Archive& ar) {
    ar(id, name, point);
  }
};

struct Trip {
  std::string id;
  std::string name;  // route short name or headsign, may be empty

  template <class Archive>
  void serialize(Archive& ar) {
    ar(id, name);
  }
};

/// Formats seconds as H:MM:SS.
std::string formatTime(Seconds t);

}  // namespace mmroute
