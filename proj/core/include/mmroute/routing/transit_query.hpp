#pragma once

#include <optional>

#include "mmroute/model/transit_graph.hpp"
#include "mmroute/routing/path.hpp"

namespace mmroute {

struct TransitGraphResult {
  /// Earliest arrival event at the target stop plus the transfer duration,
  /// matching the connection scan with self-loop footpaths only.
  std::optional<Seconds> arrival;
  SearchStats stats;
};

/// Earliest arrival from stop s to stop t leaving at tau, by graph search on
/// the time-expanded graph. Every departure at s no earlier than tau plus the
/// transfer duration is a source.
TransitGraphResult transitGraphEarliestArrival(const TransitGraph& g, StopIndex s,
                                               StopIndex t, Seconds tau);

}  // namespace mmroute
