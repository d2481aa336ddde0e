#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmroute/model/graph.hpp"
#include "mmroute/model/transit.hpp"

namespace mmroute {

enum class TransitEvent : std::uint8_t { kArrival, kDeparture, kTransfer };

struct TransitNode {
  Seconds time;
  TransitEvent event;
  StopIndex stop;
  TripIndex trip;  // kNoTrip for transfer nodes

  template <class Archive>
  void serialize(Archive& ar) {
    ar(time, event, stop, trip);
  }
};

enum class TransitEdgeKind : std::uint8_t {
  kRide,      // departure -> arrival at the next stop of the trip
  kStay,      // arrival -> departure of the same trip at one stop
  kAlight,    // arrival -> transfer node after the transfer duration
  kWait,      // transfer -> next transfer node at the stop
  kBoard,     // transfer -> departure
};

struct TransitEdge {
  NodeId source;
  NodeId target;
  TransitEdgeKind kind;
};

/// One stop_time row: the stop and its arrival/departure times.
struct StopEvent {
  StopIndex stop;
  Seconds arrival;
  Seconds departure;

  template <class Archive>
  void serialize(Archive& ar) {
    ar(stop, arrival, departure);
  }
};

/// A trip's stop events in travel order.
struct TripSchedule {
  std::vector<StopEvent> events;

  template <class Archive>
  void serialize(Archive& ar) {
    ar(events);
  }
};

/// Time-expanded event graph with arrival, departure and transfer nodes.
/// Edge weights are target time minus source time.
class TransitGraph {
 public:
  struct Options {
    Seconds transferDuration = 300;
    /// Give a trip's first stop an arrival node (at the departure time) so
    /// that every trip can be entered through an arrival node.
    bool leadingArrivals = false;
  };

  TransitGraph() = default;
  /// Throws InvalidArgument when a trip's times decrease, when stops or trip
  /// indices are out of range, or on a negative transfer duration.
  TransitGraph(std::vector<Stop> stops, std::vector<Trip> trips,
               const std::vector<TripSchedule>& schedules, Options options);

  std::size_t nodeCount() const noexcept { return nodes_.size(); }
  std::size_t edgeCount() const noexcept { return edges_.size(); }
  std::span<const Arc> arcsFrom(NodeId u) const { return adjacency_.out(u); }
  std::span<const Arc> arcsInto(NodeId u) const { return adjacency_.in(u); }
  NodeId source(EdgeId e) const { return edges_[e].source; }
  NodeId target(EdgeId e) const { return edges_[e].target; }
  /// Usable only when trams are allowed.
  std::optional<double> weight(EdgeId e, ModeSet allowed) const noexcept {
    if (!allowed.contains(TransportMode::kTram)) return std::nullopt;
    return static_cast<double>(timeDelta(e));
  }
  Seconds timeDelta(EdgeId e) const noexcept {
    return nodes_[edges_[e].target].time - nodes_[edges_[e].source].time;
  }

  const TransitNode& node(NodeId u) const { return nodes_.at(u); }
  const TransitEdge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<TransitNode>& nodes() const noexcept { return nodes_; }
  const std::vector<TransitEdge>& edges() const noexcept { return edges_; }
  const GeoPoint& point(NodeId u) const { return stops_[nodes_[u].stop].point; }

  const std::vector<Stop>& stops() const noexcept { return stops_; }
  const std::vector<Trip>& trips() const noexcept { return trips_; }
  const Options& options() const noexcept { return options_; }
  const std::vector<TripSchedule>& schedules() const noexcept {
    return schedules_;
  }
  /// The same schedule rebuilt under different options.
  TransitGraph rebuilt(Options options) const {
    return TransitGraph(stops_, trips_, schedules_, options);
  }

  /// Arrival, departure and transfer nodes of a stop, each sorted by time.
  std::span<const NodeId> arrivalsAt(StopIndex s) const;
  std::span<const NodeId> departuresAt(StopIndex s) const;
  std::span<const NodeId> transfersAt(StopIndex s) const;

  /// Every violated structural property; empty for a well-formed graph.
  std::vector<std::string> audit() const;

 private:
  void index(std::vector<std::vector<NodeId>>& byStop, NodeId u);

  std::vector<Stop> stops_;
  std::vector<Trip> trips_;
  std::vector<TripSchedule> schedules_;
  Options options_;
  std::vector<TransitNode> nodes_;
  std::vector<TransitEdge> edges_;
  std::vector<std::vector<NodeId>> arrivals_, departures_, transfers_;
  Adjacency adjacency_;
};

}  // namespace mmroute
