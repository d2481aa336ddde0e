#include "mmroute/model/transit_graph.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "mmroute/error.hpp"

namespace mmroute {

TransitGraph::TransitGraph(std::vector<Stop> stops, std::vector<Trip> trips,
                           const std::vector<TripSchedule>& schedules,
                           Options options)
    : stops_(std::move(stops)),
      trips_(std::move(trips)),
      schedules_(schedules),
      options_(options),
      arrivals_(stops_.size()),
      departures_(stops_.size()),
      transfers_(stops_.size()) {
  if (options_.transferDuration < 0) {
    throw InvalidArgument("transfer duration must be non-negative");
  }
  if (schedules.size() != trips_.size()) {
    throw InvalidArgument("one schedule per trip is required");
  }

  auto addNode = [&](Seconds time, TransitEvent ev, StopIndex s, TripIndex t) {
    nodes_.push_back(TransitNode{time, ev, s, t});
    return static_cast<NodeId>(nodes_.size() - 1);
  };
  auto addEdge = [&](NodeId u, NodeId v, TransitEdgeKind kind) {
    edges_.push_back(TransitEdge{u, v, kind});
  };

  for (TripIndex t = 0; t < schedules.size(); ++t) {
    const auto& ev = schedules[t].events;
    for (std::size_t i = 0; i < ev.size(); ++i) {
      if (ev[i].stop >= stops_.size()) {
        throw InvalidNode("trip " + trips_[t].id + " visits an unknown stop");
      }
      if (ev[i].arrival > ev[i].departure ||
          (i + 1 < ev.size() && ev[i].departure > ev[i + 1].arrival)) {
        throw InvalidArgument("times of trip " + trips_[t].id + " decrease");
      }
    }
    if (ev.size() < 2) continue;

    NodeId previousDeparture = kNoNode;
    for (std::size_t i = 0; i < ev.size(); ++i) {
      NodeId arrival = kNoNode;
      if (i > 0) {
        arrival = addNode(ev[i].arrival, TransitEvent::kArrival, ev[i].stop, t);
        addEdge(previousDeparture, arrival, TransitEdgeKind::kRide);
      } else if (options_.leadingArrivals) {
        arrival = addNode(ev[i].departure, TransitEvent::kArrival, ev[i].stop, t);
      }
      if (arrival != kNoNode) {
        index(arrivals_, arrival);
        const NodeId transfer =
            addNode(nodes_[arrival].time + options_.transferDuration,
                    TransitEvent::kTransfer, ev[i].stop, kNoTrip);
        index(transfers_, transfer);
        addEdge(arrival, transfer, TransitEdgeKind::kAlight);
      }
      if (i + 1 < ev.size()) {
        previousDeparture =
            addNode(ev[i].departure, TransitEvent::kDeparture, ev[i].stop, t);
        index(departures_, previousDeparture);
        if (arrival != kNoNode) {
          addEdge(arrival, previousDeparture, TransitEdgeKind::kStay);
        }
      }
    }
  }

  auto byTime = [this](NodeId a, NodeId b) {
    return nodes_[a].time != nodes_[b].time ? nodes_[a].time < nodes_[b].time
                                            : a < b;
  };
  for (StopIndex s = 0; s < stops_.size(); ++s) {
    std::sort(arrivals_[s].begin(), arrivals_[s].end(), byTime);
    std::sort(departures_[s].begin(), departures_[s].end(), byTime);
    auto& chain = transfers_[s];
    std::sort(chain.begin(), chain.end(), byTime);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      addEdge(chain[i], chain[i + 1], TransitEdgeKind::kWait);
    }
    for (NodeId d : departures_[s]) {
      const Seconds time = nodes_[d].time;
      const auto it = std::partition_point(
          chain.begin(), chain.end(),
          [&](NodeId x) { return nodes_[x].time <= time; });
      if (it != chain.begin()) addEdge(*(it - 1), d, TransitEdgeKind::kBoard);
    }
  }

  std::vector<std::pair<NodeId, NodeId>> endpoints;
  endpoints.reserve(edges_.size());
  for (const TransitEdge& e : edges_) endpoints.emplace_back(e.source, e.target);
  adjacency_ = Adjacency(nodes_.size(), endpoints);
}

void TransitGraph::index(std::vector<std::vector<NodeId>>& byStop, NodeId u) {
  byStop[nodes_[u].stop].push_back(u);
}

std::span<const NodeId> TransitGraph::arrivalsAt(StopIndex s) const {
  return arrivals_.at(s);
}
std::span<const NodeId> TransitGraph::departuresAt(StopIndex s) const {
  return departures_.at(s);
}
std::span<const NodeId> TransitGraph::transfersAt(StopIndex s) const {
  return transfers_.at(s);
}

std::vector<std::string> TransitGraph::audit() const {
  std::vector<std::string> problems;
  auto expect = [&]<class... A>(bool ok, fmt::format_string<A...> f, A&&... args) {
    if (!ok) problems.push_back(fmt::format(f, std::forward<A>(args)...));
  };
  using E = TransitEvent;
  using K = TransitEdgeKind;

  std::vector<int> alights(nodes_.size(), 0), boards(nodes_.size(), 0);
  std::vector<NodeId> boardSource(nodes_.size(), kNoNode);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const TransitEdge& edge = edges_[e];
    const TransitNode& u = nodes_[edge.source];
    const TransitNode& v = nodes_[edge.target];
    expect(timeDelta(e) >= 0, "edge {} has negative weight {}", e, timeDelta(e));
    E from{}, to{};
    switch (edge.kind) {
      case K::kRide: from = E::kDeparture; to = E::kArrival; break;
      case K::kStay: from = E::kArrival; to = E::kDeparture; break;
      case K::kAlight: from = E::kArrival; to = E::kTransfer; break;
      case K::kWait: from = E::kTransfer; to = E::kTransfer; break;
      case K::kBoard: from = E::kTransfer; to = E::kDeparture; break;
    }
    expect(u.event == from && v.event == to, "edge {} joins the wrong event types", e);
    if (edge.kind == K::kRide || edge.kind == K::kStay) {
      expect(u.trip == v.trip, "edge {} leaves its trip", e);
    }
    if (edge.kind != K::kRide) {
      expect(u.stop == v.stop, "edge {} changes stop without riding", e);
    }
    if (edge.kind == K::kAlight) {
      expect(timeDelta(e) == options_.transferDuration,
             "alight edge {} does not last the transfer duration", e);
      ++alights[edge.source];
    }
    if (edge.kind == K::kBoard) {
      ++boards[edge.target];
      boardSource[edge.target] = edge.source;
    }
  }

  for (StopIndex s = 0; s < stops_.size(); ++s) {
    for (NodeId a : arrivals_[s]) {
      expect(alights[a] == 1, "arrival node {} has {} transfer nodes", a, alights[a]);
    }
    const auto& chain = transfers_[s];
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      expect(nodes_[chain[i]].time <= nodes_[chain[i + 1]].time,
             "transfer chain of stop {} is unsorted", stops_[s].id);
    }
    for (NodeId d : departures_[s]) {
      const Seconds time = nodes_[d].time;
      const auto it = std::partition_point(
          chain.begin(), chain.end(),
          [&](NodeId x) { return nodes_[x].time <= time; });
      const NodeId latest = it == chain.begin() ? kNoNode : *(it - 1);
      expect(boards[d] == (latest == kNoNode ? 0 : 1),
             "departure node {} has {} boarding edges", d, boards[d]);
      expect(boardSource[d] == latest,
             "departure node {} is not boarded from the latest transfer node", d);
    }
  }
  return problems;
}

}  // namespace mmroute
