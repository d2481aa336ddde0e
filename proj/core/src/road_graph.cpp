#include "mmroute/model/road_graph.hpp"

#include <algorithm>
#include <cmath>

#include "mmroute/error.hpp"

namespace mmroute {

std::optional<double> edgeWeight(const RoadEdge& edge, ModeSet allowed) noexcept {
  const auto mode = (edge.modes & allowed).fastest();
  if (!mode) return std::nullopt;
  return edge.distance / (edge.speed(*mode) / 3.6);
}

ModeSpeeds RoadSpeedPolicy::speedsFor(ModeSet modes, double carKmh) const {
  ModeSpeeds speeds{};
  auto set = [&](TransportMode m, double kmh) {
    if (modes.contains(m)) speeds[static_cast<std::size_t>(m)] = kmh;
  };
  set(TransportMode::kCar, carKmh);
  set(TransportMode::kBike, std::min(bikeKmh, carKmh));
  set(TransportMode::kFoot, std::min(footKmh, carKmh));
  set(TransportMode::kTram, carKmh);
  return speeds;
}

RoadGraph::RoadGraph(std::vector<RoadNode> nodes, std::vector<RoadEdge> edges,
                     std::vector<std::string> names)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), names_(std::move(names)) {
  byId_.reserve(nodes_.size());
  for (NodeId u = 0; u < nodes_.size(); ++u) byId_.emplace(nodes_[u].id, u);
  std::vector<std::pair<NodeId, NodeId>> endpoints;
  endpoints.reserve(edges_.size());
  for (const RoadEdge& e : edges_) {
    endpoints.emplace_back(e.source, e.target);
    for (double s : e.speedKmh) maxSpeedKmh_ = std::max(maxSpeedKmh_, s);
  }
  adjacency_ = Adjacency(nodes_.size(), endpoints);
}

std::optional<NodeId> RoadGraph::findNode(std::int64_t id) const {
  const auto it = byId_.find(id);
  if (it == byId_.end()) return std::nullopt;
  return it->second;
}

std::string_view RoadGraph::name(EdgeId e) const {
  const std::uint32_t n = edges_.at(e).name;
  return n == kNoName ? std::string_view{} : std::string_view{names_.at(n)};
}

NodeId RoadGraphBuilder::addNode(std::int64_t id, const GeoPoint& point) {
  const auto u = static_cast<NodeId>(nodes_.size());
  if (!byId_.emplace(id, u).second) {
    throw InvalidArgument("duplicate road node id " + std::to_string(id));
  }
  nodes_.push_back(RoadNode{id, point});
  return u;
}

std::optional<NodeId> RoadGraphBuilder::findNode(std::int64_t id) const {
  const auto it = byId_.find(id);
  if (it == byId_.end()) return std::nullopt;
  return it->second;
}

EdgeId RoadGraphBuilder::addEdge(RoadEdge edge) {
  if (edge.source >= nodes_.size() || edge.target >= nodes_.size()) {
    throw InvalidNode("road edge endpoint is not a node of the graph");
  }
  if (!std::isfinite(edge.distance) || edge.distance < 0.0) {
    throw InvalidArgument("road edge distance must be finite and non-negative");
  }
  if (edge.modes.empty()) throw InvalidArgument("road edge without modes");
  for (TransportMode m : kAllModes) {
    const double s = edge.speed(m);
    if (edge.modes.contains(m)) {
      if (!(s > 0.0) || !std::isfinite(s)) {
        throw InvalidArgument("road edge speed must be positive for mode " +
                              std::string(toString(m)));
      }
    } else {
      edge.speedKmh[static_cast<std::size_t>(m)] = 0.0;
    }
  }
  if (edge.name != kNoName && edge.name >= names_.size()) {
    throw InvalidArgument("road edge name index out of range");
  }
  edges_.push_back(edge);
  return static_cast<EdgeId>(edges_.size() - 1);
}

std::uint32_t RoadGraphBuilder::internName(std::string_view name) {
  if (name.empty()) return kNoName;
  const auto [it, inserted] =
      nameIds_.emplace(std::string(name), static_cast<std::uint32_t>(names_.size()));
  if (inserted) names_.emplace_back(name);
  return it->second;
}

RoadGraph RoadGraphBuilder::build() && {
  return RoadGraph(std::move(nodes_), std::move(edges_), std::move(names_));
}

}  // namespace mmroute
