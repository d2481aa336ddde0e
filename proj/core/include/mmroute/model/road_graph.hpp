#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mmroute/geo.hpp"
#include "mmroute/model/graph.hpp"

namespace mmroute {

struct RoadNode {
  std::int64_t id;
  GeoPoint point;

  template <class Archive>
  void serialize(Archive& ar) {
    ar(id, point);
  }
};

inline constexpr std::uint32_t kNoName = std::numeric_limits<std::uint32_t>::max();

/// Per-mode speeds in km/h, indexed by TransportMode. Zero where the mode is
/// not available on the edge.
using ModeSpeeds = std::array<double, kModeCount>;

struct RoadEdge {
  NodeId source;
  NodeId target;
  double distance;  // meters
  ModeSet modes;
  ModeSpeeds speedKmh{};
  std::uint32_t name = kNoName;

  double speed(TransportMode m) const noexcept {
    return speedKmh[static_cast<std::size_t>(m)];
  }

  template <class Archive>
  void serialize(Archive& ar) {
    ar(source, target, distance, modes, speedKmh, name);
  }
};

/// Travel time in seconds using the fastest mode in `edge.modes ∩ allowed`,
/// or nullopt when the intersection is empty.
std::optional<double> edgeWeight(const RoadEdge& edge, ModeSet allowed) noexcept;

/// Walking and cycling speeds assigned to road edges; neither exceeds the
/// edge's car speed.
struct RoadSpeedPolicy {
  double footKmh = 5.0;
  double bikeKmh = 14.0;

  /// Speeds for an edge open to `modes` whose car speed is `carKmh`.
  ModeSpeeds speedsFor(ModeSet modes, double carKmh) const;
};

class RoadGraph {
 public:
  RoadGraph() = default;

  std::size_t nodeCount() const noexcept { return nodes_.size(); }
  std::size_t edgeCount() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }

  std::span<const Arc> arcsFrom(NodeId u) const { return adjacency_.out(u); }
  std::span<const Arc> arcsInto(NodeId u) const { return adjacency_.in(u); }
  NodeId source(EdgeId e) const { return edges_[e].source; }
  NodeId target(EdgeId e) const { return edges_[e].target; }
  std::optional<double> weight(EdgeId e, ModeSet allowed) const noexcept {
    return edgeWeight(edges_[e], allowed);
  }

  const RoadNode& node(NodeId u) const { return nodes_.at(u); }
  const RoadEdge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<RoadNode>& nodes() const noexcept { return nodes_; }
  const std::vector<RoadEdge>& edges() const noexcept { return edges_; }
  const GeoPoint& point(NodeId u) const { return nodes_[u].point; }

  /// Internal index of the node with external id `id`.
  std::optional<NodeId> findNode(std::int64_t id) const;
  /// Edge name, empty when unnamed.
  std::string_view name(EdgeId e) const;
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Largest speed over all edges and modes, in km/h; 0 for an edgeless graph.
  double maxSpeedKmh() const noexcept { return maxSpeedKmh_; }

  template <class Archive>
  void save(Archive& ar) const {
    ar(nodes_, edges_, names_);
  }
  template <class Archive>
  void load(Archive& ar) {
    std::vector<RoadNode> nodes;
    std::vector<RoadEdge> edges;
    std::vector<std::string> names;
    ar(nodes, edges, names);
    *this = RoadGraph(std::move(nodes), std::move(edges), std::move(names));
  }

 private:
  friend class RoadGraphBuilder;
  RoadGraph(std::vector<RoadNode> nodes, std::vector<RoadEdge> edges,
            std::vector<std::string> names);

  std::vector<RoadNode> nodes_;
  std::vector<RoadEdge> edges_;
  std::vector<std::string> names_;
  std::unordered_map<std::int64_t, NodeId> byId_;
  Adjacency adjacency_;
  double maxSpeedKmh_ = 0.0;
};

class RoadGraphBuilder {
 public:
  /// Throws InvalidArgument when `id` was already added.
  NodeId addNode(std::int64_t id, const GeoPoint& point);
  std::optional<NodeId> findNode(std::int64_t id) const;
  const GeoPoint& point(NodeId u) const { return nodes_.at(u).point; }
  std::size_t nodeCount() const noexcept { return nodes_.size(); }
  std::size_t edgeCount() const noexcept { return edges_.size(); }

  /// Throws InvalidArgument on negative distance, empty mode set, or a
  /// non-positive speed for a listed mode; InvalidNode on unknown endpoints.
  EdgeId addEdge(RoadEdge edge);
  /// Interns `name` and returns its index; empty names map to kNoName.
  std::uint32_t internName(std::string_view name);

  RoadGraph build() &&;

 private:
  std::vector<RoadNode> nodes_;
  std::vector<RoadEdge> edges_;
  std::vector<std::string> names_;
  std::unordered_map<std::int64_t, NodeId> byId_;
  std::unordered_map<std::string, std::uint32_t> nameIds_;
};

}  // namespace mmroute
