#pragma once

#include <optional>
#include <vector>

#include "mmroute/geo_index.hpp"
#include "mmroute/model/road_graph.hpp"
#include "mmroute/model/transit_graph.hpp"

namespace mmroute {

/// Road graph and transit graph joined at stops. Road nodes keep their ids;
/// transit node v becomes roadNodeCount + v. Each stop's arrival nodes are
/// joined to one road node by zero-weight link edges (road -> arrival) and
/// exit edges (arrival -> road).
///
/// Holds a reference to the road graph, which must outlive it.
class LinkGraph {
 public:
  enum class EdgeKind : std::uint8_t { kRoad, kTransit, kLink, kExit };

  /// `stopRoadNode[s]` is the road node of stop s. Transit trips should
  /// start with arrival nodes (TransitGraph::Options::leadingArrivals).
  LinkGraph(const RoadGraph& road, TransitGraph transit,
            std::vector<NodeId> stopRoadNode);

  std::size_t nodeCount() const noexcept { return adjacency_.nodeCount(); }
  std::size_t edgeCount() const noexcept { return adjacency_.edgeCount(); }
  std::span<const Arc> arcsFrom(NodeId u) const { return adjacency_.out(u); }
  std::span<const Arc> arcsInto(NodeId u) const { return adjacency_.in(u); }
  NodeId source(EdgeId e) const;
  NodeId target(EdgeId e) const;
  /// Link and exit edges weigh 0 and, like transit edges, need trams allowed.
  std::optional<double> weight(EdgeId e, ModeSet allowed) const;

  EdgeKind kind(EdgeId e) const noexcept;
  bool isTransitNode(NodeId v) const noexcept { return v >= roadNodes_; }
  NodeId transitNode(NodeId v) const noexcept { return v - roadNodes_; }
  NodeId fromTransit(NodeId transitNode) const noexcept {
    return transitNode + roadNodes_;
  }
  EdgeId transitEdge(EdgeId e) const noexcept { return e - roadEdges_; }
  GeoPoint point(NodeId v) const;

  const RoadGraph& road() const noexcept { return *road_; }
  const TransitGraph& transit() const noexcept { return transit_; }
  NodeId stopRoadNode(StopIndex s) const { return stopRoadNode_.at(s); }
  std::size_t linkEdgeCount() const noexcept { return links_.size(); }

 private:
  const RoadGraph* road_;
  TransitGraph transit_;
  std::vector<NodeId> stopRoadNode_;
  NodeId roadNodes_;
  EdgeId roadEdges_;
  EdgeId transitEdges_;
  std::vector<std::pair<NodeId, NodeId>> links_;  // (road node, arrival node)
  Adjacency adjacency_;
};

/// Links every stop to its nearest road node. The transit graph is rebuilt
/// with leading arrival nodes. Throws ConfigError when the road graph is
/// empty but stops exist.
LinkGraph buildLinkGraph(const RoadGraph& road, const TransitGraph& transit,
                         const GeoIndex& roadIndex);

/// Nearest road node of every stop; `roadIndex` maps coordinates to road
/// node ids.
std::vector<NodeId> linkStops(const std::vector<Stop>& stops, const GeoIndex& roadIndex);

}  // namespace mmroute
