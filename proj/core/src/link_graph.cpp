#include "mmroute/model/link_graph.hpp"

#include "mmroute/error.hpp"

namespace mmroute {

LinkGraph::LinkGraph(const RoadGraph& road, TransitGraph transit,
                     std::vector<NodeId> stopRoadNode)
    : road_(&road),
      transit_(std::move(transit)),
      stopRoadNode_(std::move(stopRoadNode)),
      roadNodes_(static_cast<NodeId>(road.nodeCount())),
      roadEdges_(static_cast<EdgeId>(road.edgeCount())),
      transitEdges_(static_cast<EdgeId>(transit_.edgeCount())) {
  if (stopRoadNode_.size() != transit_.stops().size()) {
    throw InvalidArgument("every stop needs a road node");
  }
  for (StopIndex s = 0; s < stopRoadNode_.size(); ++s) {
    const auto arrivals = transit_.arrivalsAt(s);
    if (arrivals.empty()) continue;
    if (stopRoadNode_[s] >= roadNodes_) throw InvalidNode("stop linked to no road node");
    for (NodeId a : arrivals) links_.emplace_back(stopRoadNode_[s], fromTransit(a));
  }

  std::vector<std::pair<NodeId, NodeId>> endpoints;
  endpoints.reserve(roadEdges_ + transitEdges_ + 2 * links_.size());
  for (const RoadEdge& e : road.edges()) endpoints.emplace_back(e.source, e.target);
  for (const TransitEdge& e : transit_.edges()) {
    endpoints.emplace_back(fromTransit(e.source), fromTransit(e.target));
  }
  for (const auto& [r, a] : links_) endpoints.emplace_back(r, a);
  for (const auto& [r, a] : links_) endpoints.emplace_back(a, r);
  adjacency_ = Adjacency(road.nodeCount() + transit_.nodeCount(), endpoints);
}

LinkGraph::EdgeKind LinkGraph::kind(EdgeId e) const noexcept {
  if (e < roadEdges_) return EdgeKind::kRoad;
  e -= roadEdges_;
  if (e < transitEdges_) return EdgeKind::kTransit;
  e -= transitEdges_;
  return e < links_.size() ? EdgeKind::kLink : EdgeKind::kExit;
}

NodeId LinkGraph::source(EdgeId e) const {
  const EdgeId linkBase = roadEdges_ + transitEdges_;
  switch (kind(e)) {
    case EdgeKind::kRoad: return road_->source(e);
    case EdgeKind::kTransit: return fromTransit(transit_.source(e - roadEdges_));
    case EdgeKind::kLink: return links_[e - linkBase].first;
    case EdgeKind::kExit: return links_[e - linkBase - links_.size()].second;
  }
  return kNoNode;
}

NodeId LinkGraph::target(EdgeId e) const {
  const EdgeId linkBase = roadEdges_ + transitEdges_;
  switch (kind(e)) {
    case EdgeKind::kRoad: return road_->target(e);
    case EdgeKind::kTransit: return fromTransit(transit_.target(e - roadEdges_));
    case EdgeKind::kLink: return links_[e - linkBase].second;
    case EdgeKind::kExit: return links_[e - linkBase - links_.size()].first;
  }
  return kNoNode;
}

std::optional<double> LinkGraph::weight(EdgeId e, ModeSet allowed) const {
  switch (kind(e)) {
    case EdgeKind::kRoad: return road_->weight(e, allowed);
    case EdgeKind::kTransit: return transit_.weight(e - roadEdges_, allowed);
    case EdgeKind::kLink:
    case EdgeKind::kExit:
      if (!allowed.contains(TransportMode::kTram)) return std::nullopt;
      return 0.0;
  }
  return std::nullopt;
}

GeoPoint LinkGraph::point(NodeId v) const {
  return isTransitNode(v) ? transit_.point(transitNode(v)) : road_->point(v);
}

std::vector<NodeId> linkStops(const std::vector<Stop>& stops, const GeoIndex& roadIndex) {
  std::vector<NodeId> out;
  out.reserve(stops.size());
  if (!stops.empty() && roadIndex.empty()) {
    throw ConfigError("cannot link stops to an empty road graph");
  }
  for (const Stop& s : stops) out.push_back(roadIndex.nearest(s.point).id);
  return out;
}

LinkGraph buildLinkGraph(const RoadGraph& road, const TransitGraph& transit,
                         const GeoIndex& roadIndex) {
  TransitGraph::Options options = transit.options();
  options.leadingArrivals = true;
  return LinkGraph(road, transit.rebuilt(options), linkStops(transit.stops(), roadIndex));
}

}  // namespace mmroute
