#pragma once

#include <vector>

#include "mmroute/model/graph.hpp"

namespace mmroute {

/// Plain directed graph with fixed non-negative weights and optional mode
/// labels. Used for abstract instances that carry no geometry.
class WeightedDigraph {
 public:
  struct Edge {
    NodeId source;
    NodeId target;
    double weight;
    ModeSet modes = ModeSet::all();
  };

  WeightedDigraph() = default;
  /// Throws InvalidArgument on negative or non-finite weights and InvalidNode
  /// on endpoints outside [0, nodeCount).
  WeightedDigraph(std::size_t nodeCount, std::vector<Edge> edges);

  std::size_t nodeCount() const noexcept { return adjacency_.nodeCount(); }
  std::size_t edgeCount() const noexcept { return edges_.size(); }
  std::span<const Arc> arcsFrom(NodeId u) const { return adjacency_.out(u); }
  std::span<const Arc> arcsInto(NodeId u) const { return adjacency_.in(u); }
  NodeId source(EdgeId e) const { return edges_[e].source; }
  NodeId target(EdgeId e) const { return edges_[e].target; }
  std::optional<double> weight(EdgeId e, ModeSet allowed) const {
    if ((edges_[e].modes & allowed).empty()) return std::nullopt;
    return edges_[e].weight;
  }

  const std::vector<Edge>& edges() const noexcept { return edges_; }

 private:
  std::vector<Edge> edges_;
  Adjacency adjacency_;
};

}  // namespace mmroute
