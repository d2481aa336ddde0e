#pragma once

#include <cstddef>
#include <vector>

#include "mmroute/model/graph.hpp"

namespace mmroute {

/// Counters collected by one search.
struct SearchStats {
  std::size_t settledCount = 0;
  std::size_t relaxedEdgeCount = 0;
};

/// Edge sequence between two nodes. An empty edge list means source == target.
struct Path {
  NodeId source = kNoNode;
  NodeId target = kNoNode;
  std::vector<EdgeId> edges;
  double totalCost = 0.0;  // seconds

  std::size_t length() const noexcept { return edges.size(); }
};

/// Nodes visited by `path`, source first.
template <RoutingGraph G>
std::vector<NodeId> pathNodes(const G& g, const Path& path) {
  std::vector<NodeId> nodes{path.source};
  for (EdgeId e : path.edges) nodes.push_back(g.target(e));
  return nodes;
}

/// True when consecutive edges share endpoints and the path starts at
/// `source` and ends at `target`.
template <RoutingGraph G>
bool isChained(const G& g, const Path& path) {
  NodeId at = path.source;
  for (EdgeId e : path.edges) {
    if (g.source(e) != at) return false;
    at = g.target(e);
  }
  return at == path.target;
}

}  // namespace mmroute
