#include "mmroute/model/weighted_digraph.hpp"

#include <cmath>

#include "mmroute/error.hpp"

namespace mmroute {

WeightedDigraph::WeightedDigraph(std::size_t nodeCount, std::vector<Edge> edges)
    : edges_(std::move(edges)) {
  std::vector<std::pair<NodeId, NodeId>> endpoints;
  endpoints.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw InvalidArgument("edge weights must be finite and non-negative");
    }
    endpoints.emplace_back(e.source, e.target);
  }
  adjacency_ = Adjacency(nodeCount, endpoints);
}

}  // namespace mmroute
