#pragma once

#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mmroute/model/mode.hpp"

namespace mmroute {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

/// One traversal step: the node reached and the edge used.
struct Arc {
  NodeId head;
  EdgeId edge;
};

/// Compressed adjacency in both directions for a fixed edge list.
class Adjacency {
 public:
  Adjacency() = default;
  /// Edge i of the graph is endpoints[i] = (source, target).
  Adjacency(std::size_t nodeCount,
            std::span<const std::pair<NodeId, NodeId>> endpoints);

  std::size_t nodeCount() const noexcept {
    return outOffsets_.empty() ? 0 : outOffsets_.size() - 1;
  }
  std::size_t edgeCount() const noexcept { return outArcs_.size(); }

  std::span<const Arc> out(NodeId u) const noexcept {
    return {outArcs_.data() + outOffsets_[u],
            outArcs_.data() + outOffsets_[u + 1]};
  }
  std::span<const Arc> in(NodeId u) const noexcept {
    return {inArcs_.data() + inOffsets_[u], inArcs_.data() + inOffsets_[u + 1]};
  }

 private:
  std::vector<std::uint32_t> outOffsets_, inOffsets_;
  std::vector<Arc> outArcs_, inArcs_;
};

/// A directed graph whose edge weights may depend on the allowed modes.
/// `weight` returns nullopt when the edge is unusable under those modes.
template <class G>
concept RoutingGraph = requires(const G& g, NodeId u, EdgeId e, ModeSet m) {
  { g.nodeCount() } -> std::convertible_to<std::size_t>;
  { g.edgeCount() } -> std::convertible_to<std::size_t>;
  { g.arcsFrom(u) } -> std::convertible_to<std::span<const Arc>>;
  { g.arcsInto(u) } -> std::convertible_to<std::span<const Arc>>;
  { g.source(e) } -> std::convertible_to<NodeId>;
  { g.target(e) } -> std::convertible_to<NodeId>;
  { g.weight(e, m) } -> std::same_as<std::optional<double>>;
};

/// Non-copying reversal: every edge (u, w, v) is seen as (v, w, u).
template <RoutingGraph G>
class ReverseView {
 public:
  explicit ReverseView(const G& graph) noexcept : graph_(&graph) {}

  std::size_t nodeCount() const { return graph_->nodeCount(); }
  std::size_t edgeCount() const { return graph_->edgeCount(); }
  std::span<const Arc> arcsFrom(NodeId u) const { return graph_->arcsInto(u); }
  std::span<const Arc> arcsInto(NodeId u) const { return graph_->arcsFrom(u); }
  NodeId source(EdgeId e) const { return graph_->target(e); }
  NodeId target(EdgeId e) const { return graph_->source(e); }
  std::optional<double> weight(EdgeId e, ModeSet m) const {
    return graph_->weight(e, m);
  }

  const G& base() const noexcept { return *graph_; }

 private:
  const G* graph_;
};

template <RoutingGraph G>
ReverseView<G> reverseView(const G& g) noexcept {
  return ReverseView<G>(g);
}

/// Reversing a reversed view yields the original graph.
template <RoutingGraph G>
const G& reverseView(const ReverseView<G>& g) noexcept {
  return g.base();
}

}  // namespace mmroute
