#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <vector>

#include "mmroute/error.hpp"
#include "mmroute/routing/path.hpp"

namespace mmroute {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Node entering the queue with an initial cost.
struct SearchSeed {
  NodeId node;
  double cost = 0.0;
};

/// Distances and predecessor edges left behind by a search.
class SearchTree {
 public:
  SearchTree() = default;
  explicit SearchTree(std::size_t nodeCount)
      : distance_(nodeCount, kInfinity), predecessor_(nodeCount, kNoEdge) {}

  double distance(NodeId v) const { return distance_.at(v); }
  bool reached(NodeId v) const { return distance_.at(v) < kInfinity; }
  EdgeId predecessor(NodeId v) const { return predecessor_.at(v); }
  const std::vector<double>& distances() const noexcept { return distance_; }
  /// Poll order of settled nodes; entry r - 1 is the node of rank r.
  const std::vector<NodeId>& settledOrder() const noexcept { return order_; }
  const SearchStats& stats() const noexcept { return stats_; }

  /// Path from the seed that reached `v`, or nullopt when unreached.
  template <RoutingGraph G>
  std::optional<Path> pathTo(const G& g, NodeId v) const {
    if (!reached(v)) return std::nullopt;
    Path p;
    p.target = v;
    p.totalCost = distance_[v];
    NodeId at = v;
    while (predecessor_[at] != kNoEdge) {
      p.edges.push_back(predecessor_[at]);
      at = g.source(predecessor_[at]);
    }
    std::reverse(p.edges.begin(), p.edges.end());
    p.source = at;
    return p;
  }

 private:
  template <class G, class T, class W, class H>
  friend SearchTree runSearch(const G&, std::span<const SearchSeed>, T&&, W&&, H&&);

  std::vector<double> distance_;
  std::vector<EdgeId> predecessor_;
  std::vector<NodeId> order_;
  SearchStats stats_;
};

/// Best-first search shared by every graph algorithm.
///
/// `weight(e, u, distU)` returns the cost of edge e when leaving u at cost
/// distU, or nullopt when unusable. `heuristic(v)` is a lower bound on the
/// remaining cost to the target. The search stops once a node satisfying
/// `isTarget` is settled, or when the queue runs empty. Nodes may be
/// reopened, so admissible but inconsistent heuristics still yield optimal
/// costs.
template <class G, class T, class W, class H>
SearchTree runSearch(const G& g, std::span<const SearchSeed> seeds, T&& isTarget,
                     W&& weight, H&& heuristic) {
  const std::size_t n = g.nodeCount();
  SearchTree tree(n);
  std::vector<bool> settled(n, false);

  struct Entry {
    double key;
    double cost;
    NodeId node;
    bool operator>(const Entry& o) const {
      return key != o.key ? key > o.key : node > o.node;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;

  for (const SearchSeed& s : seeds) {
    if (s.node >= n) throw InvalidNode("source is not a node");
    if (s.cost < tree.distance_[s.node]) {
      tree.distance_[s.node] = s.cost;
      tree.predecessor_[s.node] = kNoEdge;
      queue.push({s.cost + heuristic(s.node), s.cost, s.node});
    }
  }

  while (!queue.empty()) {
    const Entry top = queue.top();
    queue.pop();
    const NodeId u = top.node;
    if (top.cost > tree.distance_[u]) continue;
    if (!settled[u]) {
      settled[u] = true;
      tree.order_.push_back(u);
      ++tree.stats_.settledCount;
    }
    if (isTarget(u)) break;
    for (const Arc& arc : g.arcsFrom(u)) {
      const std::optional<double> w = weight(arc.edge, u, top.cost);
      if (!w) continue;
      ++tree.stats_.relaxedEdgeCount;
      const double candidate = top.cost + *w;
      if (candidate < tree.distance_[arc.head]) {
        tree.distance_[arc.head] = candidate;
        tree.predecessor_[arc.head] = arc.edge;
        queue.push({candidate + heuristic(arc.head), candidate, arc.head});
      }
    }
  }
  return tree;
}

struct ShortestPathResult {
  std::optional<Path> path;  // nullopt when unreachable
  SearchStats stats;
};

namespace detail {

template <RoutingGraph G>
auto modeWeight(const G& g, ModeSet allowed) {
  return [&g, allowed](EdgeId e, NodeId, double) { return g.weight(e, allowed); };
}

inline double zeroHeuristic(NodeId) noexcept { return 0.0; }
inline bool noTarget(NodeId) noexcept { return false; }

inline auto isNode(NodeId t) {
  return [t](NodeId v) { return v == t; };
}

template <RoutingGraph G>
void checkNode(const G& g, NodeId v) {
  if (v >= g.nodeCount()) throw InvalidNode("node is not in the graph");
}

}  // namespace detail

/// Shortest s-t path over edges usable under `allowed`.
template <RoutingGraph G>
ShortestPathResult dijkstra(const G& g, NodeId s, NodeId t,
                            ModeSet allowed = ModeSet::all()) {
  detail::checkNode(g, s);
  detail::checkNode(g, t);
  const SearchSeed seed{s, 0.0};
  const SearchTree tree = runSearch(g, std::span(&seed, 1), detail::isNode(t),
                                    detail::modeWeight(g, allowed),
                                    detail::zeroHeuristic);
  return {tree.pathTo(g, t), tree.stats()};
}

/// Distances from s to every node (no early termination).
template <RoutingGraph G>
SearchTree dijkstraAll(const G& g, NodeId s, ModeSet allowed = ModeSet::all()) {
  detail::checkNode(g, s);
  const SearchSeed seed{s, 0.0};
  return runSearch(g, std::span(&seed, 1), detail::noTarget, detail::modeWeight(g, allowed),
                   detail::zeroHeuristic);
}

/// A* with `heuristic(v)` estimating the remaining cost from v to t.
template <RoutingGraph G, class H>
ShortestPathResult aStar(const G& g, NodeId s, NodeId t, ModeSet allowed,
                         H&& heuristic) {
  detail::checkNode(g, s);
  detail::checkNode(g, t);
  const SearchSeed seed{s, 0.0};
  const SearchTree tree = runSearch(g, std::span(&seed, 1), detail::isNode(t),
                                    detail::modeWeight(g, allowed),
                                    std::forward<H>(heuristic));
  return {tree.pathTo(g, t), tree.stats()};
}

/// Cheapest path to t from any of `sources`, all starting at cost 0.
template <RoutingGraph G>
ShortestPathResult manyToOne(const G& g, std::span<const NodeId> sources, NodeId t,
                             ModeSet allowed = ModeSet::all()) {
  if (sources.empty()) throw InvalidArgument("manyToOne needs at least one source");
  detail::checkNode(g, t);
  std::vector<SearchSeed> seeds;
  for (NodeId s : sources) seeds.push_back({s, 0.0});
  const SearchTree tree = runSearch(g, std::span<const SearchSeed>(seeds), detail::isNode(t),
                                    detail::modeWeight(g, allowed),
                                    detail::zeroHeuristic);
  return {tree.pathTo(g, t), tree.stats()};
}

/// Nodes in the order a full search from s polls them; entry r - 1 holds the
/// node of Dijkstra rank r.
template <RoutingGraph G>
std::vector<NodeId> dijkstraRanks(const G& g, NodeId s,
                                  ModeSet allowed = ModeSet::all()) {
  return dijkstraAll(g, s, allowed).settledOrder();
}

}  // namespace mmroute
