#include "mmroute/routing/link_dijkstra.hpp"

namespace mmroute {

ShortestPathResult modifiedDijkstraLinkGraph(const LinkGraph& lg, NodeId s, NodeId t,
                                             ModeSet modes, Seconds depTime) {
  if (s >= lg.nodeCount() || t >= lg.nodeCount()) throw InvalidNode("unknown node");
  auto weight = [&lg, modes, depTime](EdgeId e, NodeId, double cost) -> std::optional<double> {
    if (lg.kind(e) != LinkGraph::EdgeKind::kLink) return lg.weight(e, modes);
    if (!modes.contains(TransportMode::kTram)) return std::nullopt;
    const double wait =
        lg.transit().node(lg.transitNode(lg.target(e))).time - (depTime + cost);
    if (wait < 0.0) return std::nullopt;
    return wait;
  };
  const SearchSeed seed{s, 0.0};
  const SearchTree tree = runSearch(lg, std::span(&seed, 1), detail::isNode(t), weight,
                                    detail::zeroHeuristic);
  return {tree.pathTo(lg, t), tree.stats()};
}

}  // namespace mmroute
