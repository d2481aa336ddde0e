#include "mmroute/routing/transit_query.hpp"

#include <algorithm>

#include "mmroute/error.hpp"
#include "mmroute/routing/dijkstra.hpp"

namespace mmroute {

TransitGraphResult transitGraphEarliestArrival(const TransitGraph& g, StopIndex s,
                                               StopIndex t, Seconds tau) {
  if (s >= g.stops().size() || t >= g.stops().size()) throw InvalidNode("unknown stop");
  const Seconds d = g.options().transferDuration;
  std::vector<SearchSeed> seeds;
  for (NodeId dep : g.departuresAt(s)) {
    const Seconds time = g.node(dep).time;
    if (time >= tau + d) seeds.push_back({dep, static_cast<double>(time - tau)});
  }
  auto isTarget = [&g, t](NodeId v) {
    const TransitNode& n = g.node(v);
    return n.event == TransitEvent::kArrival && n.stop == t;
  };
  auto weight = [&g](EdgeId e, NodeId, double) {
    return std::optional<double>(g.timeDelta(e));
  };
  const SearchTree tree =
      runSearch(g, std::span<const SearchSeed>(seeds), isTarget, weight,
                [](NodeId) { return 0.0; });
  TransitGraphResult result;
  result.stats = tree.stats();
  if (!tree.settledOrder().empty() && isTarget(tree.settledOrder().back())) {
    result.arrival = g.node(tree.settledOrder().back()).time + d;
  }
  return result;
}

}  // namespace mmroute
