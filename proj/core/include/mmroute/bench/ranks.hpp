#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mmroute/error.hpp"
#include "mmroute/routing/dijkstra.hpp"

namespace mmroute {

/// Sources and, per source, the nodes of Dijkstra rank 2^0 ... 2^maxExponent.
struct RankedQuerySet {
  unsigned maxExponent = 0;
  std::vector<NodeId> sources;
  std::vector<std::vector<NodeId>> targets;  // targets[i][k] has rank 2^k from sources[i]
};

/// Draws `sourceCount` sources uniformly with `seed`. Sources from which
/// fewer than 2^maxExponent nodes are reachable are rejected and redrawn;
/// throws ConfigError when `maxAttempts` draws do not yield enough sources.
template <RoutingGraph G>
RankedQuerySet generateRankedQueries(const G& g, std::size_t sourceCount,
                                     unsigned maxExponent, std::uint64_t seed,
                                     ModeSet allowed = ModeSet::all(),
                                     std::size_t maxAttempts = 0) {
  if (g.nodeCount() == 0) throw ConfigError("cannot draw queries from an empty graph");
  if (maxExponent > 31) throw InvalidArgument("rank exponent too large");
  if (maxAttempts == 0) maxAttempts = 20 * sourceCount + 100;
  RankedQuerySet set;
  set.maxExponent = maxExponent;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(g.nodeCount() - 1));
  const std::size_t needed = std::size_t{1} << maxExponent;
  for (std::size_t attempt = 0; set.sources.size() < sourceCount; ++attempt) {
    if (attempt == maxAttempts) {
      throw ConfigError("too few sources reach 2^" + std::to_string(maxExponent) +
                        " nodes; lower the maximum rank");
    }
    const NodeId s = pick(rng);
    const std::vector<NodeId> order = dijkstraRanks(g, s, allowed);
    if (order.size() < needed) continue;
    std::vector<NodeId> targets;
    for (unsigned k = 0; k <= maxExponent; ++k) targets.push_back(order[(std::size_t{1} << k) - 1]);
    set.sources.push_back(s);
    set.targets.push_back(std::move(targets));
  }
  return set;
}

}  // namespace mmroute
