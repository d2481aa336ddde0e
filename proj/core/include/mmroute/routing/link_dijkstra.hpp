#pragma once

#include "mmroute/model/link_graph.hpp"
#include "mmroute/routing/dijkstra.hpp"

namespace mmroute {

/// Cheapest journey between two road nodes of the link graph leaving at
/// `depTime`. Entering the transit part through a link edge waits until the
/// arrival event's time and is impossible once that time has passed; transit
/// is used only when `modes` contains tram. Costs are seconds after depTime.
ShortestPathResult modifiedDijkstraLinkGraph(const LinkGraph& lg, NodeId s, NodeId t,
                                             ModeSet modes, Seconds depTime);

}  // namespace mmroute
