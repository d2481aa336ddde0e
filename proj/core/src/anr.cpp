#include "mmroute/routing/anr.hpp"

#include <cmath>

#include "mmroute/error.hpp"
#include "mmroute/routing/dijkstra.hpp"

namespace mmroute {

std::vector<StopIndex> selectAccessNodes(const GeoIndex& stopIndex, const GeoPoint& p,
                                         std::size_t k) {
  std::vector<StopIndex> out;
  for (const GeoIndex::Hit& hit : stopIndex.kNearest(p, k)) out.push_back(hit.id);
  return out;
}

AnrRouter::AnrRouter(const RoadGraph& road, const GeoIndex& roadIndex,
                     const Timetable& timetable, const GeoIndex& stopIndex,
                     std::vector<NodeId> stopRoadNode)
    : road_(&road),
      roadIndex_(&roadIndex),
      timetable_(&timetable),
      stopIndex_(&stopIndex),
      stopRoadNode_(std::move(stopRoadNode)),
      tripConnections_(timetable.trips().size()) {
  if (stopRoadNode_.size() != timetable.stops().size()) {
    throw InvalidArgument("every stop needs a road node");
  }
  const auto& connections = timetable.connections();
  for (std::size_t i = 0; i < connections.size(); ++i) {
    tripConnections_[connections[i].trip].push_back(i);
  }
}

NodeId AnrRouter::resolve(const Location& location) const {
  if (const NodeId* node = std::get_if<NodeId>(&location)) {
    if (*node >= road_->nodeCount()) throw InvalidNode("unknown road node");
    return *node;
  }
  if (roadIndex_->empty()) throw InvalidNode("no road node to resolve a coordinate to");
  return roadIndex_->nearest(std::get<GeoPoint>(location)).id;
}

std::vector<MultiModalLeg> AnrRouter::roadLegs(const Path& path, ModeSet modes,
                                               double departure) const {
  std::vector<MultiModalLeg> legs;
  double clock = departure;
  for (EdgeId e : path.edges) {
    const RoadEdge& edge = road_->edge(e);
    const auto mode = (edge.modes & modes).fastest();
    const auto cost = edgeWeight(edge, modes);
    if (!mode || !cost) throw InvalidArgument("path uses an edge closed to its modes");
    if (legs.empty() || legs.back().mode != *mode) {
      legs.push_back({*mode, {road_->point(edge.source)}, clock, clock, {}});
    }
    MultiModalLeg& leg = legs.back();
    clock += *cost;
    leg.geometry.push_back(road_->point(edge.target));
    leg.arrival = clock;
    if (leg.name.empty()) leg.name = std::string(road_->name(e));
  }
  return legs;
}

std::vector<MultiModalLeg> AnrRouter::transitLegs(const Journey& journey) const {
  const auto& stops = timetable_->stops();
  const auto& connections = timetable_->connections();
  std::vector<MultiModalLeg> legs;
  for (const JourneyLeg& leg : journey.legs) {
    MultiModalLeg out{TransportMode::kFoot,
                      {stops[leg.from].point},
                      static_cast<double>(leg.departure),
                      static_cast<double>(leg.arrival),
                      {}};
    if (leg.kind == JourneyLeg::Kind::kTrip) {
      out.mode = TransportMode::kTram;
      out.name = timetable_->trips()[leg.trip].name;
      bool inside = false;
      for (std::size_t c : tripConnections_[leg.trip]) {
        inside = inside || c == leg.enter;
        if (!inside) continue;
        out.geometry.push_back(stops[connections[c].arrivalStop].point);
        if (c == leg.exit) break;
      }
    } else {
      out.geometry.push_back(stops[leg.to].point);
    }
    legs.push_back(std::move(out));
  }
  return legs;
}

AnrResult AnrRouter::query(const AnrQuery& q) const {
  if (q.k == 0) throw InvalidArgument("access node count must be at least 1");
  if (q.modes.empty()) throw InvalidArgument("no transportation mode allowed");
  const NodeId s = resolve(q.from);
  const NodeId t = resolve(q.to);
  const ModeSet roadModes = q.modes & ModeSet::road();
  const double depTime = q.depTime;
  AnrResult result;

  auto finish = [](MultiModalJourney j) {
    j.arrival = j.legs.empty() ? j.departure : j.legs.back().arrival;
    j.totalCost = j.arrival - j.departure;
    return j;
  };

  ++result.counters.roadOnlySearches;
  const ShortestPathResult directSearch = dijkstra(*road_, s, t, roadModes);
  result.counters.settledNodes += directSearch.stats.settledCount;
  if (const auto& direct = directSearch.path) {
    MultiModalJourney j;
    j.departure = depTime;
    j.legs = roadLegs(*direct, roadModes, depTime);
    result.roadOnly = finish(std::move(j));
  }
  result.best = result.roadOnly;

  if (!q.modes.contains(TransportMode::kTram) || stopIndex_->empty()) return result;

  const std::vector<StopIndex> sourceStops = selectAccessNodes(*stopIndex_, road_->point(s), q.k);
  const std::vector<StopIndex> targetStops = selectAccessNodes(*stopIndex_, road_->point(t), q.k);
  result.counters.nearestNeighborQueries += 2;

  std::vector<std::optional<Path>> access, egress;
  for (StopIndex a : sourceStops) {
    ShortestPathResult r = dijkstra(*road_, s, stopRoadNode_[a], roadModes);
    result.counters.settledNodes += r.stats.settledCount;
    access.push_back(std::move(r.path));
    ++result.counters.roadSearches;
  }
  for (StopIndex b : targetStops) {
    ShortestPathResult r = dijkstra(*road_, stopRoadNode_[b], t, roadModes);
    result.counters.settledNodes += r.stats.settledCount;
    egress.push_back(std::move(r.path));
    ++result.counters.roadSearches;
  }

  double bestCost = result.best ? result.best->totalCost : kInfinity;
  for (std::size_t i = 0; i < sourceStops.size(); ++i) {
    if (!access[i]) continue;
    const Seconds tau = q.depTime + static_cast<Seconds>(std::ceil(access[i]->totalCost));
    for (std::size_t j = 0; j < targetStops.size(); ++j) {
      const CsaResult transit = csaQuery(*timetable_, sourceStops[i], targetStops[j], tau);
      ++result.counters.csaQueries;
      result.counters.scannedConnections += transit.stats.scannedConnections;
      if (!transit.reachable() || !egress[j]) continue;
      const double cost = transit.arrival() + egress[j]->totalCost - depTime;
      if (cost >= bestCost) continue;
      bestCost = cost;
      MultiModalJourney journey;
      journey.departure = depTime;
      journey.legs = roadLegs(*access[i], roadModes, depTime);
      for (auto& leg : transitLegs(*transit.journey)) journey.legs.push_back(std::move(leg));
      for (auto& leg : roadLegs(*egress[j], roadModes, transit.arrival())) {
        journey.legs.push_back(std::move(leg));
      }
      result.best = finish(std::move(journey));
    }
  }
  return result;
}

}  // namespace mmroute
