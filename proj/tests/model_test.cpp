#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "mmroute/error.hpp"
#include "mmroute/geo_index.hpp"
#include "mmroute/ingest/gtfs.hpp"
#include "mmroute/model/link_graph.hpp"
#include "mmroute/model/mode.hpp"
#include "mmroute/model/road_graph.hpp"
#include "mmroute/model/timetable.hpp"
#include "mmroute/model/transit_graph.hpp"
#include "mmroute/model/weighted_digraph.hpp"
#include "support.hpp"

namespace mmroute {
namespace {

using enum TransportMode;

TEST(Modes, OrderAndFastest) {
  EXPECT_LT(kFoot, kBike);
  EXPECT_LT(kBike, kTram);
  EXPECT_LT(kTram, kCar);
  EXPECT_EQ((ModeSet{kFoot, kBike}).fastest(), kBike);
  EXPECT_EQ(ModeSet::all().fastest(), kCar);
  EXPECT_FALSE(ModeSet{}.fastest().has_value());
}

TEST(Modes, ParseAndPrint) {
  EXPECT_EQ(ModeSet::parse("car, bike"), (ModeSet{kCar, kBike}));
  EXPECT_EQ(ModeSet::parse("foot,bike,tram,car"), ModeSet::all());
  EXPECT_EQ(ModeSet::parse("tram,foot").toString(), "foot,tram");
  EXPECT_TRUE(ModeSet::parse("").empty());
  EXPECT_THROW(ModeSet::parse("car,boat"), InvalidArgument);
  EXPECT_EQ(ModeSet::road(), (ModeSet{kFoot, kBike, kCar}));
}

RoadEdge edge(double distance, ModeSet modes) {
  return {0, 1, distance, modes, RoadSpeedPolicy{}.speedsFor(modes, 120.0)};
}

TEST(EdgeWeight, UsesFastestUsableMode) {
  EXPECT_FALSE(edgeWeight(edge(1000, {kBike, kCar}), {kFoot}));
  EXPECT_DOUBLE_EQ(*edgeWeight(edge(1000, {kBike, kCar}), {kBike, kCar}), 30.0);
  EXPECT_DOUBLE_EQ(*edgeWeight(edge(1000, {kBike, kCar}), {kBike}), 1000 / (14 / 3.6));
  EXPECT_DOUBLE_EQ(*edgeWeight(edge(100, {kFoot}), ModeSet::all()), 72.0);
  EXPECT_EQ(*edgeWeight(edge(0, {kFoot}), ModeSet::all()), 0.0);
}

TEST(EdgeWeight, ModeSpeedsNeverExceedCarSpeed) {
  const ModeSpeeds slow = RoadSpeedPolicy{}.speedsFor(ModeSet::road(), 7.0);
  EXPECT_EQ(slow[static_cast<std::size_t>(kCar)], 7.0);
  EXPECT_EQ(slow[static_cast<std::size_t>(kBike)], 7.0);
  EXPECT_EQ(slow[static_cast<std::size_t>(kFoot)], 5.0);
  const ModeSpeeds cycle = RoadSpeedPolicy{}.speedsFor({kFoot, kBike}, 14.0);
  EXPECT_EQ(cycle[static_cast<std::size_t>(kCar)], 0.0);
  EXPECT_EQ(cycle[static_cast<std::size_t>(kBike)], 14.0);
}

TEST(RoadGraphBuilder, Validates) {
  RoadGraphBuilder b;
  const NodeId a = b.addNode(10, GeoPoint::fromDegrees(48, 8));
  const NodeId c = b.addNode(11, GeoPoint::fromDegrees(48.001, 8));
  EXPECT_THROW(b.addNode(10, GeoPoint::fromDegrees(48, 8)), InvalidArgument);
  EXPECT_THROW(b.addEdge(edge(-1, {kCar})), InvalidArgument);
  EXPECT_THROW(b.addEdge({a, c, 10, ModeSet{}, {}}), InvalidArgument);
  EXPECT_THROW(b.addEdge({a, 7, 10, {kCar}, RoadSpeedPolicy{}.speedsFor({kCar}, 50)}),
               InvalidNode);
  EXPECT_THROW(b.addEdge({a, c, 10, {kCar}, {}}), InvalidArgument);
  RoadEdge named = edge(111, {kCar});
  named.name = b.internName("Main Street");
  EXPECT_EQ(b.internName("Main Street"), named.name);
  EXPECT_EQ(b.internName(""), kNoName);
  b.addEdge(named);
  const RoadGraph g = std::move(b).build();
  EXPECT_EQ(g.nodeCount(), 2u);
  EXPECT_EQ(g.edgeCount(), 1u);
  EXPECT_EQ(g.findNode(11), c);
  EXPECT_FALSE(g.findNode(12));
  EXPECT_EQ(g.name(0), "Main Street");
  EXPECT_EQ(g.maxSpeedKmh(), 120.0);
  EXPECT_EQ(g.arcsFrom(a).size(), 1u);
  EXPECT_EQ(g.arcsInto(c).size(), 1u);
}

TEST(WeightedDigraph, RejectsBadEdges) {
  EXPECT_THROW(WeightedDigraph(2, {{0, 1, -1.0}}), InvalidArgument);
  EXPECT_THROW(WeightedDigraph(2, {{0, 1, std::nan("")}}), InvalidArgument);
  EXPECT_THROW(WeightedDigraph(2, {{0, 2, 1.0}}), InvalidNode);
  const WeightedDigraph g(2, {{0, 1, 2.0, {kBike}}});
  EXPECT_FALSE(g.weight(0, {kCar}));
  EXPECT_EQ(g.weight(0, {kBike, kCar}), 2.0);
}

// Edges of the small directed example graph: (v1,8,v2) (v1,1,v3) (v2,1,v1)
// (v2,2,v5) (v3,2,v4) (v4,1,v2), with v1 = node 0.
WeightedDigraph smallExample() {
  return WeightedDigraph(5, {{0, 1, 8}, {0, 2, 1}, {1, 0, 1}, {1, 4, 2}, {2, 3, 2}, {3, 1, 1}});
}

std::multiset<std::tuple<NodeId, double, NodeId>> edgeSet(const RoutingGraph auto& g) {
  std::multiset<std::tuple<NodeId, double, NodeId>> out;
  for (EdgeId e = 0; e < g.edgeCount(); ++e) {
    out.insert({g.source(e), *g.weight(e, ModeSet::all()), g.target(e)});
  }
  return out;
}

TEST(ReverseView, ReversesEveryEdge) {
  const WeightedDigraph g = smallExample();
  const auto r = reverseView(g);
  EXPECT_EQ(r.edgeCount(), 6u);
  const auto reversed = edgeSet(r);
  EXPECT_EQ(reversed.count({1, 8.0, 0}), 1u);
  EXPECT_EQ(reversed.count({2, 1.0, 0}), 1u);
  EXPECT_EQ(reversed.count({4, 2.0, 1}), 1u);
  for (const auto& [u, w, v] : edgeSet(g)) EXPECT_EQ(reversed.count({v, w, u}), 1u);
  EXPECT_EQ(r.arcsFrom(0).size(), 1u);  // only (v2,1,v1) enters v1
  EXPECT_EQ(&reverseView(r), &g);
  EXPECT_EQ(edgeSet(reverseView(r)), edgeSet(g));

  const WeightedDigraph empty;
  EXPECT_EQ(reverseView(empty).nodeCount(), 0u);
  EXPECT_EQ(reverseView(empty).edgeCount(), 0u);
}

TEST(ReverseView, InvolutionOnRandomGraphs) {
  testing::Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    const WeightedDigraph g = testing::toWeightedDigraph(testing::randomDigraph(rng, 20, 60));
    const auto r = reverseView(g);
    std::multiset<std::tuple<NodeId, double, NodeId>> back;
    for (const auto& [u, w, v] : edgeSet(r)) back.insert({v, w, u});
    EXPECT_EQ(back, edgeSet(g));
  }
}

GtfsFeed toyFeed() { return parseGtfs(testing::dataDir() / "gtfs_toy"); }

Seconds hm(int h, int m) { return h * 3600 + m * 60; }

TEST(Timetable, ToyTimetableIsValid) {
  const Timetable tt = buildTimetable(toyFeed());
  EXPECT_EQ(tt.stops().size(), 3u);
  EXPECT_EQ(tt.trips().size(), 4u);
  ASSERT_EQ(tt.connections().size(), 5u);
  EXPECT_EQ(tt.footpaths().size(), 3u);
  for (const Footpath& f : tt.footpaths()) {
    EXPECT_EQ(f.from, f.to);
    EXPECT_EQ(f.duration, 300);
  }
  EXPECT_TRUE(validateTimetable(tt).empty());
  EXPECT_EQ(tt.firstConnectionAtOrAfter(hm(16, 0)), 1u);
  EXPECT_EQ(tt.firstConnectionAtOrAfter(hm(21, 0)), 5u);
  EXPECT_EQ(tt.findStop("o"), 1u);
  EXPECT_FALSE(tt.findStop("x"));
}

TEST(Timetable, MissingClosureIsReported) {
  const Timetable base = buildTimetable(toyFeed());
  const StopIndex f = *base.findStop("f"), o = *base.findStop("o"), k = *base.findStop("k");
  auto footpaths = base.footpaths();
  footpaths.push_back({f, 600, o});
  footpaths.push_back({o, 600, k});
  const Timetable tt(base.stops(), base.trips(), base.connections(), footpaths);
  const auto violations = validateTimetable(tt);
  ASSERT_FALSE(violations.empty());
  EXPECT_TRUE(std::any_of(violations.begin(), violations.end(), [](const auto& v) {
    return v.kind == TimetableViolation::Kind::kNotClosed;
  }));

  footpaths.push_back({f, 2000, k});
  const auto triangle = validateTimetable(
      Timetable(base.stops(), base.trips(), base.connections(), footpaths));
  ASSERT_EQ(triangle.size(), 1u);
  EXPECT_EQ(triangle[0].kind, TimetableViolation::Kind::kTriangle);
}

TEST(Timetable, MissingSelfLoopIsReported) {
  const Timetable base = buildTimetable(toyFeed());
  auto footpaths = base.footpaths();
  footpaths.erase(footpaths.begin());
  const auto violations =
      validateTimetable(Timetable(base.stops(), base.trips(), base.connections(), footpaths));
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].kind, TimetableViolation::Kind::kMissingSelfLoop);
}

TEST(Timetable, BadConnectionsAreReported) {
  const Timetable base = buildTimetable(toyFeed());
  auto connections = base.connections();
  connections.push_back({0, 0, hm(9, 0), hm(9, 5), 0});
  connections.push_back({0, 1, hm(9, 10), hm(9, 5), 0});
  const auto violations = validateTimetable(
      Timetable(base.stops(), base.trips(), connections, base.footpaths()));
  EXPECT_EQ(std::count_if(violations.begin(), violations.end(),
                          [](const auto& v) {
                            return v.kind == TimetableViolation::Kind::kConnection;
                          }),
            2);
  connections.push_back({0, 9, hm(9, 0), hm(9, 5), 0});
  EXPECT_THROW(Timetable(base.stops(), base.trips(), connections, base.footpaths()),
               InvalidArgument);
}

const TransitNode* findNode(const TransitGraph& g, StopIndex stop, TransitEvent event,
                            Seconds time) {
  for (const TransitNode& n : g.nodes()) {
    if (n.stop == stop && n.event == event && n.time == time) return &n;
  }
  return nullptr;
}

NodeId idOf(const TransitGraph& g, const TransitNode* n) {
  return static_cast<NodeId>(n - g.nodes().data());
}

TEST(TransitGraph, ToyScheduleGraph) {
  const GtfsFeed feed = toyFeed();
  const TransitGraph g = buildTransitGraph(feed);
  EXPECT_TRUE(g.audit().empty());
  EXPECT_EQ(g.nodeCount(), 15u);
  EXPECT_EQ(g.edgeCount(), 15u);
  auto count = [&](TransitEdgeKind kind) {
    return std::count_if(g.edges().begin(), g.edges().end(),
                         [kind](const TransitEdge& e) { return e.kind == kind; });
  };
  EXPECT_EQ(count(TransitEdgeKind::kRide), 5);
  EXPECT_EQ(count(TransitEdgeKind::kStay), 1);
  EXPECT_EQ(count(TransitEdgeKind::kAlight), 5);
  EXPECT_EQ(count(TransitEdgeKind::kWait), 2);
  EXPECT_EQ(count(TransitEdgeKind::kBoard), 2);

  const StopIndex o = 1;
  const TransitNode* arrival = findNode(g, o, TransitEvent::kArrival, hm(16, 28));
  const TransitNode* transfer = findNode(g, o, TransitEvent::kTransfer, hm(16, 33));
  const TransitNode* departure = findNode(g, o, TransitEvent::kDeparture, hm(16, 35));
  ASSERT_TRUE(arrival && transfer && departure);
  bool alight = false, board = false;
  for (const Arc& a : g.arcsFrom(idOf(g, arrival))) {
    alight |= a.head == idOf(g, transfer) && g.timeDelta(a.edge) == 300;
  }
  for (const Arc& a : g.arcsFrom(idOf(g, transfer))) {
    board |= a.head == idOf(g, departure) && g.timeDelta(a.edge) == 120 &&
             g.edge(a.edge).kind == TransitEdgeKind::kBoard;
  }
  EXPECT_TRUE(alight);
  EXPECT_TRUE(board);
  EXPECT_FALSE(g.weight(0, {kCar}));
  EXPECT_TRUE(g.weight(0, {kTram}));
}

TEST(TransitGraph, EmptyFeed) {
  const TransitGraph g = buildTransitGraph(GtfsFeed{});
  EXPECT_EQ(g.nodeCount(), 0u);
  EXPECT_EQ(g.edgeCount(), 0u);
  EXPECT_TRUE(g.audit().empty());
}

TEST(TransitGraph, HandCountedTwoTripFeed) {
  GtfsFeed feed;
  feed.stops = {{"a", "A", GeoPoint::fromDegrees(48, 8)},
                {"b", "B", GeoPoint::fromDegrees(48.1, 8)},
                {"c", "C", GeoPoint::fromDegrees(48.2, 8)}};
  feed.trips = {{"t1", ""}, {"t2", ""}};
  feed.schedules = {{{{0, hm(8, 0), hm(8, 0)}, {1, hm(8, 10), hm(8, 12)}, {2, hm(8, 20), hm(8, 20)}}},
                    {{{1, hm(8, 30), hm(8, 30)}, {0, hm(8, 40), hm(8, 40)}}}};
  const TransitGraph g = buildTransitGraph(feed);
  // t1: dep a, arr b, dep b, arr c; t2: dep b, arr a. One transfer per arrival.
  EXPECT_EQ(g.nodeCount(), 6u + 3u);
  // rides 3, stay 1, alight 3, wait 0, board: t2's departure at b (8:30) from
  // the 8:15 transfer.
  EXPECT_EQ(g.edgeCount(), 3u + 1u + 3u + 0u + 1u);
  EXPECT_TRUE(g.audit().empty());

  const TransitGraph leading = g.rebuilt({300, true});
  EXPECT_EQ(leading.nodeCount(), g.nodeCount() + 4u);
  EXPECT_TRUE(leading.audit().empty());
  EXPECT_THROW(g.rebuilt({-1, false}), InvalidArgument);
}

TEST(TransitGraph, AuditHoldsOnRandomFeeds) {
  testing::Rng rng(4);
  for (int i = 0; i < 30; ++i) {
    const GtfsFeed feed = testing::randomFeed(rng, 8, 15);
    for (bool leading : {false, true}) {
      const TransitGraph g(feed.stops, feed.trips, feed.schedules, {300, leading});
      const auto problems = g.audit();
      ASSERT_TRUE(problems.empty()) << problems.front();
      for (EdgeId e = 0; e < g.edgeCount(); ++e) ASSERT_GE(g.timeDelta(e), 0);
    }
  }
}

TEST(LinkGraph, ToyScheduleOnTwoNodeRoadGraph) {
  const GtfsFeed feed = toyFeed();
  RoadGraphBuilder b;
  const NodeId freiburg = b.addNode(1, feed.stops[0].point);
  const NodeId karlsruhe = b.addNode(2, feed.stops[2].point);
  b.addEdge({freiburg, karlsruhe, 119'000, ModeSet::road(),
             RoadSpeedPolicy{}.speedsFor(ModeSet::road(), 100)});
  const RoadGraph road = std::move(b).build();
  GeoIndex index;
  for (NodeId u = 0; u < road.nodeCount(); ++u) index.insert(road.point(u), u);

  const LinkGraph lg = buildLinkGraph(road, buildTransitGraph(feed), index);
  const TransitGraph& transit = lg.transit();
  EXPECT_TRUE(transit.options().leadingArrivals);
  EXPECT_TRUE(transit.audit().empty());
  // Every trip now begins with an arrival node.
  for (const TripSchedule& s : transit.schedules()) ASSERT_FALSE(s.events.empty());
  for (TripIndex trip = 0; trip < 4; ++trip) {
    Seconds first = kInfiniteTime;
    TransitEvent firstEvent = TransitEvent::kTransfer;
    for (const TransitNode& n : transit.nodes()) {
      if (n.trip == trip && n.time < first) first = n.time, firstEvent = n.event;
      if (n.trip == trip && n.time == first && n.event == TransitEvent::kArrival) {
        firstEvent = n.event;
      }
    }
    EXPECT_EQ(firstEvent, TransitEvent::kArrival) << "trip " << trip;
  }

  std::size_t arrivals = 0;
  for (const TransitNode& n : transit.nodes()) arrivals += n.event == TransitEvent::kArrival;
  EXPECT_EQ(lg.linkEdgeCount(), arrivals);
  EXPECT_EQ(lg.stopRoadNode(0), freiburg);
  EXPECT_EQ(lg.stopRoadNode(2), karlsruhe);

  // Offenburg is closer to Freiburg than to Karlsruhe, so both stops link to
  // the Freiburg road node.
  std::size_t freiburgLinks = 0, offenburgLinks = 0;
  for (const Arc& a : lg.arcsFrom(freiburg)) {
    if (lg.kind(a.edge) != LinkGraph::EdgeKind::kLink) continue;
    ASSERT_TRUE(lg.isTransitNode(a.head));
    const TransitNode& n = transit.node(lg.transitNode(a.head));
    EXPECT_EQ(n.event, TransitEvent::kArrival);
    EXPECT_EQ(lg.weight(a.edge, ModeSet::all()), 0.0);
    EXPECT_FALSE(lg.weight(a.edge, ModeSet::road()));
    freiburgLinks += n.stop == 0;
    offenburgLinks += n.stop == 1;
  }
  EXPECT_EQ(offenburgLinks, transit.arrivalsAt(1).size());
  EXPECT_EQ(freiburgLinks, transit.arrivalsAt(0).size());
  EXPECT_EQ(freiburgLinks, 3u);  // two leading arrivals and the ICE 79 arrival
  for (NodeId v : transit.arrivalsAt(0)) {
    bool exits = false;
    for (const Arc& a : lg.arcsFrom(lg.fromTransit(v))) {
      exits |= lg.kind(a.edge) == LinkGraph::EdgeKind::kExit && a.head == freiburg;
    }
    EXPECT_TRUE(exits);
  }
}

TEST(LinkGraph, NoStopsMeansNoLinks) {
  testing::Rng rng(1);
  const RoadGraph road = testing::randomGeometricGraph(rng, 30);
  GeoIndex index;
  for (NodeId u = 0; u < road.nodeCount(); ++u) index.insert(road.point(u), u);
  const LinkGraph lg = buildLinkGraph(road, TransitGraph{}, index);
  EXPECT_EQ(lg.linkEdgeCount(), 0u);
  EXPECT_EQ(lg.nodeCount(), road.nodeCount());
  EXPECT_EQ(lg.edgeCount(), road.edgeCount());
}

TEST(LinkGraph, EmptyRoadGraphCannotLinkStops) {
  const GtfsFeed feed = toyFeed();
  const RoadGraph road;
  const GeoIndex index;
  EXPECT_THROW(buildLinkGraph(road, buildTransitGraph(feed), index), ConfigError);
}

}  // namespace
}  // namespace mmroute
