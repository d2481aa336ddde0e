#include <gtest/gtest.h>

#include <sstream>

#include "mmroute/error.hpp"
#include "mmroute/models.hpp"
#include "support.hpp"

namespace mmroute {
namespace {

TEST(Snapshot, RoundTripPreservesModels) {
  const OsmResult osm = parseOsmFile(testing::dataDir() / "two_cluster.osm");
  const GtfsFeed feed = parseGtfs(testing::dataDir() / "gtfs_toy");
  std::stringstream buffer;
  writeSnapshot(buffer, osm.graph, feed);
  const auto [road, restored] = readSnapshot(buffer);

  ASSERT_EQ(road.nodeCount(), osm.graph.nodeCount());
  ASSERT_EQ(road.edgeCount(), osm.graph.edgeCount());
  for (NodeId v = 0; v < road.nodeCount(); ++v) {
    EXPECT_EQ(road.node(v).id, osm.graph.node(v).id);
    EXPECT_EQ(road.point(v).lat(), osm.graph.point(v).lat());
    EXPECT_EQ(road.point(v).lng(), osm.graph.point(v).lng());
  }
  for (EdgeId e = 0; e < road.edgeCount(); ++e) {
    EXPECT_EQ(road.weight(e, ModeSet::all()), osm.graph.weight(e, ModeSet::all()));
    EXPECT_EQ(road.name(e), osm.graph.name(e));
    EXPECT_EQ(road.edge(e).modes, osm.graph.edge(e).modes);
  }
  EXPECT_EQ(road.maxSpeedKmh(), osm.graph.maxSpeedKmh());
  EXPECT_EQ(road.findNode(2005), osm.graph.findNode(2005));

  ASSERT_EQ(restored.stops.size(), feed.stops.size());
  ASSERT_EQ(restored.trips.size(), feed.trips.size());
  EXPECT_EQ(restored.trips[0].name, feed.trips[0].name);
  const Timetable a = buildTimetable(feed), b = buildTimetable(restored);
  EXPECT_EQ(a.connections(), b.connections());
  EXPECT_EQ(a.footpaths(), b.footpaths());
}

TEST(Snapshot, RejectsForeignData) {
  std::stringstream junk("definitely not a snapshot");
  EXPECT_THROW(readSnapshot(junk), ParseError);
  std::stringstream empty;
  EXPECT_THROW(readSnapshot(empty), ParseError);
}

TEST(Snapshot, RejectsTruncatedData) {
  const OsmResult osm = parseOsmFile(testing::dataDir() / "two_cluster.osm");
  std::stringstream buffer;
  writeSnapshot(buffer, osm.graph, GtfsFeed{});
  const std::string bytes = buffer.str();
  std::stringstream cut(bytes.substr(0, bytes.size() / 2));
  EXPECT_THROW(readSnapshot(cut), ParseError);
}

}  // namespace
}  // namespace mmroute
