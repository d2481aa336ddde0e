#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mmroute/cover_tree.hpp"
#include "mmroute/geo.hpp"

namespace mmroute {

/// Cover tree over coordinates that carries integer payloads (node or stop
/// indices). Several payloads may share one coordinate; the tree stores the
/// coordinate once and this class keeps the payload lists.
///
/// Unlike the raw tree, queries here do not exclude a stored coordinate equal
/// to the query point: a payload sitting exactly on the query is a hit at
/// distance 0.
class GeoIndex {
 public:
  using Id = std::uint32_t;
  using Tree = CoverTree<GeoPoint, CrowFliesMetric>;

  struct Hit {
    Id id;
    GeoPoint point;
    double distance;  // meters
  };

  void insert(const GeoPoint& point, Id id);

  std::size_t size() const noexcept { return payloadCount_; }
  bool empty() const noexcept { return payloadCount_ == 0; }
  const Tree& tree() const noexcept { return tree_; }

  /// Throws EmptyStructure when nothing is indexed.
  Hit nearest(const GeoPoint& p) const;
  /// Up to k payloads ordered by distance; empty when nothing is indexed.
  std::vector<Hit> kNearest(const GeoPoint& p, std::size_t k) const;
  /// Payloads within `radius` meters, ordered by distance.
  std::vector<Hit> withinRadius(const GeoPoint& p, double radius) const;

 private:
  void appendPayloads(Tree::Index index, double distance,
                      std::vector<Hit>& out) const;
  std::optional<Tree::Index> exactMatch(const GeoPoint& p) const;

  Tree tree_;
  std::vector<std::vector<Id>> payloads_;  // by tree index
  std::map<GeoPoint, Tree::Index> byCoordinate_;
  std::size_t payloadCount_ = 0;
};

}  // namespace mmroute
