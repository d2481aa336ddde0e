#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmroute/error.hpp"

namespace mmroute {

/// Leveled nearest-neighbor index over an arbitrary metric space.
///
/// Every stored point owns one node at its top level; below that level the
/// point is implicitly its own child down to the lowest level, so the cover
/// C_i is exactly the set of points whose top level is >= i. Children are
/// exactly one level below their parent. The tree maintains, for every
/// level i:
///
///   - covering:   a point entering at level i-1 is within 2^i of its parent,
///   - separation: distinct points of C_i are more than 2^i apart.
///
/// Points are identified by their insertion index. A point at distance zero
/// from a stored point is a duplicate and is not stored a second time.
template <class Point, class Metric>
class CoverTree {
 public:
  using Index = std::size_t;
  static constexpr Index kNone = std::numeric_limits<Index>::max();

  struct Neighbor {
    Index index;
    double distance;
  };

  struct InsertResult {
    Index index;    // the new point, or the stored duplicate
    bool inserted;  // false when the point duplicates a stored one
  };

  explicit CoverTree(Metric metric = Metric{}) : metric_(std::move(metric)) {}

  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }

  const Point& point(Index i) const { return nodes_.at(i).point; }
  /// Top level of a stored point (the level of its explicit node).
  int levelOf(Index i) const { return nodes_.at(i).level; }
  /// Parent point of a stored point; kNone for the root.
  Index parentOf(Index i) const { return nodes_.at(i).parent; }
  Index root() const noexcept { return empty() ? kNone : Index{0}; }

  int maxLevel() const noexcept { return maxLevel_; }
  int minLevel() const noexcept { return std::min(lowestChildLevel_, maxLevel_); }

  double distance(const Point& a, const Point& b) const { return metric_(a, b); }

  InsertResult insert(const Point& p);

  /// Closest stored point other than `p` itself; nullopt when `p` is the only
  /// stored point.
  std::optional<Neighbor> nearest(const Point& p) const;

  /// Up to `k` closest stored points other than `p`, ascending by distance.
  std::vector<Neighbor> kNearest(const Point& p, std::size_t k) const;

  /// All stored points y != p with d(p, y) <= radius, ascending by distance.
  std::vector<Neighbor> neighborhood(const Point& p, double radius) const;

  /// Indices of the points forming the cover C_level.
  std::vector<Index> cover(int level) const;

  /// Exhaustive structural check. Returns one message per violated property;
  /// empty when the tree is valid.
  std::vector<std::string> audit() const;

 private:
  struct Node {
    Point point;
    int level = 0;
    Index parent = kNone;
    std::vector<Index> children;  // sorted by level, descending
  };

  struct Candidate {
    Index index;
    double distance;
  };

  static double radius(int level) { return std::ldexp(1.0, level); }

  // Appends the explicit children of `parent` that enter at `level`.
  void appendChildrenAt(Index parent, int level, const Point& p,
                        std::vector<Candidate>& out) const;

  // Expands `current` (a candidate set at level `level`) into its children
  // at level - 1 and keeps those within `bound(children)` of p.
  template <class BoundFn>
  void descend(const Point& p, int level, std::vector<Candidate>& current,
               std::vector<Candidate>& scratch, BoundFn bound) const;

  std::vector<Candidate> searchLowestLevel(
      const Point& p, const auto& boundForLevel) const;

  Metric metric_;
  std::vector<Node> nodes_;
  int maxLevel_ = 0;
  int lowestChildLevel_ = std::numeric_limits<int>::max();
};

// ---------------------------------------------------------------------------

template <class Point, class Metric>
void CoverTree<Point, Metric>::appendChildrenAt(
    Index parent, int level, const Point& p,
    std::vector<Candidate>& out) const {
  const auto& children = nodes_[parent].children;
  auto first = std::partition_point(
      children.begin(), children.end(),
      [&](Index c) { return nodes_[c].level > level; });
  for (auto it = first; it != children.end() && nodes_[*it].level == level;
       ++it) {
    out.push_back({*it, metric_(p, nodes_[*it].point)});
  }
}

template <class Point, class Metric>
template <class BoundFn>
void CoverTree<Point, Metric>::descend(const Point& p, int level,
                                       std::vector<Candidate>& current,
                                       std::vector<Candidate>& scratch,
                                       BoundFn bound) const {
  scratch.clear();
  for (const Candidate& c : current) {
    scratch.push_back(c);  // implicit self child
    if (nodes_[c.index].level >= level) {
      appendChildrenAt(c.index, level - 1, p, scratch);
    }
  }
  const double limit = bound(scratch);
  current.clear();
  for (const Candidate& c : scratch) {
    if (c.distance <= limit) current.push_back(c);
  }
}

template <class Point, class Metric>
auto CoverTree<Point, Metric>::insert(const Point& p) -> InsertResult {
  if (nodes_.empty()) {
    nodes_.push_back(Node{p, 0, kNone, {}});
    maxLevel_ = 0;
    return {0, true};
  }

  const double rootDistance = metric_(p, nodes_[0].point);
  if (rootDistance == 0.0) return {0, false};
  while (rootDistance > radius(maxLevel_)) ++maxLevel_;
  nodes_[0].level = maxLevel_;

  // Invariant: `candidates` holds every point of C_level within
  // 2^(level+1) of p.
  std::vector<Candidate> candidates{{0, rootDistance}};
  std::vector<Candidate> scratch;
  int level = maxLevel_;
  int lowestConflict = maxLevel_;
  Index parent = 0;
  while (!candidates.empty()) {
    const auto closest = std::min_element(
        candidates.begin(), candidates.end(),
        [](const Candidate& a, const Candidate& b) {
          return a.distance < b.distance;
        });
    if (closest->distance == 0.0) return {closest->index, false};
    if (closest->distance <= radius(level)) {
      lowestConflict = level;
      parent = closest->index;
    }
    descend(p, level, candidates, scratch,
            [&](const std::vector<Candidate>&) { return radius(level); });
    --level;
  }

  // p is separated from every cover at and below lowestConflict - 1 and is
  // covered by `parent`, which lives in C_lowestConflict.
  const Index index = nodes_.size();
  const int newLevel = lowestConflict - 1;
  nodes_.push_back(Node{p, newLevel, parent, {}});
  auto& siblings = nodes_[parent].children;
  auto pos = std::partition_point(
      siblings.begin(), siblings.end(),
      [&](Index c) { return nodes_[c].level >= newLevel; });
  siblings.insert(pos, index);
  lowestChildLevel_ = std::min(lowestChildLevel_, newLevel);
  return {index, true};
}

template <class Point, class Metric>
auto CoverTree<Point, Metric>::searchLowestLevel(
    const Point& p, const auto& boundForLevel) const -> std::vector<Candidate> {
  if (nodes_.empty()) throw EmptyStructure("cover tree is empty");
  std::vector<Candidate> candidates{{0, metric_(p, nodes_[0].point)}};
  std::vector<Candidate> scratch;
  const int lowest = minLevel();
  for (int level = maxLevel_; level > lowest; --level) {
    descend(p, level, candidates, scratch,
            [&](const std::vector<Candidate>& q) {
              return boundForLevel(q, level);
            });
  }
  return candidates;
}

template <class Point, class Metric>
auto CoverTree<Point, Metric>::nearest(const Point& p) const
    -> std::optional<Neighbor> {
  auto bound = [](const std::vector<Candidate>& q, int level) {
    double best = std::numeric_limits<double>::infinity();
    for (const Candidate& c : q) {
      if (c.distance > 0.0) best = std::min(best, c.distance);
    }
    return best + radius(level);
  };
  std::optional<Neighbor> result;
  for (const Candidate& c : searchLowestLevel(p, bound)) {
    if (c.distance > 0.0 && (!result || c.distance < result->distance)) {
      result = Neighbor{c.index, c.distance};
    }
  }
  return result;
}

template <class Point, class Metric>
auto CoverTree<Point, Metric>::kNearest(const Point& p, std::size_t k) const
    -> std::vector<Neighbor> {
  if (k == 0) throw InvalidArgument("kNearest requires k >= 1");
  std::vector<double> distances;
  auto bound = [&](const std::vector<Candidate>& q, int level) {
    distances.clear();
    for (const Candidate& c : q) {
      if (c.distance > 0.0) distances.push_back(c.distance);
    }
    if (distances.size() < k) return std::numeric_limits<double>::infinity();
    std::nth_element(distances.begin(), distances.begin() + (k - 1),
                     distances.end());
    return distances[k - 1] + radius(level);
  };
  std::vector<Neighbor> result;
  for (const Candidate& c : searchLowestLevel(p, bound)) {
    if (c.distance > 0.0) result.push_back({c.index, c.distance});
  }
  const std::size_t n = std::min(k, result.size());
  std::partial_sort(result.begin(), result.begin() + n, result.end(),
                    [](const Neighbor& a, const Neighbor& b) {
                      return a.distance < b.distance;
                    });
  result.resize(n);
  return result;
}

template <class Point, class Metric>
auto CoverTree<Point, Metric>::neighborhood(const Point& p,
                                            double radiusLimit) const
    -> std::vector<Neighbor> {
  if (!(radiusLimit >= 0.0)) {
    throw InvalidArgument("neighborhood radius must be non-negative");
  }
  auto bound = [&](const std::vector<Candidate>&, int level) {
    return radiusLimit + radius(level);
  };
  std::vector<Neighbor> result;
  for (const Candidate& c : searchLowestLevel(p, bound)) {
    if (c.distance > 0.0 && c.distance <= radiusLimit) {
      result.push_back({c.index, c.distance});
    }
  }
  std::sort(result.begin(), result.end(),
            [](const Neighbor& a, const Neighbor& b) {
              return a.distance < b.distance;
            });
  return result;
}

template <class Point, class Metric>
auto CoverTree<Point, Metric>::cover(int level) const -> std::vector<Index> {
  std::vector<Index> result;
  for (Index i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].level >= level) result.push_back(i);
  }
  return result;
}

template <class Point, class Metric>
std::vector<std::string> CoverTree<Point, Metric>::audit() const {
  std::vector<std::string> violations;
  if (nodes_.empty()) return violations;
  auto name = [](Index i) { return "point #" + std::to_string(i); };

  if (nodes_[0].parent != kNone || nodes_[0].level != maxLevel_) {
    violations.push_back("root is not alone at the greatest level");
  }
  std::vector<std::size_t> parentCount(nodes_.size(), 0);
  for (Index q = 0; q < nodes_.size(); ++q) {
    const Node& node = nodes_[q];
    if (q != 0 && node.level >= maxLevel_) {
      violations.push_back(name(q) + " reaches the root level");
    }
    for (std::size_t c = 0; c < node.children.size(); ++c) {
      const Index child = node.children[c];
      ++parentCount[child];
      if (c > 0 && nodes_[node.children[c - 1]].level < nodes_[child].level) {
        violations.push_back(name(q) + " has unsorted children");
      }
      if (nodes_[child].parent != q) {
        violations.push_back(name(child) + " has an inconsistent parent link");
      }
      // Depth/level relation: a child hangs off the parent's node one level
      // above it, which exists only if the parent reaches that level.
      if (nodes_[child].level + 1 > node.level) {
        violations.push_back(name(child) + " is attached above its parent");
      }
      // Covering (nesting is implied by the implicit self chains).
      const double d = metric_(node.point, nodes_[child].point);
      if (!(d <= radius(nodes_[child].level + 1))) {
        violations.push_back(name(child) + " not covered by its parent at level " +
                             std::to_string(nodes_[child].level + 1));
      }
    }
  }
  // Per-level uniqueness: each non-root point has exactly one explicit node.
  for (Index i = 1; i < nodes_.size(); ++i) {
    if (parentCount[i] != 1) {
      violations.push_back(name(i) + " appears " +
                           std::to_string(parentCount[i]) +
                           " times at its top level");
    }
  }
  // Separation: a pair shares every level up to min(top levels); the tightest
  // requirement is at that level, where the radius is largest.
  for (Index i = 0; i < nodes_.size(); ++i) {
    for (Index j = i + 1; j < nodes_.size(); ++j) {
      const int shared = std::min(nodes_[i].level, nodes_[j].level);
      const double d = metric_(nodes_[i].point, nodes_[j].point);
      if (!(d > radius(shared))) {
        violations.push_back(name(i) + " and " + name(j) +
                             " violate separation at level " +
                             std::to_string(shared));
      }
    }
  }
  return violations;
}

}  // namespace mmroute
