#include "mmroute/geo_index.hpp"

#include <algorithm>

namespace mmroute {

void GeoIndex::insert(const GeoPoint& point, Id id) {
  const auto [index, inserted] = tree_.insert(point);
  if (inserted) {
    payloads_.emplace_back();
    byCoordinate_.emplace(point, index);
  }
  payloads_[index].push_back(id);
  ++payloadCount_;
}

std::optional<GeoIndex::Tree::Index> GeoIndex::exactMatch(
    const GeoPoint& p) const {
  if (auto it = byCoordinate_.find(p); it != byCoordinate_.end()) {
    return it->second;
  }
  return std::nullopt;
}

void GeoIndex::appendPayloads(Tree::Index index, double distance,
                              std::vector<Hit>& out) const {
  for (Id id : payloads_[index]) {
    out.push_back({id, tree_.point(index), distance});
  }
}

GeoIndex::Hit GeoIndex::nearest(const GeoPoint& p) const {
  if (tree_.empty()) throw EmptyStructure("geo index is empty");
  if (auto exact = exactMatch(p)) {
    return {payloads_[*exact].front(), tree_.point(*exact), 0.0};
  }
  // Not stored, so the tree cannot exclude anything and always answers.
  const auto hit = tree_.nearest(p);
  return {payloads_[hit->index].front(), tree_.point(hit->index),
          hit->distance};
}

std::vector<GeoIndex::Hit> GeoIndex::kNearest(const GeoPoint& p,
                                              std::size_t k) const {
  std::vector<Hit> hits;
  if (tree_.empty() || k == 0) return hits;
  auto exact = exactMatch(p);
  if (exact) appendPayloads(*exact, 0.0, hits);
  if (hits.size() < k) {
    for (const auto& n : tree_.kNearest(p, k - hits.size())) {
      appendPayloads(n.index, n.distance, hits);
    }
  }
  if (hits.size() > k) hits.resize(k);
  return hits;
}

std::vector<GeoIndex::Hit> GeoIndex::withinRadius(const GeoPoint& p,
                                                  double radius) const {
  std::vector<Hit> hits;
  if (tree_.empty()) return hits;
  if (auto exact = exactMatch(p)) appendPayloads(*exact, 0.0, hits);
  for (const auto& n : tree_.neighborhood(p, radius)) {
    appendPayloads(n.index, n.distance, hits);
  }
  return hits;
}

}  // namespace mmroute
