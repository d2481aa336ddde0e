#include "mmroute/model/graph.hpp"

#include "mmroute/error.hpp"

namespace mmroute {

Adjacency::Adjacency(std::size_t nodeCount,
                     std::span<const std::pair<NodeId, NodeId>> endpoints)
    : outOffsets_(nodeCount + 1, 0),
      inOffsets_(nodeCount + 1, 0),
      outArcs_(endpoints.size()),
      inArcs_(endpoints.size()) {
  for (const auto& [u, v] : endpoints) {
    if (u >= nodeCount || v >= nodeCount) {
      throw InvalidNode("edge endpoint outside the node range");
    }
    ++outOffsets_[u + 1];
    ++inOffsets_[v + 1];
  }
  for (std::size_t i = 0; i < nodeCount; ++i) {
    outOffsets_[i + 1] += outOffsets_[i];
    inOffsets_[i + 1] += inOffsets_[i];
  }
  std::vector<std::uint32_t> outFill(outOffsets_.begin(), outOffsets_.end() - 1);
  std::vector<std::uint32_t> inFill(inOffsets_.begin(), inOffsets_.end() - 1);
  for (EdgeId e = 0; e < endpoints.size(); ++e) {
    const auto [u, v] = endpoints[e];
    outArcs_[outFill[u]++] = Arc{v, e};
    inArcs_[inFill[v]++] = Arc{u, e};
  }
}

}  // namespace mmroute
