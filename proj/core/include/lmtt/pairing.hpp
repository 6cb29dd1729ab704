#pragma once

#include <cstddef>
#include <vector>

#include "lmtt/geometry.hpp"

namespace lmtt {

/// Common label set over two graphs. Labels [0, n) are the extremal vertices
/// of the first graph and their closest points on the second; labels [n, n+m)
/// are the extremal vertices of the second graph and their closest points on
/// the first. g1 and g2 are the inputs with edges subdivided at those points.
struct PairLabeling {
  EmbeddedGraph g1;
  EmbeddedGraph g2;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<VertexId> map1;  // label -> vertex of g1
  std::vector<VertexId> map2;  // label -> vertex of g2

  [[nodiscard]] std::size_t size() const noexcept { return n + m; }
};

PairLabeling build_pair_labeling(const EmbeddedGraph& g1, const EmbeddedGraph& g2);

}  // namespace lmtt
