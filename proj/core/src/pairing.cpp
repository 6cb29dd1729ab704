#include "lmtt/pairing.hpp"

namespace lmtt {

PairLabeling build_pair_labeling(const EmbeddedGraph& g1, const EmbeddedGraph& g2) {
  const std::vector<VertexId> own1 = extremal_set(g1);
  const std::vector<VertexId> own2 = extremal_set(g2);

  // Both passes project onto the original partner graph; splits are applied
  // together afterwards.
  std::vector<GraphLocation> on2;
  on2.reserve(own1.size());
  for (VertexId v : own1) on2.push_back(closest_point(g1.vertex(v), g2).location);
  std::vector<GraphLocation> on1;
  on1.reserve(own2.size());
  for (VertexId w : own2) on1.push_back(closest_point(g2.vertex(w), g1).location);

  Subdivision sub1 = subdivide(g1, on1);
  Subdivision sub2 = subdivide(g2, on2);

  PairLabeling out;
  out.n = own1.size();
  out.m = own2.size();
  out.map1 = own1;
  out.map1.insert(out.map1.end(), sub1.vertices.begin(), sub1.vertices.end());
  out.map2 = std::move(sub2.vertices);
  out.map2.insert(out.map2.end(), own2.begin(), own2.end());
  out.g1 = std::move(sub1.graph);
  out.g2 = std::move(sub2.graph);
  return out;
}

}  // namespace lmtt
