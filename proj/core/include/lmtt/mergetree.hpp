#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "lmtt/geometry.hpp"
#include "lmtt/matrix.hpp"

namespace lmtt {

using NodeId = std::size_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct TreeNode {
  double height = 0.0;
  NodeId parent = kNoNode;     // kNoNode only for the root
  VertexId source = kNoVertex;  // graph vertex whose height this node carries
};

/// Rooted merge tree. The root has height +infinity and no source; it never
/// appears as an LCA of labels on a connected graph.
class MergeTree {
 public:
  /// Validates: exactly one root, root height +inf, parents at least as high
  /// as their children, every node reaches the root.
  explicit MergeTree(std::vector<TreeNode> nodes);

  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
  [[nodiscard]] const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
  [[nodiscard]] const TreeNode& node(NodeId n) const { return nodes_[n]; }
  [[nodiscard]] NodeId root() const noexcept { return root_; }
  [[nodiscard]] std::span<const NodeId> children(NodeId n) const {
    return {child_list_.data() + child_offsets_[n], child_list_.data() + child_offsets_[n + 1]};
  }
  [[nodiscard]] bool is_leaf(NodeId n) const { return n != root_ && children(n).empty(); }
  [[nodiscard]] std::vector<NodeId> leaves() const;

  /// Node generated by graph vertex v, or kNoNode.
  [[nodiscard]] NodeId node_of(VertexId v) const;

  /// Children before parents.
  [[nodiscard]] const std::vector<NodeId>& postorder() const noexcept { return postorder_; }

 private:
  std::vector<TreeNode> nodes_;
  NodeId root_ = kNoNode;
  std::vector<std::size_t> child_offsets_;
  std::vector<NodeId> child_list_;
  std::vector<NodeId> postorder_;
  std::vector<NodeId> vertex_to_node_;
};

/// Sublevel-set merge tree of the graph under the height function at omega.
/// Births and merges always become nodes; vertices in `retain` also get a node
/// even when regular. Vertices are swept in (height, index) order, so exact
/// height ties resolve deterministically.
MergeTree build_merge_tree(const EmbeddedGraph& graph, double omega,
                           std::span<const VertexId> retain = {});

/// Label id -> tree node.
using TreeLabeling = std::vector<NodeId>;

/// Pushes graph labels (label id -> vertex) onto the tree. Throws
/// Error(MissingNode) if a labeled vertex has no node.
TreeLabeling push_labels(const MergeTree& tree, std::span<const VertexId> graph_labels);

/// True iff every leaf carries at least one label.
bool covers_leaves(const MergeTree& tree, const TreeLabeling& labeling);

struct LcaMatrices {
  SquareMatrix<double> heights;
  SquareMatrix<VertexId> sources;  // vertex of the tree's graph
};

LcaMatrices lca_matrices(const MergeTree& tree, const TreeLabeling& labeling);

/// L-infinity norm of the difference of two induced matrices.
double labeled_interleaving_distance(const SquareMatrix<double>& m1,
                                     const SquareMatrix<double>& m2);

/// Debug export: {"nodes": [{"height", "parent", "source"}...], "root": r}.
/// The root's height, parent and source are null.
std::string tree_to_json(const MergeTree& tree);

}  // namespace lmtt
