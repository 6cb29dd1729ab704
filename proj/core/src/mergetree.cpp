#include "lmtt/mergetree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "lmtt/error.hpp"

namespace lmtt {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  std::size_t unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return a;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
};

}  // namespace

MergeTree::MergeTree(std::vector<TreeNode> nodes) : nodes_(std::move(nodes)) {
  const std::size_t n = nodes_.size();
  for (NodeId i = 0; i < n; ++i) {
    const TreeNode& node = nodes_[i];
    if (node.parent == kNoNode) {
      if (root_ != kNoNode) throw Error(ErrorKind::InvalidTree, "more than one root");
      root_ = i;
      continue;
    }
    if (node.parent >= n || node.parent == i) {
      throw Error(ErrorKind::InvalidTree, "node " + std::to_string(i) + " has a bad parent");
    }
    if (nodes_[node.parent].height < node.height) {
      throw Error(ErrorKind::InvalidTree,
                  "node " + std::to_string(i) + " is higher than its parent");
    }
  }
  if (root_ == kNoNode) throw Error(ErrorKind::InvalidTree, "no root");
  if (!std::isinf(nodes_[root_].height) || nodes_[root_].height < 0.0) {
    throw Error(ErrorKind::InvalidTree, "root height must be +infinity");
  }

  child_offsets_.assign(n + 1, 0);
  for (const TreeNode& node : nodes_) {
    if (node.parent != kNoNode) ++child_offsets_[node.parent + 1];
  }
  for (std::size_t i = 0; i < n; ++i) child_offsets_[i + 1] += child_offsets_[i];
  child_list_.resize(n == 0 ? 0 : n - 1);
  std::vector<std::size_t> fill(child_offsets_.begin(), child_offsets_.end() - 1);
  for (NodeId i = 0; i < n; ++i) {
    if (nodes_[i].parent != kNoNode) child_list_[fill[nodes_[i].parent]++] = i;
  }

  // Iterative DFS from the root; anything unreached sits on a cycle.
  postorder_.reserve(n);
  std::vector<std::pair<NodeId, std::size_t>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    auto kids = children(node);
    if (next < kids.size()) {
      NodeId child = kids[next++];
      stack.emplace_back(child, 0);
    } else {
      postorder_.push_back(node);
      stack.pop_back();
    }
  }
  if (postorder_.size() != n) throw Error(ErrorKind::InvalidTree, "parent links form a cycle");

  VertexId max_source = 0;
  for (const TreeNode& node : nodes_) {
    if (node.source != kNoVertex) max_source = std::max(max_source, node.source + 1);
  }
  vertex_to_node_.assign(max_source, kNoNode);
  for (NodeId i = 0; i < n; ++i) {
    VertexId s = nodes_[i].source;
    if (s != kNoVertex && vertex_to_node_[s] == kNoNode) vertex_to_node_[s] = i;
  }
}

std::vector<NodeId> MergeTree::leaves() const {
  std::vector<NodeId> out;
  for (NodeId i = 0; i < nodes_.size(); ++i) {
    if (is_leaf(i)) out.push_back(i);
  }
  return out;
}

NodeId MergeTree::node_of(VertexId v) const {
  return v < vertex_to_node_.size() ? vertex_to_node_[v] : kNoNode;
}

MergeTree build_merge_tree(const EmbeddedGraph& graph, double omega,
                           std::span<const VertexId> retain) {
  const std::size_t n = graph.vertex_count();
  const double c = std::cos(omega);
  const double s = std::sin(omega);
  std::vector<double> h(n);
  for (VertexId v = 0; v < n; ++v) {
    Point2 p = graph.vertex(v);
    h[v] = p.x * c + p.y * s;
  }
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return h[a] != h[b] ? h[a] < h[b] : a < b; });
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;

  std::vector<char> keep(n, 0);
  for (VertexId v : retain) {
    if (v < n) keep[v] = 1;
  }

  std::vector<TreeNode> nodes;
  nodes.reserve(n + 1);
  DisjointSets sets(n);
  std::vector<NodeId> top(n, kNoNode);  // indexed by set representative
  std::vector<std::size_t> roots;

  for (VertexId v : order) {
    roots.clear();
    for (VertexId w : graph.neighbors(v)) {
      if (rank[w] < rank[v]) roots.push_back(sets.find(w));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

    if (roots.size() == 1 && !keep[v]) {
      NodeId t = top[roots[0]];
      top[sets.unite(roots[0], v)] = t;
      continue;
    }
    NodeId created = nodes.size();
    nodes.push_back({h[v], kNoNode, v});
    std::size_t rep = v;
    for (std::size_t r : roots) {
      nodes[top[r]].parent = created;
      rep = sets.unite(rep, r);
    }
    top[sets.find(v)] = created;
  }

  const NodeId root = nodes.size();
  nodes.push_back({std::numeric_limits<double>::infinity(), kNoNode, kNoVertex});
  for (VertexId v = 0; v < n; ++v) {
    if (sets.find(v) == v && top[v] != kNoNode) nodes[top[v]].parent = root;
  }
  return MergeTree(std::move(nodes));
}

TreeLabeling push_labels(const MergeTree& tree, std::span<const VertexId> graph_labels) {
  TreeLabeling out;
  out.reserve(graph_labels.size());
  for (std::size_t i = 0; i < graph_labels.size(); ++i) {
    NodeId node = tree.node_of(graph_labels[i]);
    if (node == kNoNode) {
      throw Error(ErrorKind::MissingNode, "label " + std::to_string(i) + " sits on vertex " +
                                              std::to_string(graph_labels[i]) +
                                              ", which has no tree node");
    }
    out.push_back(node);
  }
  return out;
}

bool covers_leaves(const MergeTree& tree, const TreeLabeling& labeling) {
  std::vector<char> hit(tree.size(), 0);
  for (NodeId n : labeling) {
    if (n < hit.size()) hit[n] = 1;
  }
  for (NodeId leaf : tree.leaves()) {
    if (!hit[leaf]) return false;
  }
  return true;
}

LcaMatrices lca_matrices(const MergeTree& tree, const TreeLabeling& labeling) {
  const std::size_t n = labeling.size();
  LcaMatrices out{SquareMatrix<double>(n), SquareMatrix<VertexId>(n, kNoVertex)};

  std::vector<std::vector<std::size_t>> labels_at(tree.size());
  for (std::size_t i = 0; i < n; ++i) labels_at[labeling[i]].push_back(i);

  // Label sets flow up the tree; pairs are assigned at the first node where
  // they meet, which is their LCA.
  std::vector<std::vector<std::size_t>> below(tree.size());
  for (NodeId node : tree.postorder()) {
    const double hgt = tree.node(node).height;
    const VertexId src = tree.node(node).source;
    auto assign = [&](std::size_t i, std::size_t j) {
      out.heights(i, j) = hgt;
      out.heights(j, i) = hgt;
      out.sources(i, j) = src;
      out.sources(j, i) = src;
    };
    std::vector<std::size_t> acc = std::move(labels_at[node]);
    for (std::size_t a = 0; a < acc.size(); ++a) {
      for (std::size_t b = a; b < acc.size(); ++b) assign(acc[a], acc[b]);
    }
    for (NodeId child : tree.children(node)) {
      std::vector<std::size_t>& sub = below[child];
      for (std::size_t i : acc) {
        for (std::size_t j : sub) assign(i, j);
      }
      if (acc.size() < sub.size()) std::swap(acc, sub);
      acc.insert(acc.end(), sub.begin(), sub.end());
      std::vector<std::size_t>().swap(sub);
    }
    below[node] = std::move(acc);
  }
  return out;
}

double labeled_interleaving_distance(const SquareMatrix<double>& m1,
                                     const SquareMatrix<double>& m2) {
  if (m1.size() != m2.size()) {
    throw Error(ErrorKind::InvalidArgument, "induced matrices have different label counts");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < m1.data().size(); ++k) {
    worst = std::max(worst, std::abs(m1.data()[k] - m2.data()[k]));
  }
  return worst;
}

std::string tree_to_json(const MergeTree& tree) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const TreeNode& node : tree.nodes()) {
    nlohmann::json j;
    j["height"] = std::isfinite(node.height) ? nlohmann::json(node.height) : nlohmann::json();
    j["parent"] = node.parent == kNoNode ? nlohmann::json() : nlohmann::json(node.parent);
    j["source"] = node.source == kNoVertex ? nlohmann::json() : nlohmann::json(node.source);
    nodes.push_back(std::move(j));
  }
  return nlohmann::json{{"nodes", std::move(nodes)}, {"root", tree.root()}}.dump();
}

}  // namespace lmtt
