#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace lmtt {

using VertexId = std::size_t;
using EdgeId = std::size_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// Projections closer than this to an existing vertex reuse the vertex.
inline constexpr double kSnapTolerance = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend Point2 operator+(Point2 p, Point2 q) { return {p.x + q.x, p.y + q.y}; }
  friend Point2 operator-(Point2 p, Point2 q) { return {p.x - q.x, p.y - q.y}; }
  friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
};

inline double dot(Point2 p, Point2 q) { return p.x * q.x + p.y * q.y; }
inline double cross(Point2 p, Point2 q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 p, Point2 q) { return norm(p - q); }

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Straight-line graph in the plane. Construction does not validate; use
/// make_graph() or validate() before handing a graph to the pipeline.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;
  EmbeddedGraph(std::vector<Point2> vertices, std::vector<Edge> edges);

  [[nodiscard]] std::size_t vertex_count() const noexcept { return vertices_.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] const std::vector<Point2>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] Point2 vertex(VertexId v) const { return vertices_[v]; }
  [[nodiscard]] Edge edge(EdgeId e) const { return edges_[e]; }

  /// Neighbors of v through edges whose endpoints are in range.
  [[nodiscard]] std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  [[nodiscard]] std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

 private:
  std::vector<Point2> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
};

enum class CrossingCheck { skip, check };

/// Throws lmtt::Error when an invariant of EmbeddedGraph is violated: finite
/// coordinates, at least one edge, in-range indices, no self-loops or duplicate
/// edges, distinct vertex positions, connectivity. With CrossingCheck::check,
/// two edges meeting anywhere other than a shared endpoint are also rejected.
void validate(const EmbeddedGraph& graph, CrossingCheck crossings = CrossingCheck::skip);

/// Builds and validates in one step.
EmbeddedGraph make_graph(std::vector<Point2> vertices, std::vector<Edge> edges,
                         CrossingCheck crossings = CrossingCheck::skip);

/// True iff the vertex lies outside the closed convex hull of its neighbors.
bool is_extremal(const EmbeddedGraph& graph, VertexId v);

/// Extremal vertices in ascending index order.
std::vector<VertexId> extremal_set(const EmbeddedGraph& graph);

struct VertexLocation {
  VertexId vertex = 0;
  friend bool operator==(const VertexLocation&, const VertexLocation&) = default;
};

/// Point at parameter t along edge (u, v), measured from u. Canonical edge
/// locations have t strictly inside (0, 1) and lie farther than kSnapTolerance
/// from both endpoints.
struct EdgeLocation {
  EdgeId edge = 0;
  double t = 0.0;
  friend bool operator==(const EdgeLocation&, const EdgeLocation&) = default;
};

using GraphLocation = std::variant<VertexLocation, EdgeLocation>;

Point2 location_point(const EmbeddedGraph& graph, const GraphLocation& location);

/// Rewrites edge locations at (or within kSnapTolerance of) an endpoint into
/// the vertex form.
GraphLocation canonicalize(const EmbeddedGraph& graph, const GraphLocation& location);

struct Projection {
  GraphLocation location;
  double distance = 0.0;
};

/// Closest point of the embedded graph to p. Ties go to the lowest edge index;
/// the reported distance is measured to the returned (canonical) location.
Projection closest_point(Point2 p, const EmbeddedGraph& graph);

struct Subdivision {
  EmbeddedGraph graph;
  std::vector<VertexId> vertices;  // one per input location
};

/// Splits edges at every edge location. Existing vertex indices are preserved,
/// new vertices are appended, and locations within kSnapTolerance of each other
/// on the same edge share a vertex.
Subdivision subdivide(const EmbeddedGraph& graph, std::span<const GraphLocation> locations);

std::pair<EmbeddedGraph, VertexId> subdivide(const EmbeddedGraph& graph,
                                             const GraphLocation& location);

/// Height of p in direction omega: x cos(omega) + y sin(omega).
inline double height(Point2 p, double omega) {
  return p.x * std::cos(omega) + p.y * std::sin(omega);
}

struct BoundingBox {
  Point2 min{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Point2 max{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};

  void extend(Point2 p);
  [[nodiscard]] double half_diagonal() const { return 0.5 * distance(min, max); }
};

BoundingBox bounding_box(const EmbeddedGraph& graph);

/// Radius of a circle containing both graphs: half the diagonal of their joint
/// axis-aligned bounding box.
double bounding_radius(const EmbeddedGraph& g1, const EmbeddedGraph& g2);

}  // namespace lmtt
