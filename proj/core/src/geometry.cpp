#include "lmtt/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "lmtt/error.hpp"

namespace lmtt {

namespace {

// Extremality slack on the widest angular gap between neighbor directions.
constexpr double kGapTolerance = 1e-12;

int orientation(Point2 a, Point2 b, Point2 c) {
  double o = cross(b - a, c - a);
  return (o > 0.0) - (o < 0.0);
}

// c is collinear with a-b; is it inside the closed box of the segment?
bool within_box(Point2 a, Point2 b, Point2 c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
         c.y <= std::max(a.y, b.y);
}

bool closed_segments_meet(Point2 p1, Point2 p2, Point2 q1, Point2 q2) {
  int o1 = orientation(p1, p2, q1);
  int o2 = orientation(p1, p2, q2);
  int o3 = orientation(q1, q2, p1);
  int o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && within_box(p1, p2, q1)) return true;
  if (o2 == 0 && within_box(p1, p2, q2)) return true;
  if (o3 == 0 && within_box(q1, q2, p1)) return true;
  if (o4 == 0 && within_box(q1, q2, p2)) return true;
  return false;
}

bool edges_cross(const EmbeddedGraph& g, Edge e, Edge f) {
  auto shared = [](Edge a, Edge b) -> VertexId {
    if (a.u == b.u || a.u == b.v) return a.u;
    if (a.v == b.u || a.v == b.v) return a.v;
    return kNoVertex;
  };
  VertexId s = shared(e, f);
  if (s == kNoVertex) {
    return closed_segments_meet(g.vertex(e.u), g.vertex(e.v), g.vertex(f.u), g.vertex(f.v));
  }
  // Adjacent edges only conflict when they overlap along a common ray.
  Point2 ps = g.vertex(s);
  Point2 a = g.vertex(e.u == s ? e.v : e.u) - ps;
  Point2 b = g.vertex(f.u == s ? f.v : f.u) - ps;
  return cross(a, b) == 0.0 && dot(a, b) > 0.0;
}

std::string edge_text(EdgeId i, Edge e) {
  return "edge " + std::to_string(i) + " (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
         ")";
}

}  // namespace

EmbeddedGraph::EmbeddedGraph(std::vector<Point2> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const std::size_t n = vertices_.size();
  offsets_.assign(n + 1, 0);
  auto usable = [n](Edge e) { return e.u < n && e.v < n && e.u != e.v; };
  for (Edge e : edges_) {
    if (!usable(e)) continue;
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (Edge e : edges_) {
    if (!usable(e)) continue;
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
}

void validate(const EmbeddedGraph& graph, CrossingCheck crossings) {
  const auto& vs = graph.vertices();
  const auto& es = graph.edges();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!std::isfinite(vs[i].x) || !std::isfinite(vs[i].y)) {
      throw Error(ErrorKind::NonFinite, "vertex " + std::to_string(i) + " is not finite");
    }
  }
  if (es.empty()) throw Error(ErrorKind::NoEdges, "graph has no edges");

  std::vector<std::pair<VertexId, VertexId>> keys;
  keys.reserve(es.size());
  for (std::size_t i = 0; i < es.size(); ++i) {
    Edge e = es[i];
    if (e.u >= vs.size() || e.v >= vs.size()) {
      throw Error(ErrorKind::BadEdgeIndex, edge_text(i, e) + " references a missing vertex (" +
                                               std::to_string(vs.size()) + " vertices)");
    }
    if (e.u == e.v) throw Error(ErrorKind::SelfLoop, edge_text(i, e) + " is a self-loop");
    keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(keys.begin(), keys.end());
  if (auto dup = std::adjacent_find(keys.begin(), keys.end()); dup != keys.end()) {
    throw Error(ErrorKind::DuplicateEdge, "edge (" + std::to_string(dup->first) + ", " +
                                              std::to_string(dup->second) + ") appears twice");
  }

  std::vector<VertexId> order(vs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto by_position = [&](VertexId a, VertexId b) {
    return vs[a].x != vs[b].x ? vs[a].x < vs[b].x : vs[a].y < vs[b].y;
  };
  std::sort(order.begin(), order.end(), by_position);
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (vs[order[i]] == vs[order[i - 1]]) {
      throw Error(ErrorKind::DuplicateVertex,
                  "vertices " + std::to_string(std::min(order[i - 1], order[i])) + " and " +
                      std::to_string(std::max(order[i - 1], order[i])) + " share a position");
    }
  }

  std::vector<char> seen(vs.size(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : graph.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vs.size()) {
    auto missing = std::find(seen.begin(), seen.end(), 0) - seen.begin();
    throw Error(ErrorKind::Disconnected, "vertex " + std::to_string(missing) +
                                             " is not reachable from vertex 0");
  }

  if (crossings == CrossingCheck::check) {
    for (std::size_t i = 0; i < es.size(); ++i) {
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        if (edges_cross(graph, es[i], es[j])) {
          throw Error(ErrorKind::EdgesCross, edge_text(i, es[i]) + " meets " + edge_text(j, es[j]));
        }
      }
    }
  }
}

EmbeddedGraph make_graph(std::vector<Point2> vertices, std::vector<Edge> edges,
                         CrossingCheck crossings) {
  EmbeddedGraph g(std::move(vertices), std::move(edges));
  validate(g, crossings);
  return g;
}

bool is_extremal(const EmbeddedGraph& graph, VertexId v) {
  auto nbrs = graph.neighbors(v);
  if (nbrs.size() <= 1) return true;
  const Point2 p = graph.vertex(v);
  std::vector<double> angles;
  angles.reserve(nbrs.size());
  for (VertexId w : nbrs) {
    Point2 d = graph.vertex(w) - p;
    angles.push_back(std::atan2(d.y, d.x));
  }
  std::sort(angles.begin(), angles.end());
  // v is outside the hull iff all neighbor directions fit in an open half-plane,
  // i.e. some angular gap between consecutive directions exceeds pi.
  double widest = angles.front() + 2.0 * std::numbers::pi - angles.back();
  for (std::size_t i = 1; i < angles.size(); ++i) {
    widest = std::max(widest, angles[i] - angles[i - 1]);
  }
  return widest > std::numbers::pi + kGapTolerance;
}

std::vector<VertexId> extremal_set(const EmbeddedGraph& graph) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (is_extremal(graph, v)) out.push_back(v);
  }
  return out;
}

Point2 location_point(const EmbeddedGraph& graph, const GraphLocation& location) {
  if (const auto* vl = std::get_if<VertexLocation>(&location)) return graph.vertex(vl->vertex);
  const auto& el = std::get<EdgeLocation>(location);
  Edge e = graph.edge(el.edge);
  Point2 a = graph.vertex(e.u);
  return a + el.t * (graph.vertex(e.v) - a);
}

GraphLocation canonicalize(const EmbeddedGraph& graph, const GraphLocation& location) {
  const auto* el = std::get_if<EdgeLocation>(&location);
  if (el == nullptr) return location;
  Edge e = graph.edge(el->edge);
  if (el->t <= 0.0) return VertexLocation{e.u};
  if (el->t >= 1.0) return VertexLocation{e.v};
  Point2 q = location_point(graph, location);
  double du = distance(q, graph.vertex(e.u));
  double dv = distance(q, graph.vertex(e.v));
  if (du <= kSnapTolerance || dv <= kSnapTolerance) {
    return VertexLocation{du <= dv ? e.u : e.v};
  }
  return location;
}

Projection closest_point(Point2 p, const EmbeddedGraph& graph) {
  EdgeId best_edge = 0;
  double best_t = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (EdgeId i = 0; i < graph.edge_count(); ++i) {
    Edge e = graph.edge(i);
    Point2 a = graph.vertex(e.u);
    Point2 d = graph.vertex(e.v) - a;
    double len2 = dot(d, d);
    double t = len2 > 0.0 ? std::clamp(dot(p - a, d) / len2, 0.0, 1.0) : 0.0;
    double dist = distance(p, a + t * d);
    if (dist < best) {
      best = dist;
      best_edge = i;
      best_t = t;
    }
  }
  GraphLocation loc = canonicalize(graph, EdgeLocation{best_edge, best_t});
  return {loc, distance(p, location_point(graph, loc))};
}

Subdivision subdivide(const EmbeddedGraph& graph, std::span<const GraphLocation> locations) {
  std::vector<Point2> vertices = graph.vertices();
  std::vector<Edge> edges = graph.edges();
  std::vector<VertexId> result(locations.size(), kNoVertex);

  // edge -> (t, location index)
  std::map<EdgeId, std::vector<std::pair<double, std::size_t>>> splits;
  for (std::size_t i = 0; i < locations.size(); ++i) {
    GraphLocation loc = canonicalize(graph, locations[i]);
    if (const auto* vl = std::get_if<VertexLocation>(&loc)) {
      result[i] = vl->vertex;
    } else {
      const auto& el = std::get<EdgeLocation>(loc);
      splits[el.edge].emplace_back(el.t, i);
    }
  }

  for (auto& [edge_id, points] : splits) {
    std::sort(points.begin(), points.end());
    const Edge e = graph.edge(edge_id);
    const Point2 a = graph.vertex(e.u);
    const Point2 d = graph.vertex(e.v) - a;
    const double len = norm(d);
    std::vector<VertexId> chain{e.u};
    double last_t = -1.0;
    for (auto [t, idx] : points) {
      if (chain.size() > 1 && (t - last_t) * len <= kSnapTolerance) {
        result[idx] = chain.back();
        continue;
      }
      vertices.push_back(a + t * d);
      chain.push_back(vertices.size() - 1);
      result[idx] = chain.back();
      last_t = t;
    }
    chain.push_back(e.v);
    edges[edge_id] = Edge{chain[0], chain[1]};
    for (std::size_t k = 1; k + 1 < chain.size(); ++k) edges.push_back(Edge{chain[k], chain[k + 1]});
  }
  return {EmbeddedGraph(std::move(vertices), std::move(edges)), std::move(result)};
}

std::pair<EmbeddedGraph, VertexId> subdivide(const EmbeddedGraph& graph,
                                             const GraphLocation& location) {
  auto sub = subdivide(graph, std::span<const GraphLocation>(&location, 1));
  return {std::move(sub.graph), sub.vertices.front()};
}

void BoundingBox::extend(Point2 p) {
  min.x = std::min(min.x, p.x);
  min.y = std::min(min.y, p.y);
  max.x = std::max(max.x, p.x);
  max.y = std::max(max.y, p.y);
}

BoundingBox bounding_box(const EmbeddedGraph& graph) {
  BoundingBox box;
  for (Point2 p : graph.vertices()) box.extend(p);
  return box;
}

double bounding_radius(const EmbeddedGraph& g1, const EmbeddedGraph& g2) {
  BoundingBox box = bounding_box(g1);
  for (Point2 p : g2.vertices()) box.extend(p);
  return box.half_diagonal();
}

}  // namespace lmtt
