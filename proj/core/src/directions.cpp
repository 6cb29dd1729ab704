#include "lmtt/directions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lmtt/error.hpp"

namespace lmtt {

namespace {

void push_normals(std::vector<double>& out, Point2 d) {
  double base = std::atan2(d.y, d.x);
  out.push_back(normalize_angle(base + 0.5 * std::numbers::pi));
  out.push_back(normalize_angle(base - 0.5 * std::numbers::pi));
}

void append_critical(std::vector<double>& out, const EmbeddedGraph& g) {
  for (Edge e : g.edges()) push_normals(out, g.vertex(e.u) - g.vertex(e.v));
}

void append_order(std::vector<double>& out, const EmbeddedGraph& g) {
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) push_normals(out, vs[i] - vs[j]);
  }
}

}  // namespace

double normalize_angle(double omega) {
  double r = std::fmod(omega, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

std::vector<double> dedup_angles(std::vector<double> angles) {
  for (double& a : angles) a = normalize_angle(a);
  std::sort(angles.begin(), angles.end());
  std::vector<double> out;
  out.reserve(angles.size());
  for (double a : angles) {
    if (out.empty() || a - out.back() > kAngleTolerance) out.push_back(a);
  }
  while (out.size() > 1 && out.front() + kTwoPi - out.back() <= kAngleTolerance) out.pop_back();
  return out;
}

std::vector<double> critical_angles(const EmbeddedGraph& graph) {
  std::vector<double> out;
  append_critical(out, graph);
  return dedup_angles(std::move(out));
}

std::vector<double> critical_angles(const EmbeddedGraph& g1, const EmbeddedGraph& g2) {
  std::vector<double> out;
  append_critical(out, g1);
  append_critical(out, g2);
  return dedup_angles(std::move(out));
}

std::vector<double> order_angles(const EmbeddedGraph& graph) {
  std::vector<double> out;
  append_critical(out, graph);
  append_order(out, graph);
  return dedup_angles(std::move(out));
}

std::vector<double> key_angles(std::span<const double> critical) {
  std::vector<double> keys;
  keys.reserve(critical.size());
  for (std::size_t k = 0; k < critical.size(); ++k) {
    double end = k + 1 < critical.size() ? critical[k + 1] : critical[0] + kTwoPi;
    keys.push_back(normalize_angle(0.5 * (critical[k] + end)));
  }
  return keys;
}

DirectionPartition::DirectionPartition(std::vector<double> critical)
    : critical_(dedup_angles(std::move(critical))) {
  if (critical_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "a direction partition needs at least one cut");
  }
  keys_ = key_angles(critical_);
}

Arc DirectionPartition::arc(std::size_t k) const {
  double end = k + 1 < critical_.size() ? critical_[k + 1] : critical_[0] + kTwoPi;
  return {critical_[k], end};
}

std::size_t DirectionPartition::region_of(double omega) const {
  const double w = normalize_angle(omega);
  auto it = std::upper_bound(critical_.begin(), critical_.end(), w);
  // Nearest cuts on either side, with wrap-around.
  double below = it == critical_.begin() ? critical_.back() - kTwoPi : *std::prev(it);
  double above = it == critical_.end() ? critical_.front() + kTwoPi : *it;
  if (w - below <= kAngleTolerance || above - w <= kAngleTolerance) {
    throw Error(ErrorKind::OnCriticalAngle,
                "direction " + std::to_string(w) + " lies on a critical angle");
  }
  return it == critical_.begin() ? critical_.size() - 1
                                 : static_cast<std::size_t>(it - critical_.begin()) - 1;
}

DirectionPartition critical_partition(const EmbeddedGraph& g1, const EmbeddedGraph& g2) {
  return DirectionPartition(critical_angles(g1, g2));
}

DirectionPartition refined_partition(const EmbeddedGraph& g1, const EmbeddedGraph& g2) {
  std::vector<double> cuts = order_angles(g1);
  std::vector<double> more = order_angles(g2);
  cuts.insert(cuts.end(), more.begin(), more.end());
  return DirectionPartition(std::move(cuts));
}

}  // namespace lmtt
