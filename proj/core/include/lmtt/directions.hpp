#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "lmtt/geometry.hpp"

namespace lmtt {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Angles closer than this (radians) are the same direction.
inline constexpr double kAngleTolerance = 1e-12;

/// Maps any finite angle into [0, 2pi).
double normalize_angle(double omega);

/// Sorts and merges angles closer than kAngleTolerance, including across the
/// 0 / 2pi seam. Input need not be normalized.
std::vector<double> dedup_angles(std::vector<double> angles);

/// Both directions perpendicular to each edge, sorted and deduplicated.
std::vector<double> critical_angles(const EmbeddedGraph& graph);
std::vector<double> critical_angles(const EmbeddedGraph& g1, const EmbeddedGraph& g2);

/// Directions perpendicular to p - q for every vertex pair of the graph. Away
/// from these the sort order of all vertex heights is fixed. Always a superset
/// of critical_angles(graph).
std::vector<double> order_angles(const EmbeddedGraph& graph);

/// Circular midpoint of every arc between consecutive critical angles; the
/// single-angle case yields its antipode.
std::vector<double> key_angles(std::span<const double> critical);

struct Arc {
  double start = 0.0;
  double end = 0.0;  // > start; may exceed 2pi for the wrap-around arc

  [[nodiscard]] double length() const { return end - start; }
};

/// Subdivision of the circle by a sorted set of cut angles. Arc k runs from
/// critical()[k] to the next cut counter-clockwise and is represented by
/// keys()[k].
class DirectionPartition {
 public:
  /// `critical` is deduplicated internally; must be non-empty.
  explicit DirectionPartition(std::vector<double> critical);

  [[nodiscard]] const std::vector<double>& critical() const noexcept { return critical_; }
  [[nodiscard]] const std::vector<double>& keys() const noexcept { return keys_; }
  [[nodiscard]] std::size_t arc_count() const noexcept { return critical_.size(); }
  [[nodiscard]] Arc arc(std::size_t k) const;

  /// Index of the open arc containing omega. Throws Error(OnCriticalAngle)
  /// when omega is within kAngleTolerance of a cut.
  [[nodiscard]] std::size_t region_of(double omega) const;

 private:
  std::vector<double> critical_;
  std::vector<double> keys_;
};

/// Partition by Crit(G1) u Crit(G2).
DirectionPartition critical_partition(const EmbeddedGraph& g1, const EmbeddedGraph& g2);

/// Partition by the order angles of both graphs; inside each arc the merge
/// trees of both graphs and their LCA sources are constant.
DirectionPartition refined_partition(const EmbeddedGraph& g1, const EmbeddedGraph& g2);

}  // namespace lmtt
