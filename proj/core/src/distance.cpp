#include "lmtt/distance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lmtt/directions.hpp"
#include "lmtt/error.hpp"
#include "lmtt/mergetree.hpp"

namespace lmtt {

namespace {

struct PairMatrices {
  LcaMatrices first;
  LcaMatrices second;
};

PairMatrices matrices_at(const PairLabeling& pairing, double omega) {
  MergeTree t1 = build_merge_tree(pairing.g1, omega, pairing.map1);
  MergeTree t2 = build_merge_tree(pairing.g2, omega, pairing.map2);
  return {lca_matrices(t1, push_labels(t1, pairing.map1)),
          lca_matrices(t2, push_labels(t2, pairing.map2))};
}

double distance_at(const PairLabeling& pairing, double omega) {
  PairMatrices m = matrices_at(pairing, omega);
  return labeled_interleaving_distance(m.first.heights, m.second.heights);
}

// Difference entries M1 - M2 as sinusoids, valid wherever the LCA sources
// found at omega stay fixed.
std::vector<Sinusoid> entries_at(const PairLabeling& pairing, double omega) {
  PairMatrices m = matrices_at(pairing, omega);
  const std::size_t n = pairing.size();
  std::vector<Sinusoid> out;
  out.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Point2 p = pairing.g1.vertex(m.first.sources(i, j));
      Point2 q = pairing.g2.vertex(m.second.sources(i, j));
      out.push_back({p.y - q.y, p.x - q.x});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

double direction_distance(const PairLabeling& pairing, double omega) {
  (void)critical_partition(pairing.g1, pairing.g2).region_of(omega);
  return distance_at(pairing, omega);
}

double DistanceFunctionPiece::value(double omega) const {
  return envelope_value(envelope, entries, omega);
}

std::vector<DistanceFunctionPiece> distance_function(const PairLabeling& pairing) {
  const DirectionPartition cells = refined_partition(pairing.g1, pairing.g2);
  std::vector<DistanceFunctionPiece> out;
  for (std::size_t k = 0; k < cells.arc_count(); ++k) {
    const Arc arc = cells.arc(k);
    std::vector<Sinusoid> entries = entries_at(pairing, cells.keys()[k]);
    if (!out.empty() && out.back().entries == entries) {
      out.back().end = arc.end;
    } else {
      out.push_back({arc.start, arc.end, std::move(entries), {}});
    }
  }
  for (DistanceFunctionPiece& piece : out) {
    piece.envelope = abs_upper_envelope(piece.entries, piece.start, piece.end);
  }
  return out;
}

LmttResult lmtt_exact(const EmbeddedGraph& g1, const EmbeddedGraph& g2) {
  const PairLabeling pairing = build_pair_labeling(g1, g2);
  double total = 0.0;
  for (const DistanceFunctionPiece& piece : distance_function(pairing)) {
    total += integrate_envelope(piece.envelope, piece.entries);
  }
  return {std::max(0.0, total / kTwoPi), Method::exact, 0, 0.0};
}

LmttResult lmtt_approx(const EmbeddedGraph& g1, const EmbeddedGraph& g2, std::size_t samples) {
  if (samples < 2) throw Error(ErrorKind::InvalidArgument, "approximation needs at least 2 samples");
  const PairLabeling pairing = build_pair_labeling(g1, g2);
  const DirectionPartition arcs = critical_partition(pairing.g1, pairing.g2);
  const double spacing = kTwoPi / static_cast<double>(samples);

  double total = 0.0;
  for (std::size_t k = 0; k < arcs.arc_count(); ++k) {
    const Arc arc = arcs.arc(k);
    // F may jump at the arc ends, so the rule never straddles them.
    const double inset = std::min(1e-9, 1e-3 * arc.length());
    const double lo = arc.start + inset;
    const double hi = arc.end - inset;
    const auto intervals = static_cast<std::size_t>(std::max(1.0, std::ceil(arc.length() / spacing)));
    const double step = (hi - lo) / static_cast<double>(intervals);
    double sum = 0.5 * (distance_at(pairing, lo) + distance_at(pairing, hi));
    for (std::size_t j = 1; j < intervals; ++j) {
      sum += distance_at(pairing, lo + step * static_cast<double>(j));
    }
    total += sum * step;
  }
  const double radius = bounding_radius(g1, g2);
  return {total / kTwoPi, Method::approx, samples,
          trapezoid_error_bound_raw(radius, samples) / kTwoPi};
}

double trapezoid_error_bound_raw(double radius, std::size_t samples) {
  const double k = static_cast<double>(samples);
  const double pi = std::numbers::pi;
  return 4.0 / 3.0 * radius * pi * pi * pi / (k * k);
}

}  // namespace lmtt
