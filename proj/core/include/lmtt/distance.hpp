#pragma once

#include <cstddef>
#include <vector>

#include "lmtt/envelope.hpp"
#include "lmtt/geometry.hpp"
#include "lmtt/pairing.hpp"

namespace lmtt {

enum class Method { exact, approx };

struct LmttResult {
  double distance = 0.0;
  Method method = Method::exact;
  std::size_t samples = 0;   // approx only
  double error_bound = 0.0;  // approx only, normalized like the distance
};

/// Labeled interleaving distance of the two labeled merge trees at omega.
/// Throws Error(OnCriticalAngle) when omega is perpendicular to an edge.
double direction_distance(const PairLabeling& pairing, double omega);

/// The distance function F on one cell of the refined partition: there F is
/// the upper envelope of |entries| with fixed sinusoid entries.
struct DistanceFunctionPiece {
  double start = 0.0;
  double end = 0.0;
  std::vector<Sinusoid> entries;  // distinct difference-matrix entries
  std::vector<EnvelopePiece> envelope;

  [[nodiscard]] double value(double omega) const;
};

/// F over the whole circle, ordered by angle starting at the first cut.
/// Adjacent cells with identical entries are merged.
std::vector<DistanceFunctionPiece> distance_function(const PairLabeling& pairing);

LmttResult lmtt_exact(const EmbeddedGraph& g1, const EmbeddedGraph& g2);

/// Trapezoid rule per critical arc with spacing at most 2pi / samples.
LmttResult lmtt_approx(const EmbeddedGraph& g1, const EmbeddedGraph& g2, std::size_t samples);

/// (4/3) R pi^3 / K^2: trapezoid bound on the unnormalized integral over
/// [0, 2pi] for integrands built from sinusoids of amplitude <= 2R.
double trapezoid_error_bound_raw(double radius, std::size_t samples);

}  // namespace lmtt
