#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace lmtt {

/// omega -> a sin(omega) + b cos(omega).
struct Sinusoid {
  double a = 0.0;
  double b = 0.0;

  [[nodiscard]] double operator()(double omega) const {
    return a * std::sin(omega) + b * std::cos(omega);
  }
  [[nodiscard]] double antiderivative(double omega) const {
    return -a * std::cos(omega) + b * std::sin(omega);
  }
  [[nodiscard]] double amplitude() const { return std::hypot(a, b); }

  friend bool operator==(const Sinusoid&, const Sinusoid&) = default;
  friend auto operator<=>(const Sinusoid&, const Sinusoid&) = default;
};

/// Solutions of c1(omega) = c2(omega) in the open interval (alpha, beta),
/// ascending. Identical curves never cross.
std::vector<double> crossings(Sinusoid c1, Sinusoid c2, double alpha, double beta);

/// On [start, end], sign * curves[curve] is max_k |curves[k]|.
struct EnvelopePiece {
  double start = 0.0;
  double end = 0.0;
  std::size_t curve = 0;
  int sign = 1;
};

enum class EnvelopeMethod {
  hull,   // support function of the convex hull of {+-(b, a)}
  sweep,  // all pairwise crossings, midpoint argmax per elementary interval
};

/// Upper envelope of |c| over the family on [alpha, beta] as contiguous
/// pieces. Requires a non-empty family and alpha < beta <= alpha + 2pi.
/// Curves identical on a piece resolve to the lowest index.
std::vector<EnvelopePiece> abs_upper_envelope(std::span<const Sinusoid> curves, double alpha,
                                              double beta,
                                              EnvelopeMethod method = EnvelopeMethod::hull);

/// Closed-form integral of the envelope.
double integrate_envelope(std::span<const EnvelopePiece> pieces, std::span<const Sinusoid> curves);

/// Value of the envelope at omega (which must lie inside the covered range).
double envelope_value(std::span<const EnvelopePiece> pieces, std::span<const Sinusoid> curves,
                      double omega);

}  // namespace lmtt
