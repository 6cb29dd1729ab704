#include "lmtt/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lmtt/directions.hpp"
#include "lmtt/error.hpp"

namespace lmtt {

namespace {

// Events closer than this are one event.
constexpr double kEventTolerance = 1e-12;

struct Candidate {
  double x = 0.0;  // b
  double y = 0.0;  // a
  std::size_t curve = 0;
  int sign = 1;
};

double signed_value(const Candidate& c, double cs, double sn) { return c.x * cs + c.y * sn; }

// Counter-clockwise hull without collinear points (Andrew's monotone chain).
std::vector<Candidate> convex_hull(std::vector<Candidate> pts) {
  std::sort(pts.begin(), pts.end(), [](const Candidate& p, const Candidate& q) {
    if (p.x != q.x) return p.x < q.x;
    if (p.y != q.y) return p.y < q.y;
    if (p.curve != q.curve) return p.curve < q.curve;
    return p.sign > q.sign;
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Candidate& p, const Candidate& q) {
                          return p.x == q.x && p.y == q.y;
                        }),
            pts.end());
  if (pts.size() < 3) return pts;

  auto turn = [](const Candidate& o, const Candidate& a, const Candidate& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::vector<Candidate> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Candidate& p : pts) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const Candidate& p = pts[i];
    while (k >= lower && turn(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

template <typename Value>
std::vector<EnvelopePiece> pieces_from_cuts(std::vector<double> cuts, double alpha, double beta,
                                            Value&& argmax) {
  cuts.push_back(alpha);
  cuts.push_back(beta);
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> kept;
  kept.reserve(cuts.size());
  for (double c : cuts) {
    if (c < alpha || c > beta) continue;
    if (kept.empty() || c - kept.back() > kEventTolerance) kept.push_back(c);
  }
  if (kept.back() != beta) {
    if (kept.size() > 1) kept.back() = beta;
    else kept.push_back(beta);
  }

  std::vector<EnvelopePiece> out;
  for (std::size_t i = 0; i + 1 < kept.size(); ++i) {
    const double mid = 0.5 * (kept[i] + kept[i + 1]);
    auto [curve, sign] = argmax(mid);
    if (!out.empty() && out.back().curve == curve && out.back().sign == sign) {
      out.back().end = kept[i + 1];
    } else {
      out.push_back({kept[i], kept[i + 1], curve, sign});
    }
  }
  return out;
}

std::vector<EnvelopePiece> hull_envelope(std::span<const Sinusoid> curves, double alpha,
                                         double beta) {
  std::vector<Candidate> pts;
  pts.reserve(2 * curves.size());
  for (std::size_t k = 0; k < curves.size(); ++k) {
    const Sinusoid c = curves[k];
    if (c.a == 0.0 && c.b == 0.0) continue;
    pts.push_back({c.b, c.a, k, 1});
    pts.push_back({-c.b, -c.a, k, -1});
  }
  if (pts.empty()) return {{alpha, beta, 0, 1}};

  const std::vector<Candidate> hull = convex_hull(std::move(pts));
  const std::size_t h = hull.size();

  // Vertex i+1 maximizes <q, u> between the outward normals of its two edges.
  std::vector<double> cuts;
  for (std::size_t i = 0; i < h; ++i) {
    const Candidate& p = hull[i];
    const Candidate& q = hull[(i + 1) % h];
    double normal = std::atan2(-(q.x - p.x), q.y - p.y);
    double shifted = alpha + normalize_angle(normal - alpha);
    if (shifted > alpha && shifted < beta) cuts.push_back(shifted);
  }

  auto argmax = [&](double omega) {
    const double cs = std::cos(omega);
    const double sn = std::sin(omega);
    std::size_t best = 0;
    double best_value = signed_value(hull[0], cs, sn);
    for (std::size_t i = 1; i < h; ++i) {
      double v = signed_value(hull[i], cs, sn);
      if (v > best_value || (v == best_value && hull[i].curve < hull[best].curve)) {
        best = i;
        best_value = v;
      }
    }
    return std::pair{hull[best].curve, hull[best].sign};
  };
  return pieces_from_cuts(std::move(cuts), alpha, beta, argmax);
}

std::vector<EnvelopePiece> sweep_envelope(std::span<const Sinusoid> curves, double alpha,
                                          double beta) {
  std::vector<double> cuts;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const Sinusoid ci = curves[i];
    auto zeros = crossings(ci, Sinusoid{-ci.a, -ci.b}, alpha, beta);
    cuts.insert(cuts.end(), zeros.begin(), zeros.end());
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      const Sinusoid cj = curves[j];
      auto same = crossings(ci, cj, alpha, beta);
      auto opposite = crossings(ci, Sinusoid{-cj.a, -cj.b}, alpha, beta);
      cuts.insert(cuts.end(), same.begin(), same.end());
      cuts.insert(cuts.end(), opposite.begin(), opposite.end());
    }
  }
  auto argmax = [&](double omega) {
    std::size_t best = 0;
    double best_value = std::abs(curves[0](omega));
    for (std::size_t k = 1; k < curves.size(); ++k) {
      double v = std::abs(curves[k](omega));
      if (v > best_value) {
        best = k;
        best_value = v;
      }
    }
    return std::pair{best, curves[best](omega) < 0.0 ? -1 : 1};
  };
  return pieces_from_cuts(std::move(cuts), alpha, beta, argmax);
}

}  // namespace

std::vector<double> crossings(Sinusoid c1, Sinusoid c2, double alpha, double beta) {
  const double da = c1.a - c2.a;
  const double db = c1.b - c2.b;
  const double scale =
      std::max({1.0, std::abs(c1.a), std::abs(c1.b), std::abs(c2.a), std::abs(c2.b)});
  if (std::hypot(da, db) <= 1e-15 * scale) return {};
  // da sin w + db cos w = 0  <=>  (cos w, sin w) parallel to (da, -db).
  const double root = std::atan2(-db, da);
  const double pi = std::numbers::pi;
  std::vector<double> out;
  for (double w = root + pi * (std::floor((alpha - root) / pi) + 1.0); w < beta; w += pi) {
    if (w > alpha) out.push_back(w);
  }
  return out;
}

std::vector<EnvelopePiece> abs_upper_envelope(std::span<const Sinusoid> curves, double alpha,
                                              double beta, EnvelopeMethod method) {
  if (curves.empty()) throw Error(ErrorKind::InvalidArgument, "envelope of an empty family");
  if (!(alpha < beta) || beta - alpha > kTwoPi + kEventTolerance) {
    throw Error(ErrorKind::InvalidArgument, "envelope interval must satisfy alpha < beta <= alpha + 2pi");
  }
  return method == EnvelopeMethod::hull ? hull_envelope(curves, alpha, beta)
                                        : sweep_envelope(curves, alpha, beta);
}

double integrate_envelope(std::span<const EnvelopePiece> pieces, std::span<const Sinusoid> curves) {
  double total = 0.0;
  for (const EnvelopePiece& p : pieces) {
    const Sinusoid c = curves[p.curve];
    total += p.sign * (c.antiderivative(p.end) - c.antiderivative(p.start));
  }
  return total;
}

double envelope_value(std::span<const EnvelopePiece> pieces, std::span<const Sinusoid> curves,
                      double omega) {
  auto it = std::upper_bound(pieces.begin(), pieces.end(), omega,
                             [](double w, const EnvelopePiece& p) { return w < p.start; });
  const EnvelopePiece& p = it == pieces.begin() ? pieces.front() : *std::prev(it);
  return p.sign * curves[p.curve](omega);
}

}  // namespace lmtt
