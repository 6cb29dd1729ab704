#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "lmtt/directions.hpp"
#include "lmtt/distance.hpp"
#include "lmtt/error.hpp"
#include "support/generators.hpp"

using namespace lmtt;
using std::numbers::pi;

namespace {

EmbeddedGraph segment_at(double y) { return make_graph({{0, y}, {1, y}}, {{0, 1}}); }

EmbeddedGraph trapezoid(bool diagonal) {
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  if (diagonal) e.push_back({0, 2});
  return make_graph({{0, 0}, {4, 0}, {3, 2}, {1, 2}}, std::move(e));
}

EmbeddedGraph hexagon(bool center) {
  std::vector<Point2> p;
  std::vector<Edge> e;
  for (std::size_t k = 0; k < 6; ++k) {
    p.push_back({std::cos(k * pi / 3), std::sin(k * pi / 3)});
    e.push_back({k, (k + 1) % 6});
  }
  if (center) {
    p.push_back({0, 0});
    for (std::size_t k = 0; k < 6; ++k) e.push_back({6, k});
  }
  return make_graph(std::move(p), std::move(e));
}

}  // namespace

TEST_SUITE_BEGIN("lmtt");

TEST_CASE("direction_distance") {
  std::mt19937_64 rng(71);
  auto g = testing::random_planar_graph(rng, 10);
  PairLabeling same = build_pair_labeling(g, g);
  DirectionPartition part(critical_angles(g));
  for (double w : part.keys()) CHECK(direction_distance(same, w) == 0.0);

  PairLabeling segs = build_pair_labeling(segment_at(0), segment_at(1));
  for (double w : {0.3, 1.0, 2.0, 3.5, 5.9}) {
    CHECK(direction_distance(segs, w) == doctest::Approx(std::abs(std::sin(w))).epsilon(1e-14));
  }
  try {
    (void)direction_distance(segs, pi / 2);
    FAIL("expected OnCriticalAngle");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OnCriticalAngle);
  }
}

TEST_CASE("distance_function") {
  PairLabeling segs = build_pair_labeling(segment_at(0), segment_at(2));
  auto pieces = distance_function(segs);
  REQUIRE_FALSE(pieces.empty());
  for (const auto& piece : pieces) {
    for (const Sinusoid& s : piece.entries) {
      CHECK(s.b == 0.0);
      CHECK(std::abs(s.a) == doctest::Approx(2.0));
    }
  }

  std::mt19937_64 rng(72);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (int trial = 0; trial < 10; ++trial) {
    auto g1 = testing::random_planar_graph(rng, 6 + trial);
    auto g2 = testing::random_planar_graph(rng, 5 + trial);
    PairLabeling p = build_pair_labeling(g1, g2);
    auto f = distance_function(p);
    CHECK(f.front().start == doctest::Approx(f.back().end - kTwoPi).epsilon(1e-15));
    for (const auto& piece : f) {
      for (int k = 0; k < 3; ++k) {
        double w = piece.start + (piece.end - piece.start) * u(rng);
        CHECK(std::abs(piece.value(w) - direction_distance(p, normalize_angle(w))) <= 1e-9);
      }
    }
  }

  PairLabeling same = build_pair_labeling(trapezoid(false), trapezoid(false));
  for (const auto& piece : distance_function(same)) {
    for (const Sinusoid& s : piece.entries) CHECK(s == Sinusoid{0, 0});
  }
}

TEST_CASE("lmtt_exact closed-form and degenerate cases") {
  for (double h : {0.5, 1.0, 2.0}) {
    LmttResult r = lmtt_exact(segment_at(0), segment_at(h));
    CHECK(r.method == Method::exact);
    CHECK(r.distance == doctest::Approx(2 * h / pi).epsilon(1e-12));
  }
  CHECK(lmtt_exact(trapezoid(false), trapezoid(true)).distance <= 1e-12);
  CHECK(lmtt_exact(hexagon(false), hexagon(true)).distance <= 1e-12);
}

TEST_CASE("lmtt_approx") {
  CHECK(trapezoid_error_bound_raw(1.0, 100) == doctest::Approx(4.0 / 3.0 * pi * pi * pi / 1e4));
  CHECK(trapezoid_error_bound_raw(1.0, 100) == doctest::Approx(4.134e-3).epsilon(1e-3));

  LmttResult r = lmtt_approx(segment_at(0), segment_at(1), 1000);
  CHECK(r.method == Method::approx);
  CHECK(r.samples >= 1000);
  CHECK(std::abs(r.distance - 2 / pi) <= r.error_bound);

  std::mt19937_64 rng(73);
  auto g = testing::random_planar_graph(rng, 12);
  for (std::size_t k : {2, 7, 50}) CHECK(lmtt_approx(g, g, k).distance == 0.0);
  CHECK_THROWS_AS((void)lmtt_approx(g, g, 1), Error);
}

TEST_CASE("metric-like properties") {
  std::mt19937_64 rng(74);
  for (int trial = 0; trial < 12; ++trial) {
    auto g1 = testing::random_planar_graph(rng, 5 + trial);
    auto g2 = testing::random_planar_graph(rng, 5 + 2 * trial);
    const double d12 = lmtt_exact(g1, g2).distance;
    CHECK(lmtt_exact(g1, g1).distance == 0.0);
    CHECK(std::abs(d12 - lmtt_exact(g2, g1).distance) <= 1e-9);
    CHECK(d12 <= 2 * bounding_radius(g1, g2));
    CHECK(d12 >= 0.0);

    const double s = 0.5 + trial;
    CHECK(lmtt_exact(testing::transformed(g1, 0, {0, 0}, s), testing::transformed(g2, 0, {0, 0}, s))
              .distance == doctest::Approx(s * d12).epsilon(1e-9));
    const double rot = 0.37 * (trial + 1);
    const Point2 shift{1.5 - trial, 0.25 * trial};
    CHECK(std::abs(lmtt_exact(testing::transformed(g1, rot, shift), testing::transformed(g2, rot, shift))
                       .distance -
                   d12) <= 1e-9);
  }
}

TEST_CASE("F is continuous away from critical angles") {
  std::mt19937_64 rng(75);
  for (int trial = 0; trial < 5; ++trial) {
    auto g1 = testing::random_planar_graph(rng, 6 + trial);
    auto g2 = testing::random_planar_graph(rng, 6 + trial);
    PairLabeling p = build_pair_labeling(g1, g2);
    const std::vector<double> crit = critical_angles(p.g1, p.g2);
    const double lipschitz = 2 * bounding_radius(g1, g2);
    const int steps = 20000;
    const double dw = kTwoPi / steps;
    double prev_w = -1.0, prev_f = 0.0;
    int jumps = 0;
    for (int k = 0; k < steps; ++k) {
      const double w = (k + 0.318) * dw;
      double f = 0.0;
      try {
        f = direction_distance(p, w);
      } catch (const Error&) {
        continue;
      }
      if (prev_w >= 0.0 && std::abs(f - prev_f) > lipschitz * (w - prev_w) + 1e-9) {
        ++jumps;
        bool straddles = std::any_of(crit.begin(), crit.end(),
                                     [&](double c) { return c >= prev_w - 1e-9 && c <= w + 1e-9; });
        CHECK(straddles);
      }
      prev_w = w;
      prev_f = f;
    }
    CHECK(jumps <= static_cast<int>(crit.size()));
  }
}

TEST_SUITE_END();
