#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "lmtt/envelope.hpp"
#include "support/generators.hpp"

using namespace lmtt;
using std::numbers::pi;

namespace {

const Sinusoid kSin{1.0, 0.0};
const Sinusoid kCos{0.0, 1.0};

void check_contiguous(const std::vector<EnvelopePiece>& pieces, double alpha, double beta) {
  REQUIRE_FALSE(pieces.empty());
  CHECK(pieces.front().start == alpha);
  CHECK(pieces.back().end == beta);
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    CHECK(pieces[i].start == pieces[i - 1].end);
    CHECK(pieces[i].start < pieces[i].end);
  }
}

}  // namespace

TEST_SUITE_BEGIN("envelope");

TEST_CASE("crossings") {
  auto sc = crossings(kSin, kCos, 0.0, 2 * pi);
  REQUIRE(sc.size() == 2);
  CHECK(sc[0] == doctest::Approx(pi / 4));
  CHECK(sc[1] == doctest::Approx(5 * pi / 4));

  CHECK(crossings(kSin, kSin, 0.0, 2 * pi).empty());

  auto neg = crossings(kSin, {-1.0, 0.0}, 0.0, 2 * pi);
  REQUIRE(neg.size() == 1);
  CHECK(neg[0] == doctest::Approx(pi));

  SUBCASE("open interval, arbitrary offset") {
    CHECK(crossings(kSin, kCos, pi / 4, 5 * pi / 4).empty());
    auto wrapped = crossings(kSin, kCos, 3.0, 3.0 + 2 * pi);
    REQUIRE(wrapped.size() == 2);
    CHECK(wrapped[0] == doctest::Approx(5 * pi / 4));
    CHECK(wrapped[1] == doctest::Approx(pi / 4 + 2 * pi));
  }

  SUBCASE("every returned root is a root; a naive arctan of the ratio is not") {
    std::mt19937_64 rng(61);
    auto fam = testing::random_family(rng, 40);
    for (std::size_t i = 0; i + 1 < fam.size(); ++i) {
      Sinusoid c1 = fam[i], c2 = fam[i + 1];
      auto roots = crossings(c1, c2, -1.0, -1.0 + 2 * pi);
      CHECK(roots.size() == 2);
      for (double w : roots) CHECK(std::abs(c1(w) - c2(w)) < 1e-12);
    }
    const double naive = std::atan((kSin.a - kCos.a) / (kSin.b - kCos.b));
    CHECK(std::abs(kSin(naive) - kCos(naive)) > 1.0);
    CHECK(std::abs(kSin(naive + pi) - kCos(naive + pi)) > 1.0);
  }
}

TEST_CASE("abs_upper_envelope examples") {
  for (EnvelopeMethod method : {EnvelopeMethod::hull, EnvelopeMethod::sweep}) {
    CAPTURE(static_cast<int>(method));
    std::vector<Sinusoid> one{kSin};
    auto p = abs_upper_envelope(one, pi / 4, pi / 2, method);
    REQUIRE(p.size() == 1);
    CHECK(p[0].sign == 1);
    check_contiguous(p, pi / 4, pi / 2);

    std::vector<Sinusoid> two{kSin, kCos};
    p = abs_upper_envelope(two, 0.0, pi / 2, method);
    REQUIRE(p.size() == 2);
    CHECK(p[0].curve == 1);
    CHECK(p[1].curve == 0);
    CHECK(p[0].end == doctest::Approx(pi / 4));
    check_contiguous(p, 0.0, pi / 2);
    CHECK(integrate_envelope(p, two) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    p = abs_upper_envelope(one, 3 * pi / 4, 5 * pi / 4, method);
    REQUIRE(p.size() == 2);
    CHECK(p[0].sign == 1);
    CHECK(p[1].sign == -1);
    CHECK(p[0].end == doctest::Approx(pi));

    SUBCASE("identical curves resolve to the lowest index") {
      std::vector<Sinusoid> dup{kCos, kSin, kSin};
      auto d = abs_upper_envelope(dup, pi / 3, pi / 2, method);
      REQUIRE(d.size() == 1);
      CHECK(d[0].curve == 1);
    }
    SUBCASE("all-zero family") {
      std::vector<Sinusoid> zeros{{0, 0}, {0, 0}};
      auto z = abs_upper_envelope(zeros, 0.1, 1.0, method);
      CHECK(integrate_envelope(z, zeros) == 0.0);
    }
  }
}

TEST_CASE("integrate_envelope closed forms") {
  std::vector<Sinusoid> fam{kSin, kCos};
  std::vector<EnvelopePiece> sin_half{{0.0, pi, 0, 1}};
  CHECK(integrate_envelope(sin_half, fam) == doctest::Approx(2.0).epsilon(1e-15));
  std::vector<EnvelopePiece> cos_quarter{{0.0, pi / 2, 1, 1}};
  CHECK(integrate_envelope(cos_quarter, fam) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("single curve matches the amplitude-phase closed form") {
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> u(0.0, 2 * pi);
  for (int trial = 0; trial < 100; ++trial) {
    Sinusoid c = testing::random_family(rng, 1)[0];
    double alpha = u(rng), beta = alpha + u(rng);
    std::vector<Sinusoid> one{c};
    auto p = abs_upper_envelope(one, alpha, beta);
    // c = A sin(w + phi); integral of |sin| over [x, y] by counting half periods.
    const double amp = c.amplitude(), phi = std::atan2(c.b, c.a);
    auto prim = [](double x) {
      double k = std::floor(x / pi);
      return 2.0 * k + (1.0 - std::cos(x - k * pi));
    };
    const double expected = amp * (prim(beta + phi) - prim(alpha + phi));
    CHECK(integrate_envelope(p, one) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("pointwise brute force on random families") {
  std::mt19937_64 rng(63);
  std::uniform_int_distribution<std::size_t> count(1, 50);
  std::uniform_real_distribution<double> u(0.0, 2 * pi);
  for (int trial = 0; trial < 60; ++trial) {
    auto fam = testing::random_family(rng, count(rng));
    double alpha = u(rng) - pi, beta = alpha + 0.05 + (2 * pi - 0.05) * (trial % 3 == 0 ? 1.0 : 0.5);
    for (EnvelopeMethod method : {EnvelopeMethod::hull, EnvelopeMethod::sweep}) {
      auto p = abs_upper_envelope(fam, alpha, beta, method);
      check_contiguous(p, alpha, beta);
      for (int k = 0; k < 1000; ++k) {
        double w = alpha + (beta - alpha) * (k + 0.5) / 1000.0;
        CHECK(std::abs(envelope_value(p, fam, w) - testing::brute_abs_max(fam, w)) <= 1e-9);
      }
      for (const auto& piece : p) {
        double mid = 0.5 * (piece.start + piece.end);
        CHECK(piece.sign * fam[piece.curve](mid) >= 0.0);
      }
    }
    auto h = abs_upper_envelope(fam, alpha, beta, EnvelopeMethod::hull);
    auto s = abs_upper_envelope(fam, alpha, beta, EnvelopeMethod::sweep);
    CHECK(integrate_envelope(h, fam) == doctest::Approx(integrate_envelope(s, fam)).epsilon(1e-12));
  }
}

TEST_CASE("integral against trapezoid quadrature") {
  std::mt19937_64 rng(64);
  std::uniform_int_distribution<std::size_t> count(1, 50);
  std::uniform_real_distribution<double> u(0.0, 2 * pi);
  for (int trial = 0; trial < 10; ++trial) {
    auto fam = testing::random_family(rng, count(rng));
    double alpha = u(rng), beta = alpha + u(rng);
    auto p = abs_upper_envelope(fam, alpha, beta);
    double q = testing::quadrature_abs_max(fam, alpha, beta, 200000);
    CHECK(integrate_envelope(p, fam) == doctest::Approx(q).epsilon(1e-6));
  }
}

TEST_SUITE_END();
