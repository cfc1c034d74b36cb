#include <doctest.h>

#include <cmath>

#include "lemlab/cartan.hpp"
#include "lemlab/rng.hpp"

#include "batteries.hpp"

using namespace lemlab;

namespace {

double radius_power_sum(const BallCover& c, double p) { return content_sum(c, p); }

bool roots_all_covered(const std::vector<complex>& roots, const BallCover& c) {
  for (const complex& r : roots) {
    bool in = false;
    for (const MetricBall& b : c.balls) {
      if (std::abs(r - b.center.z[0]) <= b.radius * (1.0 + 1e-12)) {
        in = true;
        break;
      }
    }
    if (!in) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("loss constant of the minimum modulus principle") {
  CHECK(min_modulus_constant(0.5) == doctest::Approx(std::log(3.0) + 3.0).epsilon(1e-14));
  CHECK(min_modulus_constant(1.0 - 1e-12) ==
        doctest::Approx(std::log(1.5 * std::exp(3.0))).epsilon(1e-9));
  CHECK(min_modulus_constant(0.1) == doctest::Approx(std::log(15.0) + 3.0).epsilon(1e-14));
  CHECK_THROWS(min_modulus_constant(0.0));
  CHECK_THROWS(min_modulus_constant(1.5));
}

TEST_CASE("clustered roots collapse to a single disc") {
  std::vector<complex> roots(5, complex(0.0, 0.0));
  for (double eps : {0.05, 0.2}) {
    BallCover cover = cartan_cover(roots, eps);
    REQUIRE(cover.balls.size() == 1);
    CHECK(std::abs(cover.balls[0].center.z[0]) <= eps);
    CHECK(cover.balls[0].radius <= 2.0 * std::exp(1.0) * eps);
    CHECK(roots_all_covered(roots, cover));
    CHECK(verify_lemniscate_cover(roots, eps, cover, 256, 1.5).pass);
  }
}

TEST_CASE("root-of-unity configuration: radius budget and grid audit") {
  const int d = 8;
  std::vector<complex> roots;
  for (int k = 0; k < d; ++k) roots.push_back(std::polar(1.0, 2.0 * M_PI * k / d));
  const double eps = 0.01;
  BallCover cover = cartan_cover(roots, eps);
  CHECK(roots_all_covered(roots, cover));
  CHECK(radius_power_sum(cover, 1.0) <= 2.0 * std::exp(1.0) * eps * (1.0 + 1e-12));
  CHECK(verify_lemniscate_cover(roots, eps, cover, 384, 1.6).pass);
}

TEST_CASE("both exponent budgets hold simultaneously on random roots") {
  Rng rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    int d = 2 + static_cast<int>(rng.uniform() * 12);
    std::vector<complex> roots = lemlab_test::random_roots(rng, d, 2.0);
    double eps = 0.05 + 0.15 * rng.uniform();
    for (double alpha : {0.5, 1.0, 2.0}) {
      BallCover cover = cartan_cover(roots, eps, alpha);
      CHECK(roots_all_covered(roots, cover));
      CHECK(radius_power_sum(cover, alpha) <=
            std::exp(1.0) * std::pow(2.0 * eps, alpha) * (1.0 + 1e-12));
    }
    BallCover unit = cartan_cover(roots, eps, 1.0);
    CHECK(radius_power_sum(unit, 1.0) <= 2.0 * std::exp(1.0) * eps * (1.0 + 1e-12));
  }
  CHECK_THROWS(cartan_cover({}, 0.1));
}

TEST_CASE("grid audit accepts sufficient covers and flags undersized ones") {
  std::vector<complex> dbl(2, complex(0.0, 0.0));  // P = z^2
  BallCover good;
  good.balls = {MetricBall(CPoint{complex(0, 0)}, 0.5)};
  CHECK(verify_lemniscate_cover(dbl, 0.5, good, 256, 1.5).pass);

  BallCover tight;
  tight.balls = {MetricBall(CPoint{complex(0, 0)}, 0.3)};
  LemniscateCheck bad = verify_lemniscate_cover(dbl, 0.5, tight, 256, 1.5);
  CHECK_FALSE(bad.pass);
  CHECK(bad.violations > 0);

  std::vector<complex> affine = {complex(1.0, 0.0)};  // P = z - 1
  BallCover near_one;
  near_one.balls = {MetricBall(CPoint{complex(1, 0)}, 0.1)};
  CHECK(verify_lemniscate_cover(affine, 0.1, near_one, 256, 1.5).pass);
}

TEST_CASE("minimum modulus lower bound off small discs") {
  // zero-free f == 1: the bound degenerates to equality and still passes
  MinModulusReport trivial = min_modulus_1d({}, 1.0, 0.1, 128);
  CHECK(trivial.pass);
  CHECK(trivial.cover.balls.empty());
  CHECK(trivial.log_max == doctest::Approx(0.0).epsilon(1e-12));

  MinModulusReport one_zero = min_modulus_1d({complex(1.0, 0.0)}, 1.0, 0.1, 192);
  CHECK(one_zero.pass);
  CHECK(one_zero.violations == 0);
  CHECK(one_zero.radius_sum <= 0.2 * (1.0 + 1e-9));
  REQUIRE(one_zero.cover.balls.size() >= 1);
  for (const MetricBall& b : one_zero.cover.balls) {
    CHECK(std::abs(b.center.z[0] - complex(1.0, 0.0)) <= 0.75);
  }

  MinModulusReport two = min_modulus_1d({complex(1.0, 0.0), complex(2.0, 0.0)}, 1.0, 0.2, 192);
  CHECK(two.pass);
  CHECK(two.radius_sum <= 0.4 * (1.0 + 1e-9));
  CHECK(two.violations == 0);

  CHECK_THROWS(min_modulus_1d({complex(0.0, 0.0)}, 1.0, 0.1, 64));  // f(0) = 0
  CHECK_THROWS(min_modulus_1d({complex(1.0, 0.0)}, 1.0, 1.2, 64));
}

TEST_CASE("randomized minimum modulus battery") {
  Rng rng(52);
  for (int trial = 0; trial < 12; ++trial) {
    int d = 1 + static_cast<int>(rng.uniform() * 6);
    std::vector<complex> zeros;
    for (int i = 0; i < d; ++i) {
      zeros.push_back(std::polar(0.3 + 2.7 * rng.uniform(), rng.uniform(0.0, 2 * M_PI)));
    }
    for (double eta : {0.1, 0.3}) {
      MinModulusReport rep = min_modulus_1d(zeros, 1.0, eta, 160);
      CHECK(rep.pass);
      CHECK(rep.violations == 0);
      CHECK(rep.radius_sum <= 2.0 * eta * (1.0 + 1e-9));
    }
  }
}
