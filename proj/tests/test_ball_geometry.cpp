#include <doctest.h>

#include <cmath>

#include "lemlab/green_potential.hpp"
#include "lemlab/moebius.hpp"
#include "lemlab/potentials.hpp"
#include "lemlab/rng.hpp"

#include "batteries.hpp"

using namespace lemlab;

namespace {

CPoint c1(double re, double im = 0.0) { return CPoint{complex(re, im)}; }

GreenPotentialSpec spec1(std::initializer_list<std::pair<complex, double>> poles) {
  GreenPotentialSpec s;
  s.dimension = 1;
  for (const auto& [a, w] : poles) s.poles.push_back({CPoint{a}, w});
  return s;
}

}  // namespace

TEST_CASE("ball automorphism: base cases and the point swap") {
  // exact-zero base point acts as the identity
  CPoint zeta{complex(0.3, 0.2)};
  CPoint img = moebius_apply(CPoint{complex(0, 0)}, zeta);
  CHECK(euclidean_distance(img, zeta) <= 1e-15);

  CPoint one_var = moebius_apply(c1(0.5), c1(-0.5));
  CHECK(one_var[0].real() == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(std::abs(one_var[0].imag()) <= 1e-15);

  Rng rng(41);
  for (int n : {1, 2, 3}) {
    for (int i = 0; i < 50; ++i) {
      CPoint z = rng.ball(n, 0.95);
      CHECK(norm(moebius_apply(z, z)) <= 1e-14);
      CHECK(norm(moebius_apply(z, CPoint::zero(n)) - z) <= 1e-14);
    }
  }
  CHECK_THROWS(moebius_apply(c1(1.2), c1(0.0)));
}

TEST_CASE("involution and boundary preservation across dimensions") {
  Rng rng(42);
  for (int n : {1, 2, 3}) {
    double worst_inv = 0.0, worst_bd = 0.0;
    for (int i = 0; i < 3000; ++i) {
      CPoint z = rng.ball(n, 0.97);
      CPoint w = rng.ball(n, 0.999);
      worst_inv = std::max(worst_inv, norm(moebius_apply(z, moebius_apply(z, w)) - w));
      CPoint b = rng.unit_sphere(n);
      worst_bd = std::max(worst_bd, std::abs(norm(moebius_apply(z, b)) - 1.0));
    }
    CHECK(worst_inv <= 1e-12);
    CHECK(worst_bd <= 1e-12);
  }
}

TEST_CASE("invariant distance basics and the triangle inequality") {
  CHECK(invariant_distance(c1(0.0), c1(0.37)) == doctest::Approx(0.37).epsilon(1e-14));
  CHECK(invariant_distance(c1(0.5), c1(-0.5)) == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(invariant_distance(c1(0.3, 0.1), c1(0.3, 0.1)) == doctest::Approx(0.0));

  Rng rng(43);
  for (int n : {1, 2}) {
    for (int i = 0; i < 5000; ++i) {
      CPoint a = rng.ball(n, 0.97), b = rng.ball(n, 0.97), c = rng.ball(n, 0.97);
      double ab = invariant_distance(a, b);
      double bc = invariant_distance(b, c);
      double ac = invariant_distance(a, c);
      CHECK(ac <= ab + bc + 1e-12);
      CHECK(std::abs(ab - invariant_distance(b, a)) <= 1e-14);
    }
  }
}

TEST_CASE("invariant Green function: pole, boundary, symmetry") {
  CHECK(green_value(c1(0.0), c1(0.25)) == doctest::Approx(std::log(0.25)).epsilon(1e-14));
  CHECK(std::abs(green_value(c1(0.4), CPoint{std::polar(1.0, 1.1)})) <= 1e-12);

  Rng rng(44);
  for (int n : {1, 2}) {
    for (int i = 0; i < 2000; ++i) {
      CPoint z = rng.ball(n, 0.95), w = rng.ball(n, 0.95);
      if (euclidean_distance(z, w) < 1e-6) continue;
      CHECK(std::abs(green_value(z, w) - green_value(w, z)) <= 1e-12);
      CHECK(green_value(z, w) <= 1e-15);
    }
  }
}

TEST_CASE("boundary kernel values from the closed formula") {
  CHECK(poisson_szego(c1(0.0), c1(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(poisson_szego(c1(0.5), c1(1.0)) == doctest::Approx(3.0).epsilon(1e-14));
  CPoint z2{complex(0.5, 0), complex(0, 0)};
  CPoint b2{complex(1, 0), complex(0, 0)};
  CHECK(poisson_szego(z2, b2) == doctest::Approx(9.0).epsilon(1e-14));
  CHECK_THROWS(poisson_szego(c1(0.2), c1(0.5)));  // second argument must be unimodular
}

TEST_CASE("kernel normalization under the default quadratures") {
  SphereQuadrature quad1 = SphereQuadrature::make(1, 4096);
  Rng rng(45);
  for (double rho : {0.3, 0.5, 0.9}) {
    for (int i = 0; i < 8; ++i) {
      CPoint z = std::polar(rho, rng.uniform(0.0, 2.0 * M_PI)) * c1(1.0);
      double mean = 0.0;
      for (const CPoint& node : quad1.nodes) mean += poisson_szego(z, node);
      mean /= static_cast<double>(quad1.nodes.size());
      CHECK(std::abs(mean - 1.0) <= 1e-10);
    }
  }

  // n = 2: the plain Monte-Carlo mean meets 5e-3 at moderate |z|; at 0.9 the
  // estimator's own deviation (about 1.7e-2) dominates, checked coarsely.
  SphereQuadrature quad2 = SphereQuadrature::make(2, 200000);
  auto mean2 = [&](const CPoint& z) {
    double s = 0.0;
    for (const CPoint& node : quad2.nodes) s += poisson_szego(z, node);
    return s / static_cast<double>(quad2.nodes.size());
  };
  for (double rho : {0.3, 0.5}) {
    CPoint z{complex(rho, 0), complex(0, 0)};
    CHECK(std::abs(mean2(z) - 1.0) <= 5e-3);
    CPoint zd = rho * rng.unit_sphere(2);
    CHECK(std::abs(mean2(zd) - 1.0) <= 5e-3);
  }
  CPoint z9{complex(0.9, 0), complex(0, 0)};
  CHECK(std::abs(mean2(z9) - 1.0) <= 5e-2);
}

TEST_CASE("kernel sup bound") {
  CHECK(poisson_szego_sup_bound(0.5, 2) == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(poisson_szego_sup_bound(1e-12, 1) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(poisson_szego_sup_bound(1.0 / 3.0, 3) == doctest::Approx(8.0).epsilon(1e-12));

  Rng rng(46);
  for (int n : {1, 2}) {
    for (double rho : {0.3, 0.5, 0.9}) {
      double kappa = poisson_szego_sup_bound(rho, n);
      for (int i = 0; i < 2000; ++i) {
        CPoint z = rho * rng.unit_sphere(n);
        if (i % 2 == 0) z = rng.uniform() * z;  // interior points too
        CPoint b = rng.unit_sphere(n);
        CHECK(poisson_szego(z, b) <= kappa * (1.0 + 1e-12));
      }
    }
  }
}

TEST_CASE("inclusion bound for images of the small ball, with the collinear extremal") {
  Rng rng(47);
  for (int n : {1, 2, 3}) {
    for (int i = 0; i < 1000; ++i) {
      double sigma = rng.uniform(0.05, 0.9);
      double tau = rng.uniform(0.05, 0.9);
      if (sigma > tau) std::swap(sigma, tau);
      CPoint z = tau * std::pow(rng.uniform(), 1.0 / (2.0 * n)) * rng.unit_sphere(n);
      CPoint w = sigma * std::pow(rng.uniform(), 1.0 / (2.0 * n)) * rng.unit_sphere(n);
      double bound = (sigma + tau) / (1.0 + sigma * tau);
      CHECK(norm(moebius_apply(z, w)) <= bound + 1e-12);
    }
  }
  // collinear opposite points attain the bound
  for (int n : {1, 2}) {
    double sigma = 0.35, tau = 0.6;
    CPoint z = CPoint::zero(n), w = CPoint::zero(n);
    z[0] = complex(tau, 0.0);
    w[0] = complex(-sigma, 0.0);
    double bound = (sigma + tau) / (1.0 + sigma * tau);
    CHECK(norm(moebius_apply(z, w)) == doctest::Approx(bound).epsilon(1e-3));
  }
}

TEST_CASE("atomic invariant potentials: values, boundary decay, pulled-back mass") {
  PshOracle unit = green_potential(spec1({{complex(0, 0), 1.0}}));
  auto v = unit.eval(c1(0.25));
  REQUIRE(v.has_value());
  CHECK(*v == doctest::Approx(std::log(0.25)).epsilon(1e-14));

  PshOracle pair = green_potential(spec1({{complex(0.5, 0), 0.5}, {complex(-0.5, 0), 0.5}}));
  auto at0 = pair.eval(c1(0.0));
  REQUIRE(at0.has_value());
  CHECK(*at0 == doctest::Approx(std::log(0.5)).epsilon(1e-14));

  Rng rng(48);
  for (int i = 0; i < 64; ++i) {
    CPoint edge = std::polar(1.0 - 1e-6, rng.uniform(0.0, 2 * M_PI)) * c1(1.0);
    auto b = pair.eval(edge);
    REQUIRE(b.has_value());
    CHECK(*b >= -1e-4);
  }

  SphereQuadrature quad = SphereQuadrature::make(1, 4096);
  CHECK(invariant_theta(unit, c1(0.0), 0.5, quad) == doctest::Approx(1.0).epsilon(1e-14));
  PshOracle half = green_potential(spec1({{complex(0.5, 0), 1.0}}));
  CHECK(invariant_theta(half, c1(0.0), 0.4, quad) == doctest::Approx(0.0));
  CHECK(invariant_theta(half, c1(0.0), 0.6, quad) == doctest::Approx(1.0).epsilon(1e-14));

  PshOracle vacuous = green_potential(GreenPotentialSpec{});
  auto zero_val = vacuous.eval(c1(0.3));
  REQUIRE(zero_val.has_value());
  CHECK(*zero_val == 0.0);
  CHECK(vacuous.theta(c1(0.1), 0.5) == 0.0);
}

TEST_CASE("ball Jensen decomposition residuals") {
  SphereQuadrature quad = SphereQuadrature::make(1, 4096);

  PshOracle harmonic = numeric_oracle(1, [](const CPoint& p) -> std::optional<double> {
    return p[0].real();
  });
  CHECK(jensen_ps_residual(harmonic, c1(0.3), quad) <= 1e-8);

  PshOracle square = numeric_oracle(1, [](const CPoint& p) -> std::optional<double> {
    return norm_sq(p);
  });
  CHECK(jensen_ps_residual(square, c1(0.0), quad) <= 1e-6);

  PshOracle log1p = numeric_oracle(1, [](const CPoint& p) -> std::optional<double> {
    return std::log(norm_sq(p) + 1.0);
  });
  CHECK(jensen_ps_residual(log1p, c1(0.0), quad) <= 1e-4);
}

TEST_CASE("euclidean hull of an invariant ball encloses it") {
  Rng rng(49);
  for (int i = 0; i < 200; ++i) {
    MetricBall inv(CPoint{rng.disc(0.7)}, 0.05 + 0.4 * rng.uniform(), Metric::INVARIANT);
    MetricBall hull = euclidean_hull(inv);
    CHECK(hull.metric == Metric::EUCLIDEAN);
    for (int k = 0; k < 100; ++k) {
      CPoint p = CPoint{inv.center.z[0] + rng.disc(1.0)};
      if (norm_sq(p) >= 1.0) continue;
      if (ball_contains(inv, p)) CHECK(ball_contains(hull, p, 1e-10));
    }
  }
}
