#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lemlab/moebius.hpp"
#include "lemlab/potentials.hpp"
#include "lemlab/rng.hpp"
#include "lemlab/three_circle.hpp"

#include "batteries.hpp"

using namespace lemlab;

TEST_CASE("three-circle exponents: closed forms and domain") {
  CHECK(three_circle_max_exponent(0.1, 0.5) ==
        doctest::Approx(std::log(5.0) / std::log(10.0)).epsilon(1e-14));
  CHECK(three_circle_min_exponent(0.0, 1.0 / (2.0 * std::exp(1.0))) ==
        doctest::Approx(1.0 / (std::log(2.0) + 1.0)).epsilon(1e-14));
  CHECK(three_circle_min_exponent(0.2, 0.2) ==
        doctest::Approx(1.0 / std::log(1.04 / 0.4)).epsilon(1e-14));
  CHECK_THROWS(three_circle_max_exponent(0.0, 0.5));
  CHECK_THROWS(three_circle_max_exponent(0.5, 0.1));
  CHECK_THROWS(three_circle_min_exponent(0.3, 1.0));
  CHECK_THROWS(three_circle_min_exponent(-0.1, 0.5));
}

TEST_CASE("min exponent grows in both radii") {
  for (double sigma : {0.05, 0.1, 0.2, 0.3}) {
    for (double tau : {0.35, 0.45, 0.55, 0.65}) {
      CHECK(three_circle_min_exponent(sigma, tau) < three_circle_min_exponent(sigma + 0.04, tau));
      CHECK(three_circle_min_exponent(sigma, tau) < three_circle_min_exponent(sigma, tau + 0.04));
    }
  }
}

TEST_CASE("interpolation bound is tight for the radial log") {
  PshOracle V = log_poly_potential({{complex(0, 0), 1}}, 1.0);
  Rng rng(91);
  std::vector<CPoint> samples = lemlab_test::sample_disc(rng, 300, 0.5);
  HadamardCheck chk = hadamard_max_check(V, 0.1, 0.5, 1.0, samples);
  CHECK(chk.pass);
  CHECK(chk.violations == 0);
  CHECK(chk.S_sigma == doctest::Approx(std::log(0.1)).epsilon(1e-10));
  CHECK(chk.S_full == doctest::Approx(0.0));
  // equality structure: the interpolated bound coincides with V off B_sigma
  CHECK(chk.worst_margin == doctest::Approx(0.0));
}

TEST_CASE("interpolation bound for constants and a fixed quadratic") {
  Rng rng(92);
  std::vector<CPoint> samples = lemlab_test::sample_disc(rng, 200, 0.4);

  PshOracle constant = numeric_oracle(1, [](const CPoint&) -> std::optional<double> {
    return -2.5;
  });
  HadamardCheck flat = hadamard_max_check(constant, 0.2, 0.4, 1.0, samples);
  CHECK(flat.pass);
  CHECK(flat.worst_margin == doctest::Approx(0.0));

  PshOracle quad = log_poly_potential({{complex(1, 0), 1}, {complex(-1, 0), 1}}, 1.0);
  HadamardCheck chk = hadamard_max_check(quad, 0.2, 0.4, 1.0, samples);
  CHECK(chk.pass);
  CHECK(chk.violations == 0);
}

TEST_CASE("interpolation battery over random polynomial potentials") {
  Rng rng(93);
  for (int trial = 0; trial < 50; ++trial) {
    int degree = 2 + static_cast<int>(rng.uniform() * 7.0);
    PshOracle V = log_poly_potential(lemlab_test::simple_factors(lemlab_test::random_roots(rng, degree, 2.0)), 1.0);
    double sigma = 0.05 + 0.25 * rng.uniform();
    double tau = sigma + 0.1 + (0.65 - sigma - 0.1) * rng.uniform();
    std::vector<CPoint> samples = lemlab_test::sample_disc(rng, 100, tau);
    HadamardCheck chk = hadamard_max_check(V, sigma, tau, 1.0, samples);
    CHECK(chk.pass);
    CHECK(chk.violations == 0);
  }
}

TEST_CASE("density bound: radial member, smooth member, saturating member") {
  const double sigma = 0.1, tau = 0.5;
  const double nu = three_circle_min_exponent(sigma, tau);

  PshOracle radial = log_poly_potential({{complex(0, 0), 1}}, 1.0);
  LelongBoundCheck a = lelong_bound_check(radial, CPoint::zero(1), sigma, tau, 1.0);
  CHECK(a.pass);
  CHECK(a.estimate == doctest::Approx(1.0 / std::log(10.0)).epsilon(1e-6));
  CHECK(a.estimate <= a.nu + 0.05);

  PshOracle smooth = numeric_oracle(1, [](const CPoint& p) -> std::optional<double> {
    return norm_sq(p) - 1.0;
  });
  LelongBoundCheck b = lelong_bound_check(smooth, CPoint{complex(0.3, 0)}, sigma, tau, 1.0);
  CHECK(b.pass);
  CHECK(std::abs(b.estimate) <= 0.05);

  // u = 1 + nu log d_B(., z0) has density exactly nu at z0 and unit sup gap
  CPoint z0{complex(tau, 0)};
  PshOracle extremal = numeric_oracle(1, [nu, z0](const CPoint& p) -> std::optional<double> {
    double d = invariant_distance(p, z0);
    if (d < 1e-15) return std::nullopt;
    return 1.0 + nu * std::log(d);
  });
  LelongBoundCheck c = lelong_bound_check(extremal, z0, sigma, tau, 1.0);
  CHECK(c.pass);
  CHECK(c.r == doctest::Approx((sigma + tau) / (1.0 + sigma * tau)).epsilon(1e-14));
  CHECK(c.estimate >= nu - 0.1);
  CHECK(c.estimate <= nu + 0.05);
  CHECK(c.pointwise_bound == doctest::Approx(nu).epsilon(1e-3));
}

TEST_CASE("density battery stays under the exponent") {
  Rng rng(94);
  for (int trial = 0; trial < 12; ++trial) {
    double sigma = 0.05 + 0.2 * rng.uniform();
    double tau = sigma + 0.15 + 0.2 * rng.uniform();
    int degree = 1 + static_cast<int>(rng.uniform() * 5.0);
    PshOracle V = log_poly_potential(lemlab_test::simple_factors(lemlab_test::random_roots(rng, degree, 1.5)), 1.0);
    CPoint z{rng.disc(tau)};
    LelongBoundCheck chk = lelong_bound_check(V, z, sigma, tau, 1.0);
    CHECK(chk.estimate <= chk.nu + 0.05);
    CHECK(chk.pass);
  }
}

TEST_CASE("three-sphere minimum principle on the radial log") {
  SphereQuadrature quad = SphereQuadrature::make(1, 4096);
  Rng rng(95);
  std::vector<CPoint> samples = lemlab_test::sample_disc(rng, 400, 0.5);
  samples.push_back(CPoint{complex(0.01, 0.0)});
  samples.push_back(CPoint{complex(-0.02, 0.015)});

  PshOracle V = log_poly_potential({{complex(0, 0), 1}}, 1.0);
  ThreeCircleParams params;
  ThreeCircleMinReport rep = three_circle_min_principle(V, samples, params, quad);

  CHECK(rep.pass);
  CHECK(rep.nu == doctest::Approx(1.0 / std::log(1.75)).epsilon(1e-12));
  CHECK(rep.r_star == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(rep.rho == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(rep.kappa == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(rep.S_sigma == doctest::Approx(std::log(0.1)).epsilon(1e-10));
  CHECK(rep.S_full == doctest::Approx(0.0));
  CHECK(rep.s == doctest::Approx(0.9));
  CHECK(rep.violations == 0);
  CHECK(rep.content_pass);
  // the exceptional set concentrates at the pole: pullback radius eta/6
  CHECK(!rep.exclusion.bad_points.empty());
  for (const BadPoint& bp : rep.exclusion.bad_points) {
    CHECK(norm(bp.point) <= 0.05 * (1.0 + 1e-9));
  }
}

TEST_CASE("three-sphere minimum principle on a harmonic function") {
  SphereQuadrature quad = SphereQuadrature::make(1, 4096);
  Rng rng(96);
  std::vector<CPoint> samples = lemlab_test::sample_disc(rng, 200, 0.5);
  PshOracle V = numeric_oracle(1, [](const CPoint& p) -> std::optional<double> {
    return p.z[0].real();
  });
  ThreeCircleParams params;
  ThreeCircleMinReport rep = three_circle_min_principle(V, samples, params, quad);
  CHECK(rep.pass);
  CHECK(rep.exclusion.bad_points.empty());
  CHECK(rep.violations == 0);
  CHECK(rep.mass_term <= 1e-6);
}

TEST_CASE("three-sphere minimum principle rejects constants") {
  SphereQuadrature quad = SphereQuadrature::make(1, 1024);
  Rng rng(97);
  std::vector<CPoint> samples = lemlab_test::sample_disc(rng, 20, 0.5);
  PshOracle V = numeric_oracle(1, [](const CPoint&) -> std::optional<double> {
    return 1.0;
  });
  CHECK_THROWS(three_circle_min_principle(V, samples, ThreeCircleParams{}, quad));
}

TEST_CASE("three-sphere minimum principle on a random degree-8 polynomial") {
  SphereQuadrature quad = SphereQuadrature::make(1, 4096);
  Rng rng(98);
  PshOracle V = log_poly_potential(lemlab_test::simple_factors(lemlab_test::random_roots(rng, 8, 2.0)), 1.0);
  std::vector<CPoint> samples = lemlab_test::sample_disc(rng, 10000, 0.5);
  ThreeCircleMinReport rep = three_circle_min_principle(V, samples, ThreeCircleParams{}, quad);
  CHECK(rep.pass);
  CHECK(rep.violation_fraction <= 1e-3);
  CHECK(rep.content_pass);
  CHECK(rep.euclid_content < rep.euclid_bound);
}

TEST_CASE("origin-normalized principle flags only the zero set") {
  SphereQuadrature quad = SphereQuadrature::make(1, 4096);
  Rng rng(99);
  std::vector<CPoint> samples = lemlab_test::sample_disc(rng, 300, 1.0);
  samples.push_back(CPoint{complex(0.99, 0.0)});

  PshOracle V = log_poly_potential({{complex(1, 0), 1}}, 1.0);
  OriginNormalizedReport rep = origin_min_principle(V, samples, 1.0, 0.1, 1.0, quad);
  CHECK(rep.pass);
  CHECK(rep.V0 == doctest::Approx(0.0));
  CHECK(rep.inner.violations == 0);
  const double scale = rep.inner.params.R * rep.inner.r_star;
  for (const BadPoint& bp : rep.inner.exclusion.bad_points) {
    CHECK(euclidean_distance(scale * bp.point, CPoint{complex(1, 0)}) < 0.1);
  }
}

TEST_CASE("origin-normalized principle: vacuous, two-root, and error cases") {
  SphereQuadrature quad = SphereQuadrature::make(1, 4096);
  Rng rng(100);
  std::vector<CPoint> samples = lemlab_test::sample_disc(rng, 200, 1.0);

  PshOracle zero = numeric_oracle(1, [](const CPoint&) -> std::optional<double> {
    return 0.0;
  });
  OriginNormalizedReport vac = origin_min_principle(zero, samples, 1.0, 0.1, 1.0, quad);
  CHECK(vac.pass);
  CHECK(vac.inner.checked_good == static_cast<long long>(samples.size()));

  PshOracle pair = log_poly_potential({{complex(1, 0), 1}, {complex(-1, 0), 1}}, 1.0);
  OriginNormalizedReport rep = origin_min_principle(pair, samples, 1.0, 0.1, 1.0, quad);
  CHECK(rep.pass);
  CHECK(rep.inner.euclid_content < rep.inner.euclid_bound);
  CHECK(rep.inner.violations == 0);

  PshOracle shifted = log_poly_potential({{complex(2, 0), 1}}, 1.0);
  CHECK_THROWS(origin_min_principle(shifted, samples, 1.0, 0.1, 1.0, quad));

  PshOracle pole = log_poly_potential({{complex(0, 0), 1}}, 1.0);
  CHECK_THROWS(origin_min_principle(pole, samples, 1.0, 0.1, 1.0, quad));
}

TEST_CASE("essential floor: radial sublevel removal") {
  PshOracle V = log_poly_potential({{complex(0, 0), 1}}, 1.0);
  Rng rng(101);
  std::vector<CPoint> samples = lemlab_test::sample_disc(rng, 2000, 0.5);
  EssentialLowerBound out = essential_lower_bound(V, samples, 1.0, 0.1);
  CHECK(out.removed > 0);
  CHECK(out.content_removed <= 0.1);
  CHECK(out.value >= -2.6);
  CHECK(out.value <= -2.0);
}

TEST_CASE("essential floor: zero budget gives the plain minimum") {
  PshOracle V = log_poly_potential({{complex(0.2, 0.1), 1}}, 1.0);
  Rng rng(102);
  std::vector<CPoint> samples = lemlab_test::sample_disc(rng, 500, 0.5);
  double min_value = std::numeric_limits<double>::infinity();
  for (const CPoint& z : samples) {
    auto v = V.eval(z);
    REQUIRE(v.has_value());
    min_value = std::min(min_value, *v);
  }
  EssentialLowerBound out = essential_lower_bound(V, samples, 1.0, 0.0);
  CHECK(out.removed == 0);
  CHECK(out.value == doctest::Approx(min_value).epsilon(1e-15));
}

TEST_CASE("essential floor grows with the content budget") {
  PshOracle V = log_poly_potential({{complex(0, 0), 1}, {complex(0.3, 0), 1}}, 1.0);
  Rng rng(103);
  std::vector<CPoint> samples = lemlab_test::sample_disc(rng, 800, 0.5);
  double prev = -std::numeric_limits<double>::infinity();
  for (double eps : {0.0, 0.02, 0.05, 0.1, 0.2}) {
    EssentialLowerBound out = essential_lower_bound(V, samples, 1.0, eps);
    CHECK(out.value >= prev);
    prev = out.value;
  }
}

TEST_CASE("essential floor signals an exhausted sample set") {
  PshOracle V = log_poly_potential({{complex(0, 0), 1}}, 1.0);
  Rng rng(104);
  std::vector<CPoint> samples = lemlab_test::sample_disc(rng, 10, 0.5);
  CHECK_THROWS(essential_lower_bound(V, samples, 1.0, 1e6));
}
