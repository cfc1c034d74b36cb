#include "lemlab/ball_harness.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lemlab/moebius.hpp"
#include "lemlab/rng.hpp"

namespace lemlab {

namespace {

double resolve_cn(int n, double c_n) {
  if (c_n > 0.0) return c_n;
  if (n == 1) return 1.0;
  return invariant_mass_comparison_estimate(n);
}

double unit_ball_mass(const PshOracle& V) {
  return V.mass(MetricBall(CPoint::zero(V.dimension), 1.0, Metric::EUCLIDEAN));
}

// Mass-free specs degenerate to A = 0, where the witness condition inverts;
// every sample is good, the cover is empty, and the floor reduces to 0.
ExclusionReport vacuous_exclusion(const std::vector<CPoint>& samples, const ExclusionParams& params,
                                  int dimension) {
  ExclusionReport rep;
  rep.dimension = dimension;
  rep.params = params;
  rep.good_points = samples;
  rep.content_sum = 0.0;
  rep.paper_bound = exclusion_paper_bound(params, dimension, 0.0, 1.0);
  rep.pass = true;
  return rep;
}

}  // namespace

BallPrincipleReport green_potential_min_principle(const PshOracle& V, const std::vector<CPoint>& samples,
                                                  double eta, double alpha, double s,
                                                  const SphereQuadrature& quad, double c_n, double tol) {
  if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("eta must lie in (0,1)");
  if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("s must lie in (0,1]");
  BallPrincipleReport rep;
  rep.s = s;
  rep.c_n_estimate = resolve_cn(V.dimension, c_n);
  rep.mu_ball = unit_ball_mass(V);

  ExclusionParams params;
  params.metric = Metric::INVARIANT;
  params.expansion = 3.0;
  params.epsilon = eta / 3.0;
  params.alpha = alpha;
  params.A = alpha * rep.c_n_estimate * rep.mu_ball * std::pow(params.epsilon, -alpha);

  auto theta = [&](const CPoint& z, double t) { return invariant_theta(V, z, t, quad); };
  rep.exclusion = rep.mu_ball > 0.0 ? exclusion_cover(theta, samples, params, rep.mu_ball, 1.0)
                                    : vacuous_exclusion(samples, params, V.dimension);

  rep.worst_margin = std::numeric_limits<double>::infinity();
  for (const CPoint& z : rep.exclusion.good_points) {
    std::optional<double> v = V.eval(z);
    if (!v) {
      ++rep.lower_bound_violations;
      continue;
    }
    double bound = -theta(z, s) * std::log(3.0 / eta) - rep.c_n_estimate * rep.mu_ball * (1.0 + std::log(1.0 / s));
    rep.worst_margin = std::min(rep.worst_margin, *v - bound);
    if (*v < bound - tol) ++rep.lower_bound_violations;
    ++rep.checked_good;
  }
  rep.pass = rep.exclusion.pass && rep.lower_bound_violations == 0;
  return rep;
}

BallPrincipleReport unit_mass_min_principle(const PshOracle& V, const std::vector<CPoint>& samples,
                                            double eta, double alpha, const SphereQuadrature& quad,
                                            double c_n, double tol) {
  if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("eta must lie in (0,1)");
  double cn = resolve_cn(V.dimension, c_n);
  double mu = unit_ball_mass(V);
  if (mu > 1.0 + 1e-12) throw std::invalid_argument("total mass must be at most 1");

  BallPrincipleReport rep;
  rep.s = 1.0;
  rep.c_n_estimate = cn;
  rep.mu_ball = mu;
  rep.emitted_constant = 3.0 * std::exp(cn);

  ExclusionParams params;
  params.metric = Metric::INVARIANT;
  params.expansion = 3.0;
  params.epsilon = eta / 3.0;
  params.alpha = alpha;
  params.A = alpha * cn * mu * std::pow(params.epsilon, -alpha);

  auto theta = [&](const CPoint& z, double t) { return invariant_theta(V, z, t, quad); };
  rep.exclusion = mu > 0.0 ? exclusion_cover(theta, samples, params, mu, 1.0)
                           : vacuous_exclusion(samples, params, V.dimension);

  bool theta_unit_ok = true;
  for (const CPoint& z : samples) {
    if (theta(z, 1.0 - 1e-12) > 1.0 + 1e-9) theta_unit_ok = false;
  }

  double bound = -std::log(rep.emitted_constant / eta);
  rep.worst_margin = std::numeric_limits<double>::infinity();
  for (const CPoint& z : rep.exclusion.good_points) {
    std::optional<double> v = V.eval(z);
    if (!v) {
      ++rep.lower_bound_violations;
      continue;
    }
    rep.worst_margin = std::min(rep.worst_margin, *v - bound);
    if (*v < bound - tol) ++rep.lower_bound_violations;
    ++rep.checked_good;
  }
  rep.pass = rep.exclusion.pass && rep.lower_bound_violations == 0 && theta_unit_ok;
  return rep;
}

BallPrincipleReport ball_min_principle(const PshOracle& V, const std::vector<CPoint>& samples, double rho,
                                       double s, double eta, double alpha, const SphereQuadrature& boundary_quad,
                                       const SphereQuadrature& theta_quad, double c_n, double tol) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("rho must lie in (0,1)");
  for (const CPoint& z : samples) {
    if (norm(z) > rho + 1e-12) throw std::invalid_argument("samples must lie in the rho-ball");
    std::optional<double> v = V.eval(z);
    if (v && *v > 1e-9) throw std::invalid_argument("ball principle: V must be nonpositive on the ball");
  }
  BallPrincipleReport rep;
  rep.rho = rho;
  rep.s = s;
  rep.kappa = poisson_szego_sup_bound(rho, V.dimension);
  rep.c_n_estimate = resolve_cn(V.dimension, c_n);
  rep.mu_ball = unit_ball_mass(V);
  rep.boundary_mean = sphere_mean(V, CPoint::zero(V.dimension), 1.0, boundary_quad);

  ExclusionParams params;
  params.metric = Metric::INVARIANT;
  params.expansion = 3.0;
  params.epsilon = eta / 3.0;
  params.alpha = alpha;
  params.A = alpha * rep.c_n_estimate * rep.mu_ball * std::pow(params.epsilon, -alpha);

  auto theta = [&](const CPoint& z, double t) { return invariant_theta(V, z, t, theta_quad); };
  rep.exclusion = rep.mu_ball > 0.0 ? exclusion_cover(theta, samples, params, rep.mu_ball, 1.0)
                                    : vacuous_exclusion(samples, params, V.dimension);

  bool poisson_ok = true;
  rep.worst_margin = std::numeric_limits<double>::infinity();
  double floor_term = rep.kappa * rep.boundary_mean;
  for (const CPoint& z : samples) {
    double pv = poisson_szego_integral(V, z, boundary_quad);
    if (pv < floor_term - tol) poisson_ok = false;
  }
  for (const CPoint& z : rep.exclusion.good_points) {
    std::optional<double> v = V.eval(z);
    if (!v) {
      ++rep.lower_bound_violations;
      continue;
    }
    double bound = floor_term - theta(z, s) * std::log(3.0 / eta) -
                   rep.c_n_estimate * rep.mu_ball * (1.0 + std::log(1.0 / s));
    rep.worst_margin = std::min(rep.worst_margin, *v - bound);
    if (*v < bound - tol) ++rep.lower_bound_violations;
    ++rep.checked_good;
  }
  rep.pass = rep.exclusion.pass && poisson_ok && rep.lower_bound_violations == 0;
  return rep;
}

double invariant_mass_comparison_estimate(int n, int theta_nodes, std::uint64_t seed) {
  if (n == 1) return 1.0;  // identity: theta(z,r) equals the pseudo-ball mass
  Rng rng(seed);
  SphereQuadrature quad = SphereQuadrature::make(n, theta_nodes, seed);
  double worst = 0.0;
  for (int trial = 0; trial < 6; ++trial) {
    GreenPotentialSpec spec;
    spec.dimension = n;
    spec.poles.push_back({rng.ball(n, 0.6), 1.0});
    PshOracle V = green_potential(spec, theta_nodes, seed + trial);
    CPoint z = rng.ball(n, 0.5);
    for (double r : {0.15, 0.25, 1.0 / 3.0}) {
      double th = invariant_theta(V, z, r, quad);
      // Lower bound for the pseudo-ball mass: Riesz mass of the inscribed
      // Euclidean ball, via the Lelong comparison at its own center.
      MetricBall hull = euclidean_hull(MetricBall(z, r, Metric::INVARIANT));
      MoebiusMap phi(z);
      double inscribed = hull.radius;
      for (int i = 0; i < 128; ++i) {
        CPoint b = phi(r * rng.unit_sphere(n));
        inscribed = std::min(inscribed, euclidean_distance(hull.center, b));
      }
      inscribed *= 0.95;
      double mu = V.mass(MetricBall(hull.center, inscribed, Metric::EUCLIDEAN));
      if (mu > 1e-9) {
        worst = std::max(worst, th * std::pow(r, 2.0 * n - 2.0) / mu);
      }
    }
  }
  return 2.0 * std::max(worst, 1.0);
}

}  // namespace lemlab
