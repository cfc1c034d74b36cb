#include "lemlab/log_min_principle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lemlab/potentials.hpp"

namespace lemlab {

namespace {

void require_normalized(const PshOracle& V, const SphereQuadrature& quad, double robin_tol,
                        double& robin_out) {
  robin_out = robin_mean(V, quad);
  if (!(std::abs(robin_out) <= robin_tol)) {
    throw std::invalid_argument("log minimum principle: Robin mean must vanish; call normalize_log_class first");
  }
}

}  // namespace

LogMinPrincipleReport log_potential_min_principle(const PshOracle& V,
                                                  const std::vector<CPoint>& samples, double eta,
                                                  double alpha, double R,
                                                  const SphereQuadrature& quad, double tol,
                                                  double robin_tol) {
  if (!(eta > 0.0) || !(eta < 5.0)) throw std::invalid_argument("log_potential_min_principle: eta must lie in (0, 5)");
  if (samples.empty()) throw std::invalid_argument("log_potential_min_principle: no samples");

  LogMinPrincipleReport out;
  require_normalized(V, quad, robin_tol, out.robin);
  out.eta = eta;
  out.lower_bound = -std::log(5.0 * std::exp(1.0) / eta);

  ExclusionParams params;
  params.epsilon = eta / 5.0;
  params.alpha = alpha;
  params.A = alpha * std::pow(params.epsilon, -alpha);
  params.metric = Metric::EUCLIDEAN;
  params.expansion = 5.0;

  auto theta = [&](const CPoint& z, double t) { return theta_from_sphere_means(V, z, t, quad); };
  out.exclusion = exclusion_cover(theta, samples, params, 1.0, R);

  out.worst_margin = std::numeric_limits<double>::infinity();
  for (const CPoint& z : out.exclusion.good_points) {
    auto v = V.eval(z);
    const double value = v ? *v : -std::numeric_limits<double>::infinity();
    const double margin = value - out.lower_bound;
    ++out.checked_good;
    if (margin < -tol) ++out.violations;
    out.worst_margin = std::min(out.worst_margin, margin);
  }
  out.pass = out.exclusion.pass && out.violations == 0;
  return out;
}

LemniscateContentReport lemniscate_content_bound(const PshOracle& V, double eps, double alpha,
                                                 double R, int grid_resolution,
                                                 const SphereQuadrature& quad, double robin_tol) {
  if (V.dimension != 1) throw std::invalid_argument("lemniscate_content_bound: planar grids only (dimension 1)");
  if (!(eps > 0.0) || !(eps < 1.0 / std::exp(1.0))) {
    throw std::invalid_argument("lemniscate_content_bound: eps must lie in (0, 1/e)");
  }
  if (grid_resolution < 2) throw std::invalid_argument("lemniscate_content_bound: grid too coarse");

  LemniscateContentReport out;
  double robin = 0.0;
  require_normalized(V, quad, robin_tol, robin);
  out.eps = eps;
  out.eta = 5.0 * std::exp(1.0) * eps;

  const double threshold = std::log(eps);
  std::vector<CPoint> sublevel;
  const double step = 2.0 * R / (grid_resolution - 1);
  for (int iy = 0; iy < grid_resolution; ++iy) {
    for (int ix = 0; ix < grid_resolution; ++ix) {
      const complex z(-R + step * ix, -R + step * iy);
      if (std::abs(z) > R) continue;
      ++out.grid_points;
      CPoint p = CPoint::zero(1);
      p.z[0] = z;
      auto v = V.eval(p);
      if (!v || *v <= threshold) sublevel.push_back(p);
    }
  }
  out.sublevel_count = static_cast<long long>(sublevel.size());

  out.content_bound = std::pow(out.eta, alpha) / alpha;  // n = 1: 5^0 (R+5)^0
  if (sublevel.empty()) {
    out.pass = true;  // nothing sampled below the threshold, bound is vacuous
    return out;
  }

  ExclusionParams params;
  params.epsilon = std::exp(1.0) * eps;  // eta / 5
  params.alpha = alpha;
  params.A = alpha * std::pow(params.epsilon, -alpha);
  params.metric = Metric::EUCLIDEAN;
  params.expansion = 5.0;

  auto theta = [&](const CPoint& z, double t) { return theta_from_sphere_means(V, z, t, quad); };
  out.exclusion = exclusion_cover(theta, sublevel, params, 1.0, R);

  // Every sampled sublevel point must be bad (its value sits below the good
  // floor) and must land inside the expanded cover.
  long long misclassified = static_cast<long long>(out.exclusion.good_points.size());
  for (const CPoint& p : sublevel) {
    bool covered = false;
    for (const MetricBall& b : out.exclusion.expanded_cover.balls) {
      if (ball_contains(b, p, 1e-12)) {
        covered = true;
        break;
      }
    }
    if (!covered) ++out.uncovered;
  }

  out.pass = misclassified == 0 && out.uncovered == 0 &&
             out.exclusion.content_sum < out.content_bound;
  return out;
}

}  // namespace lemlab
