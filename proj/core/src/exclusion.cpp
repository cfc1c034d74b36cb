#include "lemlab/exclusion.hpp"

#include <cmath>
#include <stdexcept>

#include "lemlab/parallel.hpp"

namespace lemlab {

void ExclusionParams::validate(int dimension) const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0,1)");
  if (!(alpha > 0.0 && alpha <= 2.0)) throw std::invalid_argument("alpha must lie in (0,2]");
  if (!(A > 0.0)) throw std::invalid_argument("amplitude A must be positive");
  if (scan_depth < 1) throw std::invalid_argument("scan depth must be >= 1");
  if (metric == Metric::EUCLIDEAN && expansion != 5.0) throw std::invalid_argument("Euclidean expansion must be 5");
  if (metric == Metric::INVARIANT) {
    if (expansion != 3.0) throw std::invalid_argument("invariant expansion must be 3");
    if (!(expansion * epsilon < 1.0)) throw std::invalid_argument("expanded invariant radii must stay below 1");
  }
  if (patches < 1) throw std::invalid_argument("patch count must be >= 1");
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
}

std::optional<double> witness_radius_search(const std::function<double(const CPoint&, double)>& theta,
                                            const CPoint& z, const ExclusionParams& p) {
  // Equal-weight atom groups make theta == A t^alpha exactly at a dyadic
  // radius; the relative guard keeps such floating ties on the non-witness
  // side, matching exact arithmetic where the strict inequality fails.
  constexpr double kTieGuard = 1.0 + 1e-9;
  double t = p.epsilon;
  for (int k = 0; k <= p.scan_depth; ++k) {
    if (theta(z, t) > p.A * std::pow(t, p.alpha) * kTieGuard) return t;
    t *= 0.5;
  }
  return std::nullopt;
}

double exclusion_paper_bound(const ExclusionParams& params, int dimension, double mass_bound, double R) {
  double eta = params.expansion * params.epsilon;
  if (params.metric == Metric::EUCLIDEAN) {
    return params.patches * mass_bound * std::pow(5.0, 2 * dimension - 2) *
           std::pow(R + eta, 2 * dimension - 2) * std::pow(eta, params.alpha) / params.alpha;
  }
  return params.patches * std::pow(9.0, dimension - 1) * std::pow(eta, params.alpha) / params.alpha;
}

ExclusionReport exclusion_cover(const std::function<double(const CPoint&, double)>& theta,
                                const std::vector<CPoint>& samples, const ExclusionParams& params,
                                double mass_bound, double R) {
  if (samples.empty()) throw std::invalid_argument("exclusion sweep needs samples");
  int dim = samples[0].dim();
  params.validate(dim);

  ExclusionReport rep;
  rep.dimension = dim;
  rep.params = params;

  std::vector<std::optional<double>> witness(samples.size());
  parallel_for(static_cast<int>(samples.size()),
               [&](int i) { witness[i] = witness_radius_search(theta, samples[i], params); });

  std::vector<MetricBall> witness_balls;
  for (size_t i = 0; i < samples.size(); ++i) {
    if (witness[i]) {
      rep.bad_points.push_back({samples[i], *witness[i]});
      witness_balls.emplace_back(samples[i], *witness[i], params.metric);
    } else {
      rep.good_points.push_back(samples[i]);
    }
  }

  if (!witness_balls.empty()) {
    VitaliSelection sel = vitali_select(witness_balls, params.expansion);
    rep.selected_disjoint = std::move(sel.disjoint);
    rep.expanded_cover = std::move(sel.expanded);
  }

  double power = 2.0 * dim - 2.0 + params.alpha;
  double content = 0.0;
  CPoint origin = CPoint::zero(dim);
  for (const MetricBall& b : rep.expanded_cover.balls) {
    // Euclidean accounting only charges balls meeting B(0,R).
    if (params.metric == Metric::EUCLIDEAN && euclidean_distance(b.center, origin) > R + b.radius) continue;
    content += std::pow(b.radius, power);
  }
  rep.content_sum = content;
  rep.paper_bound = exclusion_paper_bound(params, dim, mass_bound, R);

  bool covered = true;
  for (const BadPoint& bp : rep.bad_points) {
    bool inside = false;
    for (const MetricBall& b : rep.expanded_cover.balls) {
      if (ball_contains(b, bp.point, 1e-12)) {
        inside = true;
        break;
      }
    }
    if (!inside) {
      covered = false;
      break;
    }
  }
  rep.pass = covered && rep.content_sum < rep.paper_bound;
  return rep;
}

}  // namespace lemlab
