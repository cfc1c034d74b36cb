#include "lemlab/balls.hpp"

#include <cmath>
#include <stdexcept>

#include "lemlab/moebius.hpp"

namespace lemlab {

MetricBall::MetricBall(CPoint c, double r, Metric m) : center(std::move(c)), radius(r), metric(m) {
  if (!(radius >= 0.0)) throw std::invalid_argument("ball radius must be nonnegative");
  if (metric == Metric::INVARIANT) {
    if (norm_sq(center) >= 1.0) throw std::invalid_argument("invariant ball center must lie in the unit ball");
    if (radius >= 1.0) throw std::invalid_argument("invariant ball radius must be < 1");
  }
}

double metric_distance(const CPoint& a, const CPoint& b, Metric m) {
  return m == Metric::EUCLIDEAN ? euclidean_distance(a, b) : invariant_distance(a, b);
}

bool ball_contains(const MetricBall& b, const CPoint& p, double tol) {
  return metric_distance(b.center, p, b.metric) <= b.radius + tol;
}

bool balls_intersect(const MetricBall& a, const MetricBall& b) {
  if (a.metric != b.metric) throw std::invalid_argument("cannot intersect balls of different metrics");
  return metric_distance(a.center, b.center, a.metric) <= a.radius + b.radius;
}

double content_sum(const BallCover& cover, double power) {
  double s = 0.0;
  for (const MetricBall& b : cover.balls) s += std::pow(b.radius, power);
  return s;
}

}  // namespace lemlab
