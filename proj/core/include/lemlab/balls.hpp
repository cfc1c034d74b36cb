#pragma once

#include <vector>

#include "lemlab/complex_point.hpp"

namespace lemlab {

enum class Metric { EUCLIDEAN, INVARIANT };

// Closed ball, either Euclidean or in the invariant (pseudo-hyperbolic)
// distance of the unit ball. Invariant balls must sit inside the unit ball
// and have radius < 1.
struct MetricBall {
  CPoint center;
  double radius = 0.0;
  Metric metric = Metric::EUCLIDEAN;

  MetricBall() = default;
  MetricBall(CPoint c, double r, Metric m = Metric::EUCLIDEAN);
};

struct BallCover {
  std::vector<MetricBall> balls;
};

double metric_distance(const CPoint& a, const CPoint& b, Metric m);

// Closed-ball convention: boundary points are contained.
bool ball_contains(const MetricBall& b, const CPoint& p, double tol = 0.0);

bool balls_intersect(const MetricBall& a, const MetricBall& b);

// Sum of radius^power over the cover.
double content_sum(const BallCover& cover, double power);

}  // namespace lemlab
