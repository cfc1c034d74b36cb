#pragma once

#include <vector>

#include "lemlab/balls.hpp"

namespace lemlab {

// Positive radius floor: every reported ball has radius >= this, so finite
// point sets get a positive but negligible content instead of zero.
inline constexpr double kRadiusFloor = 1e-12;

struct ContentEstimate {
  double value = 0.0;
  BallCover cover;
};

// Upper estimate of the delta-Hausdorff content sum inf { sum r_j^power } of
// a finite point set, by greedy farthest-point covers with 1..max_balls balls
// (largest cluster reported first). delta_cap <= 0 means no radius cap.
// Deterministic given the input order.
ContentEstimate hausdorff_content_upper(const std::vector<CPoint>& points, double power,
                                        double delta_cap = 0.0, Metric metric = Metric::EUCLIDEAN,
                                        int max_balls = 64);

// Smallest enclosing disc of planar points (exact; Welzl).
void min_enclosing_disc(const std::vector<complex>& pts, complex& center, double& radius);

}  // namespace lemlab
