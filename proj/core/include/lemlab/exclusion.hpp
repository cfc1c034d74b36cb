#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lemlab/balls.hpp"
#include "lemlab/vitali.hpp"

namespace lemlab {

// Parameters of the exclusion-ball sweep. A point z is good when
// theta(z,t) <= A t^alpha for every scanned t <= epsilon; a bad point's
// witness is the largest scanned radius violating that bound.
struct ExclusionParams {
  double epsilon = 0.1;    // in (0,1)
  double alpha = 1.0;      // in (0,2]
  double A = 1.0;          // threshold amplitude, > 0
  Metric metric = Metric::EUCLIDEAN;
  int scan_depth = 40;     // dyadic levels epsilon * 2^-k, k = 0..scan_depth
  double expansion = 5.0;  // 5 <-> EUCLIDEAN, 3 <-> INVARIANT
  int patches = 1;         // finite-cover bookkeeping: bound scales linearly

  void validate(int dimension) const;
};

struct BadPoint {
  CPoint point;
  double witness = 0.0;
};

struct ExclusionReport {
  std::vector<CPoint> good_points;
  std::vector<BadPoint> bad_points;
  BallCover selected_disjoint;
  BallCover expanded_cover;
  double content_sum = 0.0;  // sum of expanded radii^(2n-2+alpha) near B_R
  double paper_bound = 0.0;
  bool pass = false;
  int dimension = 1;
  ExclusionParams params;
};

// Largest scanned dyadic radius t = epsilon 2^-k with theta(z,t) > A t^alpha,
// or nullopt when the point is good at scan resolution.
std::optional<double> witness_radius_search(const std::function<double(const CPoint&, double)>& theta,
                                            const CPoint& z, const ExclusionParams& p);

// Full sweep over the samples: classify, collect witness balls, run the
// Vitali selection, and compare the expanded content against the closed-form
// bound (mass_bound * 5^{2n-2} (R+eta)^{2n-2} eta^alpha / alpha Euclidean,
// 9^{n-1} eta^alpha / alpha invariant, eta = expansion * epsilon).
ExclusionReport exclusion_cover(const std::function<double(const CPoint&, double)>& theta,
                                const std::vector<CPoint>& samples, const ExclusionParams& params,
                                double mass_bound, double R);

double exclusion_paper_bound(const ExclusionParams& params, int dimension, double mass_bound, double R);

}  // namespace lemlab
