#pragma once

#include <vector>

#include "lemlab/complex_point.hpp"
#include "lemlab/hausdorff.hpp"

namespace lemlab {

enum class CapacityMethod { CLOSED_FORM, FEKETE };

struct CapacityEstimate {
  double value = 0.0;
  CapacityMethod method = CapacityMethod::CLOSED_FORM;
  int nodes = 0;           // Fekete subset size actually used
  double raw = 0.0;        // d_k before extrapolation (CLOSED_FORM: == value)
  double uncertainty = 0.0;
};

// Logarithmic capacity, exact shapes.
CapacityEstimate capacity_disc(double radius);
CapacityEstimate capacity_segment(double length);

// Fekete-diameter estimate for a finite cloud: pick k <= k_max points
// maximizing the product of pairwise distances (greedy + exchange polish),
// form d_k = (prod)^{2/(k(k-1))}, and extrapolate the known d_k ~ cap *
// k^{c/(k-1)} drift using the k and k/2 values.
CapacityEstimate capacity_cloud(const std::vector<complex>& points, int k_max = 64);

enum class ComparisonFlag { HOLDS, INCONCLUSIVE };

struct ContentCapacityComparison {
  double content_upper = 0.0;     // alpha-content upper estimate of the cloud
  double capacity = 0.0;          // Fekete capacity estimate
  double capacity_bound = 0.0;    // (5 e cap)^alpha / alpha
  ComparisonFlag flag = ComparisonFlag::INCONCLUSIVE;
};

// One-variable comparison: the alpha-content of a compact set is at most
// (5 e cap)^alpha / alpha. An upper content estimate below the bound confirms
// consistency; above it the test is inconclusive (both sides are estimates),
// never a failure.
ContentCapacityComparison content_capacity_comparison(const std::vector<complex>& points,
                                                      double alpha, int k_max = 64);

}  // namespace lemlab
