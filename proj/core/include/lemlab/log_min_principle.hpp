#pragma once

#include <vector>

#include "lemlab/exclusion.hpp"
#include "lemlab/oracle.hpp"
#include "lemlab/quadrature.hpp"

namespace lemlab {

struct LogMinPrincipleReport {
  double robin = 0.0;
  double eta = 0.0;
  double lower_bound = 0.0;  // -log(5 e / eta)
  ExclusionReport exclusion;
  long long checked_good = 0;
  long long violations = 0;
  double worst_margin = 0.0;
  bool pass = false;
};

// Minimum principle for potentials with logarithmic growth, normalized Robin
// mean: off a 5-expanded Vitali cover of the density-violating points
// (density scale eps = eta / 5, slope bound A = alpha eps^-alpha),
//   V(z) >= -log(5 e / eta)  for |z| <= R,
// and the cover's (2n-2+alpha)-content stays below the explicit budget.
// Requires |robin_mean(V)| <= robin_tol; normalize the input first.
LogMinPrincipleReport log_potential_min_principle(const PshOracle& V,
                                                  const std::vector<CPoint>& samples, double eta,
                                                  double alpha, double R,
                                                  const SphereQuadrature& quad, double tol = 0.0,
                                                  double robin_tol = 1e-6);

struct LemniscateContentReport {
  double eps = 0.0;          // sublevel threshold: the set {V <= log eps}
  double eta = 0.0;          // 5 e eps
  double content_bound = 0.0;
  ExclusionReport exclusion;
  long long grid_points = 0;
  long long sublevel_count = 0;
  long long uncovered = 0;   // sublevel grid points missed by the expanded cover
  bool pass = false;
};

// Content bound for the sublevel set {V <= log eps} of a Robin-normalized
// logarithmic potential, n = 1: every sampled sublevel point must be flagged
// by the density scan at eta = 5 e eps and land in the expanded Vitali cover,
// whose content must stay below 5^{2n-2} (R+5)^{2n-2} (5 e eps)^alpha / alpha.
LemniscateContentReport lemniscate_content_bound(const PshOracle& V, double eps, double alpha,
                                                 double R, int grid_resolution,
                                                 const SphereQuadrature& quad,
                                                 double robin_tol = 1e-6);

}  // namespace lemlab
