#pragma once

#include <vector>

#include "lemlab/balls.hpp"

namespace lemlab {

// log(3 e^3 / (2 eta)), the loss factor of the one-variable minimum modulus
// principle.
double min_modulus_constant(double eta);

// Covering discs for the sublevel set {|P| <= eps^d} of the monic polynomial
// with the given roots (repeat entries for multiplicity). The classical
// grouping construction, run with stage radii q_p = p^{1/alpha} lambda,
// lambda = eps (e/d)^{1/alpha}, guarantees
//   sum r_j^alpha <= e (2 eps)^alpha   and   |P| > eps^d off the discs.
BallCover cartan_cover(const std::vector<complex>& roots, double eps, double alpha = 1.0);

struct LemniscateCheck {
  long long checked = 0;
  long long violations = 0;
  double min_margin = 0.0;  // min over checked points of log|P| - d log eps
  bool pass = false;
};

// Grid audit: every grid point of the disc |z| <= extent outside the cover
// must satisfy |P(z)| >= eps^d. Exact factored evaluation.
LemniscateCheck verify_lemniscate_cover(const std::vector<complex>& roots, double eps,
                                        const BallCover& cover, int grid_resolution, double extent);

struct MinModulusReport {
  double H = 0.0;             // loss constant log(3e^3 / 2 eta)
  double log_max = 0.0;       // log max |f| on |z| = 2eR
  BallCover cover;            // exceptional discs, sum of radii <= 2 eta R
  double radius_sum = 0.0;
  long long checked = 0;
  long long violations = 0;
  double min_margin = 0.0;    // min of log|f| - (-H log_max) off the discs
  bool pass = false;
};

// Lower bound log|f| > -H(eta) log max|f|_{2eR} on |z| <= R off discs of
// total radius <= 2 eta R, for f(z) = prod (1 - z/a_k) (so f(0) = 1).
MinModulusReport min_modulus_1d(const std::vector<complex>& zeros, double R, double eta,
                                int grid_resolution = 256);

}  // namespace lemlab
